"""
The data structure of a finite inverse semigroup of partial permutations.

Built from a generating set X, it holds:

* every element of S with a factorisation over the alphabet X' = X ∪ X^-1;
* the word graph Γ on the idempotents (plus an adjoined identity when S has
  none), with an edge e --x--> x^-1 e x for each letter x;
* the strongly connected components of Γ, which are the D-classes of S;
* per component, a connector s_i for every node e_i (s_i^-1 e_1 s_i = e_i) and
  the group H-class of the representative e_1 from Schreier generators.
"""
from collections import deque
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from app.core.config import config_provider
from app.core.exceptions import DegreeMismatchError, EnumerationLimitError, NotInSemigroupError
from app.core.logging_config import logger
from app.services.group_engine import GroupHandle, generate
from app.services.pperm import PartialPerm, compose, inverse
from app.services.wordgraph import NodePartition, WordGraph, sccs

Word = Tuple[int, ...]


class InverseSemigroup:
    def __init__(self, degree: int, generators: Sequence[PartialPerm], limit: Optional[int] = None):
        generators = list(generators)
        if not generators:
            raise ValueError("at least one generator is required")
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        self.alphabet, self.letter_names = self._build_alphabet()
        self._inverse_letters = [inverse(x) for x in self.alphabet]
        self._limit = limit if limit is not None else config_provider.get_max_semigroup_size()

        logger.info(f"Enumerating inverse semigroup of degree {degree} from {len(generators)} generators")
        self._enumerate()
        self.gamma = self._build_gamma()
        self.sccs: NodePartition = sccs(self.gamma)
        self._build_connectors()
        self._groups: Dict[int, GroupHandle] = {}
        self._left: Optional[List[Tuple[int, ...]]] = None
        logger.info(
            f"Enumerated |S| = {len(self.elements)}, |E(S)| = {len(self.idempotents)}, "
            f"{len(self.d_classes)} D-classes"
        )

    def _build_alphabet(self) -> Tuple[List[PartialPerm], List[str]]:
        alphabet, names = [], []
        for i, x in enumerate(self.generators):
            if x not in alphabet:
                alphabet.append(x)
                names.append(f"x{i + 1}")
        for i, x in enumerate(self.generators):
            x_inv = inverse(x)
            if x_inv not in alphabet:
                alphabet.append(x_inv)
                names.append(f"x{i + 1}^-1")
        return alphabet, names

    def _enumerate(self) -> None:
        """Breadth-first closure under right multiplication by letters."""
        self.elements: List[PartialPerm] = []
        self.index: Dict[PartialPerm, int] = {}
        self.words: List[Word] = []
        self.right: List[Tuple[int, ...]] = []

        first = {}
        for a, x in enumerate(self.alphabet):
            first.setdefault(x, (a,))
        level = self._append_level(first)
        while level:
            pending: Dict[PartialPerm, Word] = {}
            rows = []
            for i in level:
                x, word = self.elements[i], self.words[i]
                row = [compose(x, letter) for letter in self.alphabet]
                for a, p in enumerate(row):
                    if p not in self.index and p not in pending:
                        pending[p] = word + (a,)
                rows.append(row)
            level_next = self._append_level(pending)
            for i, row in zip(level, rows):
                self.right[i] = tuple(self.index[p] for p in row)
            level = level_next

        self.idempotents: List[int] = [i for i, x in enumerate(self.elements) if x.is_idempotent()]

    def _append_level(self, pending: Dict[PartialPerm, Word]) -> List[int]:
        added = []
        for p in sorted(pending):
            if len(self.elements) >= self._limit:
                logger.error(f"Enumeration exceeded the limit of {self._limit} elements")
                raise EnumerationLimitError(f"semigroup has more than {self._limit} elements")
            self.index[p] = len(self.elements)
            added.append(len(self.elements))
            self.elements.append(p)
            self.words.append(pending[p])
            self.right.append(())
        return added

    def _build_gamma(self) -> WordGraph:
        """Γ on E(S) in canonical order, plus 1_S as the last node if S lacks it."""
        self.nodes: List[PartialPerm] = sorted(self.elements[i] for i in self.idempotents)
        identity = PartialPerm.identity(self.degree)
        self.identity_adjoined = identity not in self.index
        if self.identity_adjoined:
            self.nodes.append(identity)
        self.node_index: Dict[PartialPerm, int] = {e: n for n, e in enumerate(self.nodes)}
        self.identity_node = self.node_index[identity]

        rows = []
        for e in self.nodes:
            rows.append([
                self.node_index[compose(compose(x_inv, e), x)]
                for x, x_inv in zip(self.alphabet, self._inverse_letters)
            ])
        return WordGraph(len(self.nodes), len(self.alphabet), rows)

    def _build_connectors(self) -> None:
        """Breadth-first spanning trees of the components from their least node."""
        self.connector_words: List[Word] = [()] * len(self.nodes)
        self.connectors: List[PartialPerm] = [None] * len(self.nodes)
        identity = PartialPerm.identity(self.degree)
        block_of = self.sccs.block_of
        for block in self.sccs.blocks:
            rep = block[0]
            self.connectors[rep] = identity
            queue = deque([rep])
            while queue:
                node = queue.popleft()
                for a, target in enumerate(self.gamma.targets[node]):
                    if block_of[target] == block_of[rep] and self.connectors[target] is None:
                        self.connector_words[target] = self.connector_words[node] + (a,)
                        self.connectors[target] = compose(self.connectors[node], self.alphabet[a])
                        queue.append(target)

    # -- element access -------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[PartialPerm]:
        return iter(self.elements)

    def __contains__(self, x: PartialPerm) -> bool:
        return x in self.index

    def element_index(self, x: PartialPerm) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise NotInSemigroupError(x) from None

    def node_of(self, e: PartialPerm) -> int:
        """Γ node of an idempotent of S (or of the adjoined identity)."""
        try:
            return self.node_index[e]
        except KeyError:
            raise NotInSemigroupError(e, f"{e} is not an idempotent of the semigroup") from None

    def factorize(self, s: PartialPerm) -> Word:
        return self.words[self.element_index(s)]

    def evaluate(self, word: Sequence[int]) -> PartialPerm:
        result = PartialPerm.identity(self.degree)
        for a in word:
            result = compose(result, self.alphabet[a])
        return result

    def left_cayley(self) -> List[Tuple[int, ...]]:
        """``left[i][a]`` is the index of letter_a * element_i."""
        if self._left is None:
            index = self.index
            self._left = [
                tuple(index[compose(letter, x)] for letter in self.alphabet) for x in self.elements
            ]
        return self._left

    # -- Green's structure ----------------------------------------------------

    @property
    def d_classes(self) -> List[int]:
        """SCC ids of Γ that are D-classes of S (the adjoined identity excluded)."""
        skip = self.sccs.block_of[self.identity_node] if self.identity_adjoined else None
        return [b for b in range(len(self.sccs)) if b != skip]

    def scc_of(self, node: int) -> int:
        return self.sccs.block_of[node]

    def scc_rep(self, scc_id: int) -> int:
        return self.sccs.blocks[scc_id][0]

    def schreier_group(self, scc_id: int) -> GroupHandle:
        """Group H-class of the component representative from Schreier generators."""
        if not 0 <= scc_id < len(self.sccs):
            raise IndexError(f"no strongly connected component {scc_id}")
        if scc_id not in self._groups:
            block = self.sccs.blocks[scc_id]
            rep = self.nodes[block[0]]
            domain = rep.domain
            gens = []
            for i in block:
                s_i = compose(rep, self.connectors[i])
                for a, j in enumerate(self.gamma.targets[i]):
                    if self.sccs.block_of[j] != scc_id:
                        continue
                    g = compose(compose(s_i, self.alphabet[a]), inverse(self.connectors[j]))
                    if g.is_permutation_of(domain):
                        gens.append(g)
            self._groups[scc_id] = generate(rep, gens)
            logger.debug(f"H-class of {rep} has order {self._groups[scc_id].order()}")
        return self._groups[scc_id]

    def translate(self, node: int) -> PartialPerm:
        """rep · s_node, an element of H_{rep, node}."""
        rep = self.nodes[self.scc_rep(self.scc_of(node))]
        return compose(rep, self.connectors[node])

    def group_at(self, node: int) -> GroupHandle:
        """Group H-class of the idempotent at ``node``."""
        return self.schreier_group(self.scc_of(node)).conjugate(self.translate(node))

    def h_connector(self, e_node: int, f_node: int) -> PartialPerm:
        """An element s of H_{e,f}, so that s^-1 e s = f; e and f must be D-related."""
        if self.scc_of(e_node) != self.scc_of(f_node):
            raise ValueError(f"nodes {e_node} and {f_node} are not D-related")
        return compose(inverse(self.translate(e_node)), self.translate(f_node))

    def green_h_class(self, e_node: int, f_node: int) -> List[PartialPerm]:
        """Elements of H_{e,f} = R_e ∩ L_f as translates of the component group."""
        left = inverse(self.translate(e_node))
        right = self.translate(f_node)
        group = self.schreier_group(self.scc_of(e_node))
        return [compose(compose(left, h), right) for h in group.elements()]

    def d_class_sizes(self) -> Dict[int, int]:
        return {
            b: len(self.sccs.blocks[b]) ** 2 * self.schreier_group(b).order() for b in self.d_classes
        }

    def size_from_structure(self) -> int:
        return sum(self.d_class_sizes().values())


def enumerate_semigroup(degree: int, gens: Sequence[PartialPerm], limit: Optional[int] = None) -> InverseSemigroup:
    return InverseSemigroup(degree, gens, limit=limit)


def build_gamma(ds: InverseSemigroup) -> WordGraph:
    return ds.gamma


def schreier_group_gens(ds: InverseSemigroup, scc_id: int) -> GroupHandle:
    return ds.schreier_group(scc_id)


def factorize(ds: InverseSemigroup, s: PartialPerm) -> Word:
    return ds.factorize(s)
