"""
Congruences on an inverse semigroup, held as the quotient data structure:

* the trace, a partition of the idempotents whose quotient of Γ is deterministic;
* the strongly connected components of that quotient graph;
* per component, the meet f of its representative trace class, the group
  H-class G at f, the normal subgroup N = G ∩ f/ρ, a transversal of N in G and
  connectors s_j with s_j^-1 f s_j equal to the meet of the j-th trace class.

Everything else (class counts, representatives, classes, kernel, membership)
is answered from this structure without enumerating the congruence.
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from app.core.logging_config import logger
from app.services.group_engine import GroupHandle, coset_transversal, normal_closure
from app.services.pperm import PartialPerm, compose, inverse, left_identity, right_identity
from app.services.semigroup import InverseSemigroup
from app.services.wordgraph import NodePartition, WordGraph, follow_path, quotient_closure, sccs

Pair = Tuple[PartialPerm, PartialPerm]


@dataclass
class QuotientComponent:
    blocks: Tuple[int, ...]
    meet: PartialPerm
    meet_node: int
    group: GroupHandle
    normal_subgroup: GroupHandle
    transversal: List[PartialPerm]
    connector_words: List[Tuple[int, ...]]
    connectors: List[PartialPerm]
    # f·s_j, an element of H_{f, f_j}
    translates: List[PartialPerm]

    @property
    def quotient_group_order(self) -> int:
        return self.group.order() // self.normal_subgroup.order()

    @property
    def nr_classes(self) -> int:
        return self.quotient_group_order * len(self.blocks) ** 2


@dataclass
class Congruence:
    semigroup: InverseSemigroup
    pairs: Optional[Tuple[Pair, ...]]
    trace: NodePartition
    quotient: WordGraph
    qsccs: NodePartition
    components: List[QuotientComponent]
    block_meets: Tuple[PartialPerm, ...]
    # trace block -> (component index, position j in the component)
    block_component: Dict[int, Tuple[int, int]]
    _normal_cache: Dict[int, GroupHandle] = field(default_factory=dict, repr=False)

    def nr_classes(self) -> int:
        return nr_classes(self)

    def class_reps(self) -> List[PartialPerm]:
        return class_reps(self)

    def contains(self, a: PartialPerm, b: PartialPerm) -> bool:
        return contains(self, a, b)

    def class_of(self, x: PartialPerm) -> Set[PartialPerm]:
        return class_of(self, x)

    def kernel(self) -> Set[PartialPerm]:
        return kernel(self)

    def trace_classes(self) -> List[List[PartialPerm]]:
        return trace_classes(self)


def _check_pairs(ds: InverseSemigroup, pairs: Iterable[Pair]) -> Tuple[Pair, ...]:
    checked = []
    for a, b in pairs:
        ds.element_index(a)
        ds.element_index(b)
        checked.append((a, b))
    return tuple(checked)


def trace_seed_pairs(ds: InverseSemigroup, pairs: Iterable[Pair]) -> List[Tuple[int, int]]:
    """Γ node pairs (a e a^-1, b e b^-1) for e in E(S) and (a, b) in the pairs."""
    seeds = {}
    idempotents = [ds.elements[i] for i in ds.idempotents]
    for a, b in _check_pairs(ds, pairs):
        a_inv, b_inv = inverse(a), inverse(b)
        for e in idempotents:
            u = ds.node_of(compose(compose(a, e), a_inv))
            v = ds.node_of(compose(compose(b, e), b_inv))
            seeds[(u, v)] = None
    return list(seeds)


def _block_meets(ds: InverseSemigroup, trace: NodePartition) -> Tuple[PartialPerm, ...]:
    meets = []
    for block in trace.blocks:
        meet = ds.nodes[block[0]]
        for node in block[1:]:
            meet = compose(meet, ds.nodes[node])
        meets.append(meet)
    return tuple(meets)


def _quotient_connectors(
    ds: InverseSemigroup, quotient: WordGraph, qsccs: NodePartition, blocks: Sequence[int]
) -> List[Tuple[int, ...]]:
    """Breadth-first words in the quotient graph from blocks[0] to every block."""
    words = {blocks[0]: ()}
    queue = deque([blocks[0]])
    component = qsccs.block_of[blocks[0]]
    while queue:
        block = queue.popleft()
        for a, target in enumerate(quotient.targets[block]):
            if qsccs.block_of[target] == component and target not in words:
                words[target] = words[block] + (a,)
                queue.append(target)
    return [words[b] for b in blocks]


NormalSubgroupBuilder = Callable[[PartialPerm, GroupHandle], GroupHandle]


def assemble(
    ds: InverseSemigroup,
    trace: NodePartition,
    quotient: WordGraph,
    pairs: Optional[Tuple[Pair, ...]],
    normal_subgroup_for: NormalSubgroupBuilder,
) -> Congruence:
    """Build the quotient components of a trace; ``normal_subgroup_for(f, G)`` supplies G ∩ f/ρ."""
    qsccs = sccs(quotient)
    block_meets = _block_meets(ds, trace)
    identity_block = trace.block_of[ds.identity_node] if ds.identity_adjoined else None

    components: List[QuotientComponent] = []
    block_component: Dict[int, Tuple[int, int]] = {}
    for blocks in qsccs.blocks:
        if blocks == (identity_block,):
            continue
        f = block_meets[blocks[0]]
        f_node = ds.node_of(f)
        group = ds.group_at(f_node)
        normal = normal_subgroup_for(f, group)
        words = _quotient_connectors(ds, quotient, qsccs, blocks)
        connectors = [ds.evaluate(w) for w in words]
        component = QuotientComponent(
            blocks=blocks,
            meet=f,
            meet_node=f_node,
            group=group,
            normal_subgroup=normal,
            transversal=coset_transversal(group, normal),
            connector_words=words,
            connectors=connectors,
            translates=[compose(f, s) for s in connectors],
        )
        for j, block in enumerate(blocks):
            block_component[block] = (len(components), j)
        components.append(component)
        logger.debug(
            f"Component at {f}: {len(blocks)} trace classes, |G| = {group.order()}, |N| = {normal.order()}"
        )

    return Congruence(
        semigroup=ds,
        pairs=pairs,
        trace=trace,
        quotient=quotient,
        qsccs=qsccs,
        components=components,
        block_meets=block_meets,
        block_component=block_component,
    )


def normal_subgroup_generators(
    ds: InverseSemigroup, f: PartialPerm, pairs: Iterable[Pair]
) -> List[PartialPerm]:
    """The elements f s a b^-1 s^-1 lying in H_f, for s reaching each node of f's Γ component."""
    f_node = ds.node_of(f)
    domain = f.domain
    symmetric = []
    for a, b in pairs:
        symmetric.append(compose(a, inverse(b)))
        symmetric.append(compose(b, inverse(a)))
    gens = []
    for node in ds.sccs.block(f_node):
        s = ds.h_connector(f_node, node)
        fs, s_inv = compose(f, s), inverse(s)
        for ab in symmetric:
            g = compose(compose(fs, ab), s_inv)
            if g.is_permutation_of(domain):
                gens.append(g)
    return gens


def compute(ds: InverseSemigroup, pairs: Iterable[Pair]) -> Congruence:
    """The least congruence containing ``pairs``."""
    pairs = _check_pairs(ds, pairs)
    logger.info(f"Computing the congruence generated by {len(pairs)} pairs on |S| = {len(ds)}")
    trace, quotient = quotient_closure(ds.gamma, trace_seed_pairs(ds, pairs))
    logger.info(f"Trace has {len(trace)} classes on {ds.gamma.node_count} nodes")

    def normal_subgroup_for(f: PartialPerm, group: GroupHandle) -> GroupHandle:
        return normal_closure(group, normal_subgroup_generators(ds, f, pairs))

    c = assemble(ds, trace, quotient, pairs, normal_subgroup_for)
    logger.info(f"Congruence has {nr_classes(c)} classes in {len(c.components)} components")
    return c


def nr_classes(c: Congruence) -> int:
    return sum(comp.nr_classes for comp in c.components)


def quotient_group_orders(c: Congruence) -> List[int]:
    return [comp.quotient_group_order for comp in c.components]


def class_reps(c: Congruence) -> List[PartialPerm]:
    """One element per class: s_j^-1 f n_k s_l, by component, j, k, l."""
    reps = []
    for comp in c.components:
        inverses = [inverse(s) for s in comp.connectors]
        for s_j_inv in inverses:
            for n in comp.transversal:
                left = compose(compose(s_j_inv, comp.meet), n)
                reps.extend(compose(left, s_l) for s_l in comp.connectors)
    return reps


def trace_classes(c: Congruence) -> List[List[PartialPerm]]:
    """Trace classes as lists of idempotents of S, the adjoined identity left out."""
    ds = c.semigroup
    classes = []
    for block in c.trace.blocks:
        members = [ds.nodes[n] for n in block if not (ds.identity_adjoined and n == ds.identity_node)]
        if members:
            classes.append(members)
    return classes


def trace_contains(c: Congruence, e: PartialPerm, f: PartialPerm) -> bool:
    """Follow the factorisations of e and f from the 1_S node of the quotient graph."""
    ds = c.semigroup
    start = c.trace.block_of[ds.identity_node]
    return follow_path(c.quotient, start, ds.factorize(e)) == follow_path(c.quotient, start, ds.factorize(f))


def _mu(c: Congruence, y: PartialPerm) -> PartialPerm:
    return c.block_meets[c.trace.block_of[c.semigroup.node_of(left_identity(y))]]


def _phi(c: Congruence, y: PartialPerm) -> PartialPerm:
    nu = c.block_meets[c.trace.block_of[c.semigroup.node_of(right_identity(y))]]
    return compose(compose(_mu(c, y), y), nu)


def mu_map(c: Congruence, y: PartialPerm) -> PartialPerm:
    """Least idempotent in the trace class of yy^-1."""
    c.semigroup.element_index(y)
    return _mu(c, y)


def nu_map(c: Congruence, y: PartialPerm) -> PartialPerm:
    """Least idempotent in the trace class of y^-1y."""
    c.semigroup.element_index(y)
    return _mu(c, inverse(y))


def phi(c: Congruence, y: PartialPerm) -> PartialPerm:
    c.semigroup.element_index(y)
    return _phi(c, y)


def normal_subgroup_at(c: Congruence, e: PartialPerm) -> GroupHandle:
    """H_f ∩ f/ρ where f is the meet of the trace class of the idempotent e."""
    block = c.trace.block_of[c.semigroup.node_of(e)]
    if block not in c._normal_cache:
        index, j = c.block_component[block]
        comp = c.components[index]
        c._normal_cache[block] = comp.normal_subgroup.conjugate(comp.translates[j])
    return c._normal_cache[block]


def _in_coset(g: PartialPerm, subgroup: GroupHandle, r: PartialPerm) -> bool:
    """g ∈ K·r for the subgroup K at f and r with dom(r) ⊆ dom(f)."""
    if r.rank == subgroup.base.rank:
        q = compose(g, inverse(r))
        return subgroup.contains(q) and compose(q, r) == g
    return any(compose(k, r) == g for k in subgroup.elements())


def kernel_contains(c: Congruence, x: PartialPerm) -> bool:
    """x is ρ-related to an idempotent, tested on the coset of N at mu(x) without the kernel."""
    ds = c.semigroup
    ds.element_index(x)
    dom_block = c.trace.block_of[ds.node_of(left_identity(x))]
    if dom_block != c.trace.block_of[ds.node_of(right_identity(x))]:
        return False
    f = c.block_meets[dom_block]
    return _in_coset(_phi(c, x), normal_subgroup_at(c, f), compose(f, compose(x, x)))


def contains(c: Congruence, a: PartialPerm, b: PartialPerm) -> bool:
    ds = c.semigroup
    ds.element_index(a)
    ds.element_index(b)
    if not c.trace.same_block(ds.node_of(right_identity(a)), ds.node_of(right_identity(b))):
        return False
    return kernel_contains(c, compose(a, inverse(b)))


def class_of(c: Congruence, x: PartialPerm) -> Set[PartialPerm]:
    """All y with y ρ x, assembled H-class by H-class from preimages under phi."""
    ds = c.semigroup
    ds.element_index(x)
    dom_block = c.trace.block_of[ds.node_of(left_identity(x))]
    ran_block = c.trace.block_of[ds.node_of(right_identity(x))]
    f = c.block_meets[dom_block]
    subgroup = normal_subgroup_at(c, f)
    fx = compose(f, x)

    result: Set[PartialPerm] = set()
    for e_node in c.trace.blocks[dom_block]:
        preimage = None
        for f_node in c.trace.blocks[ran_block]:
            if ds.scc_of(e_node) != ds.scc_of(f_node):
                continue
            s = ds.h_connector(e_node, f_node)
            r = compose(fx, inverse(s))
            if preimage is None:
                preimage = ds.green_h_class(e_node, e_node)
            result.update(compose(h, s) for h in preimage if _in_coset(_phi(c, h), subgroup, r))
    logger.debug(f"Class of {x} has {len(result)} elements")
    return result


def kernel(c: Congruence) -> Set[PartialPerm]:
    """Union of the classes of one idempotent per trace class."""
    logger.info("Enumerating the kernel")
    result: Set[PartialPerm] = set()
    for members in trace_classes(c):
        result |= class_of(c, members[0])
    logger.info(f"Kernel has {len(result)} elements")
    return result
