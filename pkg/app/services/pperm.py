from functools import total_ordering
from typing import Iterable, Optional, Sequence, Tuple

from app.core.exceptions import DegreeMismatchError, NotIdempotentError, NotationError

# Points are stored 0-based; UNDEFINED sorts below every point.
UNDEFINED = -1


@total_ordering
class PartialPerm:
    """
    A partial bijection of {1, ..., n}, acting on the right: (p)(fg) = ((p)f)g.

    Internally the images are a tuple of length ``degree`` over 0..n-1 with
    UNDEFINED marking points outside the domain. The public constructor
    validates injectivity; products go through ``_make`` which trusts its input.

    Instances are immutable, hashable and totally ordered (lexicographic on the
    images, UNDEFINED least).
    """

    __slots__ = ("_images", "_padded", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        seen = set()
        for point in images:
            if point == UNDEFINED:
                continue
            if not 0 <= point < n:
                raise NotationError(f"image {point + 1} out of range for degree {n}")
            if point in seen:
                raise NotationError(f"image {point + 1} occurs twice, not injective")
            seen.add(point)
        self._set(images)

    def _set(self, images: Tuple[int, ...]) -> None:
        self._images = images
        self._padded = images + (UNDEFINED,)
        self._hash = hash(images)

    @classmethod
    def _make(cls, images: Tuple[int, ...]) -> "PartialPerm":
        obj = object.__new__(cls)
        obj._set(images)
        return obj

    @classmethod
    def from_images(cls, images: Sequence[Optional[int]]) -> "PartialPerm":
        """Build from 1-based images, ``None`` for undefined points."""
        return cls(UNDEFINED if i is None else i - 1 for i in images)

    @classmethod
    def identity(cls, degree: int) -> "PartialPerm":
        return cls._make(tuple(range(degree)))

    @classmethod
    def empty(cls, degree: int) -> "PartialPerm":
        return cls._make((UNDEFINED,) * degree)

    @classmethod
    def idempotent_on(cls, degree: int, points: Iterable[int]) -> "PartialPerm":
        """Identity on the given 0-based points."""
        images = [UNDEFINED] * degree
        for p in points:
            images[p] = p
        return cls._make(tuple(images))

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def raw(self) -> Tuple[int, ...]:
        """0-based images with UNDEFINED for points outside the domain."""
        return self._images

    @property
    def images(self) -> Tuple[Optional[int], ...]:
        """1-based images with ``None`` for points outside the domain."""
        return tuple(None if i == UNDEFINED else i + 1 for i in self._images)

    @property
    def domain(self) -> frozenset:
        return frozenset(p for p, i in enumerate(self._images) if i != UNDEFINED)

    @property
    def image(self) -> frozenset:
        return frozenset(i for i in self._images if i != UNDEFINED)

    @property
    def rank(self) -> int:
        return self.degree - self._images.count(UNDEFINED)

    def __call__(self, point: int) -> int:
        return self._images[point]

    def __mul__(self, other: "PartialPerm") -> "PartialPerm":
        return compose(self, other)

    def __invert__(self) -> "PartialPerm":
        return inverse(self)

    def is_idempotent(self) -> bool:
        return all(i == UNDEFINED or i == p for p, i in enumerate(self._images))

    def is_permutation_of(self, points: frozenset) -> bool:
        return self.domain == points and self.image == points

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialPerm):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: "PartialPerm") -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "[" + ",".join("-" if i == UNDEFINED else str(i + 1) for i in self._images) + "]"


def _check_degrees(f: PartialPerm, g: PartialPerm) -> None:
    if len(f._images) != len(g._images):
        raise DegreeMismatchError(f"degree {f.degree} does not match degree {g.degree}")


def compose(f: PartialPerm, g: PartialPerm) -> PartialPerm:
    """Left-to-right product fg."""
    _check_degrees(f, g)
    padded = g._padded
    return PartialPerm._make(tuple([padded[i] for i in f._images]))


def inverse(f: PartialPerm) -> PartialPerm:
    images = [UNDEFINED] * len(f._images)
    for p, i in enumerate(f._images):
        if i != UNDEFINED:
            images[i] = p
    return PartialPerm._make(tuple(images))


def natural_leq(s: PartialPerm, t: PartialPerm) -> bool:
    """s <= t iff s is the restriction of t to dom(s)."""
    _check_degrees(s, t)
    return all(i == UNDEFINED or i == j for i, j in zip(s._images, t._images))


def meet_idem(e: PartialPerm, f: PartialPerm) -> PartialPerm:
    """Greatest idempotent below both: the identity on dom(e) ∩ dom(f)."""
    _check_degrees(e, f)
    for x in (e, f):
        if not x.is_idempotent():
            raise NotIdempotentError(f"{x} is not an idempotent")
    return compose(e, f)


def left_identity(s: PartialPerm) -> PartialPerm:
    """ss^-1, the identity on dom(s)."""
    return PartialPerm._make(tuple(p if i != UNDEFINED else UNDEFINED for p, i in enumerate(s._images)))


def right_identity(s: PartialPerm) -> PartialPerm:
    """s^-1 s, the identity on im(s)."""
    images = [UNDEFINED] * len(s._images)
    for i in s._images:
        if i != UNDEFINED:
            images[i] = i
    return PartialPerm._make(tuple(images))
