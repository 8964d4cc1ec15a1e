"""
Text formats for partial permutations.

Two notations are accepted:

* image lists, e.g. ``[2,3,4,1]`` or ``[-,1,2,3]``: one entry per point, ``-``
  for undefined; recognised by a comma or a ``-`` inside the brackets, and at
  degree 1 ``[1]`` is the identity rather than a one-point chain;
* cycle/chain notation, e.g. ``(1 2 3 4)``, ``[4 3 2 1]``, ``[1 2 4] (3)``: a
  cycle ``(i1 ... ik)`` maps each point to the next and ik to i1, a chain
  ``[i1 ... ik]`` maps each point to the next and leaves ik undefined, and
  ``(i)`` fixes i. Omitted points are undefined, so the degree must be given.
  A point may occur at most once as a source and at most once as a target.
"""
import re
from typing import Dict, List

from app.core.exceptions import NotationError
from app.services.pperm import UNDEFINED, PartialPerm

_GROUP = re.compile(r"\s*([\(\[])([^()\[\]]*)([\)\]])")
_BRACKETS = {"(": ")", "[": "]"}


def _parse_image_list(body: str, degree: int) -> PartialPerm:
    entries = [item.strip() for item in body.split(",")]
    if len(entries) != degree:
        raise NotationError(f"image list has {len(entries)} entries, expected degree {degree}")
    images = []
    for item in entries:
        if item == "-":
            images.append(None)
        elif item.isdigit():
            images.append(int(item))
        else:
            raise NotationError(f"bad image list entry {item!r}")
    return PartialPerm.from_images(images)


def _parse_points(body: str, degree: int) -> List[int]:
    points = []
    for token in body.split():
        if not token.isdigit():
            raise NotationError(f"bad point {token!r}")
        point = int(token)
        if not 1 <= point <= degree:
            raise NotationError(f"point {point} out of range for degree {degree}")
        points.append(point - 1)
    return points


def _is_image_list(text: str, degree: int) -> bool:
    """A single bracket with a comma or a ``-``, or one lone entry at degree 1."""
    if not (text.startswith("[") and text.endswith("]")):
        return False
    body = text[1:-1]
    if "[" in body or "]" in body or "(" in body:
        return False
    return "," in body or "-" in body or (degree == 1 and len(body.split()) == 1)


def parse_element(text: str, degree: int) -> PartialPerm:
    """Parse either notation into a PartialPerm of the given degree."""
    text = text.strip()
    if not text:
        raise NotationError("empty element")
    if _is_image_list(text, degree):
        return _parse_image_list(text[1:-1], degree)

    mapping: Dict[int, int] = {}
    targets = set()

    def add(source: int, target: int) -> None:
        if source in mapping or target in targets:
            raise NotationError(f"point occurs twice in {text!r}")
        mapping[source] = target
        targets.add(target)

    position = 0
    while position < len(text):
        match = _GROUP.match(text, position)
        if match is None:
            if text[position:].strip():
                raise NotationError(f"malformed element {text!r}")
            break
        opening, body, closing = match.groups()
        if _BRACKETS[opening] != closing:
            raise NotationError(f"mismatched brackets in {text!r}")
        points = _parse_points(body, degree)
        for a, b in zip(points, points[1:]):
            add(a, b)
        if opening == "(" and points:
            add(points[-1], points[0])
        position = match.end()

    images = [UNDEFINED] * degree
    for source, target in mapping.items():
        images[source] = target
    return PartialPerm(images)


def format_image_list(x: PartialPerm) -> str:
    return repr(x)


def format_cycles(x: PartialPerm) -> str:
    """Chains first (by starting point), then cycles (from their least point)."""
    images = x.raw
    domain, image = x.domain, x.image
    parts = []
    visited = set()
    for start in sorted(domain - image):
        chain = [start]
        point = start
        while images[point] != UNDEFINED:
            point = images[point]
            chain.append(point)
        visited.update(chain)
        parts.append("[" + " ".join(str(p + 1) for p in chain) + "]")
    for start in sorted(domain - visited):
        if start in visited:
            continue
        cycle = [start]
        point = images[start]
        while point != start:
            cycle.append(point)
            point = images[point]
        visited.update(cycle)
        parts.append("(" + " ".join(str(p + 1) for p in cycle) + ")")
    return "".join(parts) or "()"
