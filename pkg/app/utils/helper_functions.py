from pathlib import Path
from typing import List, Tuple

from app.core.exceptions import NotationError
from app.core.logging_config import logger
from app.services.notation import parse_element
from app.services.pperm import PartialPerm

Pair = Tuple[PartialPerm, PartialPerm]


def _read_lines(path: str) -> List[Tuple[int, str]]:
    try:
        text = Path(path).read_text()
    except OSError as e:
        logger.error(f"Cannot read {path}: {e}")
        raise NotationError(f"cannot read {path}: {e.strerror}") from e
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].rstrip()
        if line.strip():
            lines.append((number, line))
    return lines


def parse_semigroup_text(lines: List[Tuple[int, str]], source: str = "<input>") -> Tuple[int, List[PartialPerm]]:
    if not lines:
        raise NotationError(f"{source}: empty semigroup file")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
        raise NotationError(f"{source}:{number}: expected 'degree n', got {header.strip()!r}")
    degree = int(parts[1])
    gens = []
    for number, line in lines[1:]:
        try:
            gens.append(parse_element(line, degree))
        except NotationError as e:
            raise NotationError(f"{source}:{number}: {e}") from e
    if not gens:
        raise NotationError(f"{source}: no generators given")
    return degree, gens


def read_semigroup_file(path: str) -> Tuple[int, List[PartialPerm]]:
    """
    Read a ``.sgp`` file: ``degree n`` on the first line, then one generator per line.

    Blank lines and ``#`` comments are ignored.

    Raises:
        NotationError: If the file is missing or a line does not parse.
    """
    degree, gens = parse_semigroup_text(_read_lines(path), source=path)
    logger.info(f"Read {len(gens)} generators of degree {degree} from {path}")
    return degree, gens


def read_pairs_file(path: str, degree: int) -> List[Pair]:
    """Read a ``.prs`` file: one pair per line, the two elements separated by a tab."""
    pairs = []
    for number, line in _read_lines(path):
        fields = [field for field in line.split("\t") if field.strip()]
        if len(fields) != 2:
            raise NotationError(f"{path}:{number}: expected two tab-separated elements")
        try:
            pairs.append((parse_element(fields[0], degree), parse_element(fields[1], degree)))
        except NotationError as e:
            raise NotationError(f"{path}:{number}: {e}") from e
    logger.info(f"Read {len(pairs)} pairs from {path}")
    return pairs
