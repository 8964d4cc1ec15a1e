"""Report models built from computations, shared by the CLI and the background jobs."""
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from app.core.cache import cache_response
from app.core.logging_config import logger
from app.models.report_models import (
    ComponentReport,
    CongruenceReport,
    ElementSetReport,
    MuReport,
    SemigroupReport,
    TraceReport,
)
from app.services import congruence, mu
from app.services.congruence import Congruence
from app.services.notation import format_image_list, parse_element
from app.services.oracle import NaiveCongruence
from app.services.pperm import PartialPerm
from app.services.semigroup import InverseSemigroup

Pair = Tuple[PartialPerm, PartialPerm]
AnyCongruence = Union[Congruence, NaiveCongruence]


def make_congruence(ds: InverseSemigroup, pairs: Iterable[Pair], engine: str) -> AnyCongruence:
    if engine == "naive":
        return NaiveCongruence.generate(ds, pairs)
    return congruence.compute(ds, pairs)


def semigroup_report(ds: InverseSemigroup) -> SemigroupReport:
    sizes = ds.d_class_sizes()
    return SemigroupReport(
        degree=ds.degree,
        size=len(ds),
        idempotents=len(ds.idempotents),
        d_classes=len(sizes),
        d_class_sizes=[sizes[b] for b in ds.d_classes],
        alphabet=[format_image_list(x) for x in ds.alphabet],
    )


def congruence_report(c: AnyCongruence, engine: str) -> CongruenceReport:
    ds = c.semigroup
    components = []
    if isinstance(c, Congruence):
        components = [
            ComponentReport(
                meet=format_image_list(comp.meet),
                trace_classes=len(comp.blocks),
                group_order=comp.group.order(),
                normal_subgroup_order=comp.normal_subgroup.order(),
                quotient_group_order=comp.quotient_group_order,
            )
            for comp in c.components
        ]
    pairs = None
    if c.pairs is not None:
        pairs = [[format_image_list(a), format_image_list(b)] for a, b in c.pairs]
    return CongruenceReport(
        engine=engine,
        degree=ds.degree,
        semigroup_size=len(ds),
        pairs=pairs,
        nr_classes=c.nr_classes(),
        trace_classes=len(c.trace_classes()),
        components=components,
    )


def element_set_report(elements: Iterable[PartialPerm], element: Optional[PartialPerm] = None) -> ElementSetReport:
    ordered = sorted(elements)
    return ElementSetReport(
        element=None if element is None else format_image_list(element),
        size=len(ordered),
        elements=[format_image_list(x) for x in ordered],
    )


def reps_report(c: AnyCongruence) -> ElementSetReport:
    reps = c.class_reps()
    return ElementSetReport(size=len(reps), elements=[format_image_list(x) for x in reps])


def trace_report(c: AnyCongruence) -> TraceReport:
    return TraceReport(classes=[[format_image_list(e) for e in members] for members in c.trace_classes()])


def mu_report(ds: InverseSemigroup) -> MuReport:
    atoms = mu.boolean_atoms(ds)
    nr_classes = mu.mu_nr_classes(ds)
    return MuReport(
        atoms=[[p + 1 for p in block] for block in atoms.blocks],
        centraliser=[format_image_list(s) for s in mu.centraliser(ds)],
        nr_classes=nr_classes,
        trivial=nr_classes == len(ds),
    )


def parse_pairs(pairs: Sequence[Sequence[str]], degree: int) -> List[Pair]:
    return [(parse_element(a, degree), parse_element(b, degree)) for a, b in pairs]


@cache_response("congruence-report")
def run_congruence_job(degree: int, generators: List[str], pairs: List[List[str]], engine: str) -> dict:
    """Enumerate S, compute the congruence and return its report as JSON-ready data."""
    logger.info(f"Congruence job: degree {degree}, {len(generators)} generators, {len(pairs)} pairs, engine {engine}")
    ds = InverseSemigroup(degree, [parse_element(text, degree) for text in generators])
    c = make_congruence(ds, parse_pairs(pairs, degree), engine)
    report = congruence_report(c, engine)
    logger.info(f"Congruence job finished with {report.nr_classes} classes")
    return report.model_dump()
