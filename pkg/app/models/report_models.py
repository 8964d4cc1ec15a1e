from typing import List, Optional

from pydantic import BaseModel, Field


class SemigroupReport(BaseModel):
    degree: int
    size: int = Field(..., description="Number of elements of S")
    idempotents: int = Field(..., description="Number of idempotents of S")
    d_classes: int
    d_class_sizes: List[int]
    alphabet: List[str] = Field(..., description="Generators and their new inverses, in letter order")


class ComponentReport(BaseModel):
    meet: str = Field(..., description="Least idempotent of the representative trace class")
    trace_classes: int
    group_order: int
    normal_subgroup_order: int
    quotient_group_order: int


class CongruenceReport(BaseModel):
    engine: str
    degree: int
    semigroup_size: int
    pairs: Optional[List[List[str]]] = Field(None, description="Generating pairs; absent for meets")
    nr_classes: int
    trace_classes: int
    components: List[ComponentReport] = Field(default_factory=list)


class ElementSetReport(BaseModel):
    element: Optional[str] = None
    size: int
    elements: List[str]


class ContainsReport(BaseModel):
    a: str
    b: str
    contains: bool


class TraceReport(BaseModel):
    classes: List[List[str]]


class MuReport(BaseModel):
    atoms: List[List[int]]
    centraliser: List[str]
    nr_classes: int
    trivial: bool


class BenchRecord(BaseModel):
    seed: int
    degree: int
    size: int
    idempotents: int
    pairs: int
    fast_seconds: float
    naive_seconds: float
    ratio: float


class BenchReport(BaseModel):
    records: List[BenchRecord]
    min_size: int
    median_ratio: Optional[float] = Field(None, description="Median naive/fast ratio over instances with size >= min_size")
