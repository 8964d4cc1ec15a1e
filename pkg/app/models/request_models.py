from typing import List, Tuple

from pydantic import BaseModel, Field, field_validator

from app.core.config import ENGINES


class CongruenceRequest(BaseModel):
    degree: int = Field(..., ge=0, description="Degree of the partial permutations")
    generators: List[str] = Field(..., min_length=1, description="Generators in image-list or cycle notation")
    pairs: List[Tuple[str, str]] = Field(default_factory=list, description="Generating pairs of the congruence")
    engine: str = Field("fast", description="Computation engine")

    @field_validator("engine")
    @classmethod
    def check_engine(cls, value: str) -> str:
        if value not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}")
        return value
