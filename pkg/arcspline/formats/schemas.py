from typing import List, Literal, Optional

from pydantic import AliasChoices, BaseModel, ConfigDict, Field


class PointModel(BaseModel):
    model_config = ConfigDict(extra="ignore")

    x: float
    y: float
    # angle of the arc from this point to the next one
    theta: float = Field(default=0.0, validation_alias=AliasChoices("theta", "θ"))


class PolyarcDocument(BaseModel):
    model_config = ConfigDict(extra="ignore")

    closed: bool = False
    angle_unit: Literal["radians", "degrees"] = "radians"
    units: Optional[str] = None
    points: List[PointModel]
