import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Mapping, Optional, Sequence, Tuple

from arcspline.errors import ArcDomainError
from arcspline.geometry.symplectic2d import Vec2, norm

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ArcSeg:
    a: Vec2
    b: Vec2
    theta: float

    def __post_init__(self) -> None:
        if not abs(self.theta) < TWO_PI:
            raise ArcDomainError(f"theta {self.theta!r} outside (-2pi, 2pi)")
        if self.theta != 0.0 and norm(self.chord) == 0.0:
            raise ArcDomainError("coincident endpoints require theta = 0")

    @property
    def chord(self) -> Vec2:
        return self.b - self.a


@dataclass(frozen=True)
class CenterParams:
    center: Vec2
    radius: float
    theta0: float
    theta: float


@dataclass(frozen=True)
class Polyarc:
    """Ordered (vertex, theta) triples.

    An open curve with n+1 vertices has n thetas; a closed curve with n
    vertices has n thetas, the last one belonging to the segment p[n-1] -> p[0].
    """

    vertices: Tuple[Vec2, ...]
    thetas: Tuple[float, ...]
    closed: bool = False
    # length unit label carried through from documents
    units: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "thetas", tuple(float(t) for t in self.thetas))
        if not self.vertices:
            raise ArcDomainError("polyarc needs at least one vertex")
        expected = len(self.vertices) if self.closed else len(self.vertices) - 1
        if len(self.thetas) != expected:
            kind = "closed" if self.closed else "open"
            raise ArcDomainError(
                f"{kind} polyarc with {len(self.vertices)} vertices needs {expected} thetas, got {len(self.thetas)}"
            )

    @property
    def segment_count(self) -> int:
        return len(self.thetas)

    def endpoints(self, i: int) -> Tuple[Vec2, Vec2]:
        n = len(self.vertices)
        return self.vertices[i], self.vertices[(i + 1) % n]

    @classmethod
    def from_polygon(cls, vertices: Sequence[Vec2], closed: bool = False) -> "Polyarc":
        count = len(vertices) if closed else max(len(vertices) - 1, 0)
        return cls(tuple(vertices), (0.0,) * count, closed)

    def reversed(self) -> "Polyarc":
        """Same curve traversed the other way round."""
        if self.closed:
            verts = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        else:
            verts = tuple(reversed(self.vertices))
        return Polyarc(verts, tuple(-t for t in reversed(self.thetas)), self.closed, self.units)


@dataclass(frozen=True)
class SplineFamily:
    """Polygon plus its exterior angles; indexes arc splines by one angle."""

    vertices: Tuple[Vec2, ...]
    closed: bool
    gammas: Tuple[float, ...]
    closing_gamma: Optional[float] = None

    @property
    def segment_count(self) -> int:
        return len(self.vertices) if self.closed else len(self.vertices) - 1


class Objective(str, Enum):
    LENGTH = "length"
    AREA = "area"
    ENERGY = "energy"


@dataclass(frozen=True)
class GssConfig:
    lo: float = math.radians(-344.0)
    up: float = math.radians(344.0)
    tol: float = math.radians(0.6)
    max_iter: int = 200

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.up)):
            raise ValueError("search bounds must be finite")
        if not self.lo < self.up:
            raise ValueError(f"lo ({self.lo}) must be below up ({self.up})")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if self.max_iter <= 0:
            raise ValueError("max_iter must be positive")

    @classmethod
    def from_degrees(cls, lo: float = -344.0, up: float = 344.0, tol: float = 0.6, max_iter: int = 200) -> "GssConfig":
        return cls(math.radians(lo), math.radians(up), math.radians(tol), int(max_iter))

    @classmethod
    def from_mapping(cls, cfg: Mapping[str, Any]) -> "GssConfig":
        return cls.from_degrees(
            lo=float(cfg.get("lo_deg", -344.0)),
            up=float(cfg.get("up_deg", 344.0)),
            tol=float(cfg.get("tol_deg", 0.6)),
            max_iter=int(cfg.get("max_iter", 200)),
        )


@dataclass
class GssResult:
    x: float
    lo: float
    up: float
    reductions: int
    evaluations: int


@dataclass
class SplineMetrics:
    length: float
    area: float
    energy: float

    def value(self, objective: Objective) -> float:
        return {
            Objective.LENGTH: self.length,
            Objective.AREA: self.area,
            Objective.ENERGY: self.energy,
        }[objective]


@dataclass
class SmoothResult:
    objective: Objective
    theta0: float
    spline: Polyarc
    report: SplineMetrics
    search: GssResult


@dataclass
class ValidationIssue:
    code: str
    message: str


@dataclass
class ValidationReport:
    status: str
    issues: List[ValidationIssue] = field(default_factory=list)
