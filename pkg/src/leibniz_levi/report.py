from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from .conjugacy import classify
from .core import AlgebraTable
from .levi import levi_subalgebra
from .radicals import DERIVED, LOWER_CENTRAL, series

DIM_KEYS = ("L", "I", "N", "R", "S", "E", "J", "K", "G", "Q")


@dataclass
class Report:
    name: str
    dims: dict
    series_lengths: dict
    hom_dim: int
    verdict: str
    predicates: dict
    evidence: dict
    timing: float = 0.0
    schema: int = field(default=1)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, s: str) -> "Report":
        return cls.from_dict(json.loads(s))

    def render(self) -> str:
        lines = [f"algebra: {self.name or '(unnamed)'}"]
        lines.append("dims: " + "  ".join(
            f"{k}={'?' if self.dims.get(k) is None else self.dims[k]}" for k in DIM_KEYS))
        lines.append("series: " + ", ".join(f"{k} length {v}" for k, v in self.series_lengths.items()))
        lines.append(f"Hom_S(S, I) dimension: {self.hom_dim}")
        lines.append("predicates: " + ", ".join(f"{k}: {v}" for k, v in self.predicates.items()))
        lines.append(f"verdict: {self.verdict}")
        for k, v in self.evidence.items():
            lines.append(f"  {k}: {v}")
        lines.append(f"time: {self.timing:.3f}s")
        return "\n".join(lines)


def analyze(A: AlgebraTable) -> Report:
    t0 = time.perf_counter()
    levi = levi_subalgebra(A)
    c = classify(A, levi)
    dec = c.decomposition
    dims = {
        "L": A.dim, "I": levi.I.dim, "N": levi.N.dim, "R": levi.R.dim, "S": levi.S.dim,
        "E": c.E.dim, "J": None if dec is None else dec.J.dim,
        "K": None if dec is None else dec.K.dim,
        "G": None if dec is None else dec.G.dim,
        "Q": None if dec is None else dec.Q.dim,
    }
    if dec is None:
        dims["J"] = c.evidence.get("dim J")
    lengths = {
        "derived(R)": series(A, levi.R, DERIVED).length,
        "lower_central(N)": series(A, levi.N, LOWER_CENTRAL).length,
    }
    return Report(A.name, dims, lengths, c.evidence["hom_dim"], c.verdict.value,
                  dict(c.predicates), dict(c.evidence), time.perf_counter() - t0)
