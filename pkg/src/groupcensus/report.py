"""Result records shared by the verifier, the catalog and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check; detail carries the witness on failure."""

    name: str
    passed: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class ClaimResult:
    """Outcome of constructing one claimed group and checking its census."""

    delta: int
    label: str
    order: int
    delta_computed: int
    sigma_computed: tuple[int, ...]
    passed: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "delta": self.delta,
            "label": self.label,
            "order": self.order,
            "delta_computed": self.delta_computed,
            "sigma_computed": list(self.sigma_computed),
            "pass": self.passed,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    """Aggregate of claim checks, catalog sweep checks and property checks."""

    claims: list[ClaimResult] = field(default_factory=list)
    sweep: list[CheckResult] = field(default_factory=list)
    properties: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (all(c.passed for c in self.claims)
                and all(c.passed for c in self.sweep)
                and all(c.passed for c in self.properties))

    def merge(self, other: "VerificationReport") -> None:
        self.claims.extend(other.claims)
        self.sweep.extend(other.sweep)
        self.properties.extend(other.properties)

    def failures(self) -> list[str]:
        out = [f"claim {c.delta}/{c.label}: {c.detail}"
               for c in self.claims if not c.passed]
        out.extend(f"{c.name}: {c.detail}" for c in self.sweep if not c.passed)
        out.extend(f"{c.name}: {c.detail}" for c in self.properties if not c.passed)
        return out

    def to_json_dict(self) -> dict:
        return {
            "claims": [c.to_json_dict() for c in self.claims],
            "sweep": [c.to_json_dict() for c in self.sweep],
            "properties": [c.to_json_dict() for c in self.properties],
            "pass": self.passed,
        }
