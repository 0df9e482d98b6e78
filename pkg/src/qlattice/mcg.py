"""Dehn twist generators of the mapping class group and their curve intersection data."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

__all__ = ["MCGGenerator", "parse_generator", "generators", "relation_pairs", "KINDS"]

KINDS = ("tau_alpha", "tau_beta", "tau_gamma")

_PATTERN = re.compile(r"^(tau_alpha|tau_beta|tau_gamma)_?(\d*)(\^(-?1))?$")


@dataclass(frozen=True)
class MCGGenerator:
    """Dehn twist along alpha_j, beta_j (1 <= j <= g) or gamma_k (1 <= k <= g - 1).

    ``sign`` is +1 for the positive twist and -1 for its inverse.
    """

    kind: str
    index: int = 1
    sign: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.index < 1:
            raise ValueError("generator index starts at 1")

    def validate(self, g: int) -> None:
        top = g - 1 if self.kind == "tau_gamma" else g
        if self.index > top:
            raise ValueError(f"{self} is out of range for genus {g}")

    def inverse(self) -> MCGGenerator:
        return MCGGenerator(self.kind, self.index, -self.sign)

    def __str__(self):
        s = f"{self.kind}{self.index}"
        return s if self.sign == 1 else s + "^-1"


def parse_generator(text: str) -> MCGGenerator:
    """Parse names such as ``tau_alpha``, ``tau_beta2``, ``tau_gamma_1^-1``."""
    m = _PATTERN.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse generator {text!r}")
    kind, idx, _, exp = m.groups()
    return MCGGenerator(kind, int(idx) if idx else 1, -1 if exp == "-1" else 1)


def generators(g: int) -> list:
    """All positive Dehn twist generators for genus g."""
    out = [MCGGenerator("tau_alpha", j) for j in range(1, g + 1)]
    out += [MCGGenerator("tau_beta", j) for j in range(1, g + 1)]
    out += [MCGGenerator("tau_gamma", k) for k in range(1, g)]
    return out


def _meets_once(a: MCGGenerator, b: MCGGenerator) -> bool:
    pair = {(a.kind, a.index), (b.kind, b.index)}
    for j in range(1, max(a.index, b.index) + 1):
        if pair in ({("tau_alpha", j), ("tau_beta", j)},
                    {("tau_beta", j), ("tau_gamma", j)},
                    {("tau_gamma", j), ("tau_beta", j + 1)}):
            return True
    return False


def relation_pairs(g: int) -> list:
    """(A, B, relation) for every unordered pair: "braid" if the curves meet once, else "commute"."""
    out = []
    for a, b in combinations(generators(g), 2):
        out.append((a, b, "braid" if _meets_once(a, b) else "commute"))
    return out
