"""Arf invariant of a Rokhlin form from signature data, and a small surface catalog."""

from __future__ import annotations

import re
from dataclasses import dataclass


class NotCharacteristicError(ValueError):
    """sigma - F.F is not divisible by 8, so there is no Rokhlin form to speak of."""


def arf_from_signature(sigma: int, self_intersection: int) -> int:
    """((sigma - F.F) / 8) mod 2."""
    diff = sigma - self_intersection
    if diff % 8:
        raise NotCharacteristicError(
            f"sigma - F.F = {diff} is not divisible by 8 (surface not characteristic)")
    return (diff // 8) % 2


def plane_curve_genus(d: int) -> int:
    """Genus of a smooth plane curve of degree d."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    return (d - 1) * (d - 2) // 2


@dataclass(frozen=True)
class KnottedSurfaceData:
    name: str
    sigma: int
    self_intersection: int
    genus: int

    @property
    def characteristic(self) -> bool:
        return (self.sigma - self.self_intersection) % 8 == 0

    def arf(self) -> int:
        return arf_from_signature(self.sigma, self.self_intersection)

    def to_json(self) -> dict:
        out = {"name": self.name, "sigma": self.sigma,
               "selfIntersection": self.self_intersection, "genus": self.genus}
        if self.characteristic:
            out["arf"] = self.arf()
        return out


_NAME_RE = re.compile(r"(cp2-Kd|cp2-K3-sum)\((\d+)\)$")


def surface_catalog(name: str) -> KnottedSurfaceData:
    """Look up 'cp2-Kd(d)' (degree-d curve in CP2) or 'cp2-K3-sum(g)'.

    The second is the cubic connected-summed with a standard genus g-1 surface
    in S4, so its genus is g and its homology class is still 3[CP1].
    """
    m = _NAME_RE.match(name.strip())
    if not m:
        raise KeyError(f"unknown surface {name!r}; expected cp2-Kd(d) or cp2-K3-sum(g)")
    kind, n = m.group(1), int(m.group(2))
    if kind == "cp2-Kd":
        if n < 1:
            raise ValueError("degree must be >= 1")
        return KnottedSurfaceData(name, 1, n * n, plane_curve_genus(n))
    if n < 1:
        raise ValueError("genus must be >= 1")
    return KnottedSurfaceData(name, 1, 9, n)
