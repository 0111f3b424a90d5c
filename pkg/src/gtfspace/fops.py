"""F-interior, F-closure and the openness/closedness classes they induce."""

from __future__ import annotations

from dataclasses import dataclass

from . import sets
from .errors import DomainError, ResourceError
from .sets import PointSet
from .space import GtfSpace

DEFAULT_CAP = 16


def f_interior(space: GtfSpace, a: PointSet) -> PointSet:
    """Points having some associated set inside ``a``."""
    space.require_valid()
    out = 0
    for w, fw in enumerate(space.assoc):
        if any(g & ~a == 0 for g in fw):
            out |= 1 << w
    return out


def f_closure(space: GtfSpace, a: PointSet) -> PointSet:
    """Points all of whose associated sets meet ``a`` (vacuously, when ``F_w`` is empty)."""
    space.require_valid()
    out = 0
    for w, fw in enumerate(space.assoc):
        if all(g & a for g in fw):
            out |= 1 << w
    return out


@dataclass(frozen=True)
class OpennessClass:
    f_open: bool
    df_open: bool
    uf_open: bool


@dataclass(frozen=True)
class ClosednessClass:
    f_closed: bool
    df_closed: bool
    uf_closed: bool


def classify_openness(space: GtfSpace, a: PointSet) -> OpennessClass:
    fi = f_interior(space, a)
    return OpennessClass(f_open=fi == a, df_open=sets.is_subset(fi, a), uf_open=sets.is_subset(a, fi))


def classify_closedness(space: GtfSpace, a: PointSet) -> ClosednessClass:
    fc = f_closure(space, a)
    return ClosednessClass(
        f_closed=fc == a, df_closed=sets.is_subset(fc, a), uf_closed=sets.is_subset(a, fc)
    )


def is_f_open(space: GtfSpace, a: PointSet) -> bool:
    return f_interior(space, a) == a


def is_f_closed(space: GtfSpace, a: PointSet) -> bool:
    return f_closure(space, a) == a


def open_hull(space: GtfSpace, a: PointSet) -> PointSet:
    """``a | FInt(a)`` for an open set ``a``; always F-open.

    Every point associated with ``a`` lands in the hull, which is how each
    point with a non-empty ``F`` acquires an F-open set containing it.
    """
    space.require_valid()
    if a not in space.mu:
        raise DomainError(f"{space.fmt(a)} is not an open set")
    hull = a | f_interior(space, a)
    if f_interior(space, hull) != hull:
        raise AssertionError(f"hull {space.fmt(hull)} of {space.fmt(a)} is not F-open")
    return hull


def check_cap(space: GtfSpace, cap: int) -> None:
    if space.n > cap:
        raise ResourceError(
            f"universe has {space.n} points, above the enumeration cap of {cap}; "
            "raise the cap (--cap) to enumerate anyway"
        )


def enumerate_f_open(space: GtfSpace, cap: int = DEFAULT_CAP) -> list[PointSet]:
    """All F-open subsets of ``W`` in canonical order."""
    space.require_valid()
    check_cap(space, cap)
    return _f_open_cached(space)


def _f_open_cached(space: GtfSpace) -> list[PointSet]:
    # one enumeration per space object; spaces are immutable
    cached = space.__dict__.get("_f_open")
    if cached is None:
        cached = sets.canonical(s for s in sets.all_subsets(space.n) if f_interior(space, s) == s)
        space.__dict__["_f_open"] = cached
    return list(cached)
