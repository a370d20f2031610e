"""Euler characteristics of components and their compactifications.

For the open component H the answer is a closed form: chi is 1 for the
contractible genus-zero cases and 0 everywhere else.  For the
compactification N the cell contributions of the boundary cancel
against each other except for one unit per decorated graph, so chi(N)
is a graph count; the cases where no graph model applies (a vanishing
index, full degree, or an extended type) again have closed forms.
Every result carries a route tag naming the rule that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .decograph import ZeroIndexError
from .enumerator import GammaMode, WorkMeter, enum_nonsep, enum_sep
from .topotype import TopType, Variant, admits_extension, require_exists


class Route(str, Enum):
    """Which rule produced a chi value."""

    COMPONENT_G0 = "COMPONENT_G0"            # contractible genus-0 component
    COMPONENT_ZERO = "COMPONENT_ZERO"        # free symmetry action, chi = 0
    SEP_FULL_DEGREE = "SEP_FULL_DEGREE"      # |sum i| = n closed form
    ZERO_INDEX = "ZERO_INDEX"                # some index 0, chi(N) = 0
    GRAPH_COUNT_NONSEP = "GRAPH_COUNT_NONSEP"
    GRAPH_COUNT_SEP = "GRAPH_COUNT_SEP"
    EXT_ONE = "EXT_ONE"                      # extended types, chi(N) = 1


@dataclass(frozen=True)
class ChiResult:
    value: int
    route: Route
    graph_count: int | None = None


class AdmitsExtensionError(ValueError):
    """The components of this type are labelled by extended types."""

    def __init__(self, t: TopType):
        super().__init__(
            "this separating type admits the extension; its components "
            "are labelled by the section genus, append ;<xi>")
        self.type = t


def _reject_unextended(t: TopType):
    if t.variant is Variant.SEP and admits_extension(t):
        raise AdmitsExtensionError(t)


def chi_component(t: TopType) -> ChiResult:
    """chi of the open component H labelled by the type.

    Equals 1 in exactly two situations: any non-separating type with
    g = 0, and a separating type with g = 0 and |i_1| = n (then the
    component is contractible).  Extended types always give 0.
    """
    require_exists(t)
    _reject_unextended(t)
    if t.variant is Variant.NONSEP:
        if t.g == 0:
            return ChiResult(1, Route.COMPONENT_G0)
        return ChiResult(0, Route.COMPONENT_ZERO)
    if t.variant is Variant.SEP:
        if t.g == 0 and sum(abs(i) for i in t.indices) == t.n:
            return ChiResult(1, Route.COMPONENT_G0)
        return ChiResult(0, Route.COMPONENT_ZERO)
    return ChiResult(0, Route.COMPONENT_ZERO)


def chi_compactification(t: TopType, *,
                         gamma_mode: GammaMode = GammaMode.AS_DATA,
                         involution: bool = True,
                         short_circuit: bool = True,
                         meter: WorkMeter | None = None) -> ChiResult:
    """chi of the compactification N of the component.

    Non-separating: 0 when some index vanishes (with k > 0), otherwise
    the number of decorated graphs.  Separating: 1 when |sum i| = n,
    0 when some degree vanishes, otherwise the number of graphs.
    Extended: 0 when some degree vanishes, otherwise 1.

    ``short_circuit=False`` forces the full-degree separating branch
    through the enumerator instead of the closed form; the route then
    records how the value was actually obtained.
    """
    require_exists(t)
    _reject_unextended(t)
    if t.variant is Variant.NONSEP:
        if t.k > 0 and any(i == 0 for i in t.indices):
            return ChiResult(0, Route.ZERO_INDEX)
        graphs = enum_nonsep(t, gamma_mode=gamma_mode,
                             involution=involution, meter=meter)
        return ChiResult(len(graphs), Route.GRAPH_COUNT_NONSEP, len(graphs))
    if t.variant is Variant.SEP:
        if sum(abs(i) for i in t.indices) == t.n:
            if short_circuit:
                return ChiResult(1, Route.SEP_FULL_DEGREE)
            graphs = enum_sep(t, allow_full_degree=True, meter=meter)
            return ChiResult(len(graphs), Route.GRAPH_COUNT_SEP, len(graphs))
        if any(i == 0 for i in t.indices):
            return ChiResult(0, Route.ZERO_INDEX)
        graphs = enum_sep(t, meter=meter)
        return ChiResult(len(graphs), Route.GRAPH_COUNT_SEP, len(graphs))
    if any(i == 0 for i in t.indices):
        return ChiResult(0, Route.ZERO_INDEX)
    return ChiResult(1, Route.EXT_ONE)


__all__ = [
    "AdmitsExtensionError",
    "ChiResult",
    "Route",
    "ZeroIndexError",
    "chi_compactification",
    "chi_component",
]
