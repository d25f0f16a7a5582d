"""Drilling a simple spine along a subpolyhedron, and hypersurface cutting.

Drilling removes from the spine the open regular neighborhood of a
subcomplex k and adds the neighborhood's frontier.  The spine lives in T'
and k in T or T'; both are re-expressed in the second derived subdivision
of T', where the star of k's image is a regular neighborhood.  Off the
spine's closed 1-skeleton the vertex count is preserved; the count of the
result is recomputed from links (sound for ambient dimension at most 3).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from plspines.core import (
    Complex,
    DerivedComplex,
    InvariantViolation,
    derived,
    derived_image,
    face_link,
    star,
)
from plspines.spine import SpineComplex
from plspines.strata import (
    assign_types,
    classify_all_links,
    classify_point_link,
    spine_vertex_count_from_links,
)


@dataclass(frozen=True, eq=False)
class DrillContext:
    """Shared towers for drilling one spine repeatedly."""

    spine: SpineComplex
    d1: DerivedComplex  # t   -> T'
    d2: DerivedComplex  # T'  -> T''
    d3: DerivedComplex  # T'' -> T'''
    spine2: Complex  # spine re-expressed in T'''
    baseline_types: dict[str, int]  # vertex of spine2 -> type


@dataclass(frozen=True, eq=False)
class DrillResult:
    complex: Complex  # drilled polyhedron, subcomplex of T'''
    neighborhood: Complex  # R, the regular neighborhood of k
    frontier: Complex
    vertices_before: int
    vertices_after: int | None  # None when types are unknown (ambient dim > 3)


def prepare(s: SpineComplex) -> DrillContext:
    if s.cell_type is None:
        s = assign_types(s)
    d1 = s.derived
    d2 = derived(d1.complex)
    d3 = derived(d2.complex)
    spine_cx = s.as_complex()
    spine2 = derived_image(d3, derived_image(d2, spine_cx))
    d = s.ambient.dim
    if d <= 3:
        baseline = classify_all_links(spine2, d)
        count = sum(1 for t in baseline.values() if t == 0)
        if count != s.vertex_count:
            raise InvariantViolation(
                f"re-expressed spine has {count} vertices, expected {s.vertex_count}"
            )
    else:
        baseline = {}
    return DrillContext(s, d1, d2, d3, spine2, baseline)


def _lift_to_prime(ctx: DrillContext, k: Complex) -> Complex:
    t = ctx.spine.ambient
    tp = ctx.d1.complex
    if t.has_subcomplex(k):
        return derived_image(ctx.d1, k)
    if tp.has_subcomplex(k):
        return k
    raise ValueError(
        "drill locus must be a subcomplex of the triangulation or of its "
        "derived subdivision"
    )


def frontier_of(region: Complex, ambient: Complex) -> Complex:
    """Faces of a subcomplex that also lie in the closure of its complement."""
    cof = ambient.proper_cofaces
    out = frozenset(
        f for f in region.faces if any(c not in region.faces for c in cof[f])
    )
    return Complex(out)


def drill(ctx: DrillContext, k: Complex) -> DrillResult:
    """Drill the spine along k: remove the open regular neighborhood of k
    and add its frontier."""
    k1 = _lift_to_prime(ctx, k)
    k3 = derived_image(ctx.d3, derived_image(ctx.d2, k1))
    amb = ctx.d3.complex
    rn = star(k3, amb)
    fr = frontier_of(rn, amb)
    faces = frozenset(
        f for f in ctx.spine2.faces if f not in rn.faces
    ) | fr.faces
    result = Complex(faces)
    d = ctx.spine.ambient.dim
    after = None
    if d <= 3:
        outside = sum(
            1
            for v, t in ctx.baseline_types.items()
            if t == 0 and (v,) not in rn.faces
        )
        inside = 0
        for v in fr.vertices:
            if classify_point_link(face_link((v,), result), d) == 0:
                inside += 1
        after = outside + inside
    return DrillResult(
        complex=result,
        neighborhood=rn,
        frontier=fr,
        vertices_before=ctx.spine.vertex_count,
        vertices_after=after,
    )


def verify_drilled_simple(res: DrillResult, ambient_dim: int) -> int:
    """Full link classification of a drilled complex; returns the vertex
    count it implies, raising when some link is unrecognized."""
    return spine_vertex_count_from_links(res.complex, ambient_dim)


def eligible_drill_vertices(ctx: DrillContext) -> tuple[str, ...]:
    """Vertices of T' off the spine's closed 1-skeleton and off the boundary:
    drilling there never changes the vertex count (ambient dim >= 3)."""
    s = ctx.spine
    if s.cell_type is None:
        s = assign_types(s)
    skel: set[str] = set()
    for cell, tp in s.cell_type.items():
        if tp <= 1:
            skel.update(cell)
    from plspines.recognize import boundary_complex

    bd = boundary_complex(s.ambient)
    bd_vertices: set[str] = set()
    if not bd.is_empty:
        bd_vertices = {
            ctx.d1.vertex_of_face[f] for f in bd.faces
        }
    return tuple(
        v
        for v in ctx.d1.complex.vertices
        if v not in skel and v not in bd_vertices
    )


def sample_drill_points(
    ctx: DrillContext, count: int, seed: int = 0
) -> list[Complex]:
    """Seeded sample of single-vertex drill loci off the 1-skeleton."""
    pool = eligible_drill_vertices(ctx)
    if not pool:
        raise ValueError("no eligible drill vertices")
    rng = random.Random(seed)
    picks = [pool[rng.randrange(len(pool))] for _ in range(count)]
    return [Complex(frozenset({(v,)})) for v in picks]


# -- cutting along a normal hypersurface ---------------------------------------


@dataclass(frozen=True)
class CutReport:
    vertices_before: int
    vertices_after: int
    non_increase_predicted: bool
    non_increase_holds: bool
    result: Complex


def cut_along_hypersurface(
    ctx: DrillContext, surface: Complex
) -> CutReport | DrillResult:
    """Drill the spine along a closed hypersurface contained in it.

    The surface must be a closed pseudomanifold union of closures of
    top-dimensional stratum components of the spine; in ambient dimension 3
    the vertex count never increases, and the report asserts it.
    """
    s = ctx.spine
    d = s.ambient.dim
    if d < 3:
        raise ValueError("hypersurface cutting requires ambient dimension >= 3")
    if surface.is_empty:
        return CutReport(
            s.vertex_count, s.vertex_count, True, True, ctx.spine2
        )
    spine_cx = s.as_complex()
    if not spine_cx.has_subcomplex(surface):
        raise ValueError("surface is not a subcomplex of the spine")
    from plspines.recognize import is_closed_pseudomanifold

    if not is_closed_pseudomanifold(surface):
        raise ValueError("surface is not a closed pseudomanifold")
    # check: union of closures of top stratum components
    from plspines.strata import stratum_components

    s_typed = assign_types(s) if s.cell_type is None else s
    top_dim = d - 1
    whole = True
    surf_tops = {f for f in surface.faces if len(f) == top_dim + 1}
    for comp in stratum_components(s_typed):
        if comp.type != top_dim:
            continue
        cells = {c for c in comp.cells if len(c) == top_dim + 1}
        inter = cells & surf_tops
        if inter and inter != cells:
            whole = False
    predicted = whole
    res = drill(ctx, surface)
    after = res.vertices_after
    if after is None:
        raise InvariantViolation("cut in low dimension must produce a count")
    holds = after <= s.vertex_count
    if predicted and d == 3 and not holds:
        raise InvariantViolation(
            f"cut along a union of 2-components increased the vertex count "
            f"{s.vertex_count} -> {after}"
        )
    return CutReport(s.vertex_count, after, predicted, holds, res.complex)
