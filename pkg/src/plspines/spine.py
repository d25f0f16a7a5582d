"""Simple polyhedra dual to a triangulation and a vertex partition.

The dual spine is a subcomplex of the derived triangulation T'.  Cells are
recognized by a closed-form rule on chains: a chain of faces of T is a
spine cell exactly when its minimal face meets at least two partition
classes.  The literal union-of-links construction is kept alongside as an
independent oracle (see :func:`dual_spine_direct`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from plspines.collapse import collapses_onto, collapses_to_point
from plspines.core import (
    Complex,
    DerivedComplex,
    Face,
    InvariantViolation,
    connected_components,
    derived,
    derived_image,
    star,
    subcomplex_spanned,
)
from plspines.models import dual_cells_direct
from plspines.partitions import VertexPartition
from plspines.recognize import boundary_complex, is_pure


@dataclass(frozen=True, eq=False)
class SpineComplex:
    """Dual spine: cells of T' with type labels and the vertex count."""

    ambient: Complex
    derived: DerivedComplex
    partition: VertexPartition
    cells: frozenset[Face]
    cell_type: Mapping[Face, int] | None
    vertex_count: int

    def as_complex(self) -> Complex:
        return Complex(self.cells)

    @property
    def dim(self) -> int:
        return self.ambient.dim


def _chain_min_vertex(derived_cx: DerivedComplex, cell: Face) -> Face:
    """Minimal base face of the chain encoded by a derived face."""
    fov = derived_cx.face_of_vertex
    return min((fov[v] for v in cell), key=len)


def check_boundary_respect(t: Complex, p: VertexPartition) -> None:
    """Each boundary component's vertices must lie in one class."""
    bd = boundary_complex(t)
    if bd.is_empty:
        return
    for comp in connected_components(bd):
        classes = {p.class_of[v] for v in comp.vertices}
        if len(classes) > 1:
            raise ValueError(
                "partition does not respect the boundary: component with "
                f"vertices {comp.vertices[:4]}... meets {len(classes)} classes"
            )


def rainbow_facets(t: Complex, p: VertexPartition) -> tuple[Face, ...]:
    """Top simplexes whose vertices lie in pairwise distinct classes."""
    d = t.dim
    return tuple(
        f for f in t.facets if p.classes_meeting(f) == d + 1
    )


def vertex_count(t: Complex, p: VertexPartition) -> int:
    return len(rainbow_facets(t, p))


def dual_spine(
    t: Complex, p: VertexPartition, check_boundary: bool = True
) -> SpineComplex:
    """Build the spine dual to (t, p) as a subcomplex of T'.

    Requires t pure; when t has boundary the partition must respect it.
    """
    if not is_pure(t):
        raise ValueError("triangulation is not pure")
    if p.base.faces != t.faces:
        raise ValueError("partition is not over this complex")
    if check_boundary:
        check_boundary_respect(t, p)
    dt = derived(t)
    meets = {
        f: p.classes_meeting(f) for f in t.faces
    }
    fov = dt.face_of_vertex
    cells = frozenset(
        cell
        for cell in dt.complex.faces
        if meets[min((fov[v] for v in cell), key=len)] >= 2
    )
    return SpineComplex(
        ambient=t,
        derived=dt,
        partition=p,
        cells=cells,
        cell_type=None,
        vertex_count=vertex_count(t, p),
    )


def dual_spine_direct(t: Complex, p: VertexPartition) -> frozenset[Face]:
    """Oracle: the literal per-simplex union-of-links construction."""
    return dual_cells_direct(t, p.classes)


# -- complement regions ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RegionDecomposition:
    """Per-class submanifolds of T'' plus the spine neighborhood."""

    ambient: Complex
    second: DerivedComplex
    regions: tuple[tuple[frozenset[str], Complex], ...]
    spine_neighborhood: Complex


def class_span(t: Complex, cls: frozenset[str]) -> Complex:
    """Subcomplex of t spanned by one partition class."""
    return subcomplex_spanned(t, cls)


def region_of_class(t: Complex, cls: frozenset[str]) -> Complex:
    """Regular neighborhood in T'' of the subcomplex spanned by the class."""
    d1 = derived(t)
    d2 = derived(d1.complex)
    span = class_span(t, cls)
    s2 = derived_image(d2, derived_image(d1, span))
    return star(s2, d2.complex)


def regions(t: Complex, p: VertexPartition, check_boundary: bool = True) -> RegionDecomposition:
    if not is_pure(t):
        raise ValueError("triangulation is not pure")
    if check_boundary:
        check_boundary_respect(t, p)
    d1 = derived(t)
    d2 = derived(d1.complex)
    out = []
    covered: set[Face] = set()
    for cls in p.classes:
        mv = region_of_class(t, cls)
        if covered & mv.faces:
            raise InvariantViolation("regions of distinct classes intersect")
        covered |= mv.faces
        out.append((cls, mv))
    rest = [f for f in d2.complex.faces if f not in covered]
    nbhd: set[Face] = set()
    for f in rest:
        for r in range(1, len(f) + 1):
            nbhd.update(itertools.combinations(f, r))
    return RegionDecomposition(
        ambient=t,
        second=d2,
        regions=tuple(out),
        spine_neighborhood=Complex(frozenset(nbhd)),
    )


# -- spine certificate -------------------------------------------------------


@dataclass(frozen=True)
class RegionReport:
    class_index: int
    component_index: int
    kind: str  # "ball" or "collar"
    ok: bool
    faces: int


@dataclass(frozen=True)
class SpineCertificate:
    certificate: str  # "yes", "yes (heuristic)", or "unknown"
    vertices: int
    region_reports: tuple[RegionReport, ...]

    @property
    def is_yes(self) -> bool:
        return self.certificate.startswith("yes")


def certify_region_component(
    comp: Complex, boundary2: Complex, seed: int = 0
) -> RegionReport | tuple[str, bool, int]:
    """Classify one region component as a ball or a collar candidate."""
    target_faces = comp.faces & boundary2.faces
    if target_faces:
        target = Complex(target_faces)
        ok = collapses_onto(comp, target, seed=seed)
        kind = "collar"
    else:
        ok = collapses_to_point(comp, seed=seed)
        kind = "ball"
    return kind, ok, len(comp.faces)


def verify_spine(t: Complex, p: VertexPartition, seed: int = 0) -> SpineCertificate:
    """Certify that the dual spine is a spine by checking its complement.

    Interior region components must collapse to a point (a ball certificate,
    sound for dimension at most 3); components touching the boundary must
    collapse onto their boundary part (a collar certificate).  A failed
    collapse yields "unknown", never "not a spine".
    """
    dec = regions(t, p)
    d1 = derived(t)
    d2 = dec.second
    bd = boundary_complex(t)
    if bd.is_empty:
        bd2 = Complex(frozenset())
    else:
        bd2 = derived_image(d2, derived_image(d1, bd))
    reports = []
    all_ok = True
    for ci, (cls, mv) in enumerate(dec.regions):
        for ki, comp in enumerate(connected_components(mv)):
            kind, ok, nfaces = certify_region_component(comp, bd2, seed=seed)
            reports.append(RegionReport(ci, ki, kind, ok, nfaces))
            all_ok = all_ok and ok
    if all_ok:
        cert = "yes" if t.dim <= 3 else "yes (heuristic)"
    else:
        cert = "unknown"
    return SpineCertificate(cert, vertex_count(t, p), tuple(reports))
