"""Type labels for spine cells, stratum components, and link classification.

A cell of a dual spine is a chain of faces of the triangulation; its type
is d + 1 - m where d is the ambient dimension and m is the number of
partition classes meeting the chain's minimal face.  That rule is derived,
not axiomatic: for ambient dimension at most 3 every cell's type is also
read off its link (three-point / two-point links under a surface, and
K4 / theta / circle links inside a 3-manifold), and the two must agree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from plspines.core import (
    Complex,
    Face,
    InvariantViolation,
    face_link,
)
from plspines.spine import SpineComplex, _chain_min_vertex


class LinkClassificationError(ValueError):
    """The link at a point is not one of the standard local models."""


# -- multigraph homeomorphism classification --------------------------------


def _suppress_degree_two(vertices: set[str], edges: list[tuple[str, str]]):
    """Suppress degree-2 vertices; a bare circle ends as one vertex + loop."""
    vertices = set(vertices)
    edges = [tuple(sorted(e)) for e in edges]

    def degree(v: str) -> int:
        return sum((e[0] == v) + (e[1] == v) for e in edges)

    changed = True
    while changed:
        changed = False
        for v in sorted(vertices):
            inc = [e for e in edges if v in e]
            if degree(v) != 2:
                continue
            if len(inc) == 1:
                continue  # single loop: canonical circle, keep
            e1, e2 = inc
            a = e1[0] if e1[1] == v else e1[1]
            b = e2[0] if e2[1] == v else e2[1]
            edges.remove(e1)
            edges.remove(e2)
            edges.append(tuple(sorted((a, b))))
            vertices.discard(v)
            changed = True
            break
    return vertices, edges


def classify_graph(g: Complex) -> str | None:
    """Classify a 1-complex up to homeomorphism among the standard links.

    Returns "points2", "points3", "circle", "theta", or "K4"; None when the
    graph is none of these.
    """
    if g.is_empty:
        return None
    if g.dim == 0:
        n = len(g.vertices)
        return {2: "points2", 3: "points3"}.get(n)
    if g.dim != 1:
        return None
    verts = set(g.vertices)
    edges = [f for f in g.faces if len(f) == 2]
    if len(verts) != len({v for e in edges for v in e}):
        return None  # isolated vertex next to edges: not a link model
    verts, multi = _suppress_degree_two(verts, edges)
    counts = Counter(multi)
    degs = Counter()
    for (a, b), m in counts.items():
        if a == b:
            degs[a] += 2 * m  # loops count twice
        else:
            degs[a] += m
            degs[b] += m
    if len(verts) == 1 and list(counts.values()) == [1]:
        (e,) = counts
        if e[0] == e[1]:
            return "circle"
    if len(verts) == 2 and sum(counts.values()) == 3:
        if all(a != b and m == 3 for (a, b), m in counts.items()):
            return "theta"
    if (
        len(verts) == 4
        and len(counts) == 6
        and all(m == 1 and a != b for (a, b), m in counts.items())
        and all(d == 3 for d in degs.values())
    ):
        return "K4"
    return None


_TYPE_OF_LINK = {
    # ambient dim 2 (spines of surfaces)
    2: {"points3": 0, "points2": 1},
    # ambient dim 3 (spines of 3-manifolds)
    3: {"K4": 0, "theta": 1, "circle": 2},
}


def _boundary_of_cell(cell: Face) -> Complex:
    import itertools

    faces = set()
    for r in range(1, len(cell)):
        faces.update(itertools.combinations(cell, r))
    return Complex(frozenset(faces))


def _cell_point_link(cell: Face, spine_cx: Complex) -> Complex:
    """Link of the cell's barycenter inside the spine: bd(cell) * lk(cell)."""
    lk = face_link(cell, spine_cx)
    bd = _boundary_of_cell(cell)
    if bd.is_empty:
        return lk
    if lk.is_empty:
        return bd
    faces = set(bd.faces) | set(lk.faces)
    for s in bd.faces:
        for t in lk.faces:
            faces.add(tuple(sorted(s + t)))
    return Complex(frozenset(faces))


def classify_point_link(link: Complex, ambient_dim: int) -> int:
    """Map a link complex to its type; raises when unrecognized."""
    if ambient_dim == 1:
        if link.is_empty:
            return 0
        raise LinkClassificationError("nonempty link on a 0-dimensional spine")
    table = _TYPE_OF_LINK.get(ambient_dim)
    if table is None:
        raise LinkClassificationError(
            f"link classification implemented only for ambient dim <= 3, got {ambient_dim}"
        )
    kind = classify_graph(link)
    if kind is None or kind not in table:
        raise LinkClassificationError(
            f"not simple here: unrecognized link with f-vector {link.f_vector()}"
        )
    return table[kind]


def classify_link_lowdim(s: SpineComplex, cell: Face) -> int:
    """Oracle: type of a spine cell read off its barycenter's link."""
    if s.ambient.dim > 3:
        raise LinkClassificationError("link oracle requires ambient dim <= 3")
    if cell not in s.cells:
        raise ValueError(f"{cell} is not a spine cell")
    link = _cell_point_link(cell, s.as_complex())
    return classify_point_link(link, s.ambient.dim)


def assign_types(s: SpineComplex) -> SpineComplex:
    """Fill per-cell types using the chain rule d + 1 - m(minimal face)."""
    d = s.ambient.dim
    fov = s.derived.face_of_vertex
    types: dict[Face, int] = {}
    for cell in s.cells:
        m = s.partition.classes_meeting(_chain_min_vertex(s.derived, cell))
        if m < 2:
            raise InvariantViolation(f"spine cell {cell} meets fewer than 2 classes")
        types[cell] = d + 1 - m
    count0 = sum(1 for k in types.values() if k == 0)
    if count0 != s.vertex_count:
        raise InvariantViolation(
            f"type-0 cell count {count0} != vertex count {s.vertex_count}"
        )
    return replace(s, cell_type=types)


def classify_all_links(cx: Complex, ambient_dim: int) -> dict[str, int]:
    """Type of every vertex of a simple complex, via link classification."""
    out = {}
    for v in cx.vertices:
        out[v] = classify_point_link(face_link((v,), cx), ambient_dim)
    return out


def spine_vertex_count_from_links(cx: Complex, ambient_dim: int) -> int:
    """Number of type-0 points of a simple complex of codimension one."""
    if cx.is_empty:
        return 0
    if ambient_dim == 1:
        return len(cx.vertices)
    return sum(1 for t in classify_all_links(cx, ambient_dim).values() if t == 0)


# -- stratum components ------------------------------------------------------


@dataclass(frozen=True)
class StratumComponent:
    """Connected piece of the k-stratum; regions appear with k = dim M."""

    id: int
    type: int
    cells: frozenset[Face]


def _components_of_cells(
    cells: set[Face], same_group, codim_one_only: bool
) -> list[frozenset[Face]]:
    """Group cells by incidence; adjacency joins a cell to its facets."""
    parent: dict[Face, Face] = {c: c for c in cells}

    def find(x: Face) -> Face:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(a: Face, b: Face) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    import itertools

    for c in cells:
        rs = (
            range(len(c) - 1, len(c))
            if codim_one_only
            else range(1, len(c))
        )
        for r in rs:
            for sub in itertools.combinations(c, r):
                if sub in cells and same_group(sub, c):
                    union(sub, c)
    groups: dict[Face, set[Face]] = {}
    for c in cells:
        groups.setdefault(find(c), set()).add(c)
    return [frozenset(groups[r]) for r in sorted(groups)]


def stratum_components(s: SpineComplex) -> list[StratumComponent]:
    """Connected components of equal-type spine cells, then the complement
    components of T' appended as components of top type d."""
    if s.cell_type is None:
        s = assign_types(s)
    d = s.ambient.dim
    types = s.cell_type
    out: list[StratumComponent] = []
    spine_cells = set(s.cells)
    same_type = lambda a, b: types[a] == types[b]
    comps = _components_of_cells(spine_cells, same_type, codim_one_only=True)
    comps.sort(key=lambda cells: (types[min(cells)], min(cells)))
    next_id = 0
    for cells in comps:
        out.append(StratumComponent(next_id, types[min(cells)], cells))
        next_id += 1
    complement = set(s.derived.complex.faces) - spine_cells
    for cells in _components_of_cells(
        complement, lambda a, b: True, codim_one_only=False
    ):
        out.append(StratumComponent(next_id, d, cells))
        next_id += 1
    return out


def validate_types_against_links(s: SpineComplex) -> int:
    """Check the chain rule against the link oracle on every cell.

    Returns the number of cells checked; raises on any disagreement.
    """
    if s.cell_type is None:
        s = assign_types(s)
    spine_cx = s.as_complex()
    d = s.ambient.dim
    for cell in sorted(s.cells, key=lambda c: (len(c), c)):
        via_link = classify_point_link(_cell_point_link(cell, spine_cx), d)
        if via_link != s.cell_type[cell]:
            raise InvariantViolation(
                f"type formula gives {s.cell_type[cell]} but link gives "
                f"{via_link} at cell {cell}"
            )
    return len(s.cells)
