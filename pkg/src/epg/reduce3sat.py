"""ONE-IN-THREE 3-SAT instances, their graphs G_F, and single-bend drawings.

A formula is satisfiable in the one-in-three sense exactly when G_F has a
single-bend representation. This module builds G_F and, given a satisfying
assignment, an explicit single-bend drawing of it. The converse direction is
not computed here.

Drawing of G_F
--------------
T is an L with its bend at the origin, one arm along y = 0 to the right
and one along x = 0 downwards. A true variable overlaps the horizontal arm
and then runs down its own vertical line x_t >= 5. A false variable
overlaps the vertical arm and then runs right along its own horizontal
line y_f <= -2. V overlaps the horizontal arm at [2, 3] and runs down
x = 3. Each clause gadget is centred at a fresh point (l_v, l_h) with
3 < l_v < 4 and l_h between the lines of its two false variables. Its four
rays point left (to V), right (to the true variable) and up and down (to
the false variables).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph
from .grid import GridPath, Representation, compress_coordinates, normalize_path
from .layout import ConstructionError
from .verify import verify_representation


class FormulaError(ValueError):
    pass


class DuplicateLiteral(FormulaError):
    pass


class ArityError(FormulaError):
    pass


class AssignmentInvalid(ValueError):
    pass


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Formula:
    variables: tuple[str, ...]
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for cl in self.clauses:
            if len(cl) != 3:
                raise ArityError(f"clause {cl} does not have three variables")
            if len(set(cl)) != 3:
                names = [self.variables[i] for i in cl]
                raise DuplicateLiteral(f"clause {' '.join(names)} repeats a variable")

    @classmethod
    def of(cls, clauses) -> "Formula":
        """From clauses given as triples of variable names."""
        names: list[str] = []
        index: dict[str, int] = {}
        out = []
        for cl in clauses:
            cl = list(cl)
            if len(cl) != 3:
                raise ArityError(f"clause {cl} does not have three variables")
            if len(set(cl)) != 3:
                raise DuplicateLiteral(f"clause {' '.join(cl)} repeats a variable")
            for name in cl:
                if name not in index:
                    index[name] = len(names)
                    names.append(name)
            out.append(tuple(index[x] for x in cl))
        return cls(tuple(names), tuple(out))

    def satisfied_by(self, truth) -> bool:
        """Every clause has exactly one true variable."""
        return all(sum(bool(truth[self.variables[i]]) for i in cl) == 1 for cl in self.clauses)

    def text(self) -> str:
        return "".join(" ".join(self.variables[i] for i in cl) + "\n" for cl in self.clauses)


def parse_formula(text: str) -> Formula:
    """One clause per line, three variable names; ``#`` starts a comment."""
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ArityError(f"line {lineno}: expected three variables, got {len(parts)}")
        if len(set(parts)) != 3:
            raise DuplicateLiteral(f"line {lineno}: variable repeated in {line!r}")
        clauses.append(parts)
    return Formula.of(clauses)


@dataclass(frozen=True)
class Assignment:
    truth: dict

    def __getitem__(self, name: str) -> bool:
        return self.truth[name]

    def true_variables(self) -> list[str]:
        return [v for v, t in self.truth.items() if t]


def brute_force_one_in_three(f: Formula, max_variables: int = 25) -> Assignment | None:
    """First satisfying assignment, trying True before False in variable order.

    Backtracking over the variables; a clause is dropped from consideration
    as soon as it has two true variables or three false ones.
    """
    p = len(f.variables)
    if p > max_variables:
        raise TooLarge(f"{p} variables exceed the cap of {max_variables}")
    by_var = [[] for _ in range(p)]
    for ci, cl in enumerate(f.clauses):
        for i in cl:
            by_var[i].append(ci)
    value: list[bool | None] = [None] * p

    def consistent(i):
        for ci in by_var[i]:
            vals = [value[j] for j in f.clauses[ci]]
            trues = sum(v is True for v in vals)
            if trues > 1 or (None not in vals and trues != 1):
                return False
        return True

    def rec(i):
        if i == p:
            return True
        for b in (True, False):
            value[i] = b
            if consistent(i) and rec(i + 1):
                return True
        value[i] = None
        return False

    if not rec(0):
        return None
    return Assignment({name: bool(value[i]) for i, name in enumerate(f.variables)})


# -- graphs ----------------------------------------------------------------------------

OCTA = ("a", "A", "b", "B", "c", "C")
GADGET_EXTRA = {
    "W_ABC": ("A", "B", "C"),
    "w_abC": ("a", "b", "C"),
    "w_aBc": ("a", "B", "c"),
    "w_Abc": ("A", "b", "c"),
    "s_ab": ("a", "b"),
    "s_ac": ("a", "c"),
    "s_bc": ("b", "c"),
}
# the w-vertex hooked to the first, second and third variable of a clause
POSITION_W = ("w_Abc", "w_aBc", "w_abC")


def _octa_edges(prefix: str):
    for x, y in itertools.combinations(OCTA, 2):
        if x.lower() != y.lower():
            yield prefix + x, prefix + y


def clause_gadget_graph(prefix: str = "") -> Graph:
    """Octahedron a/A, b/B, c/C plus the seven vertices W_ABC, w_*, s_*."""
    vs = [prefix + x for x in OCTA] + [prefix + x for x in GADGET_EXTRA]
    es = list(_octa_edges(prefix))
    for w, nbrs in GADGET_EXTRA.items():
        es.extend((prefix + w, prefix + x) for x in nbrs)
    return Graph(vs, es)


@dataclass(frozen=True)
class ReductionGraph:
    formula: Formula
    graph: Graph
    roles: dict = field(default_factory=dict)

    def clause_prefix(self, i: int) -> str:
        return f"c{i + 1}."


def _var_label(name: str) -> str:
    return f"v.{name}"


K24_SMALL = ("K.s1", "K.s2")
K24_LARGE = ("T", "K.t2", "K.t3", "K.t4")
AUX = ("O1", "O2", "O3", "O4")
AUX_TRIANGLE = ("a", "b", "c")


def build_reduction_graph(f: Formula) -> ReductionGraph:
    """G_F: 13 vertices per clause, one per variable, and 31 shared ones."""
    vs: list[str] = []
    es: list[tuple[str, str]] = []
    roles: dict[str, str] = {}
    for i, cl in enumerate(f.clauses):
        pre = f"c{i + 1}."
        gad = clause_gadget_graph(pre)
        vs.extend(gad.vertices)
        es.extend(gad.sorted_edges())
        for v in gad.vertices:
            roles[v] = f"clause{i + 1}:{v[len(pre):]}"
    for name in f.variables:
        vs.append(_var_label(name))
        roles[_var_label(name)] = f"var:{name}"
    for i, cl in enumerate(f.clauses):
        for pos, j in enumerate(cl):
            es.append((_var_label(f.variables[j]), f"c{i + 1}.{POSITION_W[pos]}"))
    vs.append("V")
    roles["V"] = "V"
    es.extend(("V", f"c{i + 1}.W_ABC") for i in range(len(f.clauses)))
    vs.extend(K24_SMALL + K24_LARGE)
    roles.update({v: "K24:small" for v in K24_SMALL})
    roles.update({v: "K24:large" for v in K24_LARGE})
    roles["T"] = "T"
    es.extend((s, t) for s in K24_SMALL for t in K24_LARGE)
    es.extend(("T", _var_label(name)) for name in f.variables)
    es.append(("T", "V"))
    for o in AUX:
        pre = o + "."
        vs.extend(pre + x for x in OCTA)
        roles.update({pre + x: f"{o}:{x}" for x in OCTA})
        es.extend(_octa_edges(pre))
        hub = "T" if o in ("O1", "O2") else "V"
        es.extend((hub, pre + x) for x in AUX_TRIANGLE)
    g = Graph(vs, es)
    assert len(g.vertices) == 13 * len(f.clauses) + len(f.variables) + 31
    return ReductionGraph(f, g, roles)


# -- drawings --------------------------------------------------------------------------

F = Fraction
LEFT, RIGHT, UP, DOWN = (-1, 0), (1, 0), (0, 1), (0, -1)


def _at(center, d, dist):
    return (center[0] + d[0] * dist, center[1] + d[1] * dist)


def _ray_path(center, r1, l1, r2, l2) -> GridPath:
    """Path from the far end of one ray through the center to the far end of another."""
    return normalize_path([_at(center, r1, l1), center, _at(center, r2, l2)])


def octahedron_paths(center, star_dir, star_len=2, other_len=1, prefix: str = "") -> dict[str, GridPath]:
    """Pie drawing of the octahedron with {a, b, c} sharing the ray ``star_dir``.

    Every path passes through ``center`` and covers two of the four rays
    leaving it; complementary ray pairs go to the three non-edges.
    """
    r0 = star_dir
    r1, r2, r3 = [d for d in (RIGHT, UP, LEFT, DOWN) if d != r0]
    lens = {r0: F(star_len), r1: F(other_len), r2: F(other_len), r3: F(other_len)}
    pairs = {"a": (r0, r1), "b": (r0, r2), "c": (r0, r3), "A": (r2, r3), "B": (r1, r3), "C": (r1, r2)}
    return {prefix + x: _ray_path(center, p, lens[p], q, lens[q]) for x, (p, q) in pairs.items()}


def octahedron_representation() -> Representation:
    return Representation(octahedron_paths((0, 0), LEFT))


# For a gadget the rays are named by the vertex they serve: W for W_ABC and
# A, B, C for the w-vertex whose capital letter is A, B or C. A capital X
# covers ray W and ray X; each lowercase letter covers the two rays of the
# w-vertices it belongs to.
_GADGET_RAYS = {"a": ("C", "B"), "b": ("C", "A"), "c": ("B", "A"), "A": ("W", "A"), "B": ("W", "B"), "C": ("W", "C")}
_RAY_W = {"W": "W_ABC", "A": "w_Abc", "B": "w_aBc", "C": "w_abC"}
_RAY_S = {"A": "s_bc", "B": "s_ac", "C": "s_ab"}


@dataclass(frozen=True)
class RaySpec:
    """One center ray of a gadget: direction, distance to the bend of its
    w-path, and the w-path's second arm as a (direction, length) pair."""

    direction: tuple
    reach: Fraction
    arm: tuple


def gadget_paths(center, rays: dict[str, RaySpec], prefix: str = "") -> dict[str, GridPath]:
    """Single-bend drawing of a clause gadget around ``center``.

    On each ray the w-path occupies [reach - e, reach] and bends at reach.
    Capitals stop at reach - e/2. Lowercase letters run on to reach + 2e,
    and the s-path sits on [reach, reach + e] where only they are present.
    """
    ext: dict[tuple[str, str], Fraction] = {}
    out: dict[str, GridPath] = {}
    for name, spec in rays.items():
        e = min(F(spec.reach) / 4, F(1, 4))
        for x, (p, q) in _GADGET_RAYS.items():
            if name in (p, q):
                lower = x.islower()
                ext[x, name] = spec.reach + 2 * e if lower else spec.reach - e / 2
        bend = _at(center, spec.direction, spec.reach)
        out[prefix + _RAY_W[name]] = normalize_path(
            [_at(center, spec.direction, spec.reach - e), bend, _at(bend, spec.arm[0], spec.arm[1])]
        )
        if name != "W":
            out[prefix + _RAY_S[name]] = normalize_path(
                [bend, _at(center, spec.direction, spec.reach + e)]
            )
    for x, (p, q) in _GADGET_RAYS.items():
        out[prefix + x] = _ray_path(center, rays[p].direction, ext[x, p], rays[q].direction, ext[x, q])
    return out


def gadget_representation() -> Representation:
    """The clause gadget on its own, center at the origin."""
    dirs = {"W": LEFT, "A": RIGHT, "B": UP, "C": DOWN}
    rays = {k: RaySpec(d, F(4), ((abs(d[1]), abs(d[0])), F(1))) for k, d in dirs.items()}
    return compress_coordinates(Representation(gadget_paths((0, 0), rays)))


def representation_from_assignment(f: Formula, a: Assignment, check: bool = True) -> Representation:
    """Single-bend representation of G_F built from a one-in-three assignment."""
    truth = a.truth if isinstance(a, Assignment) else dict(a)
    missing = [x for x in f.variables if x not in truth]
    if missing:
        raise AssignmentInvalid(f"no value for {missing[:5]}")
    for cl in f.clauses:
        if sum(bool(truth[f.variables[i]]) for i in cl) != 1:
            names = " ".join(f.variables[i] for i in cl)
            raise AssignmentInvalid(f"clause {names} does not have exactly one true variable")

    paths: dict[str, GridPath] = {}
    trues = [x for x in f.variables if truth[x]]
    falses = [x for x in f.variables if not truth[x]]
    x_of = {x: F(5 + 2 * k) for k, x in enumerate(trues)}
    y_of = {x: F(-2 - 2 * k) for k, x in enumerate(falses)}
    low = min(y_of.values(), default=F(-2)) - 2
    x_end = max(x_of.values(), default=F(3)) + 2
    y_end = low - 4
    n = len(f.clauses)

    # K_{2,4}: two L-paths forming a frame with crossings at two corners
    paths["K.s1"] = normalize_path([(-2, 3), (-2, 0), (1, 0)])
    paths["K.s2"] = normalize_path([(-3, 2), (0, 2), (0, -1)])
    paths["K.t2"] = normalize_path([(-3, 2), (-2, 2), (-2, 3)])
    paths["K.t3"] = normalize_path([(-2, 1), (-2, 2), (-1, 2)])
    paths["K.t4"] = normalize_path([(-1, 0), (0, 0), (0, 1)])
    paths["T"] = normalize_path([(x_end, 0), (0, 0), (0, y_end)])
    paths["V"] = normalize_path([(2, 0), (3, 0), (3, low)])
    paths.update(octahedron_paths((x_end + 1, 0), LEFT, prefix="O1."))
    paths.update(octahedron_paths((0, y_end - 1), UP, prefix="O2."))
    paths.update(octahedron_paths((3, 1), DOWN, prefix="O3."))
    paths.update(octahedron_paths((3, low - 1), UP, prefix="O4."))
    for x in trues:
        xt = x_of[x]
        paths[_var_label(x)] = normalize_path([(xt - 1, 0), (xt, 0), (xt, low + 1)])
    for x in falses:
        yf = y_of[x]
        paths[_var_label(x)] = normalize_path([(0, yf + 1), (0, yf), (4, yf)])

    delta = F(1, 16 * (n + 1))
    for i, cl in enumerate(f.clauses):
        names = [f.variables[j] for j in cl]
        t_pos = next(p for p, x in enumerate(names) if truth[x])
        f_pos = sorted((p for p in range(3) if p != t_pos), key=lambda p: -y_of[names[p]])
        hi, lo = y_of[names[f_pos[0]]], y_of[names[f_pos[1]]]
        lv = 3 + F(i + 1, n + 2)
        lh = (hi + lo) / 2 + F(2 * i + 1, 8 * (n + 1))
        center = (lv, lh)
        letter = "ABC"
        rays = {
            "W": RaySpec(LEFT, lv - 3, (UP, delta)),
            letter[t_pos]: RaySpec(RIGHT, x_of[names[t_pos]] - lv, (UP, delta)),
            letter[f_pos[0]]: RaySpec(UP, hi - lh, (RIGHT, delta)),
            letter[f_pos[1]]: RaySpec(DOWN, lh - lo, (RIGHT, delta)),
        }
        paths.update(gadget_paths(center, rays, prefix=f"c{i + 1}."))

    target = build_reduction_graph(f).graph
    rep = compress_coordinates(Representation({v: paths[v] for v in target.vertices}))
    if check:
        report = verify_representation(rep, target, 1)
        if not report.ok:
            raise ConstructionError(report.summary())
    return rep


def center_rays_hold_one_w(rep: Representation, prefix: str = "") -> bool:
    """Each of the four rays at the gadget center carries a segment of exactly one w-path."""
    octa = [rep[prefix + x] for x in OCTA]
    center = _common_point(octa)
    ws = [rep[prefix + w] for w in ("W_ABC", "w_abC", "w_aBc", "w_Abc")]
    counts = {d: 0 for d in (RIGHT, UP, LEFT, DOWN)}
    for p in ws:
        hit = set()
        for a, b in zip(p.corners, p.corners[1:]):
            for d in counts:
                if _on_ray(center, d, a) and _on_ray(center, d, b):
                    hit.add(d)
        for d in hit:
            counts[d] += 1
    return all(c == 1 for c in counts.values())


def _on_ray(center, d, pt) -> bool:
    dx, dy = pt[0] - center[0], pt[1] - center[1]
    if d[0] == 0:
        return dx == 0 and dy * d[1] >= 0
    return dy == 0 and dx * d[0] >= 0


def _common_point(paths):
    """The unique grid point lying on every path."""
    cands = set(paths[0].corners)
    for p in paths[1:]:
        cands |= set(p.corners)
    hits = [c for c in cands if all(any(s.contains_point(c) for s in p.segments) for p in paths)]
    if len(hits) != 1:
        raise ValueError(f"expected one common point, found {len(hits)}")
    return hits[0]
