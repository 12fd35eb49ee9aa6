"""Coherent configurations as verified partitions of V x V.

A configuration is stored as an n x n color matrix in canonical form:
color ids follow first appearance in a row-major scan, so color 0 is
always the diagonal color of point 0 and two equal partitions get equal
matrices.  All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import circular_distance
from .kernels import refine_step

ISO = "iso"
NOT_ISO = "not-iso"
ALGEBRAIC_ONLY = "algebraic-only"


def _canonical_relabel(mat: np.ndarray) -> np.ndarray:
    """Relabel colors by first appearance in a row-major scan."""
    flat = mat.ravel()
    _, first = np.unique(flat, return_index=True)
    order = flat[np.sort(first)]
    remap = np.empty(int(flat.max()) + 1, dtype=np.int64)
    remap[order] = np.arange(len(order), dtype=np.int64)
    return remap[flat].reshape(mat.shape)


class CoherentConfiguration:
    """Partition of V x V given by a color matrix, plus derived structure.

    The constructor computes the diagonal colors and a best-effort pairing
    map; whether they satisfy the scheme axioms is decided by verify(),
    which reports the first violation instead of raising.
    """

    __slots__ = ("n", "colors", "rank", "pairing", "diagonal_colors", "sizes", "_first")

    def __init__(self, colors: np.ndarray):
        colors = np.ascontiguousarray(colors, dtype=np.int64)
        if colors.ndim != 2 or colors.shape[0] != colors.shape[1]:
            raise ValueError("color matrix must be square")
        if colors.shape[0] == 0:
            raise ValueError("configuration needs at least one point")
        if colors.min() < 0:
            raise ValueError("colors must be non-negative integers")
        colors = _canonical_relabel(colors)
        colors.flags.writeable = False
        n = colors.shape[0]
        self.n = n
        self.colors = colors
        self.rank = int(colors.max()) + 1
        flat = colors.ravel()
        self.sizes = tuple(int(x) for x in np.bincount(flat, minlength=self.rank))
        _, first = np.unique(flat, return_index=True)
        firsts = np.sort(first)
        self._first = tuple((int(i) // n, int(i) % n) for i in firsts)
        self.diagonal_colors = frozenset(int(c) for c in np.diagonal(colors))
        self.pairing = tuple(int(colors[v, u]) for u, v in self._first)

    @staticmethod
    def from_matrix(mat) -> "CoherentConfiguration":
        return CoherentConfiguration(np.asarray(mat, dtype=np.int64))

    def color(self, u: int, v: int) -> int:
        return int(self.colors[u, v])

    def representative(self, t: int) -> tuple[int, int]:
        """First pair (row-major) of color t."""
        if not 0 <= t < self.rank:
            raise ValueError(f"color {t} out of range (rank {self.rank})")
        return self._first[t]

    def __eq__(self, other):
        return (
            isinstance(other, CoherentConfiguration)
            and self.n == other.n
            and np.array_equal(self.colors, other.colors)
        )

    def __hash__(self):
        return hash((self.n, self.rank, self.colors.tobytes()))

    def __repr__(self):
        return f"CoherentConfiguration(n={self.n}, rank={self.rank})"


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of the exhaustive axiom check."""

    ok: bool
    problem: str | None = None  # "diagonal" | "pairing" | "intersection"
    witness: tuple | None = None
    message: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def verify(cfg: CoherentConfiguration) -> VerifyReport:
    """Exhaustively check the scheme axioms.

    Checks, in order: diagonal colors contain no off-diagonal pair; the
    transpose map is a well-defined involution on colors; and the
    intersection numbers c_rs^t are independent of the representative of
    t.  For the last check an intersection-number violation is reported
    as (r, s, t, (v, u), (v', u')) with differing counts.
    """
    mat = cfg.colors
    n = cfg.n

    diag = np.diagonal(mat)
    diag_counts = np.bincount(diag, minlength=cfg.rank)
    for d in cfg.diagonal_colors:
        if diag_counts[d] != cfg.sizes[d]:
            rows, cols = np.nonzero((mat == d) & ~np.eye(n, dtype=bool))
            witness = (d, (int(rows[0]), int(cols[0])))
            return VerifyReport(
                False, "diagonal", witness,
                f"diagonal color {d} contains off-diagonal pair {witness[1]}",
            )

    p = np.array(cfg.pairing, dtype=np.int64)
    if not np.array_equal(p[mat], mat.T):
        bad = np.nonzero(p[mat] != mat.T)
        u, v = int(bad[0][0]), int(bad[1][0])
        return VerifyReport(
            False, "pairing", ((u, v), int(mat[u, v]), int(mat[v, u])),
            f"transpose of color {int(mat[u, v])} is not a single color "
            f"(witness pair ({u}, {v}))",
        )

    refined, new_rank = refine_step(mat, cfg.rank)
    if new_rank != cfg.rank:
        rep_pair: dict[int, tuple[int, int]] = {}
        rep_new: dict[int, int] = {}
        for u in range(n):
            for v in range(n):
                t = int(mat[u, v])
                if t not in rep_pair:
                    rep_pair[t] = (u, v)
                    rep_new[t] = int(refined[u, v])
                elif int(refined[u, v]) != rep_new[t]:
                    first = rep_pair[t]
                    second = (u, v)
                    c1 = _pair_counts(mat, cfg.rank, first)
                    c2 = _pair_counts(mat, cfg.rank, second)
                    for rs in sorted(set(c1) | set(c2)):
                        if c1.get(rs, 0) != c2.get(rs, 0):
                            r, s = rs
                            return VerifyReport(
                                False, "intersection", (r, s, t, first, second),
                                f"c_{{{r},{s}}}^{{{t}}} differs between pairs "
                                f"{first} ({c1.get(rs, 0)}) and {second} ({c2.get(rs, 0)})",
                            )
        return VerifyReport(False, "intersection", None,
                            "refinement split a color but no witness found")

    return VerifyReport(True)


def _pair_counts(mat: np.ndarray, rank: int, pair: tuple[int, int]) -> dict:
    """Counts {(r, s): #w with color(x, w) = r and color(w, y) = s}."""
    x, y = pair
    counts: dict[tuple[int, int], int] = {}
    row = mat[x]
    col = mat[:, y]
    for w in range(mat.shape[0]):
        key = (int(row[w]), int(col[w]))
        counts[key] = counts.get(key, 0) + 1
    return counts


def intersection_number(cfg: CoherentConfiguration, r: int, s: int, t: int) -> int:
    """c_rs^t computed from the first representative pair of color t."""
    for c in (r, s, t):
        if not 0 <= c < cfg.rank:
            raise ValueError(f"color {c} out of range (rank {cfg.rank})")
    x, y = cfg.representative(t)
    return int(np.count_nonzero((cfg.colors[x] == r) & (cfg.colors[:, y] == s)))


def intersection_numbers_for(cfg: CoherentConfiguration, t: int) -> dict:
    """All nonzero c_rs^t for a fixed t, as {(r, s): count}."""
    return _pair_counts(cfg.colors, cfg.rank, cfg.representative(t))


def is_association(cfg: CoherentConfiguration) -> bool:
    """True iff the diagonal is a single basic relation."""
    return len(cfg.diagonal_colors) == 1


def rank2_scheme(n: int) -> CoherentConfiguration:
    """Trivial scheme: diagonal plus its complement."""
    if n < 2:
        raise ValueError("rank-2 scheme needs n >= 2")
    mat = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(mat, 0)
    return CoherentConfiguration(mat)


def point_scheme() -> CoherentConfiguration:
    """The rank-1 configuration on a single point."""
    return CoherentConfiguration(np.zeros((1, 1), dtype=np.int64))


def dihedral_scheme(n: int) -> CoherentConfiguration:
    """Orbit scheme of the dihedral group on Z_n: colors are circular distances.

    Rank is floor(n/2) + 1.  The output is checked coherent.
    """
    if n < 3:
        raise ValueError("dihedral scheme needs n >= 3")
    mat = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            mat[i, j] = circular_distance(i, j, n)
    cfg = CoherentConfiguration(mat)
    report = verify(cfg)
    if not report:
        raise AssertionError(f"dihedral scheme failed verification: {report.message}")
    return cfg


def wreath_product(
    inner: CoherentConfiguration, outer: CoherentConfiguration
) -> CoherentConfiguration:
    """Wreath product on inner.n * outer.n points; (a, b) is b * inner.n + a.

    Within a fiber (equal outer point b) the color is the inner color of
    (a, a') tagged with the diagonal color of b; across fibers it is the
    outer color of (b, b') tagged with the diagonal colors of a and a'.
    For association factors the tags are constant and this is exactly the
    classical construction with rank(inner) + rank(outer) - 1 relations;
    the tags keep the product coherent for inhomogeneous factors as well.
    The output is checked coherent.
    """
    ni, no = inner.n, outer.n
    n = ni * no
    in_mat, out_mat = inner.colors, outer.colors
    in_diag = np.diagonal(in_mat)
    out_diag = np.diagonal(out_mat)
    mat = np.empty((n, n), dtype=np.int64)
    # within-fiber codes: out_diag[b] * rank_in + inner color, all < base
    base = inner.rank * outer.rank
    cross = base + (np.add.outer(in_diag * inner.rank, in_diag)) * outer.rank
    for b in range(no):
        rb = slice(b * ni, (b + 1) * ni)
        for c in range(no):
            rc = slice(c * ni, (c + 1) * ni)
            if b == c:
                mat[rb, rc] = out_diag[b] * inner.rank + in_mat
            else:
                mat[rb, rc] = cross + out_mat[b, c]
    cfg = CoherentConfiguration(mat)
    report = verify(cfg)
    if not report:
        raise ValueError(f"wreath product is not coherent: {report.message}")
    return cfg


def is_fusion_of(coarse: CoherentConfiguration, fine: CoherentConfiguration) -> bool:
    """True iff every color of coarse is a union of colors of fine."""
    if coarse.n != fine.n:
        raise ValueError("point-count mismatch")
    mf = fine.colors.ravel()
    mc = coarse.colors.ravel()
    for c in range(fine.rank):
        if len(np.unique(mc[mf == c])) > 1:
            return False
    return True


@dataclass(frozen=True)
class SchemeEquivalence:
    """Equivalence relation on all of V that is a union of colors."""

    scheme: CoherentConfiguration
    colors: frozenset[int]
    classes: tuple[tuple[int, ...], ...]


def _classes_if_equivalence(cfg, colorset: frozenset[int]):
    """Classes of the union of colorset, or None if it is not an equivalence."""
    member = np.isin(cfg.colors, sorted(colorset))
    n = cfg.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rows, cols = np.nonzero(member)
    for u, v in zip(rows.tolist(), cols.tolist()):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    comps: dict[int, list[int]] = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    # equivalence iff the relation is exactly the union of class squares
    if int(member.sum()) != sum(len(c) ** 2 for c in comps.values()):
        return None
    return tuple(tuple(c) for c in sorted(comps.values(), key=lambda c: c[0]))


def equivalence_from_colors(cfg: CoherentConfiguration, colors) -> SchemeEquivalence:
    """Build a SchemeEquivalence from a color subset; validates the axioms."""
    colorset = frozenset(int(c) for c in colors)
    for c in colorset:
        if not 0 <= c < cfg.rank:
            raise ValueError(f"color {c} out of range")
    if not cfg.diagonal_colors <= colorset:
        raise ValueError("equivalence must contain all diagonal colors")
    if any(cfg.pairing[c] not in colorset for c in colorset):
        raise ValueError("equivalence colors must be closed under pairing")
    classes = _classes_if_equivalence(cfg, colorset)
    if classes is None:
        raise ValueError("union of the given colors is not transitive")
    return SchemeEquivalence(cfg, colorset, classes)


def equivalences(cfg: CoherentConfiguration, rank_limit: int = 20) -> list[SchemeEquivalence]:
    """All full-support equivalence relations of the scheme.

    Searches the color subsets that contain the diagonal colors and are
    pairing-closed; at most 2^(number of pairing orbits) candidates.  The
    two trivial equivalences (diagonal and V^2) are always present.
    """
    if cfg.rank > rank_limit:
        raise ValueError(f"rank {cfg.rank} exceeds limit {rank_limit}")
    nondiag = [c for c in range(cfg.rank) if c not in cfg.diagonal_colors]
    orbits = []
    seen = set()
    for c in nondiag:
        if c not in seen:
            orb = frozenset({c, cfg.pairing[c]})
            orbits.append(orb)
            seen |= orb
    out = []
    for mask in range(1 << len(orbits)):
        colorset = set(cfg.diagonal_colors)
        for i, orb in enumerate(orbits):
            if mask >> i & 1:
                colorset |= orb
        classes = _classes_if_equivalence(cfg, frozenset(colorset))
        if classes is not None:
            out.append(SchemeEquivalence(cfg, frozenset(colorset), classes))
    return out


def restriction(cfg: CoherentConfiguration, cls) -> CoherentConfiguration:
    """Restrict the scheme to one class of one of its equivalences."""
    points = sorted(set(int(v) for v in cls))
    if not points or points[0] < 0 or points[-1] >= cfg.n:
        raise ValueError("class must be a nonempty subset of the points")
    block = cfg.colors[np.ix_(points, points)]
    colorset = frozenset(int(c) for c in np.unique(block)) | cfg.diagonal_colors
    classes = _classes_if_equivalence(cfg, colorset)
    if classes is None or tuple(points) not in classes:
        raise ValueError("given point set is not an equivalence class of the scheme")
    sub = CoherentConfiguration(block)
    report = verify(sub)
    if not report:
        raise AssertionError(f"restriction failed verification: {report.message}")
    return sub


def quotient(cfg: CoherentConfiguration, e: SchemeEquivalence) -> CoherentConfiguration:
    """Quotient modulo an equivalence; classes become points.

    The color of a class pair (X, Y) is the set of original colors meeting
    X x Y; distinct sets become distinct colors.  Classes are ordered by
    smallest member.  The result is re-verified because deduplicating the
    color sets is only guaranteed coherent for a genuine scheme equivalence.
    """
    if e.scheme != cfg:
        raise ValueError("equivalence does not belong to this scheme")
    classes = e.classes
    q = len(classes)
    ids: dict[frozenset, int] = {}
    mat = np.empty((q, q), dtype=np.int64)
    for i, X in enumerate(classes):
        for j, Y in enumerate(classes):
            sig = frozenset(int(c) for c in np.unique(cfg.colors[np.ix_(X, Y)]))
            mat[i, j] = ids.setdefault(sig, len(ids))
    out = CoherentConfiguration(mat)
    report = verify(out)
    if not report:
        raise ValueError(f"quotient is not coherent: {report.message}")
    return out


@dataclass(frozen=True)
class IsoVerdict:
    """Result of a scheme isomorphism test."""

    kind: str  # ISO, NOT_ISO or ALGEBRAIC_ONLY
    witness: tuple[int, ...] | None = None

    @property
    def is_iso(self) -> bool:
        return self.kind == ISO


def _color_profile(cfg: CoherentConfiguration) -> tuple:
    """Relabeling-invariant summary of the intersection tensor."""
    profiles = []
    for t in range(cfg.rank):
        counts = intersection_numbers_for(cfg, t)
        profiles.append(
            (
                t in cfg.diagonal_colors,
                cfg.sizes[t],
                cfg.pairing[t] == t,
                tuple(sorted(counts.values())),
            )
        )
    return tuple(sorted(profiles))


def _search_point_bijection(a: CoherentConfiguration, b: CoherentConfiguration):
    """Backtracking search for a color-respecting point bijection a -> b."""
    n = a.n
    A, B = a.colors, b.colors
    amap = [-1] * a.rank  # a color -> b color
    bused = [False] * b.rank
    perm = [-1] * n
    used = [False] * n

    def bind(ca: int, cb: int, journal: list[int]) -> bool:
        if amap[ca] == cb:
            return True
        if amap[ca] != -1 or bused[cb]:
            return False
        amap[ca] = cb
        bused[cb] = True
        journal.append(ca)
        return True

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        for w in range(n):
            if used[w]:
                continue
            journal: list[int] = []
            ok = bind(int(A[i, i]), int(B[w, w]), journal)
            if ok:
                for j in range(i):
                    pj = perm[j]
                    if not (
                        bind(int(A[i, j]), int(B[w, pj]), journal)
                        and bind(int(A[j, i]), int(B[pj, w]), journal)
                    ):
                        ok = False
                        break
            if ok:
                perm[i] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                perm[i] = -1
                used[w] = False
            for ca in journal:
                bused[amap[ca]] = False
                amap[ca] = -1
        return False

    if backtrack(0):
        return tuple(perm)
    return None


def schemes_isomorphic(
    a: CoherentConfiguration, b: CoherentConfiguration, point_limit: int = 12
) -> IsoVerdict:
    """Decide isomorphism of two schemes.

    Equal point count and rank are necessary; next the relabeling-invariant
    intersection profiles are compared (still only necessary).  Up to
    point_limit points a backtracking search gives a definitive answer with
    a witness bijection; beyond it only "algebraic-only" is reported when
    the profiles match, which callers must treat as inconclusive.
    """
    if a.n != b.n or a.rank != b.rank:
        return IsoVerdict(NOT_ISO)
    if _color_profile(a) != _color_profile(b):
        return IsoVerdict(NOT_ISO)
    if a.n > point_limit:
        return IsoVerdict(ALGEBRAIC_ONLY)
    witness = _search_point_bijection(a, b)
    if witness is None:
        return IsoVerdict(NOT_ISO)
    return IsoVerdict(ISO, witness)


# ---------------------------------------------------------------------------
# Scheme dump format: "n rank" header, then n rows of n color indices.


def scheme_to_text(cfg: CoherentConfiguration) -> str:
    lines = [f"{cfg.n} {cfg.rank}"]
    lines.extend(" ".join(str(int(c)) for c in row) for row in cfg.colors)
    return "\n".join(lines) + "\n"


def scheme_from_text(text: str) -> CoherentConfiguration:
    rows = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(x) for x in line.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
        if header is None:
            if len(values) != 2:
                raise ValueError(f"line {lineno}: expected 'n rank' header")
            header = (values[0], values[1], lineno)
        else:
            rows.append((values, lineno))
    if header is None:
        raise ValueError("empty scheme file (missing 'n rank' header)")
    n, rank, _ = header
    if len(rows) != n:
        raise ValueError(f"header declares {n} rows but file has {len(rows)}")
    for values, lineno in rows:
        if len(values) != n:
            raise ValueError(f"line {lineno}: expected {n} colors, got {len(values)}")
        for c in values:
            if not 0 <= c < rank:
                raise ValueError(f"line {lineno}: color {c} outside 0..{rank - 1}")
    cfg = CoherentConfiguration.from_matrix([values for values, _ in rows])
    if cfg.rank != rank:
        raise ValueError(f"header declares rank {rank} but matrix uses {cfg.rank} colors")
    return cfg


def read_scheme(path) -> CoherentConfiguration:
    with open(path, "r", encoding="utf-8") as fh:
        return scheme_from_text(fh.read())


def write_scheme(cfg: CoherentConfiguration, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(scheme_to_text(cfg))
