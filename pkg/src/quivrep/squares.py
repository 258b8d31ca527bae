"""Pushouts, pullbacks, exact squares, and split mono/epi tests.

A commutative square

        X --f--> Y1
        |g       |g'
        v        v
        Y2 -f'-> Z

is exact when 0 -> X -> Y1 + Y2 -> Z -> 0 (maps [f; g] and [g', -f']) is a
short exact sequence, i.e. the square is simultaneously a pushout and a
pullback.  Splitness is decided by exact linear solvability, never by
randomized search.
"""

from .errors import EdgeMismatch, NotExact, QuivrepError
from .linalg import Mat
from .rep import (
    ModHom,
    QuotientData,
    direct_sum,
    kernel,
    _hom_offsets,
    _unvec_hom,
)


class Square:
    """Four corner modules and four maps; commutativity is checked."""

    def __init__(self, x, y1, y2, z, f, g, gp, fp, check=True):
        self.x, self.y1, self.y2, self.z = x, y1, y2, z
        self.f, self.g, self.gp, self.fp = f, g, gp, fp
        if check and not self.commutes():
            raise QuivrepError("square does not commute")

    def commutes(self):
        return self.f.then(self.gp) == self.g.then(self.fp)

    def __repr__(self):
        return "Square(X=%s, Z=%s)" % (self.x.dims, self.z.dims)


class ShortExact:
    """0 -> A -i-> B -p-> C -> 0 with exactness verified on construction."""

    def __init__(self, a, b, c, i, p, check=True):
        self.a, self.b, self.c = a, b, c
        self.i, self.p = i, p
        if check:
            err = self.exactness_failure()
            if err:
                raise NotExact(err)

    def exactness_failure(self):
        for v in self.b.dims:
            ri = self.i.blocks[v].rank()
            rp = self.p.blocks[v].rank()
            if ri != self.a.dims[v]:
                return "inclusion not injective at vertex %s (rank %d of %d)" % (
                    v, ri, self.a.dims[v],
                )
            if rp != self.c.dims[v]:
                return "projection not surjective at vertex %s (rank %d of %d)" % (
                    v, rp, self.c.dims[v],
                )
            if ri + rp != self.b.dims[v]:
                return "middle exactness fails at vertex %s: rank(i)=%d, rank(p)=%d, dim=%d" % (
                    v, ri, rp, self.b.dims[v],
                )
        if not self.i.then(self.p).is_zero():
            return "composite i;p nonzero"
        return None

    def __repr__(self):
        return "ShortExact(%s -> %s -> %s)" % (self.a.dims, self.b.dims, self.c.dims)


def pushout(w, v):
    """Pushout square of two maps with common source.

    Z is the cokernel of x |-> (w(x), -v(x)) into Y1 + Y2; the returned
    square has f = w, g = v.  When [w; v] is injective the square is exact.
    """
    if w.source != v.source:
        raise QuivrepError("pushout needs a common source")
    y1, y2 = w.target, v.target
    total, injs, projs = direct_sum([y1, y2])
    graph = ModHom(
        w.source,
        total,
        {
            s: injs[0].blocks[s] * w.blocks[s] - injs[1].blocks[s] * v.blocks[s]
            for s in w.blocks
        },
        check=False,
    )
    span = {s: graph.blocks[s].column_space() for s in graph.blocks}
    q = QuotientData(total, span)
    gp = injs[0].then(q.proj)
    fp = injs[1].then(q.proj)
    return Square(w.source, y1, y2, q.rep, w, v, gp, fp)


def pullback(f, g):
    """Pullback square of two maps with common target.

    X is the kernel of (y1, y2) |-> f(y1) - g(y2); the returned square has
    g' = f and f' = g.
    """
    if f.target != g.target:
        raise QuivrepError("pullback needs a common target")
    y1, y2 = f.source, g.source
    total, injs, projs = direct_sum([y1, y2])
    diff = ModHom(
        total,
        f.target,
        {
            s: f.blocks[s] * projs[0].blocks[s] - g.blocks[s] * projs[1].blocks[s]
            for s in f.blocks
        },
        check=False,
    )
    x, incl = kernel(diff)
    to_y1 = incl.then(projs[0])
    to_y2 = incl.then(projs[1])
    return Square(x, y1, y2, f.target, to_y1, to_y2, f, g)


def is_exact_square(s):
    """True iff the 4-term sequence of the square is short exact."""
    if not s.commutes():
        return False
    for v in s.x.dims:
        stacked = s.f.blocks[v].vstack(s.g.blocks[v])
        if stacked.rank() != s.x.dims[v]:
            return False
        spread = s.gp.blocks[v].hstack((-s.fp.blocks[v]))
        if spread.rank() != s.z.dims[v]:
            return False
        if stacked.rank() + spread.rank() != s.y1.dims[v] + s.y2.dims[v]:
            return False
    return True


def square_sequence(s):
    """The short exact sequence 0 -> X -> Y1+Y2 -> Z -> 0 of an exact square."""
    total, injs, projs = direct_sum([s.y1, s.y2])
    mono = ModHom(
        s.x,
        total,
        {
            v: injs[0].blocks[v] * s.f.blocks[v] + injs[1].blocks[v] * s.g.blocks[v]
            for v in s.f.blocks
        },
        check=False,
    )
    epi = ModHom(
        total,
        s.z,
        {
            v: s.gp.blocks[v] * projs[0].blocks[v] - s.fp.blocks[v] * projs[1].blocks[v]
            for v in s.gp.blocks
        },
        check=False,
    )
    return ShortExact(s.x, total, s.z, mono, epi)


def pushout_factor(sq, g1, g2):
    """The unique map h out of a pushout with gp;h = g1 and fp;h = g2.

    g1: Y1 -> T and g2: Y2 -> T must agree on the glued image
    (g1 o f = g2 o g); solved exactly and re-verified.
    """
    if g1.target != g2.target:
        raise QuivrepError("factorization maps need a common target")
    field = sq.z.algebra.field
    blocks = {}
    for v in sq.z.dims:
        proj_v = sq.gp.blocks[v].hstack(sq.fp.blocks[v])
        g_v = g1.blocks[v].hstack(g2.blocks[v])
        sol = proj_v.transpose().solve_right(g_v.transpose())
        if sol is None:
            raise QuivrepError("maps do not factor through the pushout")
        blocks[v] = sol.transpose()
    out = ModHom(sq.z, g1.target, blocks)
    if sq.gp.then(out) != g1 or sq.fp.then(out) != g2:
        raise QuivrepError("pushout factorization failed")
    return out


def compose_squares(left, right, orientation="horizontal"):
    """Paste two squares along the shared edge.

    horizontal: right.g must equal left.gp (the shared vertical edge);
    vertical: right.f must equal left.fp (the shared horizontal edge).
    Exactness is preserved when both inputs are exact.
    """
    if orientation == "horizontal":
        if left.y1 != right.x or left.z != right.y2 or right.g != left.gp:
            raise EdgeMismatch("horizontal composition: shared edge mismatch")
        return Square(
            left.x,
            right.y1,
            left.y2,
            right.z,
            left.f.then(right.f),
            left.g,
            right.gp,
            left.fp.then(right.fp),
        )
    if orientation == "vertical":
        if left.y2 != right.x or left.z != right.y1 or right.f != left.fp:
            raise EdgeMismatch("vertical composition: shared edge mismatch")
        return Square(
            left.x,
            left.y1,
            right.y2,
            right.z,
            left.f,
            left.g.then(right.g),
            left.gp.then(right.gp),
            right.fp,
        )
    raise QuivrepError("orientation must be horizontal or vertical")


def trivial_square(a, x):
    """The always-exact square padding a map by a direct summand X.

        U --a--> V
        |[1;0]   |[1;0]
        v        v
        U+X -a+1-> V+X
    """
    u, vmod = a.source, a.target
    ux, ux_inj, ux_proj = direct_sum([u, x])
    vx, vx_inj, _ = direct_sum([vmod, x])
    bottom = ux_proj[0].then(a).then(vx_inj[0]) + ux_proj[1].then(vx_inj[1])
    return Square(u, vmod, ux, vx, a, ux_inj[0], vx_inj[0], bottom)


def is_split_mono(f):
    """Retraction r with r o f = id, or None; decided by exact solving."""
    if not f.is_injective():
        return None
    return _solve_one_sided(f, side="retraction")


def is_split_epi(f):
    """Section s with f o s = id, or None; decided by exact solving."""
    if not f.is_surjective():
        return None
    return _solve_one_sided(f, side="section")


def _solve_one_sided(f, side):
    """Solve r*f = 1 (retraction) or f*s = 1 (section) inside the hom space."""
    m, n = f.source, f.target
    # unknown map goes N -> M in both cases
    dom, cod = n, m
    field = m.algebra.field
    if sum(dom.dims.values()) * sum(cod.dims.values()) == 0:
        h = ModHom.zero_hom(dom, cod)
        good = f.then(h) == ModHom.identity(m) if side == "retraction" else h.then(f) == ModHom.identity(n)
        return h if good else None
    offsets, nvars = _hom_offsets(dom, cod)
    rows = []
    rhs = []
    zero = field.zero()
    # commutation constraints
    for a, s, t in m.algebra.quiver.arrows:
        ca = cod.action[a]
        da = dom.action[a]
        for r in range(cod.dims[t]):
            for c in range(dom.dims[s]):
                row = [zero] * nvars
                base_s = offsets[s]
                for k in range(cod.dims[s]):
                    coef = ca.rows[r][k]
                    if coef != zero:
                        row[base_s + k * dom.dims[s] + c] = coef
                base_t = offsets[t]
                for k in range(dom.dims[t]):
                    coef = da.rows[k][c]
                    if coef != zero:
                        idx = base_t + r * dom.dims[t] + k
                        row[idx] = field.sub(row[idx], coef)
                rows.append(row)
                rhs.append(zero)
    # unit constraints
    one = field.one()
    for v in m.dims:
        if side == "retraction":
            # (R_v F_v)[i, j] = delta_ij ; R_v is cod x dom = m.dims x n.dims
            fv = f.blocks[v]
            for i in range(m.dims[v]):
                for j in range(m.dims[v]):
                    row = [zero] * nvars
                    base = offsets[v]
                    for k in range(n.dims[v]):
                        coef = fv.rows[k][j]
                        if coef != zero:
                            row[base + i * dom.dims[v] + k] = coef
                    rows.append(row)
                    rhs.append(one if i == j else zero)
        else:
            # (F_v S_v)[i, j] = delta_ij ; S_v is m.dims x n.dims
            fv = f.blocks[v]
            for i in range(n.dims[v]):
                for j in range(n.dims[v]):
                    row = [zero] * nvars
                    base = offsets[v]
                    for k in range(m.dims[v]):
                        coef = fv.rows[i][k]
                        if coef != zero:
                            row[base + k * dom.dims[v] + j] = coef
                    rows.append(row)
                    rhs.append(one if i == j else zero)
    if not rows:
        return ModHom(dom, cod, {}, check=False) if nvars == 0 else None
    mat = Mat.from_rows(field, rows, nvars)
    sol = mat.solve_right(Mat.column(field, rhs))
    if sol is None:
        return None
    h = _unvec_hom(dom, cod, sol.col(0))
    if side == "retraction":
        assert f.then(h) == ModHom.identity(m)
    else:
        assert h.then(f) == ModHom.identity(n)
    return h
