"""Projective covers, syzygies, Ext^1, and the standard-self-extension
subgroup with its conversion to ladder seeds.

Ext^1(M, N) is represented relative to a fixed minimal projective
presentation 0 -> Omega M -u-> PM -p-> M -> 0 as
Hom(Omega M, N) / Im(Hom(u, N)); two representatives are equal as classes
iff their difference lies in that image.
"""

from .algebra import path_target, projective
from .errors import NotStandard, QuivrepError, ZeroModule
from .linalg import Mat
from .rep import (
    ModHom,
    direct_sum,
    hom_space,
    kernel,
    radical,
    submodule_from_hom_image,
    top_data,
    vec_hom,
)
from .squares import ShortExact, pushout, pushout_factor
from . import ladder as ladder_mod


def projective_cover(m):
    """(P, p) with P = direct sum of P(i)^{dim top(M)_i} and p minimal onto M."""
    if m.is_zero():
        raise ZeroModule("projective cover of the zero module")
    alg = m.algebra
    td = top_data(m)
    parts = []
    generators = []  # image in M of each projective generator
    for v in alg.quiver.vertices:
        mult = td.rep.dims[v]
        if mult == 0:
            continue
        p_v, gen_idx = projective(alg, v)
        lifts = td.section[v]  # columns lift the top basis back to M
        for j in range(mult):
            parts.append((p_v, gen_idx, v, lifts.col(j)))
    summands = [p for p, _, _, _ in parts]
    total, injs, _ = direct_sum(summands)
    blocks = {v: Mat.zeros(alg.field, m.dims[v], total.dims[v]) for v in m.dims}
    offset = {v: 0 for v in m.dims}
    pb = alg.path_basis()
    for p_v, gen_idx, src, lift in parts:
        # the generator e_src goes to the lifted top vector; every basis path
        # rho: src -> t sends it to rho acting on that vector
        words = {t: [] for t in m.dims}
        words[src].append(())
        for w in pb.words_from(src):
            words[path_target(alg.quiver, w)].append(w)
        for t in m.dims:
            for col, w in enumerate(words[t]):
                if w == ():
                    vec = lift
                else:
                    mat = m.path_action(w)
                    vec = [
                        sum(
                            (alg.field.mul(mat.rows[i][k], lift[k]) for k in range(len(lift))),
                            alg.field.zero(),
                        )
                        for i in range(mat.nrows)
                    ]
                for i, x in enumerate(vec):
                    blocks[t].rows[i][offset[t] + col] = x
            offset[t] += len(words[t])
    p = ModHom(total, m, blocks)
    if not p.is_surjective():
        raise QuivrepError("projective cover map is not surjective")
    # minimality: ker(p) inside rad(P)
    ker_rep, ker_incl = kernel(p)
    rad_p = radical(total)
    for v in m.dims:
        combined = rad_p.basis[v].hstack(ker_incl.blocks[v]).column_space()
        if combined.ncols != rad_p.basis[v].ncols:
            raise QuivrepError("projective cover is not minimal")
    return total, p


def syzygy(m):
    """(Omega M, u) = kernel of the projective cover with its inclusion."""
    if m.is_zero():
        raise ZeroModule("syzygy of the zero module")
    p_total, p = projective_cover(m)
    omega, u = kernel(p)
    return omega, u


class Presentation:
    """Cached minimal presentation 0 -> Omega -u-> P -p-> M -> 0."""

    def __init__(self, m):
        self.module = m
        self.p_total, self.p = projective_cover(m)
        self.omega, self.u = kernel(self.p)


class ExtClass:
    """An element of Ext^1(M, N) given by a representative Omega M -> N."""

    def __init__(self, m, n, representative, presentation):
        self.m = m
        self.n = n
        self.representative = representative
        self.presentation = presentation

    def is_zero_class(self):
        return _in_u_image(self.presentation, self.n, self.representative)

    def equals(self, other):
        if self.presentation is not other.presentation or self.n != other.n:
            raise QuivrepError("classes live in different Ext groups")
        return _in_u_image(self.presentation, self.n, self.representative - other.representative)


def _hom_u_image(pres, n):
    """Basis (as ModHoms Omega -> N) of Im(Hom(u, N))."""
    maps = hom_space(pres.p_total, n)
    return [pres.u.then(h) for h in maps]


def _in_u_image(pres, n, f):
    image = _hom_u_image(pres, n)
    image = [h for h in image if not h.is_zero()]
    if not image:
        return f.is_zero()
    return hom_coordinates_or_none(image, f) is not None


def hom_coordinates_or_none(basis, f):
    from .linalg import Mat as _Mat

    field = f.source.algebra.field
    cols = [vec_hom(b) for b in basis]
    rhs = vec_hom(f)
    if not cols[0]:
        return [] if all(x == field.zero() for x in rhs) else None
    mat = _Mat(field, [list(r) for r in zip(*cols)], len(cols[0]), len(cols))
    sol = mat.solve_right(_Mat.column(field, rhs))
    return None if sol is None else sol.col(0)


def ext1(m, n, presentation=None):
    """(dim Ext^1(M, N), basis of classes).

    dim = dim Hom(Omega M, N) - dim Im(Hom(u, N)); the class basis lifts a
    complement of the image inside the hom space.
    """
    if m.is_zero():
        return 0, []
    pres = presentation or Presentation(m)
    homs = hom_space(pres.omega, n)
    if not homs:
        return 0, []
    field = m.algebra.field
    image = _hom_u_image(pres, n)
    img_cols = [vec_hom(h) for h in image if not h.is_zero()]
    hom_cols = [vec_hom(h) for h in homs]
    if img_cols:
        img_mat = Mat(field, [list(r) for r in zip(*img_cols)], len(img_cols[0]), len(img_cols))
        img_rank = img_mat.rank()
    else:
        img_rank = 0
    dim = len(homs) - img_rank
    # pick basis classes: homs whose images extend the u-image
    chosen = []
    cols = list(img_cols)
    current_rank = img_rank
    for h, col in zip(homs, hom_cols):
        trial = cols + [col]
        mat = Mat(field, [list(r) for r in zip(*trial)], len(trial[0]), len(trial))
        if mat.rank() > current_rank:
            cols = trial
            current_rank += 1
            chosen.append(ExtClass(m, n, h, pres))
        if len(chosen) == dim:
            break
    return dim, chosen


def class_to_sequence(c):
    """Realize an Ext class as a short exact sequence by pushout."""
    pres = c.presentation
    sq = pushout(pres.u, c.representative)
    # epi E -> M induced by p, which kills u(Omega) and hence descends
    total, injs, projs = direct_sum([pres.p_total, c.n])
    epi = pushout_factor(sq, pres.p, ModHom.zero_hom(c.n, c.m))
    mono = sq.fp  # N -> E
    return ShortExact(c.n, sq.z, c.m, mono, epi)


def _right_factor(through, g):
    """Solve X * through = g (through: a x b, g: c x b, X: c x a)."""
    sol = through.transpose().solve_right(g.transpose())
    return None if sol is None else sol.transpose()


def ext_class_of_sequence(ses, presentation=None):
    """The Ext class of 0 -> N -> E -> M -> 0 relative to the presentation.

    Lifts p: PM -> M through the epi, then reads off Omega M -> N.
    """
    m = ses.c
    n = ses.a
    pres = presentation or Presentation(m)
    lift = ladder_mod._solve_factorization_through(ses.p, pres.p)
    if lift is None:
        raise QuivrepError("projective lifting failed (epi not surjective?)")
    # restrict to Omega M: lands in ker(p) = im(i); express through i
    omega_to_e = pres.u.then(lift)
    rep = _through_mono(ses.i, omega_to_e)
    return ExtClass(m, n, rep, pres)


def _through_mono(mono, f):
    """Express f = mono o g and return g (solves exactly; mono injective)."""
    blocks = {}
    for v in f.blocks:
        sol = mono.blocks[v].solve_right(f.blocks[v])
        if sol is None:
            raise QuivrepError("map does not land in the mono image")
        blocks[v] = sol
    return ModHom(f.source, mono.source, blocks)


def standard_subspace(m, presentation=None):
    """(dimension, basis classes) of Ext^1(M,M)_s = Im(Hom(Omega,p)) / Im(Hom(u,M))."""
    if m.is_zero():
        return 0, []
    pres = presentation or Presentation(m)
    field = m.algebra.field
    maps = hom_space(pres.omega, pres.p_total)
    through_p = [h.then(pres.p) for h in maps]
    image_u = [h for h in _hom_u_image(pres, m) if not h.is_zero()]
    # verify the containment Im(Hom(u, M)) <= Im(Hom(Omega, p))
    for h in image_u:
        if hom_coordinates_or_none(through_p, h) is None:
            raise QuivrepError("containment of hom images fails")
    cols_u = [vec_hom(h) for h in image_u]
    cols_p = [vec_hom(h) for h in through_p if not h.is_zero()]
    rank_u = _rank_of_columns(field, cols_u)
    rank_p = _rank_of_columns(field, cols_u + cols_p)
    dim = rank_p - rank_u
    basis = []
    cols = list(cols_u)
    rank = rank_u
    for h, col in zip([h for h in through_p if not h.is_zero()], cols_p):
        if _rank_of_columns(field, cols + [col]) > rank:
            cols.append(col)
            rank += 1
            basis.append(ExtClass(m, m, h, pres))
        if len(basis) == dim:
            break
    return dim, basis


def _rank_of_columns(field, cols):
    if not cols:
        return 0
    mat = Mat(field, [list(r) for r in zip(*cols)], len(cols[0]), len(cols))
    return mat.rank()


def is_standard(c):
    """True iff the representative factors through the cover map p."""
    return _standard_witness(c) is not None


def _standard_witness(c):
    pres = c.presentation
    maps = hom_space(pres.omega, pres.p_total)
    if not maps:
        return None if not c.representative.is_zero() else ModHom.zero_hom(pres.omega, pres.p_total)
    composites = [h.then(pres.p) for h in maps]
    coords = hom_coordinates_or_none(composites, c.representative)
    if coords is None:
        return None
    field = c.m.algebra.field
    out = ModHom.zero_hom(pres.omega, pres.p_total)
    for coef, h in zip(coords, maps):
        if coef != field.zero():
            out = out + h.scale(coef)
    return out


def standard_to_ladder(c, witness=None):
    """Ladder seed (u, w') with p o w' = representative; NotStandard if none.

    The depth-2 ladder of the seed rebuilds the extension of the class.
    """
    pres = c.presentation
    if witness is not None:
        if not pres.u.source == witness.source or witness.target != pres.p_total:
            raise QuivrepError("witness has wrong endpoints")
        if witness.then(pres.p) != c.representative:
            raise QuivrepError("witness does not satisfy p o w' = f")
        wprime = witness
    else:
        wprime = _standard_witness(c)
        if wprime is None:
            raise NotStandard("representative does not factor through the cover")
    return pres.u, wprime


def reduced_presentation_seed(c):
    """Ladder seed through the quotient presentation PM/u(K), K = ker(representative).

    Returns (qbar, v0) where qbar: PM/u(K) -> M is the induced epi and v0
    lifts the induced map ker(qbar) -> M through qbar; None when no lift
    exists.  Feeding these to ladder_extension rebuilds the extension when
    it is a ladder extension of this shape.
    """
    from .rep import QuotientData

    pres = c.presentation
    f = c.representative
    k_rep, k_incl = kernel(f)
    uk = k_incl.then(pres.u)  # K -> PM
    qd = QuotientData(pres.p_total, submodule_from_hom_image(uk).basis)
    qbar = qd.induce_from(pres.p)  # PM/u(K) -> M
    if not qbar.is_surjective():
        return None
    w0_rep, w0 = kernel(qbar)
    # the induced f-bar on ker(qbar): transport f along u and the quotient
    # solve v0: ker(qbar) -> PM/u(K) with qbar o v0 = fbar where fbar is the
    # map induced by f through u
    # fbar on w0_rep: w0_rep sits inside PM/u(K); its preimages come from Omega
    fbar = _induced_on_kernel(pres, qd, w0_rep, w0, f)
    if fbar is None:
        return None
    v0 = ladder_mod._solve_factorization_through(qbar, fbar)
    if v0 is None:
        return None
    return qbar, v0


def _induced_on_kernel(pres, qd, w0_rep, w0, f):
    """The map ker(qbar) -> M induced by f via Omega -> Omega/K = ker(qbar)."""
    theta_blocks = {}
    omega_in_quot = pres.u.then(qd.proj)  # Omega -> PM/u(K), image = ker(qbar)
    # corestrict to w0_rep: solve w0 * theta = omega_in_quot
    for v in omega_in_quot.blocks:
        sol = w0.blocks[v].solve_right(omega_in_quot.blocks[v])
        if sol is None:
            return None
        theta_blocks[v] = sol
    theta = ModHom(pres.omega, w0_rep, theta_blocks)  # epi with kernel K
    # f factors through theta since K = ker f: find fbar with fbar o theta = f
    # solve per vertex: fbar * theta = f
    fbar_blocks = {}
    for v in theta.blocks:
        sol = _right_factor(theta.blocks[v], f.blocks[v])
        if sol is None:
            return None
        fbar_blocks[v] = sol
    fbar = ModHom(w0_rep, f.target, fbar_blocks)
    if theta.then(fbar) != f:
        return None
    return fbar


def proj_dim_at_most_one(m):
    """True iff the syzygy is projective (its cover map is an isomorphism)."""
    if m.is_zero():
        return True
    omega, _ = syzygy(m)
    if omega.is_zero():
        return True
    p_total, p = projective_cover(omega)
    return p.is_isomorphism()
