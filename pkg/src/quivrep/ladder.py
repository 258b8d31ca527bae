"""The ladder construction: rung iteration, truncations, chessboard,
ladder extensions, and the simple-socle witness for self-extensions.

A seed is a pair w0, v0: U0 -> U1 with w0 injective and coker(w0) nonzero.
Iterated pushouts produce rungs U_i with maps w_i, v_i; the truncations
H[n] = U_n / U_0 carry a surjection phi: H[n] -> H[n-1] whose kernel is a
copy of H = coker(w0), and an inclusion H[n-1] -> H[n] with cokernel H.
"""

from .errors import (
    NotEpi,
    NotMono,
    NotSelfExtension,
    NotSimple,
    OutOfRange,
    QuivrepError,
    ZeroCokernel,
)
from .rep import (
    ModHom,
    QuotientData,
    cokernel_data,
    hom_space,
    kernel,
    submodule_from_hom_image,
)
from .squares import ShortExact, Square, is_exact_square, is_split_epi, pushout, pullback


class Ladder:
    """Rung modules U_0..U_depth with structure maps w_i, v_i: U_i -> U_{i+1}."""

    def __init__(self, modules, w_maps, v_maps, verify=True):
        self.modules = list(modules)
        self.w_maps = list(w_maps)
        self.v_maps = list(v_maps)
        if not (len(self.modules) == len(self.w_maps) + 1 == len(self.v_maps) + 1):
            raise QuivrepError("ladder map/module counts inconsistent")
        self._coker_data = None
        self._coker_chain = None
        self._trunc = {}
        if verify:
            self.verify()

    @property
    def depth(self):
        return len(self.modules) - 1

    @property
    def seed(self):
        return self.w_maps[0], self.v_maps[0]

    def cokernels(self):
        """Cokernel data of every w_i, computed once."""
        if self._coker_data is None:
            self._coker_data = [cokernel_data(w) for w in self.w_maps]
        return self._coker_data

    @property
    def basis_module(self):
        """H = coker(w0), the basis of the associated truncation family."""
        return self.cokernels()[0].rep

    def coker_chain(self):
        """Isos coker(w_{i-1}) -> coker(w_i) induced by the vertical maps."""
        if self._coker_chain is None:
            cds = self.cokernels()
            chain = []
            for i in range(1, len(self.w_maps)):
                step = cds[i - 1].induce(self.v_maps[i], cds[i])
                if not step.is_isomorphism():
                    raise QuivrepError("cokernel transport map is not an isomorphism")
                chain.append(step)
            self._coker_chain = chain
        return self._coker_chain

    def coker_ident(self, i):
        """Iso coker(w_i) -> H obtained by inverting the transport chain."""
        chain = self.coker_chain()
        cur = ModHom.identity(self.cokernels()[i].rep)
        for k in range(i - 1, -1, -1):
            cur = cur.then(chain[k].inverse())
        return cur

    def embedded_seed_image(self, n):
        """The composite w_{n-1} ... w_0 : U_0 -> U_n (identity for n = 0)."""
        f = ModHom.identity(self.modules[0])
        for i in range(n):
            f = f.then(self.w_maps[i])
        return f

    def vertical_composite(self, lo, hi):
        """v_{hi-1} ... v_{lo} : U_lo -> U_hi."""
        f = ModHom.identity(self.modules[lo])
        for i in range(lo, hi):
            f = f.then(self.v_maps[i])
        return f

    def rung_square(self, i):
        """The commuting square with top w_i, left v_i."""
        return Square(
            self.modules[i],
            self.modules[i + 1],
            self.modules[i + 1],
            self.modules[i + 2],
            self.w_maps[i],
            self.v_maps[i],
            self.v_maps[i + 1],
            self.w_maps[i + 1],
        )

    def verify(self):
        w0, v0 = self.seed
        if not w0.is_injective():
            raise NotMono("ladder seed w0 is not injective")
        h = self.basis_module
        if h.is_zero():
            raise ZeroCokernel("ladder seed has zero cokernel")
        hd = h.dims
        k_dims = kernel(v0)[0].dims
        q_dims = None
        for i, w in enumerate(self.w_maps):
            if not w.is_injective():
                raise NotMono("ladder map w_%d is not injective" % i)
            cd = self.cokernels()[i]
            if cd.rep.dims != hd:
                raise QuivrepError("coker(w_%d) has wrong dimension vector" % i)
        for i, v in enumerate(self.v_maps):
            if kernel(v)[0].dims != k_dims:
                raise QuivrepError("ker(v_%d) dimension vector changed" % i)
            cv = cokernel_data(v).rep.dims
            if q_dims is None:
                q_dims = cv
            elif cv != q_dims:
                raise QuivrepError("coker(v_%d) dimension vector changed" % i)
        for i in range(self.depth - 1):
            if not is_exact_square(self.rung_square(i)):
                raise QuivrepError("rung square %d is not exact" % i)

    def canonical_generators(self, i):
        """The i canonical maps U_1 -> U_i that generate U_i.

        The j-th map is w_(i-1) ... w_(j+1) o v_j ... v_1 for j = 0..i-1.
        """
        gens = []
        for j in range(i):
            f = self.vertical_composite(1, j + 1)
            for k in range(j + 1, i):
                f = f.then(self.w_maps[k])
            gens.append(f)
        return gens

    def truncation(self, n):
        if n < 0 or n > self.depth:
            raise OutOfRange("truncation stage %d outside 0..%d" % (n, self.depth))
        if n not in self._trunc:
            t = Truncation.__new__(Truncation)
            self._trunc[n] = t  # register first: stage 1 refers to itself
            try:
                t._init(self, n)
            except BaseException:
                del self._trunc[n]
                raise
        return self._trunc[n]


class Truncation:
    """H[n] = U_n / U_0 with its structure maps.

    Exact rows, verified on construction:
        0 -> H[1] -> H[n] -phi-> H[n-1] -> 0
        0 -> H[n-1] -incl-> H[n] -> H -> 0
    """

    def __init__(self, ladder, n):
        self._init(ladder, n)

    def _init(self, ladder, n):
        self.ladder = ladder
        self.n = n
        emb = ladder.embedded_seed_image(n)
        self.quot = QuotientData(
            ladder.modules[n], {v: emb.blocks[v].column_space() for v in emb.blocks}
        )
        self.rep = self.quot.rep
        self.proj = self.quot.proj
        if n == 0:
            self.phi = None
            self.incl = None
            self.pi_to_h = None
            return
        prev = ladder.truncation(n - 1)
        # phi = (v-bar)^{-1} o p with p: U_n/U_0 -> U_n/U_1 and
        # v-bar: U_{n-1}/U_0 -> U_n/U_1 induced by v_{n-1}
        u1_in_un = _shifted_image(ladder, 1, n)
        bq = QuotientData(ladder.modules[n], u1_in_un)
        p_bar = self.quot.induce_from(bq.proj)
        vbar = _induce_between_quotients(prev.quot, bq, ladder.v_maps[n - 1])
        if not vbar.is_isomorphism():
            raise QuivrepError("filtration transport is not an isomorphism")
        self.phi = p_bar.then(vbar.inverse())
        # inclusion H[n-1] -> H[n] induced by w_{n-1}
        self.incl = _induce_between_quotients(prev.quot, self.quot, ladder.w_maps[n - 1])
        if not self.incl.is_injective():
            raise QuivrepError("truncation inclusion is not injective")
        # pi_to_h: iterate phi down to H[1], then identify with H
        step = prev
        cur = self.phi
        while step.n > 1:
            cur = cur.then(step.phi)
            step = ladder.truncation(step.n - 1)
        if self.n == 1:
            cur = ModHom.identity(self.rep)
        self.pi_to_h = cur.then(_h1_ident(ladder))
        self._verify()

    def _verify(self):
        lad, n = self.ladder, self.n
        h = lad.basis_module
        h1 = lad.truncation(1).rep
        # 0 -> H[1] -> H[n] -> H[n-1] -> 0 via the composed inclusion and phi
        iota = _h1_into(lad, n)
        ShortExact(h1, self.rep, lad.truncation(n - 1).rep, iota, self.phi)
        # 0 -> H[n-1] -> H[n] -> H -> 0 via incl and the cokernel identification
        epi = _trunc_to_h(lad, n)
        ShortExact(lad.truncation(n - 1).rep, self.rep, h, self.incl, epi)
        # phi^n kills everything: composite to H[0] = 0 is automatic since
        # H[0] is the zero module; check ker(phi) = image of H[1] happens in
        # the first sequence above.

    def to_h(self):
        """The epimorphism H[n] -> H with kernel the included H[n-1]."""
        return _trunc_to_h(self.ladder, self.n)


def _shifted_image(ladder, lo, n):
    """Span of the image of U_lo inside U_n under the w-composites."""
    f = ModHom.identity(ladder.modules[lo])
    for i in range(lo, n):
        f = f.then(ladder.w_maps[i])
    return {v: f.blocks[v].column_space() for v in f.blocks}


def _induce_between_quotients(qsrc, qtgt, f):
    return qsrc.induce(f, qtgt)


def _h1_ident(ladder):
    """Isomorphism H[1] = U_1/U_0 -> H = coker(w_0)."""
    t1 = ladder.truncation(1)
    cd = ladder.cokernels()[0]
    # both are quotients of U_1 by the same subspace; induce the identity
    return t1.quot.induce(ModHom.identity(ladder.modules[1]), cd)


def _h1_into(ladder, n):
    """The composed inclusion H[1] -> H[n]."""
    f = ModHom.identity(ladder.truncation(1).rep)
    for k in range(2, n + 1):
        f = f.then(ladder.truncation(k).incl)
    return f


def _trunc_to_h(ladder, n):
    """Epi H[n] -> H: quotient to coker(w_{n-1}) then walk the chain back."""
    tn = ladder.truncation(n)
    cd = ladder.cokernels()[n - 1]
    to_cn = tn.quot.induce_from(cd.proj)
    return to_cn.then(ladder.coker_ident(n - 1))


def build_ladder(w0, v0, depth=6):
    """Iterated pushouts from the seed pair; all ladder invariants verified."""
    if w0.source != v0.source or w0.target != v0.target:
        raise QuivrepError("seed maps need common source and target")
    if not w0.is_injective():
        raise NotMono("seed w0 is not injective")
    if depth < 1:
        raise QuivrepError("depth must be at least 1")
    modules = [w0.source, w0.target]
    w_maps = [w0]
    v_maps = [v0]
    for i in range(depth - 1):
        sq = pushout(w_maps[i], v_maps[i])
        modules.append(sq.z)
        v_maps.append(sq.gp)
        w_maps.append(sq.fp)
    return Ladder(modules, w_maps, v_maps)


def truncation(ladder, n):
    return ladder.truncation(n)


def chessboard(w0, v0, depth=6):
    """Two ladders sharing the same rung modules with the seed roles swapped."""
    if not w0.is_injective() or not v0.is_injective():
        raise NotMono("chessboard needs two injective seeds")
    horizontal = build_ladder(w0, v0, depth)
    vertical = Ladder(horizontal.modules, horizontal.v_maps, horizontal.w_maps)
    return horizontal, vertical


def ladder_extension(q, v0):
    """The self-extension H[2; w0, v0] built from an epi q: U1 -> H.

    w0 is the kernel inclusion of q; v0 must be a map from that kernel into
    U1.  Returns (ShortExact 0 -> H -> H[2] -> H -> 0, H[2]).
    """
    if not q.is_surjective():
        raise NotEpi("q must be an epimorphism onto H")
    k, w0 = kernel(q)
    if v0.source != k:
        raise QuivrepError("v0 must start at the kernel of q (use rep.kernel(q))")
    if v0.target != q.source:
        raise QuivrepError("v0 must land in the source of q")
    lad = build_ladder(w0, v0, depth=2)
    t2 = lad.truncation(2)
    h2 = t2.rep
    # identify the canonical H = coker(w0) with the given target of q
    cd = lad.cokernels()[0]
    ident = cd.induce_from(q)  # coker(w0) -> H_ext
    if not ident.is_isomorphism():
        raise QuivrepError("q does not identify coker(w0) with its target")
    left = ident.inverse().then(_h1_ident(lad).inverse()).then(_h1_into(lad, 2))
    right = t2.to_h().then(ident)
    ext = ShortExact(q.target, h2, q.target, left, right)
    return ext, h2


def ladder_seed_from_simple(ext, s_incl):
    """Recover a ladder seed for a self-extension from a simple submodule.

    Given ext: 0 -> H -> E -> H -> 0 and a simple S <= H with no
    self-extensions, returns (w, v): S -> U with U inside E such that the
    depth-2 ladder of (w, v) rebuilds the extension; None when the required
    factorization does not exist or Ext^1(S, S) != 0.
    """
    from .selfext import ext1

    h = ext.a
    if ext.c != h:
        raise NotSelfExtension("end terms of the sequence differ")
    s = s_incl.source
    if s.total_dim() != 1:
        raise NotSimple("the submodule datum must be a simple module")
    if not s_incl.is_injective():
        raise NotSimple("the map from the simple module is not injective")
    if s_incl.target != h:
        raise QuivrepError("the simple module must sit inside the end term")
    if ext1(s, s)[0] != 0:
        return None
    # factor H -> H/S through E: solve t o i = can
    hs = QuotientData(h, submodule_from_hom_image(s_incl).basis)
    can = hs.proj
    t = _solve_factorization(ext.i, can)
    if t is None:
        return None
    u_rep, kappa = kernel(t)
    q_u = kappa.then(ext.p)
    if not q_u.is_surjective():
        return None
    ker_qu, ker_incl = kernel(q_u)
    # identify S with ker(q_u) through the ambient module E
    target_map = s_incl.then(ext.i)
    iota = _solve_factorization_through(ker_incl.then(kappa), target_map)
    if iota is None:
        return None
    w = iota.then(ker_incl)
    # pull back q_u along the inclusion S -> H and split the induced sequence
    sq = pullback(q_u, s_incl)
    proj_to_s = sq.g  # X -> S
    section = is_split_epi(proj_to_s)
    if section is None:
        return None
    v = section.then(sq.f)
    assert v.then(q_u) == s_incl
    return w, v, q_u


def _solve_factorization(through, target):
    """Solve t o through = target for t: through.target -> target.target."""
    homs = hom_space(through.target, target.target)
    if not homs:
        return None if not target.is_zero() else ModHom.zero_hom(through.target, target.target)
    # linear system in hom coordinates
    composites = [through.then(hcand) for hcand in homs]
    coords = _linear_combination_matching(composites, target)
    if coords is None:
        return None
    out = ModHom.zero_hom(through.target, target.target)
    for c, hcand in zip(coords, homs):
        if c != hcand.source.algebra.field.zero():
            out = out + hcand.scale(c)
    return out


def _solve_factorization_through(given, target):
    """Find x: target.source -> given.source with x.then(given) == target."""
    homs = hom_space(target.source, given.source)
    if not homs:
        return None if not target.is_zero() else ModHom.zero_hom(target.source, given.source)
    composites = [hcand.then(given) for hcand in homs]
    coords = _linear_combination_matching(composites, target)
    if coords is None:
        return None
    out = ModHom.zero_hom(target.source, given.source)
    for c, hcand in zip(coords, homs):
        if c != hcand.source.algebra.field.zero():
            out = out + hcand.scale(c)
    return out


def _linear_combination_matching(candidates, target):
    """Coefficients making sum c_i * candidates_i == target, or None."""
    from .linalg import Mat
    from .rep import vec_hom

    field = target.source.algebra.field
    cols = [vec_hom(c) for c in candidates]
    rhs = vec_hom(target)
    if not cols or not cols[0]:
        return [field.zero()] * len(candidates) if all(x == field.zero() for x in rhs) else None
    mat = Mat(field, [list(r) for r in zip(*cols)], len(cols[0]), len(cols))
    sol = mat.solve_right(Mat.column(field, rhs))
    if sol is None:
        return None
    return sol.col(0)
