"""Finite-dimensional modules over a presented algebra, and their maps.

A Rep assigns a matrix to every arrow; zero-dimensional vertex spaces are
first class.  A ModHom is a vertex-indexed family of blocks commuting with
the arrow actions.  Submodules are stored by canonical echelonized spanning
sets so every derived object (kernel, image, quotient) is reproducible.
"""

from .errors import AlgebraMismatch, QuivrepError
from .linalg import Mat, quotient_maps


class Rep:
    """A representation: dims per vertex, one matrix per arrow."""

    def __init__(self, algebra, dims, action, check=True):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.quiver.vertices}
        self.action = {}
        for a, s, t in algebra.quiver.arrows:
            m = action.get(a)
            if m is None:
                m = Mat.zeros(algebra.field, self.dims[t], self.dims[s])
            if m.shape != (self.dims[t], self.dims[s]):
                raise QuivrepError(
                    "matrix for arrow %s has shape %s, expected (%d, %d)"
                    % (a, m.shape, self.dims[t], self.dims[s])
                )
            self.action[a] = m
        if check:
            bad = self.failing_relation()
            if bad is not None:
                raise QuivrepError("relation %r does not vanish on representation" % (bad,))

    def failing_relation(self):
        for rel in self.algebra.relations:
            total = None
            for c, w in rel:
                m = self.path_action(w).scale(c)
                total = m if total is None else total + m
            if total is not None and not total.is_zero():
                return rel
        return None

    def path_action(self, word):
        """Matrix of a path (execution order): M = M_last * ... * M_first."""
        q = self.algebra.quiver
        if not word:
            raise QuivrepError("path_action needs a nonempty word (idempotents act as identity)")
        m = self.action[word[0]]
        for a in word[1:]:
            m = self.action[a] * m
        return m

    def total_dim(self):
        return sum(self.dims.values())

    def dim_vector(self):
        return tuple(self.dims[v] for v in self.algebra.quiver.vertices)

    def is_zero(self):
        return self.total_dim() == 0

    def __eq__(self, other):
        return (
            isinstance(other, Rep)
            and self.algebra == other.algebra
            and self.dims == other.dims
            and self.action == other.action
        )

    def __repr__(self):
        return "Rep(dims=%s)" % (self.dims,)

    @staticmethod
    def zero(algebra):
        return Rep(algebra, {}, {}, check=False)

    @staticmethod
    def simple(algebra, vertex):
        return Rep(algebra, {vertex: 1}, {}, check=False)


class ModHom:
    """A homomorphism of representations: one block per vertex."""

    def __init__(self, source, target, blocks, check=True):
        if source.algebra != target.algebra:
            raise AlgebraMismatch("hom between modules over different algebras")
        self.source = source
        self.target = target
        self.blocks = {}
        for v in source.algebra.quiver.vertices:
            b = blocks.get(v)
            if b is None:
                b = Mat.zeros(source.algebra.field, target.dims[v], source.dims[v])
            if b.shape != (target.dims[v], source.dims[v]):
                raise QuivrepError(
                    "block at %s has shape %s, expected (%d, %d)"
                    % (v, b.shape, target.dims[v], source.dims[v])
                )
            self.blocks[v] = b
        if check:
            bad = self.failing_arrow()
            if bad is not None:
                raise QuivrepError(
                    "blocks do not commute with the action of arrow %r" % (bad,)
                )

    def failing_arrow(self):
        for a, s, t in self.source.algebra.quiver.arrows:
            if self.target.action[a] * self.blocks[s] != self.blocks[t] * self.source.action[a]:
                return a
        return None

    def commutes(self):
        return self.failing_arrow() is None

    def then(self, other):
        """Composite `other o self` (apply self first)."""
        if other.source is not self.target and other.source != self.target:
            raise QuivrepError("composition endpoint mismatch")
        return ModHom(
            self.source,
            other.target,
            {v: other.blocks[v] * self.blocks[v] for v in self.blocks},
            check=False,
        )

    def _check_parallel(self, other):
        if self.source != other.source or self.target != other.target:
            raise QuivrepError("hom arithmetic needs equal endpoints")

    def __add__(self, other):
        self._check_parallel(other)
        return ModHom(
            self.source,
            self.target,
            {v: self.blocks[v] + other.blocks[v] for v in self.blocks},
            check=False,
        )

    def __sub__(self, other):
        self._check_parallel(other)
        return ModHom(
            self.source,
            self.target,
            {v: self.blocks[v] - other.blocks[v] for v in self.blocks},
            check=False,
        )

    def __neg__(self):
        return ModHom(
            self.source, self.target, {v: -self.blocks[v] for v in self.blocks}, check=False
        )

    def scale(self, c):
        return ModHom(
            self.source,
            self.target,
            {v: self.blocks[v].scale(c) for v in self.blocks},
            check=False,
        )

    def __eq__(self, other):
        return (
            isinstance(other, ModHom)
            and self.source == other.source
            and self.target == other.target
            and self.blocks == other.blocks
        )

    def is_zero(self):
        return all(b.is_zero() for b in self.blocks.values())

    def is_injective(self):
        return all(b.rank() == b.ncols for b in self.blocks.values())

    def is_surjective(self):
        return all(b.rank() == b.nrows for b in self.blocks.values())

    def is_isomorphism(self):
        return all(
            b.nrows == b.ncols and b.rank() == b.nrows for b in self.blocks.values()
        )

    def inverse(self):
        if not self.is_isomorphism():
            raise QuivrepError("inverse of a non-isomorphism")
        return ModHom(
            self.target,
            self.source,
            {v: self.blocks[v].inverse() for v in self.blocks},
            check=False,
        )

    def rank_vector(self):
        return {v: b.rank() for v, b in self.blocks.items()}

    def __repr__(self):
        return "ModHom(%s -> %s)" % (self.source.dims, self.target.dims)

    @staticmethod
    def identity(m):
        return ModHom(
            m, m, {v: Mat.identity(m.algebra.field, m.dims[v]) for v in m.dims}, check=False
        )

    @staticmethod
    def zero_hom(source, target):
        return ModHom(source, target, {}, check=False)


class Submodule:
    """A submodule of an ambient Rep, stored by canonical spanning matrices."""

    def __init__(self, ambient, basis):
        self.ambient = ambient
        self.basis = basis  # vertex -> Mat (dims[v] x k_v), echelonized columns
        self.dims = {v: basis[v].ncols for v in basis}

    def total_dim(self):
        return sum(self.dims.values())

    def inclusion_rep(self):
        """The submodule as a Rep plus its inclusion ModHom."""
        amb = self.ambient
        field = amb.algebra.field
        action = {}
        for a, s, t in amb.algebra.quiver.arrows:
            mapped = amb.action[a] * self.basis[s]
            coeff = self.basis[t].solve_right(mapped)
            if coeff is None:
                raise QuivrepError("spanning set is not arrow-stable")
            action[a] = coeff
        sub = Rep(amb.algebra, self.dims, action)
        incl = ModHom(sub, amb, dict(self.basis))
        return sub, incl

    def contains_vector(self, v, vec):
        return self.basis[v].solve_right(Mat.column(self.ambient.algebra.field, vec)) is not None


def _check_same_algebra(*reps):
    alg = reps[0].algebra
    for r in reps[1:]:
        if r.algebra != alg:
            raise AlgebraMismatch("representations over different algebras")


def hom_space(m, n):
    """Basis of Hom(M, N) as a list of ModHom.

    Solves the commutation system T_a B_i = B_j S_a for all arrows a: i->j.
    """
    _check_same_algebra(m, n)
    basis_vecs = _hom_solution_basis(m, n)
    return [_unvec_hom(m, n, col) for col in basis_vecs]


def _hom_offsets(m, n):
    offsets = {}
    pos = 0
    for v in m.algebra.quiver.vertices:
        offsets[v] = pos
        pos += n.dims[v] * m.dims[v]
    return offsets, pos


def _hom_solution_basis(m, n):
    field = m.algebra.field
    offsets, nvars = _hom_offsets(m, n)
    rows = []
    zero = field.zero()
    for a, s, t in m.algebra.quiver.arrows:
        na = n.action[a]  # n.dims[t] x n.dims[s]
        ma = m.action[a]  # m.dims[t] x m.dims[s]
        for r in range(n.dims[t]):
            for c in range(m.dims[s]):
                row = [zero] * nvars
                # (T_a B_s)[r, c] = sum_k T_a[r, k] B_s[k, c]
                base_s = offsets[s]
                for k in range(n.dims[s]):
                    coef = na.rows[r][k]
                    if coef != zero:
                        row[base_s + k * m.dims[s] + c] = coef
                # -(B_t S_a)[r, c] = -sum_k B_t[r, k] S_a[k, c]
                base_t = offsets[t]
                for k in range(m.dims[t]):
                    coef = ma.rows[k][c]
                    if coef != zero:
                        idx = base_t + r * m.dims[t] + k
                        row[idx] = field.sub(row[idx], coef)
                if any(x != zero for x in row):
                    rows.append(row)
    if not rows:
        null = Mat.identity(field, nvars)
        return [null.col(j) for j in range(nvars)]
    mat = Mat.from_rows(field, rows, nvars)
    basis = mat.null_space()
    return [basis.col(j) for j in range(basis.ncols)]


def _unvec_hom(m, n, vec):
    field = m.algebra.field
    offsets, _ = _hom_offsets(m, n)
    blocks = {}
    for v in m.algebra.quiver.vertices:
        rows_v = []
        base = offsets[v]
        for r in range(n.dims[v]):
            rows_v.append(vec[base + r * m.dims[v] : base + (r + 1) * m.dims[v]])
        blocks[v] = Mat(field, rows_v, n.dims[v], m.dims[v])
    return ModHom(m, n, blocks, check=False)


def vec_hom(h):
    """Flatten a ModHom into the coordinate vector used by hom_space."""
    out = []
    for v in h.source.algebra.quiver.vertices:
        for row in h.blocks[v].rows:
            out.extend(row)
    return out


def hom_coordinates(basis, h):
    """Coordinates of h in the given hom-space basis, or None."""
    if not basis:
        return [] if h.is_zero() else None
    field = h.source.algebra.field
    cols = [vec_hom(b) for b in basis]
    mat = Mat(field, [list(col) for col in zip(*cols)], len(cols[0]), len(cols))
    sol = mat.solve_right(Mat.column(field, vec_hom(h)))
    if sol is None:
        return None
    return sol.col(0)


def kernel(f):
    """(K, incl) with K the kernel subrepresentation of f."""
    amb = f.source
    basis = {v: f.blocks[v].null_space() for v in amb.dims}
    sub = Submodule(amb, basis)
    return sub.inclusion_rep()


def image(f):
    """(I, incl, proj): the image with inclusion into target, projection from source."""
    basis = {v: f.blocks[v].column_space() for v in f.source.dims}
    sub = Submodule(f.target, basis)
    img, incl = sub.inclusion_rep()
    proj_blocks = {}
    for v in f.source.dims:
        coeff = basis[v].solve_right(f.blocks[v])
        proj_blocks[v] = coeff
    proj = ModHom(f.source, img, proj_blocks)
    return img, incl, proj


class QuotientData:
    """Quotient of a Rep by a submodule, with projection and a linear section."""

    def __init__(self, ambient, span_basis):
        self.ambient = ambient
        field = ambient.algebra.field
        proj_blocks = {}
        self.section = {}
        for v in ambient.dims:
            p, s = quotient_maps(span_basis[v])
            proj_blocks[v] = p
            self.section[v] = s
        dims = {v: proj_blocks[v].nrows for v in ambient.dims}
        action = {}
        for a, s, t in ambient.algebra.quiver.arrows:
            action[a] = proj_blocks[t] * ambient.action[a] * self.section[s]
        self.rep = Rep(ambient.algebra, dims, action)
        self.proj = ModHom(ambient, self.rep, proj_blocks)

    def induce(self, f, other):
        """Induce a map on quotients from f: self.ambient -> other.ambient.

        Requires f to carry the quotiented submodule into the other one;
        verified by checking the candidate is well defined.
        """
        blocks = {
            v: other.proj.blocks[v] * f.blocks[v] * self.section[v] for v in f.blocks
        }
        cand = ModHom(self.rep, other.rep, blocks, check=False)
        if not _descends(f, self, other, cand):
            raise QuivrepError("map does not descend to the quotients")
        if not cand.commutes():
            raise QuivrepError("induced quotient map does not commute")
        return cand

    def induce_from(self, f):
        """Induce g: self.rep -> T from f: self.ambient -> T killing the submodule."""
        blocks = {v: f.blocks[v] * self.section[v] for v in f.blocks}
        cand = ModHom(self.rep, f.target, blocks, check=False)
        if not _factors_through_proj(f, self, cand):
            raise QuivrepError("map does not kill the quotiented submodule")
        if not cand.commutes():
            raise QuivrepError("induced map does not commute")
        return cand


def _descends(f, qsrc, qtgt, cand):
    for v in f.blocks:
        if cand.blocks[v] * qsrc.proj.blocks[v] != qtgt.proj.blocks[v] * f.blocks[v]:
            return False
    return True


def _factors_through_proj(f, qsrc, cand):
    for v in f.blocks:
        if cand.blocks[v] * qsrc.proj.blocks[v] != f.blocks[v]:
            return False
    return True


def cokernel(f):
    """(C, proj) with C = target / image(f)."""
    span = {v: f.blocks[v].column_space() for v in f.target.dims}
    q = QuotientData(f.target, span)
    return q.rep, q.proj


def cokernel_data(f):
    span = {v: f.blocks[v].column_space() for v in f.target.dims}
    return QuotientData(f.target, span)


def direct_sum(parts, algebra=None):
    """(S, injections, projections) with block-diagonal actions.

    The empty sum is the zero module; it needs the algebra passed explicitly.
    """
    if not parts:
        if algebra is None:
            raise QuivrepError("empty direct sum needs an explicit algebra")
        return Rep.zero(algebra), [], []
    _check_same_algebra(*parts)
    alg = parts[0].algebra
    field = alg.field
    dims = {v: sum(p.dims[v] for p in parts) for v in alg.quiver.vertices}
    action = {}
    for a, s, t in alg.quiver.arrows:
        m = Mat.zeros(field, dims[t], dims[s])
        roff = coff = 0
        for p in parts:
            b = p.action[a]
            for r in range(b.nrows):
                m.rows[roff + r][coff : coff + b.ncols] = list(b.rows[r])
            roff += b.nrows
            coff += b.ncols
        action[a] = m
    total = Rep(alg, dims, action, check=False)
    injections = []
    projections = []
    roffs = {v: 0 for v in dims}
    for p in parts:
        inj_blocks = {}
        proj_blocks = {}
        for v in dims:
            inj = Mat.zeros(field, dims[v], p.dims[v])
            pr = Mat.zeros(field, p.dims[v], dims[v])
            for i in range(p.dims[v]):
                inj.rows[roffs[v] + i][i] = field.one()
                pr.rows[i][roffs[v] + i] = field.one()
            inj_blocks[v] = inj
            proj_blocks[v] = pr
        injections.append(ModHom(p, total, inj_blocks, check=False))
        projections.append(ModHom(total, p, proj_blocks, check=False))
        for v in dims:
            roffs[v] += p.dims[v]
    return total, injections, projections


def hom_from_blocks(sum_src, sum_tgt, blocks):
    """Assemble a ModHom between direct sums from a grid of component maps.

    sum_src/sum_tgt are (rep, injections, projections) triples as returned
    by direct_sum; blocks maps (i, j) -> ModHom(src_part_j -> tgt_part_i).
    """
    src, _, src_projs = sum_src
    tgt, tgt_injs, _ = sum_tgt
    total = ModHom.zero_hom(src, tgt)
    for (i, j), h in blocks.items():
        total = total + src_projs[j].then(h).then(tgt_injs[i])
    return total


def direct_sum_hom(sum_src, sum_tgt, homs):
    """Diagonal sum of maps between matching direct sum decompositions."""
    return hom_from_blocks(sum_src, sum_tgt, {(i, i): h for i, h in enumerate(homs)})


def submodule_closure(ambient, generators):
    """Smallest submodule containing the given vectors (vertex -> list of vecs)."""
    field = ambient.algebra.field
    span = {}
    for v in ambient.dims:
        vecs = generators.get(v, [])
        cols = Mat.zeros(field, ambient.dims[v], len(vecs))
        for j, vec in enumerate(vecs):
            if len(vec) != ambient.dims[v]:
                raise QuivrepError("generator length mismatch at vertex %s" % v)
            for i, x in enumerate(vec):
                cols.rows[i][j] = field.conv(x)
        span[v] = cols.column_space()
    changed = True
    while changed:
        changed = False
        for a, s, t in ambient.algebra.quiver.arrows:
            mapped = ambient.action[a] * span[s]
            if mapped.ncols == 0:
                continue
            combined = span[t].hstack(mapped).column_space()
            if combined.ncols != span[t].ncols:
                span[t] = combined
                changed = True
    return Submodule(ambient, span)


def submodule_from_hom_image(f):
    """Image of a ModHom as a Submodule of its target."""
    basis = {v: f.blocks[v].column_space() for v in f.target.dims}
    return Submodule(f.target, basis)


def quotient(m, sub):
    """(Q, proj) for the quotient of m by the submodule."""
    if sub.ambient is not m and sub.ambient != m:
        raise QuivrepError("submodule of a different ambient module")
    q = QuotientData(m, sub.basis)
    return q.rep, q.proj


def radical(m):
    """Sum of all arrow images; the arrow-ideal action (admissible algebras)."""
    basis = {}
    for v in m.dims:
        incoming = [m.action[a] for a, _, t in m.algebra.quiver.arrows if t == v]
        if incoming:
            total = incoming[0]
            for extra in incoming[1:]:
                total = total.hstack(extra)
            basis[v] = total.column_space()
        else:
            basis[v] = Mat.zeros(m.algebra.field, m.dims[v], 0)
    return Submodule(m, basis)


def top(m):
    """The semisimple quotient M / rad M."""
    q = QuotientData(m, radical(m).basis)
    return q.rep, q.proj


def top_data(m):
    return QuotientData(m, radical(m).basis)


def socle(m):
    """Largest submodule annihilated by every arrow."""
    field = m.algebra.field
    basis = {}
    for v in m.dims:
        outgoing = [m.action[a] for a, s, _ in m.algebra.quiver.arrows if s == v]
        if not outgoing:
            basis[v] = Mat.identity(field, m.dims[v])
            continue
        stacked = outgoing[0]
        for extra in outgoing[1:]:
            stacked = stacked.vstack(extra)
        basis[v] = stacked.null_space()
    return Submodule(m, basis)


def annihilator_dimension(m):
    """(dimension, basis elements) of the annihilator of M inside Lambda.

    An element sum c_e * e annihilates M iff for every ordered vertex pair
    (s, t) the combination of the path actions s -> t vanishes.
    """
    pb = m.algebra.path_basis()
    field = m.algebra.field
    elements = pb.basis_with_sources()
    flat = []
    for w, s, t in elements:
        if m.dims[s] == 0 or m.dims[t] == 0:
            flat.append(None)  # acts as zero: no constraint
            continue
        mat = Mat.identity(field, m.dims[s]) if w == () else m.path_action(w)
        flat.append([x for row in mat.rows for x in row])
    by_pair = {}
    for idx, (w, s, t) in enumerate(elements):
        by_pair.setdefault((s, t), []).append(idx)
    eq_rows = []
    zero = field.zero()
    for (s, t), idxs in by_pair.items():
        size = m.dims[t] * m.dims[s]
        if size == 0:
            continue
        for pos in range(size):
            row = [zero] * len(elements)
            nontrivial = False
            for i in idxs:
                if flat[i] is not None and flat[i][pos] != zero:
                    row[i] = flat[i][pos]
                    nontrivial = True
            if nontrivial:
                eq_rows.append(row)
    if not eq_rows:
        basis_vecs = Mat.identity(field, len(elements))
    else:
        basis_vecs = Mat.from_rows(field, eq_rows, len(elements)).null_space()
    ann_basis = []
    for j in range(basis_vecs.ncols):
        combo = []
        for i, e in enumerate(elements):
            c = basis_vecs.rows[i][j]
            if c != zero:
                combo.append((c, e))
        ann_basis.append(combo)
    return len(ann_basis), ann_basis


def is_faithful(m):
    return annihilator_dimension(m)[0] == 0


def is_generated_by(m, gens):
    """True iff the images of the given maps generate M as a module."""
    for g in gens:
        if g.target is not m and g.target != m:
            raise QuivrepError("generator map does not land in the module")
    vectors = {v: [] for v in m.dims}
    for g in gens:
        for v in m.dims:
            for j in range(g.blocks[v].ncols):
                vectors[v].append(g.blocks[v].col(j))
    closure = submodule_closure(m, vectors)
    return all(closure.dims[v] == m.dims[v] for v in m.dims)


def restrict_to_submodule(f, sub_src, sub_tgt):
    """Restrict f to given sub-reps on both sides (solves the coordinate change)."""
    src_rep, src_incl = sub_src
    tgt_rep, tgt_incl = sub_tgt
    blocks = {}
    for v in f.blocks:
        mapped = f.blocks[v] * src_incl.blocks[v]
        sol = tgt_incl.blocks[v].solve_right(mapped)
        if sol is None:
            raise QuivrepError("map does not preserve the submodules")
        blocks[v] = sol
    return ModHom(src_rep, tgt_rep, blocks)
