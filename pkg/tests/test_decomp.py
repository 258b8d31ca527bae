import pytest

from quivrep.decomp import (
    are_isomorphic,
    decompose,
    end_algebra,
    is_indecomposable,
    match_decompositions,
    split_indecomposable_parts,
)
from quivrep.errors import AlgebraMismatch, ZeroModule
from quivrep.ladder import build_ladder
from quivrep.linalg import GF, QQ, Mat
from quivrep.rep import ModHom, Rep, cokernel, direct_sum, hom_space
from quivrep import fixtures as fx


def test_end_algebra_simple(kronecker):
    s = Rep.simple(kronecker, "a")
    assert end_algebra(s).dim == 1


def test_end_algebra_regular(kron_regular):
    assert end_algebra(kron_regular).dim == 1


def test_end_algebra_truncation(kron_seed):
    w0, v0 = kron_seed
    lad = build_ladder(w0, v0, depth=2)
    assert end_algebra(lad.truncation(2).rep).dim == 2


def test_indecomposable_simple(kronecker):
    s = Rep.simple(kronecker, "b")
    verdict, cert = is_indecomposable(s)
    assert verdict


def test_indecomposable_zero_module(kronecker):
    with pytest.raises(ZeroModule):
        is_indecomposable(Rep.zero(kronecker))


def test_square_splits(kron_regular):
    mm = direct_sum([kron_regular, kron_regular])[0]
    verdict, cert = is_indecomposable(mm)
    assert not verdict
    assert cert[0] == "split"
    parts = cert[1]
    total = None
    for sd in parts:
        e = sd.proj.then(sd.incl)
        total = e if total is None else total + e
    assert total == ModHom.identity(mm)


def test_truncations_indecomposable(kron_seed):
    w0, v0 = kron_seed
    lad = build_ladder(w0, v0, depth=4)
    for n in range(1, 5):
        verdict, _ = is_indecomposable(lad.truncation(n).rep)
        assert verdict


def test_decompose_indecomposable(kron_regular):
    assert decompose(kron_regular) == [(kron_regular, 1)]


def test_decompose_split_ladder(kron_seed, kron_regular):
    w0, _ = kron_seed
    lad = build_ladder(w0, w0.scale(QQ.conv(2)), depth=3)
    parts = decompose(lad.truncation(3).rep)
    assert len(parts) == 1
    rep_part, mult = parts[0]
    assert mult == 3
    assert are_isomorphic(rep_part, kron_regular).verdict == "isomorphic"


def test_decompose_d4_u2(d4_seed):
    w0, v0 = d4_seed
    lad = build_ladder(w0, v0, depth=2)
    parts = decompose(lad.modules[2])
    vecs = sorted(tuple(r.dims[v] for v in ("a", "b", "c", "d")) for r, _ in parts)
    assert vecs == [(1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)]
    assert all(m == 1 for _, m in parts)


def test_decompose_krs_consistency(kron_regular, kron_projectives):
    pa, pb = kron_projectives
    m = direct_sum([kron_regular, pa])[0]
    n = direct_sum([pb, kron_regular])[0]
    mn = direct_sum([m, n])[0]
    whole = decompose(mn)
    counts = {}
    for part in (m, n):
        for r, mult in decompose(part):
            key = tuple(sorted(r.dims.items()))
            counts[key] = counts.get(key, 0) + mult
    got = {tuple(sorted(r.dims.items())): mult for r, mult in whole}
    assert got == counts


def test_number_field_brick(kronecker):
    # End is the field Q adjoined a square root of -1: indecomposable, but
    # only the primitive-element certificate can see it
    m = Rep(
        kronecker,
        {"a": 2, "b": 2},
        {
            "alpha": Mat(QQ, [[1, 0], [0, 1]]),
            "beta": Mat(QQ, [[0, -1], [1, 0]]),
        },
    )
    verdict, cert = is_indecomposable(m)
    assert verdict
    assert cert[0] == "local-residue-field"
    mm = direct_sum([m, m])[0]
    parts = decompose(mm)
    assert len(parts) == 1 and parts[0][1] == 2


def test_are_isomorphic_self(kron_regular):
    out = are_isomorphic(kron_regular, kron_regular)
    assert out.verdict == "isomorphic"
    assert out.witness == ModHom.identity(kron_regular)


def test_are_isomorphic_mismatch(kronecker, three_kron):
    with pytest.raises(AlgebraMismatch):
        are_isomorphic(Rep.simple(kronecker, "a"), Rep.simple(three_kron, "a"))


def test_are_isomorphic_dimension_refutation(kron_projectives):
    pa, pb = kron_projectives
    out = are_isomorphic(pa, pb)
    assert out.verdict == "not-isomorphic"
    assert "dimension" in out.refutation


def test_warning_pair_verdicts(warning_data, three_kron):
    h, ph, q, omega, w, f, g = warning_data
    ladf = build_ladder(w, f, depth=3)
    ladg = build_ladder(w, g, depth=3)
    out2 = are_isomorphic(ladf.truncation(2).rep, ladg.truncation(2).rep)
    assert out2.verdict == "isomorphic"
    assert out2.witness.is_isomorphism()
    out3 = are_isomorphic(ladf.truncation(3).rep, ladg.truncation(3).rep)
    assert out3.verdict == "not-isomorphic"
    assert "annihilator" in out3.refutation


def test_are_isomorphic_gf_exhaustive():
    alg = fx.kronecker(GF(2))
    from quivrep.algebra import projective

    pa, _ = projective(alg, "a")
    pb, _ = projective(alg, "b")
    homs = hom_space(pb, pa)
    h1 = cokernel(homs[0])[0]
    h2 = cokernel(homs[1])[0]
    out = are_isomorphic(h1, h2)
    # the two non-isomorphic regular length-2 modules at different points
    assert out.verdict in ("isomorphic", "not-isomorphic")
    assert are_isomorphic(h1, h1).verdict == "isomorphic"


def test_symmetry(kron_regular, kron_projectives):
    pa, _ = kron_projectives
    assert (
        are_isomorphic(kron_regular, pa).verdict
        == are_isomorphic(pa, kron_regular).verdict
    )


def test_decompose_d4_over_gf3():
    alg = fx.d4_subspace(GF(3))
    w0, v0 = fx.d4_seed(alg, q_scalar=2)
    from quivrep.ladder import build_ladder

    lad = build_ladder(w0, v0, depth=2)
    parts = decompose(lad.modules[2])
    vecs = sorted(tuple(r.dims[v] for v in ("a", "b", "c", "d")) for r, _ in parts)
    assert vecs == [(1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)]
    for r, mult in parts:
        assert mult == 1
        assert is_indecomposable(r)[0]


def test_match_decompositions(kron_regular, kron_projectives):
    pa, pb = kron_projectives
    m = direct_sum([kron_regular, pa, pb])[0]
    n = direct_sum([pb, kron_regular, pa])[0]
    witness = match_decompositions(m, n)
    assert witness is not None and witness.is_isomorphism()


def test_split_parts_idempotents(kron_regular, kron_projectives):
    pa, _ = kron_projectives
    m = direct_sum([kron_regular, pa, kron_regular])[0]
    parts = split_indecomposable_parts(m)
    assert len(parts) == 3
    for sd in parts:
        assert sd.incl.then(sd.proj) == ModHom.identity(sd.rep)
