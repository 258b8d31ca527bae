import random

import pytest

from quivrep.decomp import are_isomorphic
from quivrep.degen import (
    check_rz,
    co_rz,
    cokernel_degeneration,
    eventual_splitting,
    make_steering_nilpotent,
    power_degeneration,
    rigid_cokernel_iso,
    rz_to_prufer,
    split_iff_split,
    steering_combinations_split,
)
from quivrep.errors import BelowIndex, NotExact, NotNilpotent, NotRigid
from quivrep.ladder import build_ladder
from quivrep.linalg import QQ, Mat
from quivrep.rep import ModHom, Rep, cokernel, direct_sum, hom_space
from quivrep.squares import is_split_mono
from quivrep import fixtures as fx


def _split_mono_rz(kronecker, kron_projectives, kron_regular):
    """The split-mono example: 0 -> U0 -> U0 + X -> coker -> 0."""
    pa, pb = kron_projectives
    mid, injs, projs = direct_sum([pa, pb])  # X = P(a), U = P(b)
    g = hom_space(pb, pa)[0]
    mono = g.then(injs[0])  # [g; 0] with zero steering
    y, proj = cokernel(mono)
    return check_rz(pb, pa, y, mono, proj)


def test_check_rz_trivial(kronecker, kron_projectives):
    pa, _ = kron_projectives
    zero = Rep.zero(kronecker)
    mid, injs, projs = direct_sum([pa, zero])
    rz = check_rz(zero, pa, pa, ModHom.zero_hom(zero, mid), projs[0])
    assert rz.nilpotency_index() == 0


def test_check_rz_split_mono_example(kronecker, kron_projectives, kron_regular):
    rz = _split_mono_rz(kronecker, kron_projectives, kron_regular)
    assert rz.nilpotency_index() == 1
    assert rz.steering.is_zero()


def test_check_rz_rejects_non_exact(kronecker, kron_projectives):
    pa, pb = kron_projectives
    mid, injs, projs = direct_sum([pa, pb])
    with pytest.raises(NotExact):
        check_rz(pb, pa, pa, ModHom.zero_hom(pb, mid), projs[0])


def test_make_steering_nilpotent_keeps_nilpotent(kronecker, kron_projectives, kron_regular):
    rz = _split_mono_rz(kronecker, kron_projectives, kron_regular)
    rz2 = make_steering_nilpotent(rz)
    assert rz2.u.dims == rz.u.dims
    assert rz2.nilpotency_index() is not None


def test_make_steering_nilpotent_invertible_steering(kronecker, kron_projectives):
    pa, pb = kron_projectives
    mid, injs, projs = direct_sum([pa, pb])
    mono = ModHom.identity(pb).then(injs[1])  # [0; 1]: invertible steering
    y, proj = cokernel(mono)
    assert y.dims == pa.dims
    rz = check_rz(pb, pa, y, mono, proj)
    assert rz.nilpotency_index() is None
    rz2 = make_steering_nilpotent(rz)
    assert rz2.u.is_zero()
    assert are_isomorphic(rz2.y, rz2.x).verdict == "isomorphic"


def test_make_steering_nilpotent_mixed_blocks(kronecker, kron_projectives, kron_regular):
    # block-diagonal steering: one nilpotent part (P(b) -> P(b) zero) and one
    # invertible part (identity on H)
    pa, pb = kron_projectives
    h = kron_regular
    from quivrep.rep import hom_from_blocks

    u_sum = direct_sum([pb, h])
    u = u_sum[0]
    mid, injs, projs = direct_sum([pa, u])
    # steering: zero on P(b), identity on H
    phi = hom_from_blocks(u_sum, u_sum, {(1, 1): ModHom.identity(h)})
    g0 = hom_space(pb, pa)[0]
    g = hom_from_blocks(u_sum, (pa, [ModHom.identity(pa)], [ModHom.identity(pa)]), {(0, 0): g0})
    mono = g.then(injs[0]) + phi.then(injs[1])
    assert mono.is_injective()
    y, proj = cokernel(mono)
    rz = check_rz(u, pa, y, mono, proj)
    assert rz.nilpotency_index() is None
    rz2 = make_steering_nilpotent(rz)
    assert rz2.u.dims == pb.dims  # the invertible H-block is cancelled
    assert rz2.nilpotency_index() is not None


def test_rz_to_prufer_zero_steering_module(kronecker, kron_projectives):
    pa, _ = kron_projectives
    zero = Rep.zero(kronecker)
    mid, injs, projs = direct_sum([pa, zero])
    rz = check_rz(zero, pa, pa, ModHom.zero_hom(zero, mid), projs[0])
    cert = rz_to_prufer(rz, depth=3)
    for n in range(1, 4):
        yn = cert.truncation(n).rep
        xn = direct_sum([pa] * n)[0] if n > 1 else pa
        assert are_isomorphic(yn, xn).verdict == "isomorphic"


def test_rz_to_prufer_requires_nilpotent(kronecker, kron_projectives):
    pa, pb = kron_projectives
    mid, injs, projs = direct_sum([pa, pb])
    mono = ModHom.identity(pb).then(injs[1])
    y, proj = cokernel(mono)
    rz = check_rz(pb, pa, y, mono, proj)
    with pytest.raises(NotNilpotent):
        rz_to_prufer(rz)


def test_eventual_splitting_chain(kronecker, kron_projectives, kron_regular):
    rz = _split_mono_rz(kronecker, kron_projectives, kron_regular)
    cert = rz_to_prufer(rz, depth=5)
    assert cert.index == 1
    with pytest.raises(BelowIndex):
        eventual_splitting(cert, 0)
    for n in range(1, 5):
        omega = eventual_splitting(cert, n)
        assert omega.is_isomorphism()
        target = direct_sum([cert.truncation(n).rep, rz.x])[0]
        assert omega.source == target
        assert omega.target == cert.truncation(n + 1).rep


def test_power_degeneration_stages(kronecker, kron_projectives, kron_regular):
    rz = _split_mono_rz(kronecker, kron_projectives, kron_regular)
    cert = rz_to_prufer(rz, depth=4)
    for n in (2, 3):
        stage = power_degeneration(cert, n)
        assert stage.u == rz.u
        assert stage.y == cert.truncation(n).rep


def test_co_rz_shape(kronecker, kron_projectives, kron_regular):
    rz = _split_mono_rz(kronecker, kron_projectives, kron_regular)
    cert = rz_to_prufer(rz, depth=4)
    dual = co_rz(cert)
    yt = cert.truncation(cert.index).rep
    assert dual.a == rz.y
    assert dual.c == yt
    assert dual.b == direct_sum([yt, rz.x])[0]


def test_steering_combinations(kronecker, kron_projectives, kron_regular):
    rz = _split_mono_rz(kronecker, kron_projectives, kron_regular)
    combos = steering_combinations_split(rz)
    assert combos == {0: True, 1: True, -1: True, 2: True}


def test_cokernel_degeneration_equal_seeds(d4, d4_seed):
    w0, _ = d4_seed
    rz, n0 = cokernel_degeneration(w0, w0)
    w_mod = cokernel(w0)[0]
    assert are_isomorphic(rz.y, w_mod).verdict == "isomorphic"
    assert n0 <= 2


def test_cokernel_degeneration_d4(d4, d4_seed):
    w0, v0 = d4_seed
    rz, n0 = cokernel_degeneration(w0, v0)
    assert n0 == 2
    w_mod = cokernel(w0)[0]
    wp_mod = cokernel(v0)[0]
    assert rz.x == w_mod
    assert rz.u.dims == {"a": 3, "b": 2, "c": 2, "d": 2}
    assert are_isomorphic(rz.y, wp_mod).verdict == "isomorphic"


def test_cokernel_degeneration_not_rigid(kron_seed):
    w0, v0 = kron_seed
    with pytest.raises(NotRigid):
        cokernel_degeneration(w0, v0)


def test_rigid_cokernel_iso_identity(d4_seed):
    w0, _ = d4_seed
    witness = rigid_cokernel_iso(w0, w0)
    assert witness.is_isomorphism()


def test_rigid_cokernel_iso_hereditary_projective(kron_projectives, kronecker):
    # two split monos P(b) -> P(b) + P(a) with the same rigid cokernel P(a)
    pa, pb = kron_projectives
    s, injs, projs = direct_sum([pb, pa])
    w = injs[0]
    v = injs[0].scale(QQ.conv(3))
    witness = rigid_cokernel_iso(w, v)
    assert witness.is_isomorphism()
    assert witness.source.dims == pa.dims


def test_rigid_cokernel_iso_d4_reports_failing_side(d4_seed):
    w0, v0 = d4_seed
    with pytest.raises(NotRigid) as err:
        rigid_cokernel_iso(w0, v0)
    assert "coker(v0)" in str(err.value)


def test_split_iff_split_trivial_cases(kron_projectives, kronecker):
    pa, pb = kron_projectives
    s, injs, _ = direct_sum([pb, pa])
    w = injs[0]
    assert split_iff_split(w, w) == (True, True)


def test_split_iff_split_nonsplit(d4_seed):
    w0, _ = d4_seed
    assert split_iff_split(w0, w0) == (False, False)


def test_split_iff_split_not_rigid(kron_seed):
    w0, v0 = kron_seed
    with pytest.raises(NotRigid):
        split_iff_split(w0, v0)


def test_pipeline_over_prime_field():
    # the whole certificate stack is field agnostic; run it over GF(3)
    import random as _random

    from quivrep.linalg import GF
    from quivrep.suites import _random_module, _random_mono

    alg = fx.kronecker(GF(3))
    rng = _random.Random(5)
    done = 0
    while done < 3:
        u = _random_module(alg, rng, 2)
        x = _random_module(alg, rng, 2)
        if u.total_dim() == 0:
            continue
        mid, injs, projs = direct_sum([x, u])
        mono = _random_mono(u, mid, rng)
        if mono is None:
            continue
        y, proj = cokernel(mono)
        rz = make_steering_nilpotent(check_rz(u, x, y, mono, proj))
        cert = rz_to_prufer(rz, depth=4)
        for n in range(cert.index, 4):
            assert eventual_splitting(cert, n).is_isomorphism()
        assert co_rz(cert).exactness_failure() is None
        done += 1


def test_corollary_chain_witnesses(kronecker, kron_projectives, kron_regular):
    # Y[n] ~ Y[t] + X^(n-t) with an explicit composed isomorphism
    from quivrep.rep import hom_from_blocks

    rz = _split_mono_rz(kronecker, kron_projectives, kron_regular)
    cert = rz_to_prufer(rz, depth=5)
    t = cert.index
    parts = [cert.truncation(t).rep]
    psi = ModHom.identity(parts[0])
    for k in range(t, 5):
        omega = eventual_splitting(cert, k)
        src_parts = parts + [rz.x]
        src = direct_sum(src_parts)
        mid = direct_sum([cert.truncation(k).rep, rz.x])
        old = direct_sum(parts) if len(parts) > 1 else (parts[0], [ModHom.identity(parts[0])], [ModHom.identity(parts[0])])
        blocks = {}
        for j in range(len(parts)):
            blocks[(0, j)] = old[1][j].then(psi)
        blocks[(1, len(parts))] = ModHom.identity(rz.x)
        step = hom_from_blocks(src, mid, blocks)
        psi = step.then(omega)
        parts = src_parts
        assert psi.is_isomorphism()
        assert psi.target == cert.truncation(k + 1).rep


def test_once_split_always_split_d4(d4_seed):
    w0, v0 = d4_seed
    lad = build_ladder(w0, v0, depth=4)
    flags = [is_split_mono(w) is not None for w in lad.w_maps]
    assert flags == [False, False, True, True]
