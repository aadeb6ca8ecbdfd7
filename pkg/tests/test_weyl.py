"""Weyl elements, actions, stabilizers, cosets, orbits, Burnside oracle."""

from fractions import Fraction

import pytest

from lieram.errors import BoundExceeded, NotParabolic
from lieram.rootdata import build_root_system
from lieram.scalars import UnityExp, eps_pow, make_field
from lieram.weyl import (
    act_modular,
    act_torus,
    burnside_count,
    enumerate_group,
    hc_shift_vector,
    identity,
    inversion_set,
    is_reduced,
    min_coset_reps,
    orbit_partition,
    reflection_stabilizer,
    root_reflection,
    simple_reflection,
    stabilizer_bruteforce,
    word_element,
)


def test_inversion_sets():
    a2 = build_root_system("A2")
    assert inversion_set(a2, (0,)) == [(1, 0)]
    assert inversion_set(a2, (0, 1, 0)) == [(1, 0), (1, 1), (0, 1)]
    assert is_reduced(a2, (0, 1, 0))
    gam = inversion_set(a2, (0, 0))
    assert gam[1] == (-1, 0)
    assert not is_reduced(a2, (0, 0))


def test_enumerate_counts_and_length_polynomial():
    # Sum over W of t^l(w) equals prod (1 + t + ... + t^{d_i - 1}) per type
    degrees = {"A1": (2,), "A2": (2, 3), "B2": (2, 4), "G2": (2, 6),
               "A3": (2, 3, 4)}
    for t, degs in degrees.items():
        rs = build_root_system(t)
        W = enumerate_group(rs)
        assert len(W) == rs.weyl_order()
        top = sum(d - 1 for d in degs)
        got = [0] * (top + 1)
        for w in W:
            got[w.length] += 1
        # oracle: multiply the cyclotomic-like factors directly
        poly = [1]
        for d in degs:
            nxt = [0] * (len(poly) + d - 1)
            for i, c in enumerate(poly):
                for k in range(d):
                    nxt[i + k] += c
            poly = nxt
        assert got == poly
    assert len(enumerate_group(build_root_system("A1"))) == 2
    g2 = build_root_system("G2")
    assert max(w.length for w in enumerate_group(g2)) == g2.N


def test_enumerate_bound():
    with pytest.raises(BoundExceeded):
        enumerate_group(build_root_system("A3"), bound=10)


def test_reduced_words_match_length():
    b2 = build_root_system("B2")
    for w in enumerate_group(b2):
        gam = inversion_set(b2, w.word)
        assert len(gam) == w.length
        assert is_reduced(b2, w.word)


def test_word_matrix_consistency():
    g2 = build_root_system("G2")
    for w in enumerate_group(g2):
        assert word_element(g2, w.word) == w
        assert (w * w.inverse()).is_identity()


def test_act_modular_examples():
    a1 = build_root_system("A1")
    F3 = make_field(3, 1)
    s = simple_reflection(a1, 0)
    lam0 = (F3.zero(),)
    assert act_modular(s, lam0, dot=True) == (F3.from_int(1),)
    e = identity(a1)
    assert act_modular(e, lam0, dot=True) == lam0
    minus_rho = (F3.from_int(-1),)
    for w in enumerate_group(a1):
        assert act_modular(w, minus_rho, dot=True) == minus_rho


def test_dot_ordinary_compatibility_exhaustive():
    a2 = build_root_system("A2")
    F5 = make_field(5, 1)
    one = F5.one()
    W = enumerate_group(a2)
    for i in range(5):
        for j in range(5):
            lam = (F5.from_int(i), F5.from_int(j))
            lam_rho = (lam[0] + one, lam[1] + one)
            for w in W:
                lhs = act_modular(w, lam, dot=True)
                rhs = act_modular(w, lam_rho, dot=False)
                assert tuple(v + one for v in lhs) == rhs


def test_act_torus_ordinary():
    a1 = build_root_system("A1")
    s = simple_reflection(a1, 0)
    t = (UnityExp(Fraction(1, 5)),)
    assert s.act_torus_exponents(t)[0].q == Fraction(4, 5)
    e = identity(a1)
    assert e.act_torus_exponents(t) == t


def test_act_torus_dot_a1():
    # s acting by dot on exponent q gives -q - 1/5 (epsilon exponent 1/5):
    # the factor is eps^{-(rho, varpi - s varpi)} = eps^{-1}
    a1 = build_root_system("A1")
    s = simple_reflection(a1, 0)
    for num in range(10):
        q = Fraction(num, 10)
        out = act_torus(s, (UnityExp(q),), dot=True, ell=5)
        assert out[0].q == (UnityExp(-q).q - Fraction(1, 5)) % 1
        # involution
        again = act_torus(s, out, dot=True, ell=5)
        assert again[0].q == q % 1


def test_act_torus_dot_matches_direct_formula():
    # (w dot t)(K_varpi_i) = eps^{-(rho, varpi_i - w^{-1} varpi_i)} t(K_{w^{-1} varpi_i})
    rs = build_root_system("A2")
    W = enumerate_group(rs)
    ell = 5
    rho_pairs = rs.rho_weight_pairs()
    t = (UnityExp(Fraction(1, 5)), UnityExp(Fraction(3, 5)))
    for w in W:
        out = act_torus(w, t, dot=True, ell=ell)
        ordinary = w.act_torus_exponents(t)
        rows = w._torus_rows()
        for i in range(rs.rank):
            # varpi-coordinates of w^{-1} varpi_i are column i of the torus rows
            minv_coords = tuple(rows[i][j] for j in range(rs.rank))
            pairing = sum(Fraction(c) * rho_pairs[j]
                          for j, c in enumerate(minv_coords))
            diff = rho_pairs[i] - pairing  # (rho, varpi_i - w^{-1} varpi_i)
            assert diff.denominator == 1  # root-lattice element
            expect = ordinary[i] + eps_pow(-diff, ell)
            assert out[i] == expect


def test_stabilizer_bruteforce_examples():
    a2 = build_root_system("A2")
    W = enumerate_group(a2)
    F5 = make_field(5, 1)
    zero = (F5.zero(), F5.zero())
    stab = stabilizer_bruteforce(W, [zero], lambda w, x: w.act_values(x))
    assert len(stab) == len(W)

    F25 = make_field(5, 2)
    c = F25.gen_x()  # not Frobenius-fixed
    assert c.frobenius() != c
    eta = (F25.zero(), c)
    stab = stabilizer_bruteforce(W, [eta], lambda w, x: w.act_values(x))
    assert sorted(w.length for w in stab) == [0, 1]  # {e, s1}

    a1 = build_root_system("A1")
    W1 = enumerate_group(a1)
    t = (UnityExp(Fraction(1, 7)),)
    stab = stabilizer_bruteforce(
        W1, [t], lambda w, x: w.act_torus_exponents(x))
    assert len(stab) == 1


def test_reflection_stabilizer_examples():
    from lieram.rootdata import pair
    a2 = build_root_system("A2")
    assert reflection_stabilizer(a2, lambda b: True).order == 6
    g2 = build_root_system("G2")
    sub = reflection_stabilizer(g2, lambda b: b[0] % 3 == 0)
    assert sub.subsystem.type_str == "A2" and sub.order == 6
    # A1, p=3, eta(h) = 1: no root has eta(h_alpha) = 0
    a1 = build_root_system("A1")
    F3 = make_field(3, 1)
    eta = (F3.one(),)
    sub = reflection_stabilizer(a1, lambda b: pair(a1, eta, b).is_zero())
    assert sub.order == 1 and sub.subsystem.type_str == "1"


def test_reflection_subgroup_elements_match_order():
    g2 = build_root_system("G2")
    sub = reflection_stabilizer(g2, lambda b: b[0] % 3 == 0)
    els = sub.elements()
    assert len(els) == 6
    # closed under composition
    els_set = set(els)
    for a in els:
        for b in els:
            assert (a * b) in els_set


def test_root_reflection_matches_simple():
    b2 = build_root_system("B2")
    for i in range(2):
        e = tuple(1 if k == i else 0 for k in range(2))
        assert root_reflection(b2, e) == simple_reflection(b2, i)
    # s_beta is an involution permuting the roots
    for b in b2.pos_roots:
        s = root_reflection(b2, b)
        assert (s * s).is_identity()
        assert {s.apply_root(g) for g in b2.all_roots()} == set(b2.all_roots())


def test_min_coset_reps():
    a2 = build_root_system("A2")
    W = enumerate_group(a2)
    assert [w.length for w in min_coset_reps(a2, W, [0, 1])] == [0]
    reps = min_coset_reps(a2, W, [0])
    assert sorted(w.length for w in reps) == [0, 1, 2]
    b2 = build_root_system("B2")
    reps = min_coset_reps(b2, enumerate_group(b2), [0])
    assert sorted(w.length for w in reps) == [0, 1, 2, 3]
    with pytest.raises(NotParabolic):
        min_coset_reps(a2, W, [5])


def test_min_coset_reps_laws_all_parabolics():
    import itertools
    for t in ("A3", "B2", "G2"):
        rs = build_root_system(t)
        W = enumerate_group(rs)
        for k in range(rs.rank + 1):
            for par in itertools.combinations(range(rs.rank), k):
                sub = reflection_stabilizer(
                    rs, lambda b: all(c == 0 or i in par
                                      for i, c in enumerate(b)))
                reps = min_coset_reps(rs, W, par)
                assert len(reps) * sub.order == len(W)
                assert reps[0].is_identity()
                top = max(w.length for w in reps)
                assert sum(1 for w in reps if w.length == top) == 1


def test_orbit_partition_examples():
    a1 = build_root_system("A1")
    F3 = make_field(3, 1)
    pts = [(F3.from_int(k),) for k in range(3)]
    s = simple_reflection(a1, 0)
    orbits = orbit_partition(pts, [lambda x: act_modular(s, x, dot=True)],
                             key=lambda x: tuple(v.coeffs for v in x))
    assert [sorted(v[0].as_int() for v in o) for o in orbits] == [[0, 1], [2]]

    # trivial group: singletons
    orbits = orbit_partition(pts, [], key=lambda x: tuple(v.coeffs for v in x))
    assert len(orbits) == 3

    qpts = [(UnityExp(Fraction(k, 5)),) for k in range(5)]
    orbits = orbit_partition(qpts, [lambda x: s.act_torus_exponents(x)],
                             key=lambda x: tuple(e.key() for e in x))
    shapes = sorted(sorted(e[0].q for e in o) for o in orbits)
    assert shapes == [[Fraction(0)],
                      [Fraction(1, 5), Fraction(4, 5)],
                      [Fraction(2, 5), Fraction(3, 5)]]


def test_burnside_examples():
    a1 = build_root_system("A1")
    F3 = make_field(3, 1)
    pts = [(F3.from_int(k),) for k in range(3)]
    W = enumerate_group(a1)
    assert burnside_count(W, pts, lambda w, x: act_modular(w, x, dot=True)) == 2

    e = identity(a1)
    assert burnside_count((e,), pts, lambda w, x: x) == 3

    a2 = build_root_system("A2")
    F5 = make_field(5, 1)
    pts2 = [(F5.from_int(i), F5.from_int(j)) for i in range(5) for j in range(5)]
    W2 = enumerate_group(a2)
    assert burnside_count(W2, pts2,
                          lambda w, x: act_modular(w, x, dot=True)) == 7


def test_value_action_duality():
    # (w lambda)(h_beta) = lambda(h_{w^{-1} beta}) for every root, not just
    # the simples the implementation is built from
    from lieram.rootdata import pair
    for t in ("B2", "G2"):
        rs = build_root_system(t)
        F7 = make_field(7, 1)
        W = enumerate_group(rs)
        samples = [tuple(F7.from_int(k + 3 * i) for i in range(rs.rank))
                   for k in range(3)]
        for w in W:
            for v in samples:
                moved = w.act_values(v)
                for b in rs.all_roots():
                    assert pair(rs, moved, b) == pair(rs, v, w.apply_root_inv(b))


def test_torus_action_duality():
    # (w t)(K_beta) = t(K_{w^{-1} beta}) for every root
    from lieram.quantum import TorusElement, root_value
    for t in ("B2", "G2"):
        rs = build_root_system(t)
        W = enumerate_group(rs)
        pt = TorusElement(tuple(Fraction(i + 1, 7 + i) for i in range(rs.rank)))
        for w in W:
            moved = TorusElement(w.act_torus_exponents(pt.exps))
            for b in rs.all_roots():
                assert root_value(rs, moved, b) == root_value(
                    rs, pt, w.apply_root_inv(b))


def test_cartan_int_identities():
    for ts in ("A3", "B3", "C3", "F4", "G2", "D4"):
        rs = build_root_system(ts)
        for b in rs.all_roots():
            assert rs.cartan_int(b, b) == 2
            for g in rs.all_roots():
                assert abs(rs.cartan_int(b, g)) <= 3


def test_hc_shift_vector_a1():
    # (rho, varpi) = 1/2; eps_pow(1/2, 5) = 3/5 (equivalently -2/5 mod 1)
    a1 = build_root_system("A1")
    vec = hc_shift_vector(a1, 5)
    assert vec[0].q == Fraction(3, 5)
    assert vec[0].q == (Fraction(-2, 5)) % 1
