"""Weyl group elements, actions, stabilizers, cosets and orbit machinery.

An element is stored as the integer matrix of its action on simple-root
coordinates together with the inverse matrix; words are kept for display and
are not canonicalized (equality is matrix equality).

Actions implemented on raw coordinate tuples:
  * roots            beta -> w(beta)                 (coefficient vectors)
  * coroot values    lambda(h_i) -> (w lambda)(h_i)  (any coefficient ring)
  * torus exponents  t(K_{varpi_i}) -> (w t)(K_{varpi_i})

The dot actions are the rho-shifted (modular) and Harish-Chandra-conjugated
(quantum) versions; see act_modular / act_torus.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BoundExceeded, NotParabolic
from .rootdata import RootSystem, subsystem_classify
from .scalars import UnityExp, eps_pow

DEFAULT_GROUP_BOUND = 10**6


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


class WeylElement:
    __slots__ = ("rs", "M", "Minv", "word", "_length", "_vrows", "_trows")

    def __init__(self, rs, M, Minv, word):
        self.rs = rs
        self.M = M
        self.Minv = Minv
        self.word = word
        self._length = None
        self._vrows = None
        self._trows = None

    def apply_root(self, b):
        M = self.M
        r = self.rs.rank
        return tuple(sum(M[i][j] * b[j] for j in range(r)) for i in range(r))

    def apply_root_inv(self, b):
        M = self.Minv
        r = self.rs.rank
        return tuple(sum(M[i][j] * b[j] for j in range(r)) for i in range(r))

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = sum(
                1 for b in self.rs.pos_roots if min(self.apply_root(b)) < 0
            )
        return self._length

    def inverse(self):
        return WeylElement(self.rs, self.Minv, self.M, tuple(reversed(self.word)))

    def __mul__(self, other):
        return WeylElement(
            self.rs,
            _matmul(self.M, other.M),
            _matmul(other.Minv, self.Minv),
            self.word + other.word,
        )

    def _value_rows(self):
        # row i = coroot coefficients of w^{-1}(alpha_i)
        if self._vrows is None:
            r = self.rs.rank
            self._vrows = tuple(
                self.rs.coroot(tuple(self.Minv[k][i] for k in range(r)))
                for i in range(r)
            )
        return self._vrows

    def act_values(self, values):
        """(w lambda)(h_i) from lambda's values on the basis coroots."""
        rows = self._value_rows()
        out = []
        for row in rows:
            acc = None
            for c, v in zip(row, values):
                term = v * c
                acc = term if acc is None else acc + term
            out.append(acc)
        return tuple(out)

    def _torus_rows(self):
        # row i, column j = coroot coefficients of w(alpha_j), coordinate i
        if self._trows is None:
            r = self.rs.rank
            cols = [self.rs.coroot(tuple(self.M[k][j] for k in range(r)))
                    for j in range(r)]
            self._trows = tuple(tuple(cols[j][i] for j in range(r))
                                for i in range(r))
        return self._trows

    def act_torus_exponents(self, qs):
        """(w t)(K_{varpi_i}) = t(K_{w^{-1} varpi_i}) on exponent vectors."""
        rows = self._torus_rows()
        return tuple(
            UnityExp(sum(Fraction(c) * q.q for c, q in zip(row, qs)))
            for row in rows
        )

    def is_identity(self):
        return self.M == _identity_matrix(self.rs.rank)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.M == other.M

    def __hash__(self):
        return hash(self.M)

    def __repr__(self):
        w = "".join(f"s{i + 1}" for i in self.word) if self.word else "e"
        return f"W[{w}]"


def identity(rs: RootSystem) -> WeylElement:
    m = _identity_matrix(rs.rank)
    return WeylElement(rs, m, m, ())


def simple_reflection(rs: RootSystem, j: int) -> WeylElement:
    """s_j (0-based index)."""
    r = rs.rank
    rows = []
    for k in range(r):
        if k != j:
            rows.append(tuple(1 if i == k else 0 for i in range(r)))
        else:
            rows.append(tuple((1 if i == j else 0) - rs.cartan[j][i] for i in range(r)))
    m = tuple(rows)
    return WeylElement(rs, m, m, (j,))


def root_reflection(rs: RootSystem, beta) -> WeylElement:
    """s_beta for any root beta."""
    r = rs.rank
    cv = rs.coroot(beta)
    pairings = [sum(cv[t] * rs.cartan[t][i] for t in range(r))  # alpha_i(h_beta)
                for i in range(r)]
    m = tuple(
        tuple((1 if i == k else 0) - pairings[i] * beta[k] for i in range(r))
        for k in range(r)
    )
    word = _word_for_reflection(rs, beta)
    return WeylElement(rs, m, m, word)


def _word_for_reflection(rs, beta):
    # s_beta = w s_i w^{-1} via descent: peel simple reflections off beta
    b = beta if rs.is_positive(beta) else tuple(-c for c in beta)
    prefix = []
    while True:
        if sum(b) == 1:
            i = b.index(1)
            return tuple(prefix) + (i,) + tuple(reversed(prefix))
        for i in range(rs.rank):
            pairing = sum(rs.cartan[i][j] * b[j] for j in range(rs.rank))
            if pairing > 0 and b != tuple(1 if k == i else 0 for k in range(rs.rank)):
                nb = rs.reflect(i, b)
                if rs.is_positive(nb) and sum(nb) < sum(b):
                    prefix.append(i)
                    b = nb
                    break
        else:
            raise AssertionError("descent must exist for a positive root")


def word_element(rs: RootSystem, word) -> WeylElement:
    w = identity(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    return WeylElement(rs, w.M, w.Minv, tuple(word))


def inversion_set(rs: RootSystem, word):
    """gamma_k = s_{i1}...s_{i(k-1)}(alpha_{ik}) for k = 1..len(word).

    The word is reduced iff all gamma_k are positive and pairwise distinct;
    the set then equals Phi+ inter w(Phi-).
    """
    out = []
    prefix = identity(rs)
    for i in word:
        alpha = tuple(1 if k == i else 0 for k in range(rs.rank))
        out.append(prefix.apply_root(alpha))
        prefix = prefix * simple_reflection(rs, i)
    return out


def is_reduced(rs: RootSystem, word) -> bool:
    gammas = inversion_set(rs, word)
    return (all(rs.is_positive(g) for g in gammas)
            and len(set(gammas)) == len(gammas))


def enumerate_group(rs: RootSystem, bound: int = DEFAULT_GROUP_BOUND):
    """All Weyl group elements by breadth-first closure over the generators."""
    order = rs.weyl_order()
    if order > bound:
        raise BoundExceeded(f"|W| = {order} exceeds bound {bound}")
    gens = [simple_reflection(rs, j) for j in range(rs.rank)]
    e = identity(rs)
    seen = {e.M: e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for j, g in enumerate(gens):
                nw = WeylElement(rs, _matmul(g.M, w.M), _matmul(w.Minv, g.M),
                                 (j,) + w.word)
                if nw.M not in seen:
                    seen[nw.M] = nw
                    nxt.append(nw)
        frontier = nxt
    assert len(seen) == order
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))


def act_modular(w: WeylElement, values, dot: bool = False):
    """Weyl action on coroot-value vectors; dot variant is w(x + rho) - rho."""
    if not dot:
        return w.act_values(values)
    one = None
    for v in values:
        one = v.field.one()
        break
    shifted = tuple(v + one for v in values)
    moved = w.act_values(shifted)
    return tuple(v - one for v in moved)


def hc_shift_vector(rs: RootSystem, ell: int, eps: int = 1):
    """Exponent shift between baby-Verma and component torus coordinates.

    Coordinate i shifts by eps_pow((rho, varpi_i), ell); the forward direction
    (highest-weight label to component label) adds it.
    """
    return tuple(eps_pow(q, ell, eps) for q in rs.rho_weight_pairs())


def act_torus(w: WeylElement, qs, dot: bool = False, ell: int = None, eps: int = 1,
              rs: RootSystem = None):
    """Weyl action on torus exponent vectors; dot variant conjugates by the
    Harish-Chandra shift (requires ell)."""
    if not dot:
        return w.act_torus_exponents(qs)
    rs = rs or w.rs
    shift = hc_shift_vector(rs, ell, eps)
    shifted = tuple(q + s for q, s in zip(qs, shift))
    moved = w.act_torus_exponents(shifted)
    return tuple(q - s for q, s in zip(moved, shift))


class ReflectionSubgroup:
    """Subgroup generated by the reflections of a closed root subset."""

    __slots__ = ("rs", "pos_roots", "subsystem", "_elements")

    def __init__(self, rs, pos_roots, subsystem):
        self.rs = rs
        self.pos_roots = pos_roots
        self.subsystem = subsystem
        self._elements = None

    @property
    def order(self) -> int:
        return self.subsystem.order

    def elements(self, bound: int = DEFAULT_GROUP_BOUND):
        if self.order > bound:
            raise BoundExceeded(f"subgroup order {self.order} exceeds bound {bound}")
        if self._elements is None:
            gens = [root_reflection(self.rs, b) for b in self.subsystem.basis]
            e = identity(self.rs)
            seen = {e.M: e}
            frontier = [e]
            while frontier:
                nxt = []
                for w in frontier:
                    for g in gens:
                        nw = g * w
                        if nw.M not in seen:
                            seen[nw.M] = nw
                            nxt.append(nw)
                frontier = nxt
            assert len(seen) == self.order
            self._elements = tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))
        return self._elements

    def __repr__(self):
        return f"ReflectionSubgroup({self.subsystem.type_str}, |W|={self.order})"


def reflection_stabilizer(rs: RootSystem, predicate) -> ReflectionSubgroup:
    """<s_beta : predicate(beta)> with the classified subsystem it comes from."""
    sat = tuple(b for b in rs.pos_roots if predicate(b))
    roots = frozenset(sat) | frozenset(tuple(-c for c in b) for b in sat)
    sub = subsystem_classify(rs, roots)
    return ReflectionSubgroup(rs, sat, sub)


def stabilizer_bruteforce(elements, points, act):
    """Exact stabilizer {w : w.x = x for all x in points}; oracle path."""
    return tuple(w for w in elements
                 if all(act(w, x) == x for x in points))


def min_coset_reps(rs: RootSystem, elements, parabolic_indices):
    """Minimal-length coset representatives for the standard parabolic
    generated by the given simple reflections (0-based indices)."""
    for j in parabolic_indices:
        if not (0 <= j < rs.rank):
            raise NotParabolic(f"generator index {j} is not a simple root index")
    simples = [tuple(1 if k == j else 0 for k in range(rs.rank))
               for j in parabolic_indices]
    reps = [w for w in elements
            if all(rs.is_positive(w.apply_root(a)) for a in simples)]
    return sorted(reps, key=lambda w: (w.length, w.word))


def orbit_of(point, gen_actions):
    """Full orbit of a point under the group generated by the given actions."""
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for x in frontier:
            for act in gen_actions:
                y = act(x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def orbit_partition(points, gen_actions, key):
    """Partition points into orbits; deterministic canonical representatives.

    Each orbit is sorted by `key` and the orbit list is sorted by the key of
    its representative (the minimum).  Points outside `points` reached by the
    action are ignored for membership but used for transport.
    """
    pointset = set(points)
    unseen = set(points)
    orbits = []
    for x in sorted(points, key=key):
        if x not in unseen:
            continue
        orb = orbit_of(x, gen_actions)
        cls = sorted((y for y in orb if y in pointset), key=key)
        for y in cls:
            unseen.discard(y)
        orbits.append(cls)
    orbits.sort(key=lambda cls: key(cls[0]))
    return orbits


def burnside_count(elements, points, act) -> int:
    """Independent orbit-count oracle: average number of fixed points."""
    pointlist = list(points)
    total = 0
    for w in elements:
        total += sum(1 for x in pointlist if act(w, x) == x)
    assert total % len(elements) == 0, "Burnside sum must divide evenly"
    return total // len(elements)
