"""Semisimple root systems in the simply-connected convention.

Roots are integer coefficient tuples on the simple roots; coroots are integer
coefficient tuples on the simple coroots.  The Cartan matrix follows the
convention C[i][j] = alpha_j(h_i) = <alpha_j, alpha_i^vee>, so a simple
reflection s_j acts on coroot-value vectors by v_i -> v_i - C[i][j]*v_j.

Node numbering is Bourbaki throughout:

  A_r   1-2-...-r
  B_r   1-2-...-(r-1)=>r          (alpha_r short)
  C_r   1-2-...-(r-1)<=r          (alpha_r long)
  D_r   1-...-(r-2) forking to (r-1) and r
  E_r   chain 1-3-4-5-6(-7)(-8) with 2 attached to 4
  F_4   1-2=>3-4                  (alpha_1, alpha_2 long)
  G_2   1≡2                       (alpha_1 short)

Products are written A1xB2 (case-insensitive, no whitespace).
"""

from __future__ import annotations

import functools
import math
import re
from fractions import Fraction

from .errors import InvalidType, NotClosed

_TYPE_RE = re.compile(r"([A-G])(\d+)")

WEYL_ORDERS = {
    "A": lambda n: math.factorial(n + 1),
    "B": lambda n: 2**n * math.factorial(n),
    "C": lambda n: 2**n * math.factorial(n),
    "D": lambda n: 2 ** (n - 1) * math.factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}

POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

INDEX_OF_CONNECTION = {
    "A": lambda n: n + 1,
    "B": lambda n: 2,
    "C": lambda n: 2,
    "D": lambda n: 4,
    "E": lambda n: {6: 3, 7: 2, 8: 1}[n],
    "F": lambda n: 1,
    "G": lambda n: 1,
}

BAD_PRIMES = {
    "A": (),
    "B": (2,),
    "C": (2,),
    "D": (2,),
    "E": (2, 3),  # E8 additionally excludes 5, handled below
    "F": (2, 3),
    "G": (2, 3),
}


def parse_cartan_type(s: str):
    """Parse 'A2', 'b3', 'A1xA1', ... into a tuple of (letter, rank) pairs."""
    if not s:
        raise InvalidType("empty Cartan type")
    comps = []
    for part in s.strip().split("x"):
        m = _TYPE_RE.fullmatch(part.strip().upper())
        if not m:
            raise InvalidType(f"cannot parse component {part!r}")
        letter, rank = m.group(1), int(m.group(2))
        comps.append(_validate_component(letter, rank))
    return tuple(comps)


def _validate_component(letter, rank):
    if letter == "A" and rank >= 1:
        return (letter, rank)
    if letter in ("B", "C"):
        if rank == 1:
            return ("A", 1)
        if rank >= 2:
            return (letter, rank)
    if letter == "D" and rank >= 2:
        return (letter, rank)
    if letter == "E" and rank in (6, 7, 8):
        return (letter, rank)
    if letter == "F" and rank == 4:
        return (letter, rank)
    if letter == "G" and rank == 2:
        return (letter, rank)
    raise InvalidType(f"invalid component {letter}{rank}")


def type_string(comps) -> str:
    return "x".join(f"{letter}{rank}" for letter, rank in comps) if comps else "1"


def _component_edges(letter, rank):
    """Edges (i, j, bond) with 0-based local nodes, plus symmetrizers d."""
    edges = []
    d = [1] * rank
    if letter == "A":
        edges = [(i, i + 1, 1) for i in range(rank - 1)]
    elif letter == "B":
        edges = [(i, i + 1, 1) for i in range(rank - 2)] + [(rank - 2, rank - 1, 2)]
        d = [2] * (rank - 1) + [1]
    elif letter == "C":
        edges = [(i, i + 1, 1) for i in range(rank - 2)] + [(rank - 2, rank - 1, 2)]
        d = [1] * (rank - 1) + [2]
    elif letter == "D":
        edges = [(i, i + 1, 1) for i in range(rank - 3)]
        if rank >= 3:
            edges += [(rank - 3, rank - 2, 1), (rank - 3, rank - 1, 1)]
    elif letter == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        edges = [(chain[i], chain[i + 1], 1) for i in range(len(chain) - 1)]
        edges.append((1, 3, 1))
    elif letter == "F":
        edges = [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
        d = [2, 2, 1, 1]
    elif letter == "G":
        edges = [(0, 1, 3)]
        d = [1, 3]
    return edges, d


def _cartan_from_edges(rank, edges, d):
    C = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, _bond in edges:
        # C[i][j] = (alpha_i, alpha_j) / d_i with (alpha_i, alpha_j) = -max(d_i, d_j)
        s = -max(d[i], d[j])
        C[i][j] = s // d[i]
        C[j][i] = s // d[j]
    return C


class RootSystem:
    """Immutable container for the combinatorial data of a root system."""

    def __init__(self, comps):
        self.ctype = comps
        self.type_str = type_string(comps)
        blocks = [(_component_edges(l, n), n) for l, n in comps]
        self.rank = sum(n for _, n in blocks)
        r = self.rank
        C = [[0] * r for _ in range(r)]
        d = []
        comp_nodes = []
        off = 0
        for (edges, dc), n in blocks:
            local = _cartan_from_edges(n, edges, dc)
            for i in range(n):
                for j in range(n):
                    C[off + i][off + j] = local[i][j]
            d.extend(dc)
            comp_nodes.append(tuple(range(off, off + n)))
            off += n
        self.cartan = tuple(tuple(row) for row in C)
        self.d = tuple(d)
        self.components = tuple(
            (l, n, comp_nodes[k]) for k, (l, n) in enumerate(comps)
        )
        self._build_roots()
        self._rho_weight_pairs = None

    # -- construction -------------------------------------------------------

    def _build_roots(self):
        r = self.rank
        C = self.cartan
        simple = [tuple(1 if i == j else 0 for j in range(r)) for i in range(r)]
        pos = set(simple)
        by_height = {1: list(simple)}
        h = 1
        while by_height.get(h):
            nxt = []
            for b in by_height[h]:
                for i in range(r):
                    # root string through b in direction alpha_i
                    back = 0
                    cur = b
                    while True:
                        cur = tuple(c - (1 if k == i else 0) for k, c in enumerate(cur))
                        if cur in pos:
                            back += 1
                        else:
                            break
                    pairing = sum(C[i][j] * b[j] for j in range(r))
                    if back - pairing > 0:
                        cand = tuple(c + (1 if k == i else 0) for k, c in enumerate(b))
                        if cand not in pos:
                            pos.add(cand)
                            nxt.append(cand)
            h += 1
            if nxt:
                by_height[h] = nxt
        self.pos_roots = tuple(sorted(pos, key=lambda b: (sum(b), b)))
        self.N = len(self.pos_roots)
        self._posset = frozenset(self.pos_roots)
        self._allset = self._posset | frozenset(self._neg(b) for b in self.pos_roots)
        # norms and coroots
        S = [[self.d[i] * self.cartan[i][j] for j in range(r)] for i in range(r)]
        self._norm = {}
        self._coroot = {}
        for b in self.pos_roots:
            nb2 = sum(b[i] * b[j] * S[i][j] for i in range(r) for j in range(r))
            assert nb2 % 2 == 0
            db = nb2 // 2
            cv = []
            for i in range(r):
                num = self.d[i] * b[i]
                assert num % db == 0
                cv.append(num // db)
            self._norm[b] = db
            self._coroot[b] = tuple(cv)
        # highest root per component
        self._highest = []
        a = [0] * r
        for letter, n, nodes in self.components:
            nodeset = set(nodes)
            comp_pos = [b for b in self.pos_roots
                        if set(k for k in range(r) if b[k]) <= nodeset]
            assert len(comp_pos) == POSITIVE_COUNTS[letter](n)
            mx = [b for b in comp_pos
                  if all(self.leq(c, b) for c in comp_pos)]
            assert len(mx) == 1, "unique maximal root per component"
            self._highest.append(mx[0])
            for k in nodes:
                a[k] = mx[0][k]
        self.a = tuple(a)

    @staticmethod
    def _neg(b):
        return tuple(-c for c in b)

    # -- queries -------------------------------------------------------------

    def is_root(self, b) -> bool:
        return b in self._allset

    def is_positive(self, b) -> bool:
        return b in self._posset

    def all_roots(self):
        return self._allset

    def coroot(self, b):
        """Coefficients of beta^vee on the simple coroots."""
        if b in self._coroot:
            return self._coroot[b]
        nb = self._neg(b)
        return tuple(-c for c in self._coroot[nb])

    def norm(self, b) -> int:
        """(beta, beta)/2 with short roots normalized to 1 per component."""
        return self._norm[b if b in self._norm else self._neg(b)]

    def highest_root(self, comp_idx: int = 0):
        return self._highest[comp_idx]

    def leq(self, b, c) -> bool:
        """Partial order: b <= c iff c - b has nonnegative coefficients."""
        return all(cb <= cc for cb, cc in zip(b, c))

    def value_vec(self, b):
        """beta's values on the basis coroots: (beta(h_1), ..., beta(h_r))."""
        r = self.rank
        return tuple(sum(self.cartan[i][j] * b[j] for j in range(r)) for i in range(r))

    def cartan_int(self, b, g) -> int:
        """<beta, gamma^vee> = beta(h_gamma)."""
        vv = self.value_vec(b)
        return sum(ci * vi for ci, vi in zip(self.coroot(g), vv))

    def reflect(self, i: int, b):
        """s_i(beta) on root coefficient vectors."""
        pairing = sum(self.cartan[i][j] * b[j] for j in range(self.rank))
        return tuple(c - (pairing if k == i else 0) for k, c in enumerate(b))

    def rho_weight_pairs(self):
        """The exact rationals (rho, varpi_i) for i = 1..r."""
        if self._rho_weight_pairs is None:
            r = self.rank
            out = []
            for i in range(r):
                x = _solve_fraction(self.cartan, i, r)  # alpha-coords of varpi_i
                out.append(sum(x[k] * self.d[k] for k in range(r)))
            self._rho_weight_pairs = tuple(out)
        return self._rho_weight_pairs

    def weyl_order(self) -> int:
        return math.prod(WEYL_ORDERS[l](n) for l, n, _ in self.components)

    def __repr__(self):
        return f"RootSystem({self.type_str})"


def _solve_fraction(C, i, r):
    # solve sum_k C[j][k] x_k = delta_ij over Q
    aug = [[Fraction(C[j][k]) for k in range(r)] + [Fraction(1 if j == i else 0)]
           for j in range(r)]
    for col in range(r):
        piv = next(row for row in range(col, r) if aug[row][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for row in range(r):
            if row != col and aug[row][col] != 0:
                f = aug[row][col]
                aug[row] = [x - f * y for x, y in zip(aug[row], aug[col])]
    return [aug[k][r] for k in range(r)]


@functools.lru_cache(maxsize=None)
def _cached_system(canon: str) -> RootSystem:
    return RootSystem(parse_cartan_type(canon))


def build_root_system(ctype) -> RootSystem:
    """Root system for a Cartan type given as a string or component tuple."""
    if isinstance(ctype, str):
        comps = parse_cartan_type(ctype)
    else:
        comps = tuple(_validate_component(l, n) for l, n in ctype)
    return _cached_system(type_string(comps))


def pair(rs: RootSystem, values, b):
    """lambda(h_beta) for lambda given by its values on the basis coroots."""
    cv = rs.coroot(b)
    acc = None
    for c, v in zip(cv, values):
        term = v * c
        acc = term if acc is None else acc + term
    return acc


def two_rho_dot(rs: RootSystem, b) -> int:
    """(2*rho, beta) for beta in the root lattice, short roots of length^2 2."""
    return sum(bi * 2 * di for bi, di in zip(b, rs.d))


# -- subsystems ------------------------------------------------------------


class Subsystem:
    """A classified closed, negation-stable subset of a root system."""

    __slots__ = ("rs", "roots", "basis", "components", "type_str", "order")

    def __init__(self, rs, roots, basis, components):
        self.rs = rs
        self.roots = roots
        self.basis = basis
        self.components = components  # tuple of (letter, rank, basis-subtuple)
        self.type_str = type_string([(l, n) for l, n, _ in components]) \
            if components else "1"
        self.order = math.prod(WEYL_ORDERS[l](n) for l, n, _ in components) \
            if components else 1

    @property
    def rank(self) -> int:
        return len(self.basis)

    def index_of_connection(self) -> int:
        return math.prod(INDEX_OF_CONNECTION[l](n) for l, n, _ in self.components) \
            if self.components else 1

    def coxeter_components(self):
        """Component types up to Coxeter-graph equivalence (C->B, B1->A1)."""
        out = []
        for letter, n, _ in self.components:
            if letter == "C":
                letter = "B"
            if letter == "B" and n == 1:
                letter = "A"
            out.append((letter, n))
        return sorted(out)

    def __repr__(self):
        return f"Subsystem({self.type_str}, |W|={self.order})"


def check_closed(rs: RootSystem, roots) -> frozenset:
    S = frozenset(roots)
    for b in S:
        if tuple(-c for c in b) not in S:
            raise NotClosed(f"{b} in subset but not its negative")
    for b in S:
        for g in S:
            s = tuple(x + y for x, y in zip(b, g))
            if rs.is_root(s) and s not in S:
                raise NotClosed(f"{b} + {g} is a root outside the subset")
    return S


def _classify_component(rs, nodes, m):
    """Classify one connected basis component; returns (letter, rank, ordered)."""
    n = len(nodes)
    weights = {(i, j): m[i][j] * m[j][i] for i in nodes for j in nodes if i != j}
    adj = {i: [j for j in nodes if j != i and weights[(i, j)] > 0] for i in nodes}
    deg = {i: len(adj[i]) for i in nodes}
    maxw = max(weights.values()) if n > 1 else 0

    def path_order(start):
        order = [start]
        prev = None
        while len(order) < n:
            nxts = [j for j in adj[order[-1]] if j != prev]
            prev = order[-1]
            order.append(nxts[0])
        return order

    if n == 1:
        return ("A", 1, tuple(nodes))
    if maxw == 3:
        assert n == 2
        i, j = nodes
        short, longn = (i, j) if rs.norm_key(i) < rs.norm_key(j) else (j, i)
        return ("G", 2, (short, longn))
    if maxw == 2:
        dbl = [e for e, w in weights.items() if w == 2 and e[0] < e[1]]
        assert len(dbl) == 1
        u, v = dbl[0]
        if n == 2:
            longn, short = (u, v) if rs.norm_key(u) > rs.norm_key(v) else (v, u)
            return ("B", 2, (longn, short))
        if deg[u] == 2 and deg[v] == 2:
            assert n == 4
            ends = [i for i in nodes if deg[i] == 1]
            start = next(e for e in ends if rs.norm_key(e) == max(rs.norm_key(x) for x in ends))
            return ("F", 4, tuple(path_order(start)))
        leaf = u if deg[u] == 1 else v
        other_end = next(i for i in nodes if deg[i] == 1 and i != leaf)
        letter = "B" if rs.norm_key(leaf) < rs.norm_key(other_end) else "C"
        return (letter, n, tuple(path_order(other_end)))
    # simply laced
    branchers = [i for i in nodes if deg[i] >= 3]
    if not branchers:
        ends = [i for i in nodes if deg[i] <= 1]
        orders = [path_order(e) for e in ends[:2]] or [list(nodes)]
        best = min(orders, key=lambda o: tuple(o))
        return ("A", n, tuple(best))
    assert len(branchers) == 1 and deg[branchers[0]] == 3
    c = branchers[0]
    branches = []
    for start in adj[c]:
        br = [start]
        prev = c
        while True:
            nxts = [j for j in adj[br[-1]] if j != prev]
            if not nxts:
                break
            prev = br[-1]
            br.append(nxts[0])
        branches.append(br)
    branches.sort(key=len)
    lens = tuple(len(b) for b in branches)
    if lens[0] == 1 and lens[1] == 1:
        # D_{k+3} with k = lens[2]; Bourbaki: long branch reversed, fork last
        tail = branches[2][::-1]
        forks = sorted([branches[0][0], branches[1][0]])
        return ("D", n, tuple(tail + [c] + forks))
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        arm2, arm_a, arm_b = branches[0], branches[1], branches[2]
        # Bourbaki: chain 1-3-4-...-r through the brancher, node 2 at the fork
        chain = arm_a[::-1] + [c] + arm_b
        order = [chain[0], arm2[0], chain[1]] + chain[2:]
        return ("E", n, tuple(order))
    raise NotClosed(f"basis graph is not a Dynkin diagram (branches {lens})")


class _NormLookup:
    # small adapter so _classify_component can ask for root lengths by node id
    def __init__(self, norms):
        self.norms = norms

    def norm_key(self, i):
        return self.norms[i]


def subsystem_classify(rs: RootSystem, roots) -> Subsystem:
    """Classify a negation-closed, addition-closed subset of the roots.

    The basis consists of the positive members not expressible as a sum of
    two positive members; its Dynkin graph is classified per component.
    """
    S = check_closed(rs, roots)
    Splus = sorted((b for b in S if rs.is_positive(b)), key=lambda b: (sum(b), b))
    plus_set = set(Splus)
    basis = []
    for b in Splus:
        decomposable = False
        for g in Splus:
            if g == b:
                continue
            rest = tuple(x - y for x, y in zip(b, g))
            if rest in plus_set:
                decomposable = True
                break
        if not decomposable:
            basis.append(b)
    basis = tuple(basis)
    if not basis:
        return Subsystem(rs, S, (), ())
    k = len(basis)
    m = [[rs.cartan_int(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    lookup = _NormLookup([rs.norm(b) for b in basis])
    # connected components of the basis graph
    seen = set()
    comps = []
    for i in range(k):
        if i in seen:
            continue
        stack, comp = [i], []
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            comp.append(u)
            stack.extend(v for v in range(k)
                         if v not in seen and m[u][v] * m[v][u] > 0)
        comps.append(sorted(comp))
    classified = []
    for comp in comps:
        letter, n, order = _classify_component(lookup, comp, m)
        classified.append((letter, n, tuple(basis[i] for i in order)))
    classified.sort(key=lambda t: (t[0], t[1], t[2]))
    return Subsystem(rs, S, basis, tuple(classified))


def close_up(rs: RootSystem, seed):
    """Smallest negation- and addition-closed root subset containing seed."""
    S = set()
    for b in seed:
        S.add(b)
        S.add(tuple(-c for c in b))
    changed = True
    while changed:
        changed = False
        cur = list(S)
        for b in cur:
            for g in cur:
                s = tuple(x + y for x, y in zip(b, g))
                if rs.is_root(s) and s not in S:
                    S.add(s)
                    changed = True
    return frozenset(S)


def hypothesis_check(ctype, p: int) -> dict:
    """Good-prime and trace-form flags for the standing hypotheses."""
    comps = parse_cartan_type(ctype) if isinstance(ctype, str) else tuple(ctype)
    good = True
    trace_ok = True
    for letter, rank in comps:
        bad = set(BAD_PRIMES[letter])
        if letter == "E" and rank == 8:
            bad.add(5)
        if p in bad:
            good = False
        if letter == "A" and (rank + 1) % p == 0:
            trace_ok = False
    return {
        "goodPrime": good,
        "traceFormOK": trace_ok,
        "oddPrime": p % 2 == 1,
        "ok": good and trace_ok and p % 2 == 1,
    }
