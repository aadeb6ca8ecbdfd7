"""The characteristic-p side: Lambda_chi, blocks, component dimensions,
unramified criteria, Poincare series and finite-representation-type verdicts.

Two coordinate systems are used side by side and every report carries both:
highest-weight coordinates lambda (baby Verma labels) and Harish-Chandra
coordinates eta = lambda + rho.  Component dimensions, stabilizers and the
unramified criteria are all computed on eta; block linkage is the dot action
on lambda, equivalently the ordinary action on eta.

Characters follow the standard-Levi model: the semisimple part is given by
its values c_i = chi(h_i) in some F_{p^e}, the nilpotent part by the subset
of the centralizer subsystem's basis on which it is regular.
"""

from __future__ import annotations

from .errors import (
    HypothesisFailure,
    InvalidSupport,
    NoParabolicConjugate,
    NotNilpotentContext,
)
from .rootdata import RootSystem, close_up, hypothesis_check, pair, subsystem_classify
from .scalars import DEFAULT_FIELD_BOUND, artin_schreier_solve, embed, make_field
from .weyl import (
    DEFAULT_GROUP_BOUND,
    enumerate_group,
    min_coset_reps,
    orbit_partition,
    reflection_stabilizer,
    simple_reflection,
)


class ModWeight:
    """Element of h* given by its values on the basis coroots."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = tuple(values)

    @property
    def field(self):
        return self.values[0].field

    def key(self):
        return tuple(v.coeffs for v in self.values)

    def __add__(self, other):
        return ModWeight(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return ModWeight(tuple(a - b for a, b in zip(self.values, other.values)))

    def in_lambda(self) -> bool:
        """Membership in X/pX: every coordinate is Frobenius-fixed."""
        return all(v.in_prime_field() for v in self.values)

    def __eq__(self, other):
        return isinstance(other, ModWeight) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"ModWeight({', '.join(map(str, self.values))})"


def rho_weight(rs: RootSystem, field) -> ModWeight:
    return ModWeight(tuple(field.one() for _ in range(rs.rank)))


def zero_weight(rs: RootSystem, field) -> ModWeight:
    return ModWeight(tuple(field.zero() for _ in range(rs.rank)))


class PChar:
    """chi = chi_s + chi_n with semisimple values and standard-Levi support.

    support is a tuple of 0-based indices into the basis of the centralizer
    subsystem Phi' = {alpha : chi(h_alpha) = 0}.
    """

    def __init__(self, rs, p, values=None, support=(), field=None,
                 bound=DEFAULT_FIELD_BOUND):
        hyp = hypothesis_check(rs.ctype, p)
        if not hyp["ok"]:
            raise HypothesisFailure(
                f"(type {rs.type_str}, p={p}) fails hypotheses: {hyp}")
        self.rs = rs
        self.p = p
        if field is None:
            field = make_field(p, 1, bound) if values is None else values[0].field
        if values is None:
            values = tuple(field.zero() for _ in range(rs.rank))
        if field.p != p or any(v.field != field for v in values):
            raise ValueError(
                "character values must share one ambient field of characteristic p")
        self.field = field
        self.values = tuple(values)
        sat = tuple(b for b in rs.pos_roots if pair(rs, self.values, b).is_zero())
        roots = frozenset(sat) | frozenset(tuple(-x for x in b) for b in sat)
        self.levi = subsystem_classify(rs, roots)
        support = tuple(sorted(set(support)))
        for s in support:
            if not (0 <= s < len(self.levi.basis)):
                raise InvalidSupport(
                    f"support index {s} outside the basis of Phi' "
                    f"(rank {len(self.levi.basis)})")
        self.support = support

    @property
    def nilpotent(self) -> bool:
        return all(v.is_zero() for v in self.values)

    @property
    def regular(self) -> bool:
        """Regular under the standard-Levi model: support = full basis of Phi'."""
        return set(self.support) == set(range(len(self.levi.basis)))

    def __repr__(self):
        return (f"PChar({self.rs.type_str}, p={self.p}, "
                f"c=({', '.join(map(str, self.values))}), S={self.support})")


def enumerate_lambda_chi(chi: PChar, bound=DEFAULT_FIELD_BOUND):
    """The p^r weights solving lambda(h_i)^p - lambda(h_i) = chi(h_i)^p.

    Returns (weights, ambient field); the set is base + F_p^r, listed with the
    F_p-translate in lex order.
    """
    rs, p = chi.rs, chi.p
    sols = []
    fields = []
    for c in chi.values:
        rhs = c ** p
        x, fld = artin_schreier_solve(rhs, bound)
        sols.append(x)
        fields.append(fld)
    ambient = max(fields, key=lambda f: f.e)
    base = tuple(embed(x, ambient) for x in sols)
    weights = []
    for k in range(p**rs.rank):
        digits = []
        n = k
        for _ in range(rs.rank):
            digits.append(n % p)
            n //= p
        digits.reverse()
        weights.append(ModWeight(tuple(b + ambient.from_int(d)
                                       for b, d in zip(base, digits))))
    return weights, ambient


# -- stabilizer subsystems on Harish-Chandra labels --------------------------

def eta_subsystems(rs: RootSystem, eta: ModWeight):
    """(zero, fp): the reflection subgroups of {alpha : eta(h_alpha) = 0} and
    {alpha : eta(h_alpha) in F_p}, with classified subsystems."""
    vals = {b: pair(rs, eta.values, b) for b in rs.pos_roots}
    zero = reflection_stabilizer(rs, lambda b: vals[b].is_zero())
    fp = reflection_stabilizer(rs, lambda b: vals[b].in_prime_field())
    return zero, fp


def dim_C(rs: RootSystem, eta: ModWeight) -> int:
    """dim of the primary component at eta: [W(eta + Lambda) : W(eta)],
    computed from the classified subsystem orders."""
    zero, fp = eta_subsystems(rs, eta)
    assert fp.order % zero.order == 0
    return fp.order // zero.order


def is_unramified(rs: RootSystem, lam: ModWeight, mode: str = "simpleRootCriterion") -> bool:
    """Unramified test for the block of the baby Verma with highest weight lam.

    simpleRootCriterion: no simple alpha with (lam+rho)(h_alpha) in F_p - {0}.
    definitional: the component dimension at eta = lam + rho is 1.
    """
    field = lam.field
    eta = lam + rho_weight(rs, field)
    if mode == "simpleRootCriterion":
        for v in eta.values:
            if v.in_prime_field() and not v.is_zero():
                return False
        return True
    if mode == "definitional":
        return dim_C(rs, eta) == 1
    raise ValueError(f"unknown mode {mode!r}")


# -- blocks ------------------------------------------------------------------

class BlockReport:
    """Per-block record: both coordinate systems, orbit size, dimension,
    unramified flag, stabilizer types, Poincare series, finite-type verdict."""

    __slots__ = ("lam", "eta", "orbit_size", "dim", "unramified",
                 "stab_point_type", "stab_coset_type", "poincare",
                 "finite_type", "finite_type_witness")

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])

    def to_dict(self):
        return {
            "lambda": [list(v.coeffs) for v in self.lam.values],
            "eta": [list(v.coeffs) for v in self.eta.values],
            "orbit_size": self.orbit_size,
            "dim": self.dim,
            "unramified": self.unramified,
            "stabilizer_types": {"point": self.stab_point_type,
                                 "coset": self.stab_coset_type},
            "poincare": list(self.poincare) if self.poincare is not None else None,
            "finite_type": self.finite_type,
            "finite_type_witness": self.finite_type_witness,
        }


def mod_blocks(chi: PChar, bound=DEFAULT_FIELD_BOUND,
               group_bound=DEFAULT_GROUP_BOUND, assume_unique_simple=False):
    """Blocks of the reduced algebra at chi: the partition of Lambda_chi under
    the dot action (ordinary action on eta = lambda + rho)."""
    from .errors import BoundExceeded
    rs = chi.rs
    if rs.weyl_order() > group_bound:
        raise BoundExceeded(
            f"|W| = {rs.weyl_order()} exceeds bound {group_bound}; "
            "block partitions need tractable orbits")
    weights, ambient = enumerate_lambda_chi(chi, bound)
    rho = rho_weight(rs, ambient)
    etas = [w + rho for w in weights]
    gens = [simple_reflection(rs, j) for j in range(rs.rank)]
    actions = [lambda t, w=w: w.act_values(t) for w in gens]

    def key(eta_tuple):
        return tuple((v - ambient.one()).coeffs for v in eta_tuple)  # lambda encoding

    classes = orbit_partition([e.values for e in etas], actions, key)
    reports = []
    for cls in classes:
        eta = ModWeight(cls[0])
        lam = eta - rho
        zero, fp = eta_subsystems(rs, eta)
        assert fp.order % zero.order == 0
        dim = fp.order // zero.order
        poincare = None
        if chi.nilpotent:
            poincare = poincare_series(rs, eta, group_bound=group_bound)
        verdict, witness = finite_type_verdict(
            rs, eta, assume_unique_simple=assume_unique_simple)
        reports.append(BlockReport(
            lam=lam, eta=eta, orbit_size=len(cls), dim=dim,
            unramified=(dim == 1),
            stab_point_type=zero.subsystem.type_str,
            stab_coset_type=fp.subsystem.type_str,
            poincare=poincare, finite_type=verdict, finite_type_witness=witness,
        ))
    return reports


def unramified_count(chi: PChar, blocks=None, **kw):
    """Predicted p^s (s = r - rank Phi') versus enumerated unramified blocks."""
    if blocks is None:
        blocks = mod_blocks(chi, **kw)
    s = chi.rs.rank - len(chi.levi.basis)
    predicted = chi.p**s
    enumerated = sum(1 for b in blocks if b.unramified)
    return {"predicted": predicted, "enumerated": enumerated, "s": s,
            "agree": predicted == enumerated}


def poincare_series(rs: RootSystem, eta: ModWeight, group_bound=DEFAULT_GROUP_BOUND):
    """Coefficients of P(C_eta, t): minimal coset representatives counted by
    length, for W(eta) parabolic (eta conjugated within its orbit if needed).

    Requires a nilpotent context (all coordinates of eta in F_p)."""
    if not eta.in_lambda():
        raise NotNilpotentContext("Poincare series needs all coordinates in F_p")
    gens = [simple_reflection(rs, j) for j in range(rs.rank)]
    actions = [lambda t, w=w: w.act_values(t) for w in gens]
    seen = {eta.values}
    frontier = [eta.values]
    while frontier:
        nxt = []
        for t in frontier:
            for act in actions:
                u = act(t)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    simples = {tuple(1 if k == j else 0 for k in range(rs.rank)): j
               for j in range(rs.rank)}
    for t in sorted(seen, key=lambda tt: tuple(v.coeffs for v in tt)):
        zero = reflection_stabilizer(
            rs, lambda b, t=t: pair(rs, t, b).is_zero())
        basis = zero.subsystem.basis
        if all(b in simples for b in basis):
            par = [simples[b] for b in basis]
            W = enumerate_group(rs, group_bound)
            reps = min_coset_reps(rs, W, par)
            top = max(w.length for w in reps)
            coeffs = [0] * (top + 1)
            for w in reps:
                coeffs[w.length] += 1
            return tuple(coeffs)
    raise NoParabolicConjugate(
        "no W-conjugate of eta has a stabilizer generated by simple reflections")


_FINITE_PAIRS_HINT = "(A_n,A_{n-1}), (B_n,B_{n-1}), (G2,A1)"


def _coxeter_type(letter, rank):
    if letter == "C":
        letter = "B"
    if letter == "B" and rank == 1:
        letter = "A"
    return (letter, rank)


def finite_type_verdict(rs: RootSystem, eta: ModWeight,
                        assume_unique_simple: bool = False):
    """Finite-representation-type classification of the block at eta.

    Returns (verdict, witness).  Necessity: the stabilizer pair must differ in
    rank by one and the differing connected component pair must be one of
    (A_n, A_{n-1}), (B_n, B_{n-1}) or (G2, A1) up to Coxeter equivalence.
    Sufficiency additionally needs the unique-simple-module hypothesis, which
    is not decidable here: without `assume_unique_simple` the best positive
    verdict is "unknown-boundary".
    """
    zero, fp = eta_subsystems(rs, eta)
    small_roots = zero.subsystem.roots
    big = fp.subsystem
    witness = {"point_type": zero.subsystem.type_str, "coset_type": big.type_str,
               "differing_component": None}
    if small_roots == big.roots:
        return "semisimple", witness
    if zero.subsystem.rank != big.rank - 1:
        return "infinite", witness
    differing = []
    for letter, n, basis in big.components:
        comp_roots = close_up(rs, basis)
        inter = comp_roots & small_roots
        if inter != comp_roots:
            differing.append(((letter, n), inter))
    if len(differing) != 1:
        return "infinite", witness
    (big_type, inter) = differing[0]
    small_sub = subsystem_classify(rs, inter)
    witness["differing_component"] = {
        "big": f"{big_type[0]}{big_type[1]}",
        "small": small_sub.type_str,
    }
    if len(small_sub.components) > 1:
        return "infinite", witness
    bt = _coxeter_type(*big_type)
    st = _coxeter_type(*small_sub.components[0][:2]) if small_sub.components \
        else ("A", 0)
    ok = ((bt[0] == "A" and st[0] == "A" and st[1] == bt[1] - 1)
          or (bt[0] == "B" and bt[1] >= 2 and st[1] == bt[1] - 1
              and (st[0] == "B" or (st[0] == "A" and st[1] == 1)))
          or (bt == ("G", 2) and st == ("A", 1)))
    if not ok:
        return "infinite", witness
    return ("finite" if assume_unique_simple else "unknown-boundary"), witness


def regularity_and_structure(chi: PChar, blocks=None, **kw):
    """Regularity under the standard-Levi model and, when regular, the
    matrix-algebra structure descriptor Mat_{p^N} over the local components."""
    regular = chi.regular
    out = {"regular": regular, "fullyAzumaya": regular, "descriptor": None}
    if regular:
        if blocks is None:
            blocks = mod_blocks(chi, **kw)
        out["descriptor"] = {
            "matrix_size": chi.p**chi.rs.N,
            "local_dims": sorted(b.dim for b in blocks),
        }
    return out
