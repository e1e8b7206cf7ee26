"""Endomorphism verdict for the jacobian of y^p = f(x).

The deep theorems enter only as implications: their hypotheses are
computed or certified here and each true conclusion carries the tag of the
implication that produced it.  A failed gate forces every conclusion false
and is named in ``failing_gates``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from .algebra import IntPoly, ModPoly, is_prime
from .criteria import CriteriaVerdict, Mode, Status, decide_very_simple, is_fermat_prime
from .curve import CurveReport, CurveSpec, curve_report, trigonal_multiplicities
from .galois import GaloisCertificate, recheck
from .meataxe import is_absolutely_simple
from .permutations import Family, build_v00

TAG_MAXIMAL = "THM-ENDO: very simple V_f,p and Galois group S_n or A_n give a maximal commutative Z[delta_p]"
TAG_CM = "THM-CENTRALIZER: Q(delta_p) is its own centralizer, a CM subfield"
TAG_FERMAT = "THM-ENDO-FERMAT: for a Fermat prime End = Z[delta_p] = Z[zeta_p]"
TAG_HODGE = "THM-TRIGONAL-HODGE: coprime multiplicities, Hodge classes are products of divisor classes"
TAG_TATE = "THM-TRIGONAL-TATE: as above over a number field containing sqrt(-3)"


class GaloisSource(str, enum.Enum):
    CERTIFIED = "Certified"
    USER_ASSERTED = "UserAsserted"
    ABSENT = "Absent"


@dataclass(frozen=True)
class GaloisHypothesis:
    source: GaloisSource
    group: str | None
    certificate: GaloisCertificate | None = None

    @property
    def ok(self) -> bool:
        return self.group in ("S_n", "A_n")

    @property
    def family(self) -> Family:
        return Family.ALTERNATING if self.group == "A_n" else Family.SYMMETRIC

    def to_dict(self) -> dict:
        return {
            "source": self.source.value,
            "group": self.group,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def galois_hypothesis(galois) -> GaloisHypothesis:
    """Accept a certificate, an assertion "sn"/"an", or None."""
    if galois is None:
        return GaloisHypothesis(GaloisSource.ABSENT, None)
    if isinstance(galois, GaloisHypothesis):
        return galois
    if isinstance(galois, GaloisCertificate):
        return GaloisHypothesis(GaloisSource.CERTIFIED, galois.group, galois)
    key = str(galois).lower().replace("_", "")
    groups = {"sn": "S_n", "an": "A_n"}
    if key not in groups:
        raise ValueError(f"unknown Galois assertion {galois!r}; use 'sn' or 'an'")
    return GaloisHypothesis(GaloisSource.USER_ASSERTED, groups[key])


@dataclass(frozen=True)
class HodgeTateFlags:
    hodge: bool | None
    tate: bool | None
    reasons: tuple[str, ...] = ()


def hodge_tate_flags(p: int, n: int, base_has_sqrt_minus3: bool) -> HodgeTateFlags:
    """p = 3 only: 3 not dividing n-1 and coprime multiplicities, computed separately and compared."""
    if p != 3:
        return HodgeTateFlags(None, None)
    if n < 5:
        return HodgeTateFlags(False, False, (f"n = {n} < 5",))
    divisibility = (n - 1) % 3 != 0
    a, b = trigonal_multiplicities(n)
    coprime = gcd(a, b) == 1
    if divisibility != coprime:
        raise AssertionError(f"n={n}: 3 not dividing n-1 is {divisibility} but multiplicities {(a, b)} coprime is {coprime}")
    reasons = []
    if not divisibility:
        reasons.append(f"3 divides n - 1 = {n - 1}; multiplicities {(a, b)} are not coprime")
    if not base_has_sqrt_minus3:
        reasons.append("base field not known to contain sqrt(-3)")
    return HodgeTateFlags(divisibility, divisibility and base_has_sqrt_minus3, tuple(reasons))


@dataclass(frozen=True)
class ModuleSummary:
    dim: int
    family: Family
    simple: bool
    absolutely_simple: bool
    commutant_dim: int

    def to_dict(self, very_simple: CriteriaVerdict | None) -> dict:
        return {
            "dim": self.dim,
            "group": self.family.value,
            "simple": self.simple,
            "absolutely_simple": self.absolutely_simple,
            "commutant_dim": self.commutant_dim,
            "very_simple": very_simple.to_dict() if very_simple else None,
        }


@dataclass(frozen=True)
class EndoVerdict:
    p: int
    f: IntPoly | ModPoly
    mode: Mode
    galois: GaloisHypothesis
    very_simple: CriteriaVerdict | None
    curve: CurveReport
    module: ModuleSummary | None
    maximal_commutative: bool
    center_cm_subfield: bool
    fermat_full_ring: bool
    hodge_flag: bool | None
    tate_flag: bool | None
    justifications: dict[str, str]
    failing_gates: tuple[str, ...]
    base_has_sqrt_minus3: bool = False
    seed: int = 0
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        assert not self.fermat_full_ring or self.maximal_commutative
        assert (self.hodge_flag is not None) == (self.p == 3)
        for name in ("maximal_commutative", "center_cm_subfield", "fermat_full_ring", "hodge_flag", "tate_flag"):
            assert not getattr(self, name) or name in self.justifications, name

    @property
    def n(self) -> int:
        return self.f.degree

    @property
    def jacobian_dimension(self) -> int:
        return self.curve.genus

    @property
    def hypotheses(self) -> dict:
        return {
            "n_ge_5": self.n >= 5,
            "p_odd_prime": self.p != 2 and is_prime(self.p),
            "base_char_zero": isinstance(self.f, IntPoly),
            "galois_ok": self.galois.to_dict() | {"ok": self.galois.ok},
            "very_simple": self.very_simple.to_dict() if self.very_simple else None,
        }

    @property
    def conclusions(self) -> dict:
        return {
            "maximal_commutative": self.maximal_commutative,
            "center_cm_subfield": self.center_cm_subfield,
            "fermat_full_ring": self.fermat_full_ring,
            "hodge_flag": self.hodge_flag,
            "tate_flag": self.tate_flag,
            "jacobian_dimension": self.jacobian_dimension,
            "justifications": dict(sorted(self.justifications.items())),
            "failing_gates": list(self.failing_gates),
        }

    def hypothesis_record(self) -> dict:
        """Everything needed to recompute this verdict."""
        return {
            "p": self.p,
            "f": [str(c) for c in self.f.coeffs],
            "q": self.f.p if isinstance(self.f, ModPoly) else None,
            "galois": self.galois.to_dict(),
            "mode": self.mode.value,
            "base_has_sqrt_minus3": self.base_has_sqrt_minus3,
            "seed": self.seed,
        }

    def to_dict(self) -> dict:
        return {
            "hypotheses": self.hypotheses,
            "conclusions": self.conclusions,
            "notes": list(self.notes),
            "record": self.hypothesis_record(),
        }


def endomorphism_verdict(
    p: int,
    f: IntPoly | ModPoly,
    galois=None,
    mode: Mode | str = Mode.VERIFIED,
    base_has_sqrt_minus3: bool = False,
    seed: int = 0,
) -> EndoVerdict:
    mode = Mode(mode)
    c = CurveSpec(p, f)  # validates p odd prime, deg >= 4, squarefree
    report = curve_report(c)
    n = c.n
    hyp = galois_hypothesis(galois)
    notes = []
    gates = []
    if isinstance(f, ModPoly):
        gates.append("base_char_zero")
        notes.append("the implications need a base field inside C; curves over finite fields only get invariants")
    if n < 5:
        gates.append("n_ge_5")
    if not hyp.ok:
        gates.append("galois")
    if hyp.source is GaloisSource.USER_ASSERTED:
        notes.append(f"Galois group {hyp.group} is user-asserted, not certified")
    if hyp.certificate is not None and isinstance(f, IntPoly) and not recheck(hyp.certificate, f):
        raise ValueError("the Galois certificate does not re-verify against f")
    if hyp.ok:
        notes.append("the Galois group is unchanged over K(zeta_p)")

    very, module = None, None
    if n >= 5:
        very = decide_very_simple(n, p, mode, hyp.family)
        if very.status is not Status.VERY_SIMPLE:
            gates.append("very_simple")
        mod = build_v00(n, p, hyp.family)
        sv = is_absolutely_simple(mod, seed)
        module = ModuleSummary(mod.dim, hyp.family, sv.simple, sv.absolutely_simple, sv.commutant_dim)

    ok = not gates
    just = {}
    if ok:
        just["maximal_commutative"] = TAG_MAXIMAL
        just["center_cm_subfield"] = TAG_CM
    fermat = ok and is_fermat_prime(p)
    if fermat:
        just["fermat_full_ring"] = TAG_FERMAT

    flags = hodge_tate_flags(p, n, base_has_sqrt_minus3)
    hodge = tate = None
    if p == 3:
        hodge = bool(flags.hodge) and ok
        tate = bool(flags.tate) and ok
        notes.extend(flags.reasons)
        if hodge:
            just["hodge_flag"] = TAG_HODGE
        if tate:
            just["tate_flag"] = TAG_TATE
    if report.curve.n % p == 0:
        notes.append(f"p divides n: invariants computed on the degree {n - 1} model")

    return EndoVerdict(
        p, f, mode, hyp, very, report, module, ok, ok, fermat, hodge, tate, just, tuple(gates),
        base_has_sqrt_minus3, seed, tuple(notes),
    )


def replay(record: dict) -> EndoVerdict:
    """Recompute a verdict from its serialized hypothesis record."""
    coeffs = tuple(int(c) for c in record["f"])
    f = IntPoly(coeffs) if record["q"] is None else ModPoly(int(record["q"]), coeffs)
    g = record["galois"]
    source = GaloisSource(g["source"])
    if source is GaloisSource.CERTIFIED:
        galois = GaloisCertificate.from_dict(g["certificate"])
    elif source is GaloisSource.USER_ASSERTED:
        galois = {"S_n": "sn", "A_n": "an"}[g["group"]]
    else:
        galois = None
    return endomorphism_verdict(
        int(record["p"]), f, galois, record["mode"], bool(record["base_has_sqrt_minus3"]), int(record["seed"])
    )
