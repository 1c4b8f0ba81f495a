"""Genus reduction, slice certificates and the tau inequality chain.

Given a Seifert matrix V of a knot T whose symmetrized form is indefinite,
a primitive isotropic z is completed to a symplectic basis P; the matrix
V* = P V P^T then has V*[0, 0] = 0.  That corner is the algebraic record of
an unknotted, zero-framed curve on a surface for a knot T* with the same
Seifert form, so g4(T*) <= genus - 1.  Since V* is congruent to V, the rows
of [I | P^-1] metabolize V + (-V*), i.e. T # -T* is algebraically slice.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import BudgetExhausted, CertificateInvalid, DefiniteForm, NotFound, RankMismatch
from .exactmat import IntMatrix, bilinear, det, hstack, inertia, inverse_unimodular, rank, smith_invariants
from .qform import (BasisChange, IsotropicCertificate, SearchBudget, find_primitive_isotropic,
                    standard_symplectic, symplectic_completion)
from .seifert import (SeifertForm, concordance_inverse, congruence_transform, connected_sum, genus,
                      intersection_form, knot_signature, symmetrize)
from .torus import TorusKnotParams, tau_torus, torus_seifert_matrix

# Facts about tau taken from Ozsvath-Szabo, not computed here.
CITED_TAU_FACTS = (
    "tau is a homomorphism from the knot concordance group to Z",
    "tau(-K) = -tau(K)",
    "|tau(K)| <= g4(K)",
    "tau(T(p,q)) = (p-1)(q-1)/2 for the positive torus knot",
)

SURGERY_NOTE = ("V*[0,0] = 0 in a symplectic basis: the first basis curve on the canonical "
                "surface with Seifert matrix V* is unknotted with zero framing, so the surface "
                "can be surgered in the 4-ball, lowering its genus by one.")


@dataclass(frozen=True)
class DerivedFormCertificate:
    original: SeifertForm
    iso: IsotropicCertificate
    change: BasisChange
    derived: SeifertForm
    corner: int
    note: str = field(default=SURGERY_NOTE, compare=False)

    @property
    def g4_bound(self) -> int:
        return genus(self.original) - 1

    def failures(self) -> list[str]:
        """Every violated invariant, by name; empty means the certificate holds."""
        bad = []
        V, P, Vs = self.original.matrix, self.change.matrix, self.derived.matrix
        n = V.rows
        z = self.iso.z
        if P.shape != (n, n) or Vs.shape != (n, n) or len(z) != n:
            return ["shapes"]
        if det(P) != 1:
            bad.append("det(P) = 1")
        if n and P.row(0) != tuple(z):
            bad.append("first row of P is z")
        if P @ V @ P.T != Vs:
            bad.append("V* = P V P^T")
        if P @ (V - V.T) @ P.T != standard_symplectic(n):
            bad.append("P (V - V^T) P^T = J_std")
        if self.corner != 0 or (n and Vs[0, 0] != 0):
            bad.append("corner V*[0,0] = 0")
        if n and bilinear(z, V, z) != 0:
            bad.append("z V z^T = 0")
        if not self.iso.verify(symmetrize(self.original)):
            bad.append("isotropic certificate")
        return bad

    def verify(self) -> bool:
        return not self.failures()


@dataclass(frozen=True)
class SliceCertificate:
    sum_form: SeifertForm
    metabolizer: IntMatrix

    def verify(self) -> bool:
        return verify_metabolizer(self.sum_form, self.metabolizer)


class Conclusion(str, enum.Enum):
    SUMMAND_ESTABLISHED = "SUMMAND_ESTABLISHED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class TauChainReport:
    p: int
    q: int
    tau_T: int
    genus_T: int
    g4_star_bound: int
    tau_difference_lower_bound: int
    conclusion: Conclusion
    reason: str = ""
    signature_T: int = 0
    g4_signature_bound: int = 0
    derived: DerivedFormCertificate | None = None
    slice: SliceCertificate | None = None
    cited_facts: tuple = CITED_TAU_FACTS

    def failures(self) -> list[str]:
        bad = []
        if self.tau_difference_lower_bound != self.tau_T - self.g4_star_bound:
            bad.append("lower bound = tau_T - g4_star_bound")
        if (self.conclusion is Conclusion.SUMMAND_ESTABLISHED) != (self.tau_difference_lower_bound >= 1):
            bad.append("conclusion matches lower bound")
        if self.conclusion is Conclusion.SUMMAND_ESTABLISHED:
            if self.derived is None or not self.derived.verify():
                bad.append("derived form certificate")
            elif self.g4_star_bound != self.derived.g4_bound:
                bad.append("g4_star_bound from certificate")
            if self.slice is None or not self.slice.verify():
                bad.append("slice certificate")
        return bad

    def verify(self) -> bool:
        return not self.failures()


def derive_reduced_form(V: SeifertForm, budget: SearchBudget | None = None) -> DerivedFormCertificate:
    """Find V* = P V P^T with vanishing corner, P symplectic with first row z.

    Raises DefiniteForm when V + V^T is definite and BudgetExhausted / NotFound
    when the bounded search gives up.
    """
    J = intersection_form(V)
    Q = symmetrize(V)
    n_plus, n_minus, _ = inertia(Q.matrix)
    if n_plus == 0 or n_minus == 0:
        raise DefiniteForm(f"V + V^T has inertia ({n_plus}, {n_minus}); no isotropic vector exists")
    iso = find_primitive_isotropic(Q, budget)
    P = symplectic_completion(J, iso.z)
    Vs = congruence_transform(V, P)
    Vs = SeifertForm(Vs.matrix, f"{V.label}*" if V.label else "V*")
    cert = DerivedFormCertificate(V, iso, P, Vs, Vs.matrix[0, 0])
    assert cert.verify(), cert.failures()
    return cert


def verify_metabolizer(W: SeifertForm, M: IntMatrix) -> bool:
    """True iff the rows of M span a primitive half-rank sublattice on which W vanishes."""
    n = W.dim
    if M.cols != n:
        raise RankMismatch(f"metabolizer has {M.cols} columns, form has dimension {n}")
    if n % 2 or rank(M) != n // 2 or M.rows != n // 2:
        raise RankMismatch(f"metabolizer must have rank {n // 2} with {n // 2} rows")
    if not (M @ W.matrix @ M.T).is_zero():
        return False
    return all(s == 1 for s in smith_invariants(M))


def build_slice_certificate(cert: DerivedFormCertificate) -> SliceCertificate:
    """Metabolizer [I | P^-1] for V + (-V*)."""
    bad = cert.failures()
    if bad:
        raise CertificateInvalid("derived form certificate fails: " + ", ".join(bad))
    n = cert.original.dim
    W = connected_sum(cert.original, concordance_inverse(cert.derived))
    M = hstack(IntMatrix.identity(n), inverse_unimodular(cert.change.matrix))
    out = SliceCertificate(W, M)
    if not out.verify():
        raise CertificateInvalid("metabolizer [I | P^-1] does not annihilate V + (-V*)")
    return out


def g4_lower_bound_signature(V: SeifertForm) -> int:
    return (abs(knot_signature(V)) + 1) // 2


def tau_chain_report(p: int, q: int, budget: SearchBudget | None = None) -> TauChainReport:
    """Run the whole argument on T(p, q).

    tau(T # -T*) = tau(T) - tau(T*) >= tau(T) - g4(T*) >= tau(T) - (genus - 1).
    A positive bound together with the slice certificate exhibits an
    algebraically slice knot with nonzero tau.
    """
    params = TorusKnotParams.canonical(p, q)
    tau_T = tau_torus(params.p, params.q)
    g = params.genus
    common = dict(p=params.p, q=params.q, tau_T=tau_T, genus_T=g)

    def inconclusive(reason, V=None):
        sig = knot_signature(V) if V is not None else 0
        return TauChainReport(**common, g4_star_bound=g, tau_difference_lower_bound=tau_T - g,
                              conclusion=Conclusion.INCONCLUSIVE, reason=reason,
                              signature_T=sig, g4_signature_bound=(abs(sig) + 1) // 2)

    if params.is_unknot:
        return inconclusive("T is the unknot; tau = 0")
    V = torus_seifert_matrix(params.p, params.q)
    try:
        cert = derive_reduced_form(V, budget)
    except DefiniteForm as exc:
        return inconclusive(f"definite form: {exc}", V)
    except (NotFound, BudgetExhausted) as exc:
        return inconclusive(f"isotropic search gave up: {exc}", V)
    slice_cert = build_slice_certificate(cert)
    g4_star = cert.g4_bound
    lower = tau_T - g4_star
    conclusion = Conclusion.SUMMAND_ESTABLISHED if lower >= 1 else Conclusion.INCONCLUSIVE
    sig = knot_signature(V)
    return TauChainReport(**common, g4_star_bound=g4_star, tau_difference_lower_bound=lower,
                          conclusion=conclusion,
                          reason="" if lower >= 1 else "tau bound does not exceed zero",
                          signature_T=sig, g4_signature_bound=(abs(sig) + 1) // 2,
                          derived=cert, slice=slice_cert)
