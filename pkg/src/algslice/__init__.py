"""Exact Seifert-form computations behind the tau splitting of the algebraically slice concordance group."""

from .concordance import (Conclusion, DerivedFormCertificate, SliceCertificate, TauChainReport,
                          build_slice_certificate, derive_reduced_form, g4_lower_bound_signature,
                          tau_chain_report, verify_metabolizer)
from .cyclotomic import RootOfUnity
from .exactmat import (InertiaTriple, IntMatrix, det, inertia, inverse_unimodular, is_primitive,
                       pfaffian, smith_invariants)
from .qform import (BasisChange, IsotropicCertificate, QuadForm, SearchBudget, find_primitive_isotropic,
                    is_indefinite, standard_symplectic, symplectic_completion)
from .seifert import (LaurentPoly, SeifertForm, alexander_polynomial, arf_invariant, concordance_inverse,
                      congruence_transform, connected_sum, genus, intersection_form, knot_signature,
                      symmetrize, tristram_levine)
from .torus import (TorusKnotParams, tau_torus, torus_alexander_formula, torus_seifert_matrix,
                    torus_signature_count)

__version__ = "0.1.0"
