"""Report trees and certificate (de)serialization.

A report is an ordered key/value tree of ints, strings, booleans, lists and
nested dicts.  It renders either as indented ``key=value`` text or as one
JSON document.  The JSON field names below are a stable interface.

Certificate documents carry every matrix needed to re-check them:

* ``derived-form``: V, z, P, V_star, corner, search_radius_used, method
* ``slice``: W, M
* ``tau-chain``: p, q, tau_T, genus_T, g4_star_bound,
  tau_difference_lower_bound, conclusion, plus nested ``derived`` and
  ``slice`` documents (null when inconclusive)
"""

from __future__ import annotations

import json
from typing import Any

from .concordance import (CITED_TAU_FACTS, Conclusion, DerivedFormCertificate, SliceCertificate,
                          TauChainReport)
from .errors import CertificateInvalid, InputError
from .exactmat import IntMatrix, smith_invariants
from .qform import BasisChange, IsotropicCertificate
from .seifert import SeifertForm, genus


class Report(dict):
    """Ordered report tree; ``str(report)`` is the text rendering."""

    def to_json(self) -> str:
        return json.dumps(self, indent=2) + "\n"

    def to_text(self) -> str:
        return "".join(_render(self, 0))

    __str__ = to_text


def _is_matrix(v) -> bool:
    return isinstance(v, list) and bool(v) and all(isinstance(r, list) for r in v)


def _render(tree: dict, depth: int):
    pad = "  " * depth
    for key, v in tree.items():
        if isinstance(v, dict):
            yield f"{pad}{key}:\n"
            yield from _render(v, depth + 1)
        elif _is_matrix(v):
            yield f"{pad}{key}: {len(v)}x{len(v[0])}\n"
            width = max(len(str(x)) for r in v for x in r) if v[0] else 1
            for r in v:
                yield pad + "  [" + " ".join(str(x).rjust(width) for x in r) + "]\n"
        elif isinstance(v, list) and v and all(isinstance(s, str) for s in v):
            yield f"{pad}{key}:\n"
            for s in v:
                yield f"{pad}  - {s}\n"
        elif isinstance(v, bool):
            yield f"{pad}{key}={'true' if v else 'false'}\n"
        elif v is None:
            yield f"{pad}{key}=none\n"
        elif isinstance(v, list):
            yield f"{pad}{key}=[{', '.join(str(x) for x in v)}]\n"
        else:
            yield f"{pad}{key}={v}\n"


# -- matrices -------------------------------------------------------------------

def matrix_to_json(M: IntMatrix) -> list[list[int]]:
    return M.to_lists()


def matrix_from_json(rows: Any, name: str, cols: int | None = None) -> IntMatrix:
    if not isinstance(rows, list) or not all(
            isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r)
            for r in rows):
        raise InputError(f"field {name!r} must be a list of integer rows")
    if cols is None:
        cols = len(rows[0]) if rows else 0
    try:
        return IntMatrix.from_rows(rows, cols)
    except InputError as exc:
        raise InputError(f"field {name!r}: {exc}") from None


def _field(doc: dict, name: str):
    if name not in doc:
        raise InputError(f"certificate is missing field {name!r}")
    return doc[name]


# -- certificates -----------------------------------------------------------------

def derived_to_json(cert: DerivedFormCertificate) -> dict:
    return {
        "kind": "derived-form",
        "label": cert.original.label,
        "V": matrix_to_json(cert.original.matrix),
        "z": list(cert.iso.z),
        "q_value": cert.iso.q_value,
        "gcd": cert.iso.gcd,
        "search_radius_used": cert.iso.search_radius_used,
        "method": cert.iso.method,
        "P": matrix_to_json(cert.change.matrix),
        "V_star": matrix_to_json(cert.derived.matrix),
        "corner": cert.corner,
        "genus": genus(cert.original),
        "g4_bound": cert.g4_bound,
        "note": cert.note,
    }


def derived_from_json(doc: dict) -> DerivedFormCertificate:
    V = matrix_from_json(_field(doc, "V"), "V")
    n = V.rows
    z = tuple(_field(doc, "z"))
    if not all(isinstance(x, int) for x in z):
        raise InputError("field 'z' must be a list of integers")
    iso = IsotropicCertificate(z, int(_field(doc, "q_value")), int(_field(doc, "gcd")),
                               int(_field(doc, "search_radius_used")), str(doc.get("method", "")))
    try:
        P = BasisChange(matrix_from_json(_field(doc, "P"), "P", n))
    except InputError as exc:
        raise CertificateInvalid(f"P: {exc}") from None
    Vs = matrix_from_json(_field(doc, "V_star"), "V_star", n)
    label = str(doc.get("label", ""))
    return DerivedFormCertificate(SeifertForm(V, label), iso, P, SeifertForm(Vs, label + "*"),
                                  int(_field(doc, "corner")))


def slice_to_json(cert: SliceCertificate) -> dict:
    M = cert.metabolizer
    return {
        "kind": "slice",
        "W": matrix_to_json(cert.sum_form.matrix),
        "M": matrix_to_json(M),
        "rows": M.rows,
        "cols": M.cols,
        "smith_invariants": smith_invariants(M),
    }


def slice_from_json(doc: dict) -> SliceCertificate:
    W = matrix_from_json(_field(doc, "W"), "W")
    M = matrix_from_json(_field(doc, "M"), "M", W.rows)
    return SliceCertificate(SeifertForm(W), M)


def tau_chain_to_json(r: TauChainReport) -> dict:
    return {
        "kind": "tau-chain",
        "p": r.p,
        "q": r.q,
        "tau_T": r.tau_T,
        "genus_T": r.genus_T,
        "signature_T": r.signature_T,
        "g4_signature_bound": r.g4_signature_bound,
        "g4_star_bound": r.g4_star_bound,
        "tau_difference_lower_bound": r.tau_difference_lower_bound,
        "conclusion": r.conclusion.value,
        "reason": r.reason,
        "cited_facts": list(r.cited_facts),
        "derived": derived_to_json(r.derived) if r.derived else None,
        "slice": slice_to_json(r.slice) if r.slice else None,
    }


def tau_chain_from_json(doc: dict) -> TauChainReport:
    try:
        conclusion = Conclusion(_field(doc, "conclusion"))
    except ValueError:
        raise InputError(f"unknown conclusion {doc['conclusion']!r}") from None
    derived = doc.get("derived")
    slice_doc = doc.get("slice")
    return TauChainReport(
        p=int(_field(doc, "p")), q=int(_field(doc, "q")),
        tau_T=int(_field(doc, "tau_T")), genus_T=int(_field(doc, "genus_T")),
        g4_star_bound=int(_field(doc, "g4_star_bound")),
        tau_difference_lower_bound=int(_field(doc, "tau_difference_lower_bound")),
        conclusion=conclusion, reason=str(doc.get("reason", "")),
        signature_T=int(doc.get("signature_T", 0)),
        g4_signature_bound=int(doc.get("g4_signature_bound", 0)),
        derived=derived_from_json(derived) if derived else None,
        slice=slice_from_json(slice_doc) if slice_doc else None,
        cited_facts=tuple(doc.get("cited_facts", CITED_TAU_FACTS)))


def load_certificate(doc: dict):
    """Rebuild a certificate object from its JSON document."""
    if not isinstance(doc, dict):
        raise InputError("certificate must be a JSON object")
    kind = doc.get("kind")
    loaders = {"derived-form": derived_from_json, "slice": slice_from_json,
               "tau-chain": tau_chain_from_json}
    if kind not in loaders:
        raise InputError(f"unknown certificate kind {kind!r}")
    return loaders[kind](doc)


def verify_certificate(doc: dict) -> list[str]:
    """Names of failed checks for a serialized certificate (empty when valid)."""
    cert = load_certificate(doc)
    if isinstance(cert, SliceCertificate):
        return [] if cert.verify() else ["M W M^T = 0 with unit Smith invariants"]
    return cert.failures()
