"""JSON-ready dictionaries and TeX fragments for families and reports.

Field names are part of the documented schema (docs/json_schema.md); keep them stable.
"""

from typing import Any

from src.char_classes import Multidegree, SplitBundle
from src.chow_ring import make_ambient
from src.k3_families.models import (
    CaseLabel,
    Certificate,
    CheckResult,
    FamilySpec,
    VerificationReport,
)


def family_to_dict(family: FamilySpec) -> dict[str, Any]:
    return {
        "ambient": list(family.ambient.dims),
        "bundle": str(family.bundle),
        "polarization": str(family.polarization),
        "label": family.label.value,
        "description": family.description,
    }


def family_from_dict(data: dict[str, Any]) -> FamilySpec:
    return FamilySpec(
        ambient=make_ambient(data["ambient"]),
        bundle=SplitBundle.parse(data["bundle"]),
        polarization=Multidegree.parse(data["polarization"]),
        label=CaseLabel(data.get("label", CaseLabel.OTHER.value)),
        description=data.get("description"),
    )


def _check_to_dict(check: CheckResult) -> dict[str, Any]:
    return {"passed": check.passed, "details": list(check.details)}


def certificate_to_dict(certificate: Certificate) -> dict[str, Any]:
    return {
        "passed": certificate.passed,
        "k3_condition": _check_to_dict(certificate.k3_condition),
        "global_generation": _check_to_dict(certificate.global_generation),
        "mp_surjective": _check_to_dict(certificate.mp_surjective),
        "assumptions": list(certificate.assumptions),
        "sections_of_bundle": certificate.sections_of_bundle,
        "parameter_space_dim": certificate.parameter_space_dim,
    }


def report_to_dict(report: VerificationReport) -> dict[str, Any]:
    formula = report.degree_formula
    return {
        **family_to_dict(report.family),
        "genus": report.genus,
        "degree": report.degree,
        "degree_formula": {
            "quadratic": formula.quadratic,
            "linear": formula.linear,
            "constant": formula.constant,
        },
        "pairing": {
            "fundamental_class": report.pairing.fundamental_class.to_structured(),
            "matrix": [list(row) for row in report.pairing.matrix],
        },
        "picard_lattice": [list(row) for row in report.picard_lattice],
        "lattice_discriminant": report.lattice_discriminant,
        "projection_degree": report.projection_degree,
        "h0_normal": {
            "total": report.h0_normal.total,
            "breakdown": [
                {
                    "twist": str(count.twist),
                    "value": count.value,
                    "label": count.label,
                    "vanishing_assumed": count.vanishing_assumed,
                }
                for count in report.h0_normal.breakdown
            ],
        },
        "h0_tangent": report.h0_tangent,
        "moduli_dim": report.moduli_dim,
        "certificate": certificate_to_dict(report.certificate),
        "discrepancies": [
            {
                "printed_value": d.printed_value,
                "computed_value": d.computed_value,
                "location": d.location,
            }
            for d in report.discrepancies
        ],
    }


def _tex_matrix(rows) -> str:
    body = r" \\ ".join(" & ".join(str(v) for v in row) for row in rows)
    return r"$\begin{pmatrix} " + body + r" \end{pmatrix}$"


def _tex_bundle(bundle: SplitBundle) -> str:
    return r" \oplus ".join(f"\\mathcal{{O}}({s})" for s in bundle.summands)


def reports_to_tex(reports: list[VerificationReport]) -> str:
    lines = [
        r"\begin{tabular}{llllllll}",
        r"\hline",
        r"Case & $P$ & $E$ & $a$ & $2g-2$ & $h^0(N_{S/P})$ & $h^0(T_{P|S})$ & $\mathrm{Pic}(S)$ \\",
        r"\hline",
    ]
    for report in reports:
        family = report.family
        ambient = r" \times ".join(f"\\mathbb{{P}}^{{{m}}}" for m in family.ambient.dims)
        addends = " + ".join(str(count.value) for count in report.h0_normal.breakdown)
        lines.append(
            " & ".join(
                [
                    family.label.value,
                    f"${ambient}$",
                    f"${_tex_bundle(family.bundle)}$",
                    str(family.polarization.degs[0]),
                    str(report.degree),
                    f"${addends} = {report.h0_normal.total}$",
                    str(report.h0_tangent),
                    _tex_matrix(report.picard_lattice),
                ]
            )
            + r" \\"
        )
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"
