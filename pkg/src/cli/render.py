import json
from enum import Enum
from typing import Any

from src.k3_families.models import CheckResult, FamilySpec, VerificationReport
from src.k3_families.serialize import family_to_dict, report_to_dict, reports_to_tex


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    TEX = "tex"


def render_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _check_lines(name: str, check: CheckResult) -> list[str]:
    lines = [f"    {name}: {_status(check.passed)}"]
    lines += [f"      - {detail}" for detail in check.details]
    return lines


def _matrix_text(rows) -> str:
    return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in rows) + "]"


def report_text(report: VerificationReport) -> list[str]:
    family = report.family
    formula = report.degree_formula
    certificate = report.certificate
    addends = " + ".join(str(count.value) for count in report.h0_normal.breakdown)
    lines = [
        family.title(),
        f"  genus: {report.genus}",
        f"  degree 2g-2: {report.degree}"
        f" ({formula.quadratic}*a^2 + {formula.linear}*a + {formula.constant})",
        f"  [S] = {report.pairing.fundamental_class.to_text()}",
        f"  restricted pairing: {_matrix_text(report.pairing.matrix)}",
        f"  Picard lattice: {_matrix_text(report.picard_lattice)}"
        f" (discriminant {report.lattice_discriminant})",
        f"  h0(N_S/P): {addends} = {report.h0_normal.total}",
    ]
    for count in report.h0_normal.breakdown:
        flag = ", vanishing assumed" if count.vanishing_assumed else ""
        lines.append(f"    {count.label}(O_S({count.twist})) = {count.value}{flag}")
    lines += [
        f"  h0(T_P|S): {report.h0_tangent}",
        f"  moduli dimension: {report.moduli_dim}",
        f"  certificate: {_status(certificate.passed)}",
    ]
    lines += _check_lines("k3_condition", certificate.k3_condition)
    lines += _check_lines("global_generation", certificate.global_generation)
    lines += _check_lines("mp_surjective", certificate.mp_surjective)
    if certificate.sections_of_bundle is not None:
        lines.append(
            f"    dim V = h0(E) = {certificate.sections_of_bundle}, dim P(V) = {certificate.parameter_space_dim}"
        )
    lines += [f"    assumed: {assumption}" for assumption in certificate.assumptions]
    if family.description:
        lines.append(f"  description: {family.description}")
    return lines


def render_reports(reports: list[VerificationReport], fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return render_json([report_to_dict(r) for r in reports])
    if fmt == OutputFormat.TEX:
        return reports_to_tex(reports)
    lines = []
    for report in reports:
        lines += report_text(report)
        lines.append("")
    return "\n".join(lines) + "\n"


def render_families(families: list[FamilySpec], genera: list[int], fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return render_json(
            [{**family_to_dict(f), "genus": g} for f, g in zip(families, genera, strict=True)]
        )
    if fmt == OutputFormat.TEX:
        lines = [r"\begin{tabular}{llll}", r"\hline", r"$P$ & $E$ & $a$ & $g$ \\", r"\hline"]
        for family, genus in zip(families, genera, strict=True):
            ambient = r" \times ".join(f"\\mathbb{{P}}^{{{m}}}" for m in family.ambient.dims)
            lines.append(
                f"${ambient}$ & ${family.bundle}$ & {family.polarization.degs[0]} & {genus} \\\\"
            )
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines) + "\n"
    if not families:
        return "none found\n"
    return "\n".join(f"{f.title()}, genus {g}" for f, g in zip(families, genera, strict=True)) + "\n"


def render_chi(data: dict[str, Any], fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return render_json(data)
    twist = data["twist"]
    rows = [(f"chi(P, O({twist}))", oracle, value) for oracle, value in data["ambient_chi"].items()]
    if data["bundle"] is not None:
        rows += [
            (f"chi(S, O_S({twist}))", oracle, value)
            for oracle, value in data["ci_chi"].items()
            if value is not None
        ]
    if fmt == OutputFormat.TEX:
        lines = [r"\begin{tabular}{lll}", r"\hline", r"quantity & oracle & value \\", r"\hline"]
        lines += [f"${q}$ & {o} & {v} \\\\" for q, o, v in rows]
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines) + "\n"
    lines = [f"ambient: {' x '.join(f'P^{m}' for m in data['ambient'])}"]
    if data["bundle"] is not None:
        lines.append(f"bundle: E = {data['bundle']}")
    lines += [f"{q} [{o}]: {v}" for q, o, v in rows]
    lines.append(f"oracles: {', '.join(data['oracles'])}")
    return "\n".join(lines) + "\n"
