from upblab.core.base.errors import DiagnosticReport, ErrorCode, UpbLabError
from upblab.core.uom.labels import ONE, ZERO, LabelKind
from upblab.core.uom.spec import UomSpec


def lint(spec: UomSpec) -> DiagnosticReport:
    """
    Warnings for suspicious but well-formed specs.

    E0251: a constraint forbids exactly one of 0 and 1.
    E0252: a grid variable is never the subject of a constraint.
    E0253: x' appears in the grid but x never does.
    """
    report = DiagnosticReport()

    for c in spec.constraints:
        if c.subject.is_constant:
            continue
        has0, has1 = ZERO in c.forbidden, ONE in c.forbidden
        if has0 != has1:
            report.add(UpbLabError.from_template(
                ErrorCode.E0251,
                variable=str(c.subject),
                present="0" if has0 else "1",
                missing="1" if has0 else "0",
                spec=spec.name,
            ))

    constrained = {c.subject.variable for c in spec.constraints if c.subject.variable}
    for name in spec.variables():
        if name not in constrained:
            report.add(UpbLabError.from_template(ErrorCode.E0252, variable=name, spec=spec.name))

    cells = [label for row in spec.grid for label in row]
    unprimed = {l.name for l in cells if l.kind is LabelKind.VAR}
    for name in sorted({l.name for l in cells if l.kind is LabelKind.PRIME} - unprimed):
        report.add(UpbLabError.from_template(ErrorCode.E0253, variable=name, spec=spec.name))

    return report
