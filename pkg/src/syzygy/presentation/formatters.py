"""Plain-text renderers for tables, reports and verdicts."""

from __future__ import annotations

from syzygy.application.results import (
    AmplenessResult,
    BettiResult,
    ClassifyResult,
    GenerateResult,
    GroebnerResult,
    PsiRankResult,
    ReproduceResult,
    ResolveResult,
    ScrollResult,
)
from syzygy.domain.entities import BettiTable
from syzygy.infrastructure.persistence import format_ideal, format_triples


def format_betti_grid(table: BettiTable) -> str:
    """Rows j - i, columns i, ``-`` for zero entries, with a total line."""
    if not table:
        return "(zero table)"
    columns = range(table.max_column + 1)
    rows = range(table.min_row, table.max_row + 1)
    cells = [[str(v) if v else "-" for v in table.row(r)] for r in rows]
    totals = [str(table.column_sum(i)) for i in columns]
    width = max(len(c) for line in [*cells, totals, [str(i) for i in columns]] for c in line)
    label = max(len("total:"), *(len(f"{r}:") for r in rows))

    def line(head: str, values: list[str]) -> str:
        return head.rjust(label) + " " + " ".join(v.rjust(width) for v in values)

    out = [line("", [str(i) for i in columns]), line("total:", totals)]
    out.extend(line(f"{r}:", row) for r, row in zip(rows, cells, strict=True))
    return "\n".join(out)


def format_betti(result: BettiResult) -> str:
    inv = result.invariants
    return "\n".join(
        [
            format_betti_grid(result.table),
            "",
            format_triples(result.table).rstrip(),
            "",
            f"regularity={inv.regularity} pd={inv.projective_dimension} depth={inv.depth} "
            f"gorenstein_symmetric={inv.is_gorenstein_symmetric}",
        ]
    )


def format_groebner(result: GroebnerResult) -> str:
    gb = result.basis
    header = f"# {len(gb)} elements, order {gb.order}"
    if gb.truncated_at is not None:
        header += f", exact through degree {gb.truncated_at}"
    return "\n".join([header, *(g.to_string(gb.order) for g in gb.elements)])


def format_resolution(result: ResolveResult) -> str:
    ranks = " <- ".join(str(len(t)) for t in result.complex.twists)
    minimal = " <- ".join(str(len(t)) for t in result.minimal.twists)
    lines = [f"ranks:         {ranks}", f"minimal ranks: {minimal}", ""]
    return "\n".join([*lines, format_betti_grid(result.table)])


def format_scroll(result: ScrollResult) -> str:
    rows = [[e.to_string() for e in row] for row in result.matrix]
    width = max((len(e) for row in rows for e in row), default=1)
    t = result.scroll_type
    lines = [f"{t}: f={t.f} in P^{t.ambient}", ""]
    lines.extend("[ " + "  ".join(e.rjust(width) for e in row) + " ]" for row in rows)
    lines += ["", format_ideal(result.ideal).rstrip(), "", "Eagon-Northcott:"]
    lines.append(format_betti_grid(result.predicted))
    if result.computed is not None:
        lines += ["", "computed:", format_betti_grid(result.computed)]
        lines.append("match" if result.matches else "MISMATCH")
    return "\n".join(lines)


def format_psirank(result: PsiRankResult) -> str:
    r = result.report
    text = f"type {r.type_tag} over {r.field}: {r.rows}x{r.cols}"
    text += f", rank {r.rank}, kernel {r.kernel_dim}"
    if result.predicted_beta45 is not None:
        text += f"\npredicted beta_45 = {result.predicted_beta45}"
    return text


def format_ampleness(result: AmplenessResult) -> str:
    v = result.verdict
    a, b, c = result.adjoint_hilbert
    lines = [
        f"{result.curve} on {v.base.value}: C^2={result.self_intersection} p_a={result.genus}",
        f"adjoint image Hilbert polynomial: {a}/2 n^2 + {b} n + {c}",
        f"{v.i}-very ample: {v.verdict.value if v.verdict else 'n/a'}",
    ]
    for crit in v.critical:
        lines.append(f"  critical {crit.divisor.format(v.base)}  D.(C-D)={crit.value}")
    return "\n".join(lines)


def format_model(result: GenerateResult) -> str:
    m = result.model
    tag = m.recipe.value if m.recipe else "custom"
    points = ", ".join(
        f"{pt.kind}{'' if pt.is_rational else f' x{pt.count}'}" for pt in m.singular_points
    )
    lines = [
        f"{tag}: {m.ambient.value} model over {m.ring.field}, seed {m.seed}, attempt {m.attempt}",
        f"degree {m.degree}, p_a {m.arithmetic_genus}, delta {m.delta}, genus {m.genus}",
        f"singular points: {points}",
        f"adjoint series: {result.adjoints.dimension} forms of degree {result.adjoints.degree}",
    ]
    if result.ideal is not None:
        degrees = result.ideal.degrees()
        lines.append(
            f"canonical ideal: {len(result.ideal)} generators "
            f"({degrees.count(2)} quadrics, {degrees.count(3)} cubics)"
        )
    lines.extend(f"wrote {p}" for p in result.written)
    return "\n".join(lines)


def format_classification(result: ClassifyResult) -> str:
    report = result.report
    lines = [format_betti_grid(result.table), ""]
    if report.recognized:
        lines.append(f"label: {report.label}")
    else:
        lines.append(
            f"label: {report.label} (nearest {report.nearest}, distance {report.distance})"
        )
    lines.append(f"Clifford index: {report.clifford_index}")
    if report.k_g15 is not None:
        lines.append(f"g15 count: {report.k_g15}")
    lines.extend(f"note: {n}" for n in report.notes)
    if result.partition is not None:
        lines.append(f"section partition: {result.partition} -> {result.scroll_type}")
    if result.consistency is not None:
        lines.extend(f"check: {c}" for c in result.consistency.checks)
        lines.extend(f"CONTRADICTION: {c}" for c in result.consistency.contradictions)
    return "\n".join(lines)


def format_reproduce(result: ReproduceResult) -> str:
    """Pass/fail matrix; timing is left out so reruns print identical text."""
    header = ("recipe", "expected", "label", "beta45", "status")
    body = [
        (r.recipe, r.expected, r.label, str(r.beta45), "pass" if r.passed else "FAIL")
        for r in result.rows
    ]
    widths = [max(len(row[k]) for row in [header, *body]) for k in range(len(header))]
    lines = [f"field {result.field_spec}, seed {result.seed}"]
    for row in [header, *body]:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths, strict=True)).rstrip())
    failed = [r for r in result.rows if not r.passed]
    lines.append(f"{len(result.rows) - len(failed)}/{len(result.rows)} passed")
    lines.extend(f"{r.recipe}: {r.error}" for r in failed if r.error)
    return "\n".join(lines)
