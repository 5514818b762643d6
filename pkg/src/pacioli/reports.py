"""Plain-text rendering of balance sheets, trial balances, grids, and
signed-ledger views."""

from .algebra import TTerm
from .ledger import BalanceSheetEquation, Ledger, TrialBalance
from .sss import SignedLedger, SignedRow
from .table import TableSums, TransactionsTable

__all__ = [
    "render_balance_sheet",
    "render_trial_balance",
    "render_table_report",
    "render_signed_report",
]


def _grid(rows: list[list[str]]) -> str:
    """Align columns: first column left, the rest right, two-space gutters."""
    widths = [0] * max(len(r) for r in rows)
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for row in rows:
        cells = [
            cell.ljust(widths[i]) if i == 0 else cell.rjust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def render_balance_sheet(eq: BalanceSheetEquation) -> str:
    """Two lines: term names joined by '=' and '+', values aligned beneath."""
    if not eq.terms():
        return "(empty)"
    lhs = [(name, str(value)) for name, value in eq.lhs] or [("0", "0")]
    rhs = [(name, str(value)) for name, value in eq.rhs] or [("0", "0")]
    fields: list[tuple[str | None, str, str]] = []  # (separator, name, value)
    for i, (name, value) in enumerate(lhs):
        fields.append((None if i == 0 else "+", name, value))
    for i, (name, value) in enumerate(rhs):
        fields.append(("=" if i == 0 else "+", name, value))
    header = values = ""
    for sep, name, value in fields:
        if sep:
            header += f" {sep} "
            values += f" {sep} "
        width = max(len(name), len(value))
        header += name.ljust(width)
        values += value.rjust(width)
    return header.rstrip() + "\n" + values.rstrip()


def render_trial_balance(tb: TrialBalance) -> str:
    lines = [
        f"debit total:  {tb.debit_total}",
        f"credit total: {tb.credit_total}",
    ]
    if tb.balanced:
        lines.append("BALANCED")
    else:
        residual = TTerm(tb.debit_total, tb.credit_total).reduced()
        lines.append(f"UNBALANCED, residual {residual}")
    return "\n".join(lines)


def render_table_report(
    table: TransactionsTable, sums: TableSums, changes: dict[str, int], ledger: Ledger
) -> str:
    names = table.account_names
    rows = [["Dr.\\Cr.", *names, "(row sum)"]]
    for i, name in enumerate(names):
        cells = [str(c) if c else "" for c in table.cells[i]]
        rows.append([name, *cells, str(sums.row_sums[i])])
    rows.append(["(col sum)", *[str(c) for c in sums.col_sums], ""])
    out = [_grid(rows), "", "net changes:"]
    change_rows = []
    for acc in ledger.accounts:
        change_rows.append([acc.name, acc.role.value, str(changes[acc.name])])
    out.append(_grid(change_rows))
    return "\n".join(out)


def render_signed_report(
    ledger: SignedLedger,
    rows: list[SignedRow] | None = None,
    ending: SignedLedger | None = None,
) -> str:
    """Single-sided signed view; with journal rows, the full posting table."""
    names = ledger.names()
    grid = [["", *names]]
    grid.append(["beginning", *[str(acc.balance) for acc in ledger.accounts]])
    checks = [f"beginning zero-row: {'OK' if ledger.is_zero_row() else 'FAIL'}"]
    if rows is not None:
        for i, row in enumerate(rows, start=1):
            changes = dict(row.changes)
            grid.append(
                [
                    f"{i}. {row.description}",
                    *[str(changes[n]) if n in changes else "" for n in names],
                ]
            )
        checks.append(
            "transaction zero-rows: "
            + ("OK" if all(row.is_zero() for row in rows) else "FAIL")
        )
    if ending is not None:
        grid.append(["ending", *[str(acc.balance) for acc in ending.accounts]])
        checks.append(f"ending zero-row: {'OK' if ending.is_zero_row() else 'FAIL'}")
    return "\n".join([_grid(grid), "", *checks])
