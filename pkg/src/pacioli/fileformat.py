"""Plain-text file grammars for ledgers and journals.

Both formats are line oriented and UTF-8; ``#`` starts a comment running to
the end of the line, blank lines are ignored, and tokens are separated by
whitespace.  Amounts are unsigned base-10 integer literals, exactly one per
dimension.  The ``//`` separating an account's debit side from its credit
side is a standalone token.

Ledger file::

    pacioli-ledger v1
    dimension <n>
    units <name_1> ... <name_n>
    account <Name> <dr|cr> [nominal] <d_1> ... <d_n> // <c_1> ... <c_n>

A ledger file must encode a zero-account: the parser rejects a file whose
accounts do not sum to a zero T-term (the residual is reported).

Journal file::

    pacioli-journal v1
    dimension <n>
    entry "<description>"
    dr <Account> <a_1> ... <a_n>
    cr <Account> <a_1> ... <a_n>
    end

Each entry holds one or more posting lines.  Descriptions are quoted and
may contain spaces but not ``"`` or ``#``.  The parser checks shape only;
whether an entry balances is the validator's business.

Ledgers are written back in reduced form: that is the canonical on-disk
representation.
"""

import re
from typing import Iterator

from .algebra import NatVec, TTerm
from .ledger import Account, JournalEntry, Ledger, LedgerError, Posting, Side

__all__ = [
    "LEDGER_MAGIC",
    "JOURNAL_MAGIC",
    "ParseError",
    "parse_ledger",
    "parse_journal",
    "render_ledger",
    "render_journal",
]

LEDGER_MAGIC = "pacioli-ledger v1"
JOURNAL_MAGIC = "pacioli-journal v1"

_AMOUNT_RE = re.compile(r"^[0-9]+$")
_ENTRY_RE = re.compile(r'^entry\s+"([^"]*)"$')


class ParseError(ValueError):
    """A syntax or file-level semantic error, with a line number when known."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        self.message = message
        super().__init__(f"line {line_no}: {message}" if line_no else message)


def _logical_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, content) with comments and blanks removed."""
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def _parse_amounts(tokens: list[str], n: int, line_no: int) -> NatVec:
    if len(tokens) != n:
        raise ParseError(f"expected {n} amount component(s), got {len(tokens)}", line_no)
    components = []
    for token in tokens:
        if not _AMOUNT_RE.match(token):
            raise ParseError(f"bad amount {token!r} (unsigned integer expected)", line_no)
        components.append(int(token))
    return NatVec(tuple(components))


def _parse_header(lines: Iterator[tuple[int, str]], magic: str) -> int:
    """Consume the magic line and the dimension line; return the dimension."""
    try:
        line_no, line = next(lines)
    except StopIteration:
        raise ParseError(f"empty file; expected {magic!r} header") from None
    if line != magic:
        raise ParseError(f"bad header {line!r}; expected {magic!r}", line_no)
    try:
        line_no, line = next(lines)
    except StopIteration:
        raise ParseError("missing 'dimension <n>' line") from None
    tokens = line.split()
    if tokens[0] != "dimension" or len(tokens) != 2 or not _AMOUNT_RE.match(tokens[1]):
        raise ParseError("expected 'dimension <n>'", line_no)
    dimension = int(tokens[1])
    if dimension < 1:
        raise ParseError("dimension must be >= 1", line_no)
    return dimension


def parse_ledger(text: str, *, require_balanced: bool = True) -> Ledger:
    """Parse a ledger file.

    `require_balanced=False` skips the zero-account check so diagnostic
    tools can load a broken file and show where it is off.
    """
    lines = _logical_lines(text)
    dimension = _parse_header(lines, LEDGER_MAGIC)

    unit_names: tuple[str, ...] | None = None
    accounts: list[Account] = []
    for line_no, line in lines:
        tokens = line.split()
        if tokens[0] == "units":
            if unit_names is not None:
                raise ParseError("duplicate 'units' line", line_no)
            if accounts:
                raise ParseError("'units' must precede accounts", line_no)
            if len(tokens) - 1 != dimension:
                raise ParseError(
                    f"expected {dimension} unit name(s), got {len(tokens) - 1}", line_no
                )
            unit_names = tuple(tokens[1:])
            if len(set(unit_names)) != dimension:
                raise ParseError("unit names must be distinct", line_no)
        elif tokens[0] == "account":
            if unit_names is None:
                raise ParseError("'units' line must precede accounts", line_no)
            rest = tokens[1:]
            if len(rest) < 2:
                raise ParseError("expected 'account <Name> <dr|cr> ...'", line_no)
            name = rest[0]
            if any(acc.name == name for acc in accounts):
                raise ParseError(f"duplicate account {name!r}", line_no)
            if rest[1] not in (Side.DR.value, Side.CR.value):
                raise ParseError(f"bad side {rest[1]!r}; expected 'dr' or 'cr'", line_no)
            role = Side(rest[1])
            rest = rest[2:]
            nominal = False
            if rest and rest[0] == "nominal":
                nominal = True
                rest = rest[1:]
            if rest.count("//") != 1:
                raise ParseError("expected one '//' between debit and credit", line_no)
            split = rest.index("//")
            debit = _parse_amounts(rest[:split], dimension, line_no)
            credit = _parse_amounts(rest[split + 1 :], dimension, line_no)
            accounts.append(Account(name, role, TTerm(debit, credit), nominal))
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", line_no)

    if unit_names is None:
        raise ParseError("missing 'units' line")
    try:
        ledger = Ledger(dimension, unit_names, tuple(accounts))
    except (LedgerError, ValueError) as exc:
        raise ParseError(str(exc)) from exc
    if require_balanced and not ledger.is_balanced():
        raise ParseError(
            f"ledger does not encode a zero-account; residual {ledger.total()}"
        )
    return ledger


def parse_journal(text: str) -> list[JournalEntry]:
    """Parse a journal file into entries (shape check only)."""
    lines = _logical_lines(text)
    dimension = _parse_header(lines, JOURNAL_MAGIC)

    entries: list[JournalEntry] = []
    description: str | None = None
    postings: list[Posting] = []
    last_line_no = 0
    for line_no, line in lines:
        last_line_no = line_no
        tokens = line.split()
        if tokens[0] == "entry":
            if description is not None:
                raise ParseError("'entry' before previous entry's 'end'", line_no)
            match = _ENTRY_RE.match(line)
            if not match:
                raise ParseError("expected 'entry \"<description>\"'", line_no)
            description = match.group(1)
            postings = []
        elif tokens[0] in (Side.DR.value, Side.CR.value):
            if description is None:
                raise ParseError(f"{tokens[0]!r} line outside an entry", line_no)
            if len(tokens) < 2:
                raise ParseError(f"expected '{tokens[0]} <Account> <amounts>'", line_no)
            amount = _parse_amounts(tokens[2:], dimension, line_no)
            postings.append(Posting(tokens[1], Side(tokens[0]), amount))
        elif tokens[0] == "end":
            if description is None:
                raise ParseError("'end' outside an entry", line_no)
            if tokens != ["end"]:
                raise ParseError("unexpected tokens after 'end'", line_no)
            if not postings:
                raise ParseError("entry has no postings", line_no)
            entries.append(JournalEntry(description, tuple(postings)))
            description = None
            postings = []
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", line_no)
    if description is not None:
        raise ParseError(f"entry {description!r} is missing 'end'", last_line_no)
    return entries


def _render_amounts(vec: NatVec) -> str:
    return " ".join(str(c) for c in vec)


def render_ledger(ledger: Ledger, *, reduced: bool = True) -> str:
    """Render a ledger file; reduced balances are the canonical form."""
    out = [LEDGER_MAGIC, f"dimension {ledger.dimension}"]
    out.append("units " + " ".join(ledger.unit_names))
    for acc in ledger.accounts:
        balance = acc.balance.reduced() if reduced else acc.balance
        nominal = " nominal" if acc.nominal else ""
        out.append(
            f"account {acc.name} {acc.role.value}{nominal} "
            f"{_render_amounts(balance.debit)} // {_render_amounts(balance.credit)}"
        )
    return "\n".join(out) + "\n"


def render_journal(entries, dimension: int) -> str:
    out = [JOURNAL_MAGIC, f"dimension {dimension}"]
    for entry in entries:
        description = entry.description.replace('"', "'").replace("#", "")
        out.append(f'entry "{description}"')
        for p in entry.postings:
            out.append(f"{p.side.value} {p.account} {_render_amounts(p.amount)}")
        out.append("end")
    return "\n".join(out) + "\n"
