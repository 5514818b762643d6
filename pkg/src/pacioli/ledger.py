"""The double-entry method proper.

A balance-sheet equation encodes as a ledger of T-term accounts that sum
to the zero T-term; transactions encode as journal entries whose postings
also sum to zero; posting the journal adds those zero-terms to the account
balances, so the ledger invariant survives every valid posting.  Reducing
and decoding the ended ledger yields the ending equation.

Ledgers are immutable: `post` and friends return new values.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Sequence

from .algebra import DimensionMismatch, IntVec, NatVec, TTerm

__all__ = [
    "Side",
    "Account",
    "Ledger",
    "Posting",
    "JournalEntry",
    "BalanceSheetEquation",
    "EntryValidation",
    "TrialBalance",
    "LedgerError",
    "PostingError",
    "encode_equation",
    "validate_entry",
    "post",
    "trial_balance",
    "reduce_ledger",
    "decode_equation",
    "close_nominal",
]


class LedgerError(ValueError):
    """A ledger or journal violates a structural requirement."""


class Side(Enum):
    """Debit/credit marker, used both as an account's balance side and as a
    posting's side."""

    DR = "dr"
    CR = "cr"


def _check_name(name: str, what: str) -> None:
    if not name or name.split() != [name] or "#" in name:
        raise LedgerError(f"invalid {what} name {name!r}")


@dataclass(frozen=True)
class Account:
    """A named T-term balance with a fixed balance side.

    `nominal` marks temporary income-statement accounts (revenue, expense)
    that get closed into equity at period end.
    """

    name: str
    role: Side
    balance: TTerm
    nominal: bool = False

    def __post_init__(self):
        _check_name(self.name, "account")

    def signed_balance(self) -> IntVec:
        """The balance decoded on the account's own side."""
        if self.role is Side.DR:
            return self.balance.debit_balance()
        return self.balance.credit_balance()


@dataclass(frozen=True)
class Ledger:
    """An ordered listing of accounts over a fixed dimension.

    Construction checks names and dimensions but *not* the zero-account
    property: an unbalanced ledger is representable (that is what a trial
    balance is for), it just cannot come out of `encode_equation` or `post`.
    """

    dimension: int
    unit_names: tuple[str, ...]
    accounts: tuple[Account, ...] = ()

    def __post_init__(self):
        if self.dimension < 1:
            raise LedgerError(f"dimension must be >= 1, got {self.dimension}")
        object.__setattr__(self, "unit_names", tuple(self.unit_names))
        object.__setattr__(self, "accounts", tuple(self.accounts))
        if len(self.unit_names) != self.dimension:
            raise LedgerError(
                f"{len(self.unit_names)} unit names for dimension {self.dimension}"
            )
        for unit in self.unit_names:
            _check_name(unit, "unit")
        if len(set(self.unit_names)) != len(self.unit_names):
            raise LedgerError("unit names must be distinct")
        seen = set()
        for acc in self.accounts:
            if acc.name in seen:
                raise LedgerError(f"duplicate account {acc.name!r}")
            seen.add(acc.name)
            if acc.balance.dimension != self.dimension:
                raise DimensionMismatch(
                    f"account {acc.name!r} has dimension "
                    f"{acc.balance.dimension}, ledger has {self.dimension}"
                )

    def names(self) -> tuple[str, ...]:
        return tuple(acc.name for acc in self.accounts)

    def has_account(self, name: str) -> bool:
        return any(acc.name == name for acc in self.accounts)

    def account(self, name: str) -> Account:
        for acc in self.accounts:
            if acc.name == name:
                return acc
        raise LedgerError(f"unknown account {name!r}")

    def total(self) -> TTerm:
        result = TTerm.zero(self.dimension)
        for acc in self.accounts:
            result = result + acc.balance
        return result

    def is_balanced(self) -> bool:
        return self.total().is_zero()

    def with_balances(self, balances: dict[str, TTerm]) -> "Ledger":
        accounts = tuple(
            replace(acc, balance=balances.get(acc.name, acc.balance))
            for acc in self.accounts
        )
        return replace(self, accounts=accounts)


@dataclass(frozen=True)
class Posting:
    """One unsigned amount applied to one side of one account."""

    account: str
    side: Side
    amount: NatVec

    def term(self) -> TTerm:
        zero = NatVec.zeros(self.amount.dimension)
        if self.side is Side.DR:
            return TTerm(self.amount, zero)
        return TTerm(zero, self.amount)


@dataclass(frozen=True)
class JournalEntry:
    """A described group of postings meant to sum to a zero-term."""

    description: str
    postings: tuple[Posting, ...]

    def __post_init__(self):
        object.__setattr__(self, "postings", tuple(self.postings))

    def terms_by_account(self) -> dict[str, TTerm]:
        """Net T-term per affected account, in order of first appearance."""
        terms: dict[str, TTerm] = {}
        for p in self.postings:
            t = p.term()
            terms[p.account] = terms[p.account] + t if p.account in terms else t
        return terms


@dataclass(frozen=True)
class BalanceSheetEquation:
    """Named signed-vector terms, left-hand side = right-hand side."""

    lhs: tuple[tuple[str, IntVec], ...]
    rhs: tuple[tuple[str, IntVec], ...]

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(tuple(t) for t in self.lhs))
        object.__setattr__(self, "rhs", tuple(tuple(t) for t in self.rhs))

    def terms(self) -> tuple[tuple[str, IntVec], ...]:
        return self.lhs + self.rhs

    def dimension(self) -> int | None:
        for _, value in self.terms():
            return value.dimension
        return None

    def balances(self) -> bool:
        dim = self.dimension()
        if dim is None:
            return True
        lhs = IntVec.total((v for _, v in self.lhs), dim)
        rhs = IntVec.total((v for _, v in self.rhs), dim)
        return lhs == rhs


@dataclass(frozen=True)
class EntryValidation:
    """Outcome of checking one journal entry against a ledger.

    `residual` is the raw sum of the postings' T-terms (over postings whose
    dimension matches the ledger); the entry balances iff it is a zero-term.
    `dimension_mismatches` holds 0-based posting indices.
    """

    ok: bool
    unknown_accounts: tuple[str, ...] = ()
    dimension_mismatches: tuple[int, ...] = ()
    residual: TTerm | None = None
    warnings: tuple[str, ...] = ()

    def problems(self) -> str:
        parts = []
        if self.unknown_accounts:
            parts.append("unknown account(s): " + ", ".join(self.unknown_accounts))
        if self.dimension_mismatches:
            indices = ", ".join(str(i + 1) for i in self.dimension_mismatches)
            parts.append(f"dimension mismatch in posting(s) {indices}")
        if self.residual is not None and not self.residual.is_zero():
            parts.append(f"unbalanced, residual {self.residual}")
        return "; ".join(parts) if parts else "ok"


class PostingError(LedgerError):
    """Posting aborted: one entry failed validation.

    Carries the 0-based index of the failing entry and its report; nothing
    was applied.
    """

    def __init__(self, entry_index: int, entry: JournalEntry, report: EntryValidation):
        self.entry_index = entry_index
        self.entry = entry
        self.report = report
        super().__init__(
            f"entry {entry_index + 1} ({entry.description!r}): {report.problems()}"
        )


@dataclass(frozen=True)
class TrialBalance:
    debit_total: NatVec
    credit_total: NatVec
    balanced: bool


def encode_equation(
    eq: BalanceSheetEquation,
    unit_names: Sequence[str] | None = None,
    dimension: int | None = None,
) -> Ledger:
    """Encode a balanced equation as a ledger summing to the zero T-term.

    Left-hand terms become debit-balance accounts, right-hand terms
    credit-balance accounts.  `unit_names` default to "u1".."un";
    `dimension` is inferred from the terms (needed only for the empty
    equation, where it defaults to 1).
    """
    inferred = eq.dimension()
    dim = dimension if dimension is not None else (inferred or 1)
    if not eq.balances():
        raise LedgerError("equation does not balance; cannot encode")
    names = [name for name, _ in eq.terms()]
    if len(set(names)) != len(names):
        raise LedgerError("duplicate term names in equation")
    for _, value in eq.terms():
        if value.dimension != dim:
            raise DimensionMismatch(
                f"term dimension {value.dimension} differs from {dim}"
            )
    if unit_names is None:
        unit_names = tuple(f"u{i + 1}" for i in range(dim))
    accounts = [
        Account(name, Side.DR, TTerm.from_debit_balance(value))
        for name, value in eq.lhs
    ] + [
        Account(name, Side.CR, TTerm.from_credit_balance(value))
        for name, value in eq.rhs
    ]
    return Ledger(dim, tuple(unit_names), tuple(accounts))


def validate_entry(entry: JournalEntry, ledger: Ledger) -> EntryValidation:
    """Check an entry: known accounts, matching dimensions, zero-term sum."""
    unknown = []
    mismatched = []
    residual = TTerm.zero(ledger.dimension)
    for i, posting in enumerate(entry.postings):
        if not ledger.has_account(posting.account) and posting.account not in unknown:
            unknown.append(posting.account)
        if posting.amount.dimension != ledger.dimension:
            mismatched.append(i)
        else:
            residual = residual + posting.term()
    warnings = []
    dr_accounts = {p.account for p in entry.postings if p.side is Side.DR}
    cr_accounts = {p.account for p in entry.postings if p.side is Side.CR}
    for name in sorted(dr_accounts & cr_accounts):
        warnings.append(f"account {name!r} is both debited and credited")
    ok = not unknown and not mismatched and residual.is_zero()
    return EntryValidation(
        ok=ok,
        unknown_accounts=tuple(unknown),
        dimension_mismatches=tuple(mismatched),
        residual=residual,
        warnings=tuple(warnings),
    )


def post(ledger: Ledger, journal: Iterable[JournalEntry]) -> Ledger:
    """Add every entry's zero-terms to the account balances, in order.

    All-or-nothing: the first entry that fails validation raises
    :class:`PostingError` and nothing is applied.  Balances accumulate raw
    debits and credits; reduction is a separate, explicit step.
    """
    entries = list(journal)
    for i, entry in enumerate(entries):
        report = validate_entry(entry, ledger)
        if not report.ok:
            raise PostingError(i, entry, report)
    balances = {acc.name: acc.balance for acc in ledger.accounts}
    for entry in entries:
        for posting in entry.postings:
            balances[posting.account] = balances[posting.account] + posting.term()
    return ledger.with_balances(balances)


def trial_balance(ledger: Ledger) -> TrialBalance:
    """Sum the debit sides and the credit sides of every account."""
    debit = NatVec.zeros(ledger.dimension)
    credit = NatVec.zeros(ledger.dimension)
    for acc in ledger.accounts:
        debit = debit + acc.balance.debit
        credit = credit + acc.balance.credit
    return TrialBalance(debit, credit, balanced=debit == credit)


def reduce_ledger(ledger: Ledger) -> Ledger:
    """Replace every balance with its reduced form."""
    return ledger.with_balances(
        {acc.name: acc.balance.reduced() for acc in ledger.accounts}
    )


def decode_equation(ledger: Ledger) -> BalanceSheetEquation:
    """Decode each balance on its account's side, rebuilding the equation."""
    lhs = tuple(
        (acc.name, acc.balance.debit_balance())
        for acc in ledger.accounts
        if acc.role is Side.DR
    )
    rhs = tuple(
        (acc.name, acc.balance.credit_balance())
        for acc in ledger.accounts
        if acc.role is Side.CR
    )
    return BalanceSheetEquation(lhs, rhs)


def close_nominal(
    ledger: Ledger, equity_account: str
) -> tuple[Ledger, list[JournalEntry]]:
    """Transfer every nominal balance into `equity_account` and post it.

    One entry per nominal account with a nonzero reduced balance; after
    posting, every nominal account holds a zero-term.  Returns the closed
    ledger together with the generated entries.
    """
    equity = ledger.account(equity_account)
    if equity.role is not Side.CR:
        raise LedgerError(f"equity account {equity_account!r} is not credit-balance")
    if equity.nominal:
        raise LedgerError(f"equity account {equity_account!r} is nominal")
    entries = []
    for acc in ledger.accounts:
        if not acc.nominal:
            continue
        balance = acc.balance.reduced()
        if balance.is_zero():
            continue
        postings = []
        if not balance.debit.is_zero():
            postings.append(Posting(acc.name, Side.CR, balance.debit))
            postings.append(Posting(equity_account, Side.DR, balance.debit))
        if not balance.credit.is_zero():
            postings.append(Posting(acc.name, Side.DR, balance.credit))
            postings.append(Posting(equity_account, Side.CR, balance.credit))
        entries.append(
            JournalEntry(f"close {acc.name} into {equity_account}", tuple(postings))
        )
    return post(ledger, entries), entries
