"""Exact double-entry bookkeeping on the group of differences.

T-accounts are ordered pairs of unsigned integer vectors; with side-by-side
addition and cross-sum equality they form a commutative group, and the
whole double-entry cycle (encode an equation, journal transactions, post,
trial-balance, reduce, decode) is plain group arithmetic in it.  The same
machinery runs unchanged over vectors of physical quantities, values back
to scalars through exact price vectors, and maps onto the equivalent
signed single-sided system.
"""

from .algebra import DimensionMismatch, IntVec, NatVec, TTerm
from .fractions import Fraction
from .ledger import (
    Account,
    BalanceSheetEquation,
    EntryValidation,
    JournalEntry,
    Ledger,
    LedgerError,
    Posting,
    PostingError,
    Side,
    TrialBalance,
    close_nominal,
    decode_equation,
    encode_equation,
    post,
    reduce_ledger,
    trial_balance,
    validate_entry,
)
from .sss import (
    SignedAccount,
    SignedLedger,
    SignedRow,
    journal_to_signed,
    signed_post,
    to_signed,
    zero_row_check,
)
from .table import (
    TableError,
    TableSums,
    TransactionsTable,
    build_table,
    consistency_check,
    net_changes,
    table_sums,
)
from .valuation import PriceVector, dot_value, value_ledger
from .fileformat import (
    JOURNAL_MAGIC,
    LEDGER_MAGIC,
    ParseError,
    parse_journal,
    parse_ledger,
    render_journal,
    render_ledger,
)

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatch",
    "IntVec",
    "NatVec",
    "TTerm",
    "Fraction",
    "Account",
    "BalanceSheetEquation",
    "EntryValidation",
    "JournalEntry",
    "Ledger",
    "LedgerError",
    "Posting",
    "PostingError",
    "Side",
    "TrialBalance",
    "close_nominal",
    "decode_equation",
    "encode_equation",
    "post",
    "reduce_ledger",
    "trial_balance",
    "validate_entry",
    "SignedAccount",
    "SignedLedger",
    "SignedRow",
    "journal_to_signed",
    "signed_post",
    "to_signed",
    "zero_row_check",
    "TableError",
    "TableSums",
    "TransactionsTable",
    "build_table",
    "consistency_check",
    "net_changes",
    "table_sums",
    "PriceVector",
    "dot_value",
    "value_ledger",
    "JOURNAL_MAGIC",
    "LEDGER_MAGIC",
    "ParseError",
    "parse_journal",
    "parse_ledger",
    "render_journal",
    "render_ledger",
    "__version__",
]
