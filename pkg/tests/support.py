"""Shared test helpers.

The signed-integer oracle here works on raw component tuples with plain
Python int arithmetic and never routes through the library's own
operations, so it can independently adjudicate them.  The random-case
builders take a caller-seeded ``random.Random`` so every loop is
deterministic.
"""

from pathlib import Path

import hypothesis.strategies as st

from pacioli import (
    Account,
    IntVec,
    JournalEntry,
    Ledger,
    NatVec,
    Posting,
    Side,
    TTerm,
)

DATA = Path(__file__).parent / "data"


# --- independent signed-integer oracle (raw tuples in, raw tuples out) ---


def signed_of(term: TTerm) -> tuple[int, ...]:
    return tuple(d - c for d, c in zip(term.debit.components, term.credit.components))


def add_signed(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def neg_signed(a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in a)


def jordan_signed(a: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(max(x, 0) for x in a), tuple(-min(x, 0) for x in a)


# --- deterministic random case builders ---


def random_natvec(rng, dim: int, hi: int = 1000, lo: int = 0) -> NatVec:
    return NatVec(tuple(rng.randint(lo, hi) for _ in range(dim)))


def random_intvec(rng, dim: int, lo: int = -1000, hi: int = 1000) -> IntVec:
    return IntVec(tuple(rng.randint(lo, hi) for _ in range(dim)))


def random_tterm(rng, dim: int, hi: int = 1000) -> TTerm:
    return TTerm(random_natvec(rng, dim, hi), random_natvec(rng, dim, hi))


def random_ledger(rng, dim: int | None = None) -> Ledger:
    """A balanced ledger: random signed values that sum to zero, encoded
    with random extra padding so balances are not necessarily reduced."""
    dim = dim or rng.randint(1, 4)
    n = rng.randint(2, 5)
    values = [random_intvec(rng, dim) for _ in range(n - 1)]
    total = (0,) * dim
    for v in values:
        total = add_signed(total, v.components)
    values.append(IntVec(neg_signed(total)))
    accounts = []
    for i, value in enumerate(values):
        role = rng.choice((Side.DR, Side.CR))
        balance = TTerm.from_debit_balance(value)
        if rng.random() < 0.5:
            pad = random_natvec(rng, dim, 50)
            balance = balance + TTerm(pad, pad)
        accounts.append(Account(f"A{i + 1}", role, balance))
    units = tuple(f"u{k + 1}" for k in range(dim))
    return Ledger(dim, units, tuple(accounts))


def random_journal(
    rng,
    ledger: Ledger,
    n_entries: int | None = None,
    simple: bool = False,
    hi: int = 1000,
) -> list[JournalEntry]:
    """Valid entries built from balanced transfers.

    `simple=True` restricts each entry to a single transfer between two
    distinct accounts (what the transactions table requires).
    """
    names = ledger.names()
    if n_entries is None:
        n_entries = rng.randint(0, 5)
    entries = []
    for i in range(n_entries):
        transfers = 1 if simple else rng.randint(1, 3)
        postings = []
        for _ in range(transfers):
            debited = rng.choice(names)
            credited = rng.choice(names)
            while simple and credited == debited:
                credited = rng.choice(names)
            amount = random_natvec(rng, ledger.dimension, hi, lo=1 if simple else 0)
            postings.append(Posting(debited, Side.DR, amount))
            postings.append(Posting(credited, Side.CR, amount))
        entries.append(JournalEntry(f"txn {i + 1}", tuple(postings)))
    return entries


# --- hypothesis strategies ---


def components(limit: int = 1000):
    return st.integers(0, limit)


@st.composite
def natvecs(draw, dim: int | None = None, limit: int = 1000) -> NatVec:
    d = dim if dim is not None else draw(st.integers(1, 4))
    return NatVec(tuple(draw(st.lists(components(limit), min_size=d, max_size=d))))


@st.composite
def intvecs(draw, dim: int | None = None, limit: int = 1000) -> IntVec:
    d = dim if dim is not None else draw(st.integers(1, 4))
    return IntVec(
        tuple(draw(st.lists(st.integers(-limit, limit), min_size=d, max_size=d)))
    )


@st.composite
def tterms(draw, dim: int | None = None, limit: int = 1000) -> TTerm:
    d = dim if dim is not None else draw(st.integers(1, 4))
    return TTerm(draw(natvecs(dim=d, limit=limit)), draw(natvecs(dim=d, limit=limit)))


@st.composite
def tterm_pairs(draw, limit: int = 1000) -> tuple[TTerm, TTerm]:
    d = draw(st.integers(1, 4))
    return draw(tterms(dim=d, limit=limit)), draw(tterms(dim=d, limit=limit))


@st.composite
def tterm_triples(draw, limit: int = 1000) -> tuple[TTerm, TTerm, TTerm]:
    d = draw(st.integers(1, 4))
    return (
        draw(tterms(dim=d, limit=limit)),
        draw(tterms(dim=d, limit=limit)),
        draw(tterms(dim=d, limit=limit)),
    )
