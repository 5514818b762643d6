"""Fixtures for the two worked examples used throughout the suite."""

import pytest

from pacioli import (
    BalanceSheetEquation,
    IntVec,
    JournalEntry,
    Ledger,
    NatVec,
    Posting,
    Side,
    encode_equation,
)

nv = NatVec.of
iv = IntVec.of


@pytest.fixture
def scalar_ledger() -> Ledger:
    eq = BalanceSheetEquation(
        lhs=(("Assets", iv(15000)),),
        rhs=(("Liabilities", iv(10000)), ("Equity", iv(5000))),
    )
    return encode_equation(eq, unit_names=("usd",))


@pytest.fixture
def scalar_journal() -> list[JournalEntry]:
    return [
        JournalEntry(
            "inputs used up",
            (Posting("Assets", Side.CR, nv(1200)), Posting("Equity", Side.DR, nv(1200))),
        ),
        JournalEntry(
            "product sold",
            (Posting("Assets", Side.DR, nv(1500)), Posting("Equity", Side.CR, nv(1500))),
        ),
        JournalEntry(
            "loan payment",
            (Posting("Assets", Side.CR, nv(800)), Posting("Liabilities", Side.DR, nv(800))),
        ),
    ]


@pytest.fixture
def vector_ledger() -> Ledger:
    eq = BalanceSheetEquation(
        lhs=(("Assets", iv(9000, 40, 50)),),
        rhs=(("Liabilities", iv(10000, 0, 0)), ("Equity", iv(-1000, 40, 50))),
    )
    return encode_equation(eq, unit_names=("cash", "widgets", "half-widgets"))


@pytest.fixture
def vector_journal() -> list[JournalEntry]:
    return [
        JournalEntry(
            "inputs used up in production",
            (
                Posting("Assets", Side.CR, nv(0, 0, 30)),
                Posting("Equity", Side.DR, nv(0, 0, 30)),
            ),
        ),
        JournalEntry(
            "outputs produced",
            (
                Posting("Assets", Side.DR, nv(0, 15, 0)),
                Posting("Equity", Side.CR, nv(0, 15, 0)),
            ),
        ),
        JournalEntry(
            "outputs sold",
            (
                Posting("Assets", Side.DR, nv(1500, 0, 0)),
                Posting("Assets", Side.CR, nv(0, 15, 0)),
                Posting("Equity", Side.DR, nv(0, 15, 0)),
                Posting("Equity", Side.CR, nv(1500, 0, 0)),
            ),
        ),
        JournalEntry(
            "loan payment",
            (
                Posting("Assets", Side.CR, nv(800, 0, 0)),
                Posting("Liabilities", Side.DR, nv(800, 0, 0)),
            ),
        ),
    ]
