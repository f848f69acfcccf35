"""
인수 개수 표 자료형
발표된 개수 표의 각 행을 (q, n 의 모양, 지수 범위, 인쇄된 공식, 정정 공식) 으로 보관한다.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

Exponents = Dict[str, int]
Formula = Callable[[Exponents], Fraction]

# (지수 이름, 하한, 상한 또는 None)
Range = Tuple[str, int, Optional[int]]

TABLE_NAMES = ("1", "2", "3.5")


@dataclass(frozen=True)
class TableRow:
    """표의 한 행"""
    table: str
    q: int
    family: str
    ranges: Tuple[Range, ...]
    n_of: Callable[[Exponents], int]
    printed: Formula
    corrected: Optional[Formula] = None
    note: str = ""


@dataclass(frozen=True)
class TableCheck:
    """한 격자점의 대조 결과 (status: match, erratum, mismatch)"""
    table: str
    q: int
    family: str
    exponents: Tuple[Tuple[str, int], ...]
    n: int
    printed: Fraction
    expected: Fraction
    computed: int
    cosets: int
    status: str

    @property
    def exponent_text(self) -> str:
        return ", ".join(f"{name}={value}" for name, value in self.exponents)


def _F(value) -> Fraction:
    return Fraction(value)


# ---------------------------------------------------------------------------
# w = 3 계열
# ---------------------------------------------------------------------------

def _table_one() -> List[TableRow]:
    q9_form = lambda e: _F(7 ** e["k2"] * (12 * e["k"] + 1) + 2) / 3
    q9_big = lambda e: _F(24 * e["k2"] * e["k"] + 2 * e["k2"] + 4 * e["k"] + 1)
    return [
        TableRow("1", 2, "7^k", (("k", 1, None),),
                 lambda e: 7 ** e["k"],
                 lambda e: _F(2 * e["k"] + 1)),
        TableRow("1", 3, "2^k1 13^k", (("k1", 0, 1), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 13 ** e["k"],
                 lambda e: _F(2 ** e["k1"] * (4 * e["k"] + 1))),
        TableRow("1", 3, "2^k1 13^k", (("k1", 2, None), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 13 ** e["k"],
                 lambda e: _F((e["k1"] + 1) * (4 * e["k"] + 1)),
                 corrected=lambda e: (
                     _F((e["k1"] + 1) * (4 * e["k"] + 1)) if e["k1"] == 2
                     else _F(8 * e["k1"] * e["k"] + 2 * e["k1"] - 4 * e["k"] - 1)
                 ),
                 note="holds only while 8 does not divide n; k1 >= 3 follows 8*k1*k + 2*k1 - 4*k - 1"),
        TableRow("1", 4, "3^k1 7^k", (("k1", 0, 1), ("k", 1, None)),
                 lambda e: 3 ** e["k1"] * 7 ** e["k"],
                 lambda e: _F(3 ** e["k1"] * (2 * e["k"] + 1))),
        TableRow("1", 4, "3^k1 7^k", (("k1", 2, None), ("k", 1, None)),
                 lambda e: 3 ** e["k1"] * 7 ** e["k"],
                 lambda e: _F(12 * e["k1"] * e["k"] + 2 * e["k1"] - 6 * e["k"] + 1)),
        TableRow("1", 5, "2^k1 31^k", (("k1", 0, 2), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 31 ** e["k"],
                 lambda e: _F(2 ** e["k1"] * (10 * e["k"] + 1))),
        TableRow("1", 5, "2^k1 31^k", (("k1", 2, None), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 31 ** e["k"],
                 lambda e: _F(2 * e["k1"] * (10 * e["k"] + 1))),
        TableRow("1", 7, "2^k1 3^k2 19^k", (("k1", 0, 1), ("k2", 0, 1), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 3 ** e["k2"] * 19 ** e["k"],
                 lambda e: _F(2 ** e["k1"] * 3 ** e["k2"] * (6 * e["k"] + 1))),
        TableRow("1", 7, "2^k1 3^k2 19^k", (("k1", 0, 1), ("k2", 2, None), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 3 ** e["k2"] * 19 ** e["k"],
                 lambda e: _F(2 ** e["k1"] * (36 * e["k2"] * e["k"] + 2 * e["k2"] - 18 * e["k"] + 1))),
        TableRow("1", 7, "4 3^k2 19^k", (("k2", 0, 1), ("k", 1, None)),
                 lambda e: 4 * 3 ** e["k2"] * 19 ** e["k"],
                 lambda e: _F(3 ** (e["k2"] + 1) * (6 * e["k"] + 1))),
        TableRow("1", 7, "4 3^k2 19^k", (("k2", 2, None), ("k", 1, None)),
                 lambda e: 4 * 3 ** e["k2"] * 19 ** e["k"],
                 lambda e: _F(3 * (36 * e["k2"] * e["k"] + 2 * e["k2"] - 18 * e["k"] + 1))),
        TableRow("1", 8, "7^k1 73^k", (("k1", 0, 1), ("k", 1, None)),
                 lambda e: 7 ** e["k1"] * 73 ** e["k"],
                 lambda e: _F(7 ** e["k1"] * (24 * e["k"] + 1))),
        TableRow("1", 8, "7^k1 73^k", (("k1", 1, None), ("k", 1, None)),
                 lambda e: 7 ** e["k1"] * 73 ** e["k"],
                 lambda e: _F((6 * e["k1"] + 1) * (24 * e["k"] + 1))),
        TableRow("1", 9, "2^k1 7^k2 13^k", (("k1", 0, 3), ("k2", 0, 1), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 7 ** e["k2"] * 13 ** e["k"],
                 lambda e: 2 ** e["k1"] * q9_form(e)),
        TableRow("1", 9, "2^k1 7^k2 13^k", (("k1", 0, 3), ("k2", 2, None), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 7 ** e["k2"] * 13 ** e["k"],
                 lambda e: _F(2 ** e["k1"] * (6 * e["k2"] * e["k"] + 2 * e["k2"] + 4 * e["k"] + 1)),
                 corrected=lambda e: 2 ** e["k1"] * q9_big(e),
                 note="coefficient of k2*k is 24, not 6"),
        TableRow("1", 9, "2^k1 7^k2 13^k", (("k1", 4, None), ("k2", 0, 1), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 7 ** e["k2"] * 13 ** e["k"],
                 lambda e: 4 * (e["k1"] - 2) * q9_form(e),
                 corrected=lambda e: 4 * (e["k1"] - 1) * q9_form(e),
                 note="leading factor is 4(k1 - 1), not 4(k1 - 2)"),
        TableRow("1", 9, "2^k1 7^k2 13^k", (("k1", 4, None), ("k2", 2, None), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 7 ** e["k2"] * 13 ** e["k"],
                 lambda e: 4 * (e["k1"] - 2) * q9_big(e),
                 corrected=lambda e: 4 * (e["k1"] - 1) * q9_big(e),
                 note="leading factor is 4(k1 - 1), not 4(k1 - 2)"),
    ]


# ---------------------------------------------------------------------------
# w = 2 계열
# ---------------------------------------------------------------------------

def _table_two() -> List[TableRow]:
    return [
        TableRow("2", 2, "3^k", (("k", 1, None),),
                 lambda e: 3 ** e["k"],
                 lambda e: _F(e["k"] + 1)),
        TableRow("2", 4, "3^k1 5^k2", (("k1", 0, 1), ("k2", 1, None)),
                 lambda e: 3 ** e["k1"] * 5 ** e["k2"],
                 lambda e: _F(3 ** e["k1"] * (2 * e["k2"] + 1))),
        TableRow("2", 4, "3^k1 5^k2", (("k1", 2, None), ("k2", 1, None)),
                 lambda e: 3 ** e["k1"] * 5 ** e["k2"],
                 lambda e: _F((2 * e["k1"] + 1) * (2 * e["k2"] + 1))),
        TableRow("2", 5, "2^k1 3^k2", (("k1", 0, 2), ("k2", 1, None)),
                 lambda e: 2 ** e["k1"] * 3 ** e["k2"],
                 lambda e: _F(2 ** e["k1"] * (e["k2"] + 1))),
        TableRow("2", 5, "2^k1 3^k2", (("k1", 3, None), ("k2", 1, None)),
                 lambda e: 2 ** e["k1"] * 3 ** e["k2"],
                 lambda e: _F(4 * e["k1"] * e["k2"] + 2 * e["k1"] - 4 * e["k2"])),
        TableRow("2", 8, "3^k1 7^k2", (("k1", 1, 2), ("k2", 0, 1)),
                 lambda e: 3 ** e["k1"] * 7 ** e["k2"],
                 lambda e: _F((3 ** e["k1"] + 1) * 7 ** e["k2"]) / 2),
        TableRow("2", 8, "3^k1 7^k2", (("k1", 1, 2), ("k2", 2, None)),
                 lambda e: 3 ** e["k1"] * 7 ** e["k2"],
                 lambda e: _F(7 + 3 ** e["k1"] * (6 * e["k2"] + 1)) / 2,
                 corrected=lambda e: _F((3 ** e["k1"] + 1) * (6 * e["k2"] + 1)) / 2,
                 note="numerator is (3^k1 + 1)(6*k2 + 1)"),
        TableRow("2", 8, "3^k1 7^k2", (("k1", 3, None), ("k2", 0, 1)),
                 lambda e: 3 ** e["k1"] * 7 ** e["k2"],
                 lambda e: _F(7 ** e["k2"] * (3 * e["k1"] - 1))),
        TableRow("2", 8, "3^k1 7^k2", (("k1", 3, None), ("k2", 2, None)),
                 lambda e: 3 ** e["k1"] * 7 ** e["k2"],
                 lambda e: _F((3 * e["k1"] - 1) * (6 * e["k2"] + 1))),
        TableRow("2", 9, "2^k1 5^k2", (("k1", 0, 3), ("k2", 1, None)),
                 lambda e: 2 ** e["k1"] * 5 ** e["k2"],
                 lambda e: _F(2 ** e["k1"] * (2 * e["k2"] + 1))),
        TableRow("2", 9, "2^k1 5^k2", (("k1", 4, None), ("k2", 1, None)),
                 lambda e: 2 ** e["k1"] * 5 ** e["k2"],
                 lambda e: _F(4 * (4 * e["k1"] * e["k2"] + e["k1"] - 8 * e["k2"] - 1))),
    ]


# ---------------------------------------------------------------------------
# q = 3, 8 | n 계열
# ---------------------------------------------------------------------------

def _table_eight() -> List[TableRow]:
    return [
        TableRow("3.5", 3, "2^k1 13^k", (("k1", 3, None), ("k", 1, None)),
                 lambda e: 2 ** e["k1"] * 13 ** e["k"],
                 lambda e: _F(8 * e["k1"] * e["k"] + 2 * e["k1"] - 4 * e["k"] - 1)),
    ]


TABLES: Dict[str, Callable[[], List[TableRow]]] = {
    "1": _table_one,
    "2": _table_two,
    "3.5": _table_eight,
}


@dataclass
class TableSummary:
    """표 하나의 대조 집계"""
    table: str
    checks: List[TableCheck] = field(default_factory=list)

    @property
    def mismatches(self) -> List[TableCheck]:
        return [c for c in self.checks if c.status == "mismatch"]

    @property
    def errata(self) -> List[TableCheck]:
        return [c for c in self.checks if c.status == "erratum"]
