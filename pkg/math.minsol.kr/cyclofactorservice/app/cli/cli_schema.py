"""
CLI 요청/응답 스키마
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy import isprime

from app.number.number_method import prime_power
from app.table.table_dataset import TABLE_NAMES
from common.exceptions import ServiceException


class Command(str, Enum):
    FACTOR = "factor"
    COUNT = "count"
    ORACLE = "oracle"
    COMPARE = "compare"
    SWEEP = "sweep"
    TABLE = "table"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class Engine(str, Enum):
    EXPLICIT = "explicit"
    ORACLE = "oracle"
    BOTH = "both"


# p, s, n 이 필요한 명령
SINGLE_COMMANDS = (Command.FACTOR, Command.COUNT, Command.ORACLE, Command.COMPARE)


class JobSpec(BaseModel):
    """명령 하나의 실행 명세"""
    command: Command
    p: Optional[int] = Field(None, ge=2, description="표수 (소수)")
    s: int = Field(1, ge=1, description="q = p^s 의 지수")
    n: Optional[int] = Field(None, ge=1, description="x^n - 1 의 n")
    format: OutputFormat = OutputFormat.TEXT
    engine: Engine = Engine.EXPLICIT
    qs: List[int] = Field(default_factory=list, description="sweep 의 q 목록")
    n_min: int = Field(1, ge=1)
    n_max: Optional[int] = Field(None, ge=1)
    allow_char_power: bool = False
    workers: Optional[int] = Field(None, ge=1)
    table: Optional[str] = None
    max_span: int = Field(3, ge=1)

    @field_validator("p")
    @classmethod
    def check_prime(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not isprime(value):
            raise ValueError(f"p = {value} is not prime")
        return value

    @field_validator("qs")
    @classmethod
    def check_prime_powers(cls, values: List[int]) -> List[int]:
        for q in values:
            try:
                prime_power(q)
            except ServiceException as e:
                raise ValueError(e.detail) from e
        return values

    @model_validator(mode="after")
    def check_command_fields(self) -> "JobSpec":
        if self.command in SINGLE_COMMANDS and (self.p is None or self.n is None):
            raise ValueError(f"{self.command.value} requires --p and --n")
        if self.command == Command.SWEEP:
            if not self.qs or self.n_max is None:
                raise ValueError("sweep requires --q and --n-max")
            if self.n_max < self.n_min:
                raise ValueError(f"--n-max {self.n_max} is below --n-min {self.n_min}")
        if self.command == Command.TABLE and self.table not in TABLE_NAMES:
            raise ValueError(f"table must be one of {', '.join(TABLE_NAMES)}")
        return self

    @property
    def q(self) -> Optional[int]:
        return None if self.p is None else self.p ** self.s

    def describe(self) -> str:
        if self.command == Command.SWEEP:
            return f"q={self.qs} n={self.n_min}..{self.n_max} engine={self.engine.value}"
        if self.command == Command.TABLE:
            return f"table={self.table} max_span={self.max_span}"
        return f"p={self.p} s={self.s} n={self.n} engine={self.engine.value}"


class FactorRecord(BaseModel):
    degree: int
    multiplicity: int
    source: str
    poly: str


class FactorizationReport(BaseModel):
    """factor / oracle 결과"""
    p: int
    s: int
    q: int
    n: int
    case: str
    w: int
    total: int
    factors: List[FactorRecord]
    verified: bool
    notes: List[str] = Field(default_factory=list)


class CountReport(BaseModel):
    p: int
    s: int
    q: int
    n: int
    case: str
    w: int
    total: int
    multiplicity: int
    by_degree: Dict[str, int]


class CompareReport(BaseModel):
    p: int
    s: int
    q: int
    n: int
    case: str
    w: int
    equal: bool
    only_explicit: List[FactorRecord]
    only_oracle: List[FactorRecord]


class SweepRow(BaseModel):
    q: int
    n: int
    case: str
    w: int
    total: int
    status: str
    detail: str = ""


@dataclass(frozen=True)
class CommandResult:
    """종료 코드와 출력 (error 이면 텍스트 모드에서 stderr 로 나간다)"""
    exit_code: int
    output: str
    error: bool = False
