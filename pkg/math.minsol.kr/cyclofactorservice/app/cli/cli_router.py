"""
CLI 라우터
argparse 로 명령을 JobSpec 으로 바꾸고, 명령별 처리기로 보낸 뒤 텍스트/JSON 으로 렌더링한다.
"""
import argparse
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd
from pydantic import ValidationError

from app.cli.cli_schema import (
    Command,
    CommandResult,
    CompareReport,
    CountReport,
    Engine,
    FactorizationReport,
    FactorRecord,
    JobSpec,
    OutputFormat,
    SweepRow,
)
from app.config import get_config
from app.explicit.explicit_dataset import FactorSource, Factorization, LabeledFactor
from app.explicit.explicit_method import count_factors
from app.explicit.explicit_service import get_service as get_explicit_service
from app.number.number_method import prime_power, valuation
from app.oracle.oracle_service import get_service as get_oracle_service
from app.poly.poly_method import render_poly
from app.table.table_dataset import TABLE_NAMES
from app.table.table_service import get_service as get_table_service
from common.exceptions import (
    EXIT_SUCCESS,
    EXIT_VERIFICATION_FAILED,
    ResourceBoundException,
    ServiceException,
    ValidationException,
)
from common.middleware import LoggingMiddleware
from common.utils import create_error_response, dump_json

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# 인자 파싱
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    common.add_argument("--verbose", action="store_true", help="INFO 로그")
    common.add_argument("--debug", action="store_true", help="DEBUG 로그")

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("--p", type=int, required=True, help="표수 (소수)")
    single.add_argument("--s", type=int, default=1, help="q = p^s")
    single.add_argument("--n", type=int, required=True, help="x^n - 1")

    parser = argparse.ArgumentParser(
        prog="cyclofactor",
        description="x^n - 1 over F_q: explicit factorization, closed-form counts and the cyclotomic coset oracle",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    factor = commands.add_parser("factor", parents=[common, single], help="explicit factorization")
    factor.add_argument("--engine", choices=[e.value for e in Engine], default=Engine.EXPLICIT.value)
    commands.add_parser("count", parents=[common, single], help="closed-form factor count")
    commands.add_parser("oracle", parents=[common, single], help="cyclotomic coset factorization")
    commands.add_parser("compare", parents=[common, single], help="explicit vs oracle multisets")

    sweep = commands.add_parser("sweep", parents=[common], help="grid of (q, n) jobs")
    sweep.add_argument("--q", type=int, nargs="+", required=True, dest="qs")
    sweep.add_argument("--n-max", type=int, required=True)
    sweep.add_argument("--n-min", type=int, default=1)
    sweep.add_argument("--engine", choices=[Engine.EXPLICIT.value, Engine.BOTH.value], default=Engine.EXPLICIT.value)
    sweep.add_argument("--allow-char-power", action="store_true")
    sweep.add_argument("--workers", type=int, default=None)

    table = commands.add_parser("table", parents=[common], help="reproduce a published count table")
    table.add_argument("--table", choices=list(TABLE_NAMES), required=True)
    table.add_argument("--max-span", type=int, default=3)
    return parser


def parse_job(args: argparse.Namespace) -> JobSpec:
    """argparse 결과를 JobSpec 으로 (pydantic 오류는 ValidationException)"""
    fields = {k: v for k, v in vars(args).items() if k not in ("verbose", "debug") and v is not None}
    try:
        return JobSpec(**fields)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise ValidationException(f"invalid arguments: {messages}") from e


# ---------------------------------------------------------------------------
# 렌더링 도우미
# ---------------------------------------------------------------------------

def _records(factors: Sequence[LabeledFactor]) -> List[FactorRecord]:
    return [
        FactorRecord(
            degree=f.degree,
            multiplicity=f.multiplicity,
            source=f.source.value,
            poly=render_poly(f.poly),
        )
        for f in factors
    ]


def _factor_lines(records: Sequence[FactorRecord]) -> List[str]:
    lines = []
    for r in records:
        power = f"  ^{r.multiplicity}" if r.multiplicity > 1 else ""
        lines.append(f"  {r.degree:>4}  {r.source:<22}  {r.poly}{power}")
    return lines


def _degree_table(counts: Dict) -> List[str]:
    lines = ["degree: count"]
    lines.extend(f"  {degree}: {count}" for degree, count in counts.items())
    return lines


def _error_code(e: ServiceException) -> str:
    if isinstance(e, ResourceBoundException):
        return "RESOURCE_BOUND"
    if isinstance(e, ValidationException):
        return "INVALID_INPUT"
    return "VERIFICATION_FAILED"


def render_error(e: ServiceException, fmt: OutputFormat) -> CommandResult:
    if fmt == OutputFormat.JSON:
        body = dump_json(create_error_response(e.detail, _error_code(e), e.exit_code))
    else:
        body = f"error: {e.detail}\n"
    return CommandResult(exit_code=e.exit_code, output=body, error=True)


# ---------------------------------------------------------------------------
# 명령 처리기
# ---------------------------------------------------------------------------

def oracle_reference(fz: Factorization) -> Factorization:
    """fz 와 같은 (n, q) 의 오라클 인수분해 (p | n 이면 x^{n0} - 1 을 p^e 중복도로 올린다)"""
    p, _ = prime_power(fz.q)
    e = valuation(p, fz.n)
    n0 = fz.n // p ** e
    reference = get_oracle_service().oracle_factor(n0, fz.q, fz.case)
    if e:
        lifted = tuple(
            replace(f, multiplicity=p ** e, source=FactorSource.CHAR_POWER) for f in reference.factors
        )
        reference = replace(reference, n=fz.n, factors=lifted)
    return reference


def _differs_from_oracle(fz: Factorization) -> bool:
    only_explicit, only_oracle = get_oracle_service().compare_factorizations(fz, oracle_reference(fz))
    return bool(only_explicit or only_oracle)


def _verified_report(job: JobSpec, fz: Factorization, extra_failures: Sequence[str] = ()) -> CommandResult:
    """검증 후 인수분해 보고서를 만든다 (실패 시 종료 코드 1)"""
    verification = get_oracle_service().verify_factorization(fz)
    failures = verification.failed_checks() + list(extra_failures)
    notes = list(fz.notes) + verification.notes
    records = _records(fz.factors)
    report = FactorizationReport(
        p=fz.p,
        s=fz.s,
        q=fz.q,
        n=fz.n,
        case=fz.case.tag.value,
        w=fz.case.w,
        total=fz.total,
        factors=records,
        verified=not failures,
        notes=notes,
    )
    exit_code = EXIT_SUCCESS if not failures else EXIT_VERIFICATION_FAILED
    if job.format == OutputFormat.JSON:
        return CommandResult(exit_code=exit_code, output=dump_json(report.model_dump(mode="json")))

    lines = [
        f"x^{fz.n} - 1 over {fz.fq.render()}",
        f"case: {report.case} (w = {report.w}), engine: {fz.engine}",
        f"factors: {report.total}",
    ]
    lines.extend(_factor_lines(records))
    lines.extend(_degree_table(fz.counts_by_degree))
    lines.extend(f"note: {note}" for note in notes)
    lines.append("VERIFIED" if not failures else f"VERIFICATION FAILED: {', '.join(failures)}")
    return CommandResult(exit_code=exit_code, output="\n".join(lines) + "\n")


def handle_factor(job: JobSpec) -> CommandResult:
    if job.engine == Engine.ORACLE:
        return handle_oracle(job)
    fz = get_explicit_service().factor(job.n, job.q)
    extra: List[str] = []
    if job.engine == Engine.BOTH:
        only_explicit, only_oracle = get_oracle_service().compare_factorizations(fz, oracle_reference(fz))
        if only_explicit or only_oracle:
            extra.append("oracle_equivalence")
            fz = fz.with_notes(
                f"differs from the oracle: {len(only_explicit)} explicit-only, {len(only_oracle)} oracle-only factors"
            )
    return _verified_report(job, fz, extra)


def handle_oracle(job: JobSpec) -> CommandResult:
    return _verified_report(job, get_oracle_service().oracle_factor(job.n, job.q))


def handle_count(job: JobSpec) -> CommandResult:
    result = count_factors(job.n, job.q)
    report = CountReport(
        p=job.p,
        s=job.s,
        q=job.q,
        n=job.n,
        case=result.case.tag.value,
        w=result.case.w,
        total=result.total,
        multiplicity=result.multiplicity,
        by_degree={str(d): c for d, c in result.by_degree.items()},
    )
    if job.format == OutputFormat.JSON:
        return CommandResult(exit_code=EXIT_SUCCESS, output=dump_json(report.model_dump(mode="json")))
    lines = [
        f"x^{job.n} - 1 over F_{job.q}",
        f"case: {report.case} (w = {report.w})",
        f"total: {report.total}",
    ]
    if result.multiplicity > 1:
        lines.append(f"multiplicity: {result.multiplicity}")
    lines.extend(_degree_table(result.by_degree))
    return CommandResult(exit_code=EXIT_SUCCESS, output="\n".join(lines) + "\n")


def handle_compare(job: JobSpec) -> CommandResult:
    explicit = get_explicit_service().factor(job.n, job.q)
    oracle = oracle_reference(explicit)
    only_explicit, only_oracle = get_oracle_service().compare_factorizations(explicit, oracle)
    report = CompareReport(
        p=job.p,
        s=job.s,
        q=job.q,
        n=job.n,
        case=explicit.case.tag.value,
        w=explicit.case.w,
        equal=not only_explicit and not only_oracle,
        only_explicit=_records(only_explicit),
        only_oracle=_records(only_oracle),
    )
    exit_code = EXIT_SUCCESS if report.equal else EXIT_VERIFICATION_FAILED
    if job.format == OutputFormat.JSON:
        return CommandResult(exit_code=exit_code, output=dump_json(report.model_dump(mode="json")))
    lines = [
        f"x^{job.n} - 1 over F_{job.q}: case {report.case} (w = {report.w})",
        f"explicit: {explicit.total} factors, oracle: {oracle.total} factors",
    ]
    if report.equal:
        lines.append("diff: empty")
    else:
        lines.append("only explicit:")
        lines.extend(_factor_lines(report.only_explicit))
        lines.append("only oracle:")
        lines.extend(_factor_lines(report.only_oracle))
        lines.append("DIFF NOT EMPTY")
    return CommandResult(exit_code=exit_code, output="\n".join(lines) + "\n")


def sweep_job(q: int, n: int, engine: str) -> dict:
    """sweep 한 칸 (프로세스 풀에서 실행되므로 모듈 최상위 함수)"""
    try:
        fz = get_explicit_service().factor(n, q)
        failures = get_oracle_service().verify_factorization(fz).failed_checks()
        if engine == Engine.BOTH.value and fz.engine == "explicit" and _differs_from_oracle(fz):
            failures.append("oracle_equivalence")
        row = SweepRow(
            q=q,
            n=n,
            case=fz.case.tag.value,
            w=fz.case.w,
            total=fz.total,
            status="pass" if not failures else "fail",
            detail=", ".join(failures) if failures else fz.engine,
        )
    except ResourceBoundException as e:
        row = SweepRow(q=q, n=n, case="", w=0, total=0, status="bound", detail=e.detail)
    except ServiceException as e:
        row = SweepRow(q=q, n=n, case="", w=0, total=0, status="fail", detail=e.detail)
    return row.model_dump()


def handle_sweep(job: JobSpec) -> CommandResult:
    jobs = [
        (q, n)
        for q in sorted(set(job.qs))
        for n in range(job.n_min, job.n_max + 1)
        if job.allow_char_power or gcd(n, q) == 1
    ]
    workers = job.workers or get_config().sweep_workers
    logger.info(f"sweep 시작: 작업 {len(jobs)}개, workers={workers}")
    qs = [q for q, _ in jobs]
    ns = [n for _, n in jobs]
    engines = [job.engine.value] * len(jobs)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(sweep_job, qs, ns, engines))
    else:
        rows = [sweep_job(q, n, e) for q, n, e in zip(qs, ns, engines)]

    rows.sort(key=lambda row: (row["q"], row["n"]))
    frame = pd.DataFrame.from_records(rows, columns=list(SweepRow.model_fields))
    statuses = frame["status"].value_counts()
    failed = int(statuses.get("fail", 0))
    bounded = int(statuses.get("bound", 0))
    passed = int(statuses.get("pass", 0))
    exit_code = EXIT_SUCCESS if failed == 0 else EXIT_VERIFICATION_FAILED

    if job.format == OutputFormat.JSON:
        document = {
            "rows": rows,
            "passed": passed,
            "failed": failed,
            "bound": bounded,
        }
        return CommandResult(exit_code=exit_code, output=dump_json(document))
    body = frame.to_string(index=False) if len(frame) else "(no jobs)"
    summary = f"passed: {passed}, failed: {failed}, bound: {bounded}"
    return CommandResult(exit_code=exit_code, output=f"{body}\n{summary}\n")


def handle_table(job: JobSpec) -> CommandResult:
    service = get_table_service()
    summary = service.check_table(job.table, job.max_span)
    records = service.records(summary.checks)
    frame = service.to_frame(summary.checks)
    mismatches = len(summary.mismatches)
    exit_code = EXIT_SUCCESS if mismatches == 0 else EXIT_VERIFICATION_FAILED
    if job.format == OutputFormat.JSON:
        document = {
            "table": job.table,
            "rows": records,
            "errata": len(summary.errata),
            "mismatches": mismatches,
        }
        return CommandResult(exit_code=exit_code, output=dump_json(document))
    tail = f"points: {len(summary.checks)}, errata: {len(summary.errata)}, mismatches: {mismatches}"
    return CommandResult(exit_code=exit_code, output=f"{frame.to_string(index=False)}\n{tail}\n")


HANDLERS: Dict[Command, Callable[[JobSpec], CommandResult]] = {
    Command.FACTOR: handle_factor,
    Command.COUNT: handle_count,
    Command.ORACLE: handle_oracle,
    Command.COMPARE: handle_compare,
    Command.SWEEP: handle_sweep,
    Command.TABLE: handle_table,
}


def _execute(job: JobSpec) -> CommandResult:
    try:
        return HANDLERS[job.command](job)
    except ServiceException as e:
        logger.error(f"{job.command.value} 실패: {e.detail}")
        return render_error(e, job.format)


def run(job: JobSpec) -> CommandResult:
    """명령 실행 (요청/응답 로그는 LoggingMiddleware 가 남긴다)"""
    return LoggingMiddleware(_execute).dispatch(job)


def run_argv(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """인자 목록을 파싱해 실행 (잘못된 인자는 종료 코드 2 의 오류 결과)"""
    args = build_parser().parse_args(argv)
    try:
        job = parse_job(args)
    except ValidationException as e:
        return render_error(e, OutputFormat(args.format))
    return run(job)

