"""
Cyclofactor Service - 명령행 진입점
x^n - 1 의 F_q 위 명시적 인수분해, 닫힌 꼴 개수, 원분 잉여류 오라클.

사용 예:
    python -m app.main factor --p 3 --n 104
    python -m app.main sweep --q 3 5 7 --n-max 200 --workers 4
"""
import sys
from pathlib import Path
from typing import Optional, Sequence

# 공통 모듈 경로 추가 (최우선)
current_file = Path(__file__).resolve()
base_dir = current_file.parent.parent  # cyclofactorservice
root_dir = base_dir.parent  # math.minsol.kr (common 위치)

for path in (base_dir, root_dir):
    path_str = str(path)
    if path_str not in sys.path:
        sys.path.insert(0, path_str)

from app.cli.cli_router import build_parser, parse_job, render_error, run  # noqa: E402
from app.cli.cli_schema import OutputFormat  # noqa: E402
from app.config import get_config  # noqa: E402
from common.exceptions import EXIT_INVALID_INPUT, ValidationException  # noqa: E402
from common.utils import setup_logging  # noqa: E402


def _log_level(verbose: bool, debug: bool) -> str:
    if debug:
        return "DEBUG"
    if verbose:
        return "INFO"
    return get_config().log_level


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 는 잘못된 인자에 2, --help 에 0 으로 끝낸다
        return EXIT_INVALID_INPUT if e.code not in (0, None) else 0

    logger = setup_logging(
        get_config().service_name,
        _log_level(args.verbose, args.debug),
        "app",
        "common",
    )
    logger.info(f"{get_config().service_name} v{get_config().service_version} 시작: {args.command}")

    try:
        job = parse_job(args)
    except ValidationException as e:
        result = render_error(e, OutputFormat(args.format))
    else:
        result = run(job)

    stream = sys.stderr if result.error and args.format == OutputFormat.TEXT.value else sys.stdout
    stream.write(result.output)
    stream.flush()
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
