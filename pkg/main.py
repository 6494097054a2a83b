import os
from dotenv import load_dotenv
load_dotenv()
import sys
import copy
import logging
import argparse
import json
import time
from typing import Dict, Any, List, Optional

import numpy as np

import config as defaults
from catalog import CatalogBuilder, CatalogError, catalog_load, dump_catalog, select_entries
from codes.enumeration import BudgetExceededError, CodewordEnumerator
from codes.linear_code import LinearCode
from codes.low_weight import count_low_weight
from constructions.neighbor import NeighborError, NeighborSpec, neighbor
from constructions.registry import FAMILIES, get_construction
from fields.galois_fields import FieldMismatchError, FieldTag, format_row
from fields.vectors import FieldVector
from gleason import (
    GleasonRangeError,
    alpha_range,
    divisibility_check,
    extremal_enumerator,
    known_alpha_report,
    parametric_near_extremal,
    sweep,
)
from gleason.constants import WEIGHT_STEP, design_weights
from processors.verification_processor import VerificationProcessor, format_report
from storage.report_storage import ReportStorage
from validators.alpha_validator import family_m
from validators.design_validator import DesignValidator, design_from_words
from validators.self_duality_validator import SelfDualityValidator
from validators.validation_pipeline import ValidationPipeline

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad ids, bad parameters or an unreadable catalog; exit code 2."""


# Configure logging
def setup_logging(log_dir: str, log_level: str, quiet: bool = False):
    """Set up logging configuration."""
    os.makedirs(log_dir, exist_ok=True)

    level = getattr(logging, log_level.upper(), logging.INFO)
    stream_handler = logging.StreamHandler()
    if quiet:
        stream_handler.setLevel(logging.WARNING)

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[
            logging.FileHandler(os.path.join(log_dir, "nearext.log")),
            stream_handler,
        ],
        force=True,
    )

    # Set up verification log
    verification_logger = logging.getLogger("verification")
    for handler in list(verification_logger.handlers):
        verification_logger.removeHandler(handler)
        handler.close()
    verification_handler = logging.FileHandler(os.path.join(log_dir, "verification.log"))
    verification_handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s"))
    verification_logger.addHandler(verification_handler)
    verification_logger.setLevel(level)

    return logging.getLogger("main")


def load_config(config_path: Optional[str]) -> Dict[str, Any]:
    """Load a JSON configuration file with the same layout as build_config()."""
    if not config_path:
        return {}
    try:
        with open(config_path, "r") as f:
            return json.load(f)
    except (OSError, ValueError) as e:
        raise UsageError(f"Error loading config {config_path}: {str(e)}")


def build_config(args: argparse.Namespace) -> Dict[str, Any]:
    """Defaults from config.py (env applied), then --config JSON, then command-line flags."""
    settings = {
        "enumeration": copy.deepcopy(defaults.ENUMERATION_CONFIG),
        "low_weight": copy.deepcopy(defaults.LOW_WEIGHT_CONFIG),
        "verify": copy.deepcopy(defaults.VERIFY_CONFIG),
        "gleason": copy.deepcopy(defaults.GLEASON_CONFIG),
        "catalog_path": defaults.CATALOG_PATH,
        "report_dir": defaults.REPORT_DIR,
    }
    for key, value in load_config(args.config).items():
        if isinstance(value, dict) and isinstance(settings.get(key), dict):
            settings[key].update(value)
        else:
            settings[key] = value

    if args.budget is not None:
        settings["enumeration"]["budget"] = args.budget
    if args.threads is not None:
        settings["enumeration"]["threads"] = args.threads
        settings["gleason"]["sweep_workers"] = args.threads
    if args.catalog:
        settings["catalog_path"] = args.catalog
    if args.quiet or not sys.stderr.isatty():
        settings["enumeration"]["show_progress"] = False
    for key in ("include_optional", "design_weights", "workers"):
        value = getattr(args, key, None)
        if value is not None and value is not False:
            settings["verify"]["max_workers" if key == "workers" else key] = value
    return settings


def parse_params(tokens: List[str]) -> Dict[str, str]:
    params = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep:
            raise UsageError(f"Expected key=value, got {token!r}")
        params[key] = value
    return params


class Toolkit:
    """Shared state for one command: settings, catalog, builder and storage."""

    def __init__(self, args: argparse.Namespace, settings: Dict[str, Any]):
        self.args = args
        self.settings = settings
        self.logger = logging.getLogger("main")
        self.storage = ReportStorage(
            {
                "report_dir": settings["report_dir"],
                "log_file": os.path.join(args.log_dir, "verification.jsonl"),
                "save_reports": settings.get("save_reports", True),
            }
        )
        self._entries = None
        self._builder = None

    @property
    def entries(self):
        if self._entries is None:
            try:
                self._entries = catalog_load(self.settings["catalog_path"])
            except OSError as e:
                raise UsageError(f"Cannot read catalog: {str(e)}")
        return self._entries

    @property
    def builder(self) -> CatalogBuilder:
        if self._builder is None:
            self._builder = CatalogBuilder(self.entries, self.settings)
        return self._builder

    def code(self, entry_id: str) -> LinearCode:
        if entry_id not in self.builder.entries:
            raise UsageError(f"Unknown catalog id {entry_id!r}")
        return self.builder.build(entry_id)

    def emit(self, payload: Any, kind: str, text: Optional[str] = None):
        """Print the result and store it as a JSON report."""
        print(text if text is not None else json.dumps(payload, indent=2))
        self.storage.save_report(payload, kind, self.args.json)


def code_payload(code: LinearCode, include_generator: bool = True) -> Dict[str, Any]:
    valid, reason, details = SelfDualityValidator({}).validate(code)
    payload = {
        "name": code.name,
        "field": code.tag.value,
        "n": code.n,
        "k": code.k,
        "self_dual": valid,
        "self_dual_reason": reason,
    }
    if include_generator:
        payload["generator"] = code.format_generator()
    return payload


def cmd_construct(kit: Toolkit) -> int:
    args = kit.args
    if args.family:
        if args.family not in FAMILIES or args.family in ("neighbor", "direct_sum"):
            raise UsageError(f"construct --family needs one of the row families, got {args.family!r}")
        if not args.field:
            raise UsageError("construct --family needs --field")
        construction = get_construction(args.family, args.field, kit.settings)
        try:
            code = construction.build(parse_params(args.target), name=args.family)
        except (KeyError, ValueError) as e:
            raise UsageError(f"Cannot build {args.family}: {str(e)}")
    else:
        if len(args.target) != 1:
            raise UsageError("construct takes one catalog id, or --family with key=value parameters")
        code = kit.code(args.target[0])
    payload = code_payload(code, include_generator=not args.no_generator)
    kit.emit(payload, "construct")
    return EXIT_OK if payload["self_dual"] else EXIT_FAILED


def cmd_enumerate(kit: Toolkit) -> int:
    args = kit.args
    code = kit.code(args.id)
    if args.low_weight is not None:
        result = count_low_weight(code, args.low_weight, kit.settings["low_weight"])
        payload = {"name": code.name, **result.to_json()}
        kit.emit(payload, "enumerate")
        return EXIT_OK

    engine = CodewordEnumerator(code, kit.settings["enumeration"])
    scan = engine.scan(args.words or [])
    payload = {"name": code.name, **scan.enumerator.to_json(), "min_weight": scan.enumerator.min_weight()}
    if args.words:
        payload["words"] = {str(w): [format_row(code.tag, row) for row in words.tolist()] for w, words in scan.words.items()}
    kit.emit(payload, "enumerate")
    return EXIT_OK


def cmd_gleason(kit: Toolkit) -> int:
    args = kit.args
    tag = FieldTag.parse(args.field)
    workers = kit.settings["gleason"]["sweep_workers"]

    if args.known:
        rows = known_alpha_report(tag)
        kit.emit(rows, "gleason")
        return EXIT_OK if all(row["status"] == "pass" for row in rows) else EXIT_FAILED
    if args.sweep:
        reports = sweep(tag, workers=workers)
        payload = [report.to_json() for report in reports]
        kit.emit(payload, "gleason")
        return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED
    if args.m is None:
        raise UsageError("gleason needs --m unless --known or --sweep is given")

    if args.check_divisibility:
        report = divisibility_check(tag, args.m)
        kit.emit(report.to_json(), "gleason")
        return EXIT_OK if report.passed else EXIT_FAILED
    if args.alpha_range:
        window = alpha_range(tag, args.m)
        kit.emit(window.to_json(), "gleason")
        return EXIT_FAILED if window.empty else EXIT_OK
    if args.extremal:
        report = extremal_enumerator(tag, args.m)
        kit.emit(report.to_json(), "gleason")
        return EXIT_OK if report.passed else EXIT_FAILED

    kit.emit(parametric_near_extremal(tag, args.m).to_json(), "gleason")
    return EXIT_OK


def cmd_verify(kit: Toolkit) -> int:
    args = kit.args
    try:
        entries = select_entries(kit.entries, args.ids)
    except KeyError as e:
        raise UsageError(f"Unknown catalog id {e.args[0]!r}")

    verify = kit.settings["verify"]
    enumeration = dict(kit.settings["enumeration"])
    workers = max(1, int(verify.get("max_workers", 1)))
    # entries share the machine, enumeration threads are split between them
    enumeration["threads"] = max(1, int(enumeration.get("threads") or 1) // workers)
    if workers > 1:
        enumeration["show_progress"] = False

    pipeline = ValidationPipeline({**verify, "enumeration": enumeration, "low_weight": kit.settings["low_weight"]})
    processor = VerificationProcessor({**verify, "show_progress": kit.settings["enumeration"]["show_progress"]})
    processor.set_validation_pipeline(pipeline)
    processor.set_report_storage(kit.storage)

    report = processor.process(entries, kit.builder)
    text = format_report(report)
    verification_logger = logging.getLogger("verification")
    for line in text.splitlines():
        verification_logger.info(line)
    kit.emit(report, "verify", text)
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_FAILED


def cmd_design(kit: Toolkit) -> int:
    args = kit.args
    code = kit.code(args.id)
    if args.weight:
        weights = args.weight
    else:
        m = family_m(code.tag, code.n)
        if m is None:
            raise UsageError(f"{code.describe()} has no near-extremal weight; pass --weight")
        weights = design_weights(code.tag, m) if args.all_weights else [WEIGHT_STEP[code.tag] * m]

    scan = CodewordEnumerator(code, kit.settings["enumeration"]).scan(weights)
    validator = DesignValidator({})
    min_weight = scan.enumerator.min_weight()
    results = []
    passed = True
    for weight in weights:
        words = scan.words.get(weight, np.zeros((0, code.n), dtype=np.int64))
        valid, reason, details = validator.validate(code, weight, words, require_distinct=weight == min_weight)
        if args.blocks and len(words):
            details["blocks"] = design_from_words(code.tag, code.n, weight, words).blocks
        details["reason"] = reason
        results.append({"weight": weight, **details})
        passed = passed and valid
    payload = {"name": code.name, "designs": results}
    kit.emit(payload, "design")
    return EXIT_OK if passed else EXIT_FAILED


def cmd_neighbor(kit: Toolkit) -> int:
    args = kit.args
    base = kit.code(args.base)
    x_hat = FieldVector.parse(base.tag, args.x)
    code = neighbor(NeighborSpec(base, x_hat), name=f"Nei({base.name})")
    payload = code_payload(code, include_generator=not args.no_generator)

    m = family_m(code.tag, code.n)
    engine = CodewordEnumerator(code, kit.settings["enumeration"])
    if engine.fits_budget():
        enumerator = engine.weight_enumerator()
        payload["min_weight"] = enumerator.min_weight()
        if m is not None:
            payload["alpha"] = enumerator[WEIGHT_STEP[code.tag] * m]
    else:
        payload["alpha"] = None
        payload["skipped"] = "budget"
    kit.emit(payload, "neighbor")
    return EXIT_OK if payload["self_dual"] else EXIT_FAILED


def cmd_catalog(kit: Toolkit) -> int:
    args = kit.args
    entries = kit.entries
    if args.action == "dump":
        print(dump_catalog(entries), end="")
        return EXIT_OK
    if args.action == "list":
        rows = [
            {
                "id": entry.id,
                "family": entry.family,
                "field": entry.field.value,
                "length": entry.length,
                "alpha": entry.expected.get("alpha"),
                "optional": entry.optional,
            }
            for entry in entries
        ]
        text = "\n".join(
            f"{row['id']:<14} {row['family']:<14} {row['field']} {row['length']:>3}"
            + (f" alpha={row['alpha']}" if row["alpha"] is not None else "")
            + (" (optional)" if row["optional"] else "")
            for row in rows
        )
        kit.emit(rows, "catalog", text)
        return EXIT_OK

    if not args.id:
        raise UsageError("catalog show needs an id")
    entry = kit.builder.entry(args.id) if args.id in kit.builder.entries else None
    if entry is None:
        raise UsageError(f"Unknown catalog id {args.id!r}")
    code = kit.code(args.id)
    payload = {
        "line": entry.serialize(),
        "expected": entry.expected,
        "cite": entry.cite,
        "generator_shape": [code.k, code.n],
        **code_payload(code, include_generator=False),
    }
    kit.emit(payload, "catalog")
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "enumerate": cmd_enumerate,
    "gleason": cmd_gleason,
    "verify": cmd_verify,
    "design": cmd_design,
    "neighbor": cmd_neighbor,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Near-extremal self-dual codes over GF(3) and GF(4)")
    parser.add_argument("--config", help="Path to a JSON configuration file")
    parser.add_argument("--budget", type=int, help="Maximum codewords generated per code")
    parser.add_argument("--threads", type=int, help="Enumeration threads")
    parser.add_argument("--json", help="Also write the JSON report to this path")
    parser.add_argument("--catalog", help="Catalog file")
    parser.add_argument("--log-dir", default=defaults.LOG_DIR, help="Directory for log files")
    parser.add_argument("--log-level", default=defaults.LOG_LEVEL, help="Logging level")
    parser.add_argument("--quiet", action="store_true", help="Only warnings on stderr, no progress bars")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="Build a code from the catalog or from family parameters")
    construct.add_argument("target", nargs="+", help="Catalog id, or key=value parameters with --family")
    construct.add_argument("--family", help="Construction family")
    construct.add_argument("--field", choices=["F3", "F4"])
    construct.add_argument("--no-generator", action="store_true")

    enumerate_ = sub.add_parser("enumerate", help="Weight enumerator of a catalog code")
    enumerate_.add_argument("id")
    enumerate_.add_argument("--words", type=int, nargs="*", help="Also list the codewords of these weights")
    enumerate_.add_argument("--low-weight", type=int, metavar="W", help="Count weights <= W with information sets")

    gleason = sub.add_parser("gleason", help="Parametric enumerators and the theorems built on them")
    gleason.add_argument("--field", required=True, choices=["F3", "F4"])
    gleason.add_argument("--m", type=int)
    mode = gleason.add_mutually_exclusive_group()
    mode.add_argument("--check-divisibility", action="store_true")
    mode.add_argument("--alpha-range", action="store_true")
    mode.add_argument("--extremal", action="store_true")
    mode.add_argument("--known", action="store_true")
    mode.add_argument("--sweep", action="store_true")

    verify = sub.add_parser("verify", help="Check catalog entries against their expected values")
    verify.add_argument("ids", nargs="*", help="Ids, A..B ranges, or nothing for the whole catalog")
    verify.add_argument("--include-optional", action="store_true")
    verify.add_argument("--design-weights", choices=["min", "all"])
    verify.add_argument("--workers", type=int, help="Entries verified in parallel")

    design = sub.add_parser("design", help="1-design check of codeword supports")
    design.add_argument("id")
    design.add_argument("--weight", type=int, nargs="*")
    design.add_argument("--all-weights", action="store_true")
    design.add_argument("--blocks", action="store_true", help="Include the blocks in the report")

    nei = sub.add_parser("neighbor", help="Self-dual neighbor of a catalog code")
    nei.add_argument("base")
    nei.add_argument("--x", required=True, help="Second half of x, e.g. 0,1,w,w2,...")
    nei.add_argument("--no-generator", action="store_true")

    cat = sub.add_parser("catalog", help="Inspect the catalog")
    cat.add_argument("action", choices=["list", "show", "dump"])
    cat.add_argument("id", nargs="?")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    logger = setup_logging(args.log_dir, args.log_level, args.quiet)
    start_time = time.time()
    try:
        settings = build_config(args)
        kit = Toolkit(args, settings)
        return COMMANDS[args.command](kit)
    except (UsageError, CatalogError, GleasonRangeError, FieldMismatchError, NeighborError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except BudgetExceededError as e:
        logger.error(f"{str(e)}; raise --budget to enumerate it")
        return EXIT_FAILED
    except Exception as e:
        logger.exception(f"Error in {args.command}: {str(e)}")
        return EXIT_FAILED
    finally:
        logger.info(f"{args.command} finished in {time.time() - start_time:.2f} seconds")


if __name__ == "__main__":
    sys.exit(main())
