"""
Command-line front end.

    python -m liepyx compute --family G --rank 2 --index 2 --scope full
    python -m liepyx verify G2_I2_full.json
    python -m liepyx terms --family G --rank 2 --degree 6 --counts-only

Exit codes: 0 success, 1 verification failure, 2 configuration error, 3 internal defect.

Programmer: liepyx team
Since: 2026-10
"""

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from liepyx.engine import InvariantPolynomial, compute_valuedata, assemble, SCOPES, SEED_MODES
from liepyx.errors import ConfigurationError, CheckpointMismatchError
from liepyx.kostant import KostantFrame, build_frame
from liepyx.rootdata import build_lie_algebra
from liepyx.termgen import generate_terms
from liepyx.verify import verify_invariant

logger = logging.getLogger(__name__)

CACHE_ENVIRONMENT_VARIABLE = "LIEPYX_CACHE_DIR"
DEFAULT_CACHE_DIR = ".liepyx_cache"

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_CONFIGURATION_ERROR = 2
EXIT_INTERNAL_DEFECT = 3


@dataclass
class JobConfig:
    family: str = None
    rank: int = None
    index: str = "all"               # a 1-based slice index, or "all"
    degree: int = None
    scope: str = "full"
    mode: str = "primitive"
    constants: dict = field(default_factory=dict)
    output_format: str = "json"
    output_dir: str = "."
    cache_dir: str = None
    workers: int = 1
    verbosity: int = 0
    long_run: bool = False
    discard_mismatched_checkpoints: bool = False
    counts_only: bool = False

    def validate(self):
        if self.family is None or self.rank is None:
            raise ConfigurationError("--family and --rank are required")
        self.family = self.family.upper()
        if self.scope not in SCOPES:
            raise ConfigurationError(f"scope must be one of {SCOPES}, got {self.scope!r}")
        if self.mode not in SEED_MODES:
            raise ConfigurationError(f"seed mode must be one of {SEED_MODES}, got {self.mode!r}")
        if self.output_format not in ("text", "json"):
            raise ConfigurationError(f"output format must be text or json, got {self.output_format!r}")
        if self.index != "all":
            try:
                self.index = int(self.index)
            except ValueError:
                raise ConfigurationError(f"index must be a positive integer or 'all', got {self.index!r}") from None
        if self.mode == "generic" and self.degree is None:
            raise ConfigurationError("generic seeds need --degree")
        if self.workers < 1:
            raise ConfigurationError(f"--workers must be at least 1, got {self.workers}")
        if self.family == "E" and self.rank >= 7 and self.scope == "full" and not self.long_run:
            raise ConfigurationError(f"full-scope invariants of E{self.rank} take very long; pass --long-run to confirm")
        return self

    def resolved_cache_dir(self) -> Path:
        return Path(self.cache_dir or os.environ.get(CACHE_ENVIRONMENT_VARIABLE) or DEFAULT_CACHE_DIR)


def parse_constants(items: list[str]) -> dict:
    """
    Parse generic seeds of the form "2:240" or "1,1,1:0".

    >>> parse_constants(["2:240", "1,1,1:0"])
    {(2,): '240', (1, 1, 1): '0'}
    """
    constants = {}
    for item in items or []:
        indices, sep, value = item.partition(":")
        if not sep:
            raise ConfigurationError(f"seed {item!r} is not of the form 'i,j,...:value'")
        try:
            constants[tuple(sorted(int(i) for i in indices.split(",")))] = value.strip()
        except ValueError:
            raise ConfigurationError(f"seed {item!r} has a non-integer slice index") from None
    return constants


### algebra and frame with caching

def load_frame(config: JobConfig) -> KostantFrame:
    """Build the frame, reusing the slice stored in the cache directory so that resumed runs see the same frame."""
    algebra = build_lie_algebra(config.family, config.rank)
    cache_dir = config.resolved_cache_dir()
    path = cache_dir / f"{algebra.label}-frame.json"
    if path.exists():
        with open(path) as file:
            try:
                frame = KostantFrame.from_json(json.load(file), algebra)
                logger.info("Reusing the frame stored in %s", path)
                return frame
            except ValueError as error:
                logger.warning("Ignoring the stored frame %s: %s", path, error)
    frame = build_frame(algebra)
    cache_dir.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as file:
        json.dump(frame.to_json(), file)
    return frame


def _indices(config: JobConfig, frame: KostantFrame) -> list:
    if config.mode == "generic":
        return [None]
    if config.index == "all":
        return list(range(1, len(frame.degrees) + 1))
    if not 1 <= config.index <= len(frame.degrees):
        raise ConfigurationError(f"index {config.index} out of range 1..{len(frame.degrees)} for {frame.algebra.label}")
    return [config.index]


### commands

def cmd_compute(config: JobConfig) -> int:
    frame = load_frame(config)
    label = frame.algebra.label
    output_dir = Path(config.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    cache_dir = config.resolved_cache_dir()
    manifest = {"algebra": label, "frame_hash": frame.content_hash(), "scope": config.scope, "mode": config.mode, "invariants": []}
    for j in _indices(config, frame):
        d = frame.degrees[j - 1] if j is not None else config.degree
        name = f"{label}_I{j}_{config.scope}" if j is not None else f"{label}_d{d}_generic_{config.scope}"
        checkpoint_path = str(cache_dir / f"{name}.checkpoint.json")
        start = time.perf_counter()
        try:
            table = _compute_table(config, frame, j, d, checkpoint_path)
        except CheckpointMismatchError:
            if not config.discard_mismatched_checkpoints:
                raise
            logger.warning("Discarding the mismatched checkpoint %s", checkpoint_path)
            os.remove(checkpoint_path)
            table = _compute_table(config, frame, j, d, checkpoint_path)
        invariant = assemble(table)
        seconds = time.perf_counter() - start
        path = output_dir / f"{name}.{'json' if config.output_format == 'json' else 'txt'}"
        with open(path, "w") as file:
            if config.output_format == "json":
                json.dump(invariant.to_json(), file, indent=1)
            else:
                file.write(invariant.to_text() + "\n")
        print(f"{name}: degree {d}, {len(invariant.polynomial.terms)} monomials, written to {path}")
        if config.output_format == "text":
            print(invariant.to_text())
        manifest["invariants"].append({
            "index": j, "degree": d, "file": str(path), "seeds": invariant.seeds, "seconds": round(seconds, 3),
            "term_counts": table.term_lists.counts(), "table_size": len(table), "table_hash": table.content_hash(),
        })
    with open(output_dir / f"{label}_manifest.json", "w") as file:
        json.dump(manifest, file, indent=1)
    return EXIT_SUCCESS


def _compute_table(config: JobConfig, frame: KostantFrame, j, d: int, checkpoint_path: str):
    Path(checkpoint_path).parent.mkdir(parents=True, exist_ok=True)
    return compute_valuedata(frame, j, d, scope=config.scope, mode=config.mode, constants=config.constants,
                             workers=config.workers, checkpoint_path=checkpoint_path)


def cmd_verify(config: JobConfig, path: str) -> int:
    try:
        with open(path) as file:
            invariant = InvariantPolynomial.from_json(json.load(file))
    except (OSError, json.JSONDecodeError, KeyError) as error:
        raise ConfigurationError(f"cannot read the invariant file {path}: {error}") from None
    config.family, config.rank = invariant.family, invariant.rank
    frame = load_frame(config)
    stored_hash = invariant.metadata.get("frame_hash")
    if stored_hash is not None and stored_hash != frame.content_hash():
        raise ConfigurationError(f"{path} was computed in another frame than the one cached for {frame.algebra.label}")
    report = verify_invariant(invariant, frame)
    print(report.dumps() if config.output_format == "json" else report.to_text())
    return EXIT_SUCCESS if report.passed else EXIT_VERIFICATION_FAILURE


def cmd_terms(config: JobConfig) -> int:
    frame = load_frame(config)
    if config.degree is not None:
        d = config.degree
    elif config.index != "all":
        if not 1 <= config.index <= len(frame.degrees):
            raise ConfigurationError(f"index {config.index} out of range 1..{len(frame.degrees)} for {frame.algebra.label}")
        d = frame.degrees[config.index - 1]
    else:
        raise ConfigurationError("terms needs --degree or --index")
    term_lists = generate_terms(frame, d, borel_only=(config.scope == "borel"))
    if config.output_format == "json":
        print(json.dumps(term_lists.counts()) if config.counts_only else term_lists.dumps())
        return EXIT_SUCCESS
    counts = term_lists.counts()
    print(f"{frame.algebra.label}, degree {d}: ttms {counts['ttms']}, ptms {counts['ptms']}+1, ntms {counts['ntms']}")
    if not config.counts_only:
        for name in ("ttms", "ptms", "ntms"):
            for key in getattr(term_lists, name):
                print(f"{name} {key.bookkeeping()}")
        print(f"cartan {term_lists.pure_cartan.bookkeeping()}")
    return EXIT_SUCCESS


### entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liepyx", description="Intrinsic construction of invariant polynomials of simple Lie algebras.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeat for debug)")
    parser.add_argument("-q", "--quiet", action="store_true", help="only errors")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_common(sub):
        sub.add_argument("--family", help="A, B, C, D, E, F or G")
        sub.add_argument("--rank", type=int)
        sub.add_argument("--index", default="all", help="1-based slice index j of I_j, or 'all'")
        sub.add_argument("--degree", type=int, help="degree (required for generic seeds)")
        sub.add_argument("--scope", choices=SCOPES, default="full")
        sub.add_argument("--format", dest="output_format", choices=("text", "json"), default="json")
        sub.add_argument("--cache-dir", help=f"overrides ${CACHE_ENVIRONMENT_VARIABLE} and {DEFAULT_CACHE_DIR}")

    compute = subparsers.add_parser("compute", help="compute invariant polynomials")
    add_common(compute)
    compute.add_argument("--seed-mode", dest="mode", choices=SEED_MODES, default="primitive")
    compute.add_argument("--seed", dest="seeds", action="append", help="generic seed 'i,j,...:value' (repeatable)")
    compute.add_argument("--output-dir", default=".")
    compute.add_argument("--workers", type=int, default=1)
    compute.add_argument("--long-run", action="store_true", help="allow full-scope E7/E8 runs")
    compute.add_argument("--discard-mismatched-checkpoints", action="store_true")

    verify = subparsers.add_parser("verify", help="verify an invariant file")
    verify.add_argument("path")
    verify.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    verify.add_argument("--cache-dir")

    terms = subparsers.add_parser("terms", help="list the pairing terms of a degree")
    add_common(terms)
    terms.add_argument("--counts-only", action="store_true")
    terms.set_defaults(output_format="text")
    return parser


def config_from_args(args: argparse.Namespace) -> JobConfig:
    config = JobConfig(
        family=getattr(args, "family", None), rank=getattr(args, "rank", None),
        index=getattr(args, "index", "all"), degree=getattr(args, "degree", None),
        scope=getattr(args, "scope", "full"), mode=getattr(args, "mode", "primitive"),
        constants=parse_constants(getattr(args, "seeds", None)),
        output_format=args.output_format, output_dir=getattr(args, "output_dir", "."),
        cache_dir=args.cache_dir, workers=getattr(args, "workers", 1),
        verbosity=-1 if args.quiet else args.verbose, long_run=getattr(args, "long_run", False),
        discard_mismatched_checkpoints=getattr(args, "discard_mismatched_checkpoints", False),
        counts_only=getattr(args, "counts_only", False),
    )
    return config


def main(argv: list[str] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.quiet:
        level = logging.ERROR
    else:
        level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s: %(message)s")
    try:
        config = config_from_args(args)
        if args.command == "verify":
            return cmd_verify(config, args.path)
        config.validate()
        if args.command == "compute":
            return cmd_compute(config)
        return cmd_terms(config)
    except ValueError as error:
        logger.error("%s", error)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_CONFIGURATION_ERROR
    except RuntimeError as error:
        logger.exception("Internal defect")
        print(f"internal defect: {error}", file=sys.stderr)
        return EXIT_INTERNAL_DEFECT


if __name__ == "__main__":
    sys.exit(main())
