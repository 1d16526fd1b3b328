"""Command-line interface: ``zdiam {classify,graph,sweep,verify,witness,polydist}``.

Exit codes: 0 success, 1 usage or parse error, 2 ring validation failure,
3 prediction/invariant disagreement, 4 ring or input not applicable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from sympy import isprime

from . import corpus as corpus_mod
from .classify import (
    CrossCheckOptions,
    cross_check,
    predict_diam_gamma_branch,
    predict_diam_gamma_rx,
    predict_diam_gamma_rx_zn,
    predict_diam_gamma_zn,
)
from .errors import (
    ArityError,
    BaseRingError,
    DegenerateInputError,
    ElementIndexError,
    EmptyGraphError,
    InvalidOrderError,
    ModulusError,
    NotApplicableError,
    RingError,
    SpecError,
    ValidationError,
    VertexError,
)
from .finring import FiniteRing, make_zn
from .invariants import run_all
from .polyring import Poly, gamma_rx_path
from .ringspec import ring_from_arg
from .structure import find_zero_ann_pair, z_is_ideal
from .zdgraph import GAMMA, GAMMA_TILDE, build_graph, diameter, export_dot, is_complete

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_DISAGREE = 3
EXIT_NOT_APPLICABLE = 4

DEFAULT_MAX_N = 300

_VALIDATION_ERRORS = (ValidationError, InvalidOrderError, ModulusError, BaseRingError, ArityError)
_NOT_APPLICABLE = (NotApplicableError, EmptyGraphError, VertexError, DegenerateInputError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (SpecError, UsageError, ElementIndexError)):
        return EXIT_USAGE
    if isinstance(exc, _VALIDATION_ERRORS):
        return EXIT_VALIDATION
    if isinstance(exc, _NOT_APPLICABLE):
        return EXIT_NOT_APPLICABLE
    return EXIT_DISAGREE


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _pair_text(ring: FiniteRing, pair) -> str:
    if pair is None:
        return "none"
    return f"({ring.render(pair[0])}, {ring.render(pair[1])})"


# -- classify ----------------------------------------------------------------


def run_classify(spec: str, fmt: str = "text", max_deg: int = 1) -> tuple[str, int]:
    ring = ring_from_arg(spec)
    report = cross_check(ring, CrossCheckOptions(rx_max_deg=max_deg))
    code = EXIT_OK if report.ok else EXIT_DISAGREE
    if fmt == "json":
        return _dumps(report.to_dict()), code
    p = report.predicates
    lines = [
        f"ring: {report.ring_label} (order {ring.order})",
        f"predicted diam Gamma: {report.predicted_gamma} [{report.branch}]",
        f"finite-ring prediction: {report.predicted_gamma_finite}",
        f"computed diam Gamma: {report.computed_gamma}",
        f"computed diam GammaTilde: {report.computed_gamma_tilde}",
        f"GammaTilde complete: {report.gamma_tilde_complete}",
        f"predicted diam Gamma(R[X]): {report.predicted_gamma_rx}",
    ]
    if report.rx_witness is not None:
        w = report.rx_witness
        lines.append(f"R[X] witness: f = {w.f}, g = {w.g}, distance {w.distance}")
    lines += [
        f"reduced: {p.reduced}",
        f"boolean: {p.boolean_ring}",
        f"Z(R) ideal: {p.z_is_ideal}"
        + ("" if p.z_ideal_witness is None else f" (witness {_pair_text(ring, p.z_ideal_witness)})"),
        f"Z(R)^2 = 0: {p.z_square_zero}",
        f"local factors: {p.local_factor_count}",
        f"minimal primes: {p.min_prime_count if p.min_prime_count is not None else '-'}",
        f"embeds in two domains: {p.embeds_two_domains}",
        f"zero-annihilator pair: {_pair_text(ring, p.zero_ann_pair)}",
        f"McCoy verified to: {p.mccoy_verified_to}",
        f"zero-sum adjacency convention: {report.zero_sum_adjacent}",
        f"agreement: {report.agreement}",
        f"coherent: {report.coherent}",
    ]
    lines += [f"note: {n}" for n in report.notes]
    return "\n".join(lines) + "\n", code


# -- graph -------------------------------------------------------------------


def run_graph(spec: str, variant: str = GAMMA, fmt: str = "dot") -> str:
    ring = ring_from_arg(spec)
    g = build_graph(ring, variant)
    if fmt == "dot":
        return export_dot(g)
    payload = {
        "graph": g.name,
        "vertices": g.vertices.labels(),
        "edges": [[ring.render(u), ring.render(v)] for u, v in g.edges()],
        "diameter": diameter(g),
        "complete": is_complete(g),
    }
    if fmt == "json":
        return _dumps(payload)
    lines = [
        f"graph: {payload['graph']}",
        f"vertices ({len(payload['vertices'])}): {' '.join(payload['vertices'])}",
        f"edges: {len(payload['edges'])}",
        f"diameter: {payload['diameter']}",
        f"complete: {payload['complete']}",
    ]
    lines += [f"  {u} -- {v}" for u, v in payload["edges"]]
    return "\n".join(lines) + "\n"


# -- sweep -------------------------------------------------------------------


@dataclass
class SweepRow:
    n: int
    predicted: int
    computed: int
    predicted_rx: int
    general: int
    branch: str
    tilde_complete: bool
    witness: str
    status: str


SWEEP_COLUMNS = list(SweepRow.__dataclass_fields__)


def sweep_row(n: int) -> SweepRow:
    ring = make_zn(n)
    predicted = predict_diam_gamma_zn(n)
    computed = diameter(build_graph(ring, GAMMA))
    general, branch = predict_diam_gamma_branch(ring)
    rx = predict_diam_gamma_rx_zn(n)
    pair = find_zero_ann_pair(ring)
    ok = predicted == computed == general and rx == predict_diam_gamma_rx(ring)
    return SweepRow(
        n=n,
        predicted=predicted,
        computed=computed,
        predicted_rx=rx,
        general=general,
        branch=branch,
        tilde_complete=is_complete(build_graph(ring, GAMMA_TILDE)),
        witness="-" if pair is None else f"{pair[0]}/{pair[1]}",
        status="ok" if ok else "MISMATCH",
    )


@dataclass
class SweepResult:
    rows: list[SweepRow]
    max_n: int
    truncated_at: Optional[int]

    @property
    def mismatches(self) -> int:
        return sum(r.status != "ok" for r in self.rows)

    def summary(self) -> dict:
        counts = Counter(r.computed for r in self.rows)
        return {
            "rows": len(self.rows),
            "mismatches": self.mismatches,
            "by_diameter": {str(k): counts[k] for k in sorted(counts)},
            "truncated_at": self.truncated_at,
        }


def run_sweep(max_n: int = DEFAULT_MAX_N, budget: Optional[int] = None, jobs: int = 1) -> SweepResult:
    if max_n < 4:
        raise UsageError("sweep needs --max-n >= 4")
    ns = [n for n in range(4, max_n + 1) if not isprime(n)]
    truncated = None
    if budget is not None and len(ns) > budget:
        truncated = ns[budget]
        ns = ns[:budget]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(sweep_row, ns, chunksize=8))
    else:
        rows = [sweep_row(n) for n in ns]
    return SweepResult(rows, max_n, truncated)


def format_sweep(result: SweepResult, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps(
            {"rows": [asdict(r) for r in result.rows], "summary": result.summary(), "max_n": result.max_n}
        )
    marker = (
        f"# truncated: row budget reached before n={result.truncated_at}"
        if result.truncated_at is not None
        else None
    )
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SWEEP_COLUMNS)
        for r in result.rows:
            w.writerow([getattr(r, c) for c in SWEEP_COLUMNS])
        if marker:
            buf.write(marker + "\n")
        return buf.getvalue()
    table = [SWEEP_COLUMNS] + [[str(getattr(r, c)) for c in SWEEP_COLUMNS] for r in result.rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(SWEEP_COLUMNS))]
    lines = ["  ".join(cell.rjust(wd) for cell, wd in zip(row, widths)).rstrip() for row in table]
    if marker:
        lines.append(marker)
    s = result.summary()
    lines.append("")
    lines.append(f"rows: {s['rows']}  mismatches: {s['mismatches']}")
    for k, v in s["by_diameter"].items():
        lines.append(f"diameter {k}: {v}")
    return "\n".join(lines) + "\n"


# -- verify ------------------------------------------------------------------


def run_verify(corpus_path: Optional[str] = None, fmt: str = "text") -> tuple[str, int]:
    entries = (
        corpus_mod.read_corpus_file(corpus_path)
        if corpus_path
        else corpus_mod.default_corpus_entries()
    )
    if not entries:
        print("warning: corpus is empty; nothing to verify", file=sys.stderr)
    results = []
    code = EXIT_OK
    for entry in entries:
        name = entry["name"]
        try:
            ring = corpus_mod.build_entry(entry)
        except _VALIDATION_ERRORS as exc:
            results.append({"ring": name, "error": "validation", "detail": str(exc), "checks": []})
            code = EXIT_VALIDATION
            continue
        checks = run_all(ring)
        results.append({"ring": name, "checks": [c.to_dict() for c in checks]})
        if code == EXIT_OK and not all(c.ok for c in checks):
            code = EXIT_DISAGREE
    if fmt == "json":
        return _dumps({"results": results, "passed": code == EXIT_OK}), code
    lines = []
    total = failed = 0
    for r in results:
        if "error" in r:
            lines.append(f"FAIL  {r['ring']}: validation failure: {r['detail']}")
            failed += 1
            continue
        bad = [c for c in r["checks"] if not c["ok"]]
        total += len(r["checks"])
        failed += len(bad)
        lines.append(f"{'FAIL' if bad else 'ok  '}  {r['ring']} ({len(r['checks'])} checks)")
        for c in bad:
            lines.append(f"      {c['check']}: {c['detail']}")
    lines.append(f"rings: {len(results)}  checks: {total}  failures: {failed}")
    return "\n".join(lines) + "\n", code


# -- witness / polydist ------------------------------------------------------


def run_witness(spec: str) -> str:
    ring = ring_from_arg(spec)
    pair = find_zero_ann_pair(ring)
    ideal, _ = z_is_ideal(ring)
    lines = [
        f"ring: {ring.label}",
        f"zero-annihilator pair: {_pair_text(ring, pair)}",
        f"Z(R) ideal: {ideal}",
    ]
    return "\n".join(lines) + "\n"


def parse_poly(ring: FiniteRing, text: str) -> Poly:
    """Coefficients low to high: JSON list (ints or element labels) or ``a,b,c``."""
    text = text.strip()
    if text.startswith("["):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"cannot parse polynomial {text!r}: {exc}") from None
    else:
        items = [t for t in text.split(",") if t.strip()]
    coeffs = []
    for item in items:
        if isinstance(item, int) and not isinstance(item, bool):
            coeffs.append(ring.check_index(item))
        elif isinstance(item, str) and item.strip().lstrip("-").isdigit():
            coeffs.append(ring.check_index(int(item)))
        elif isinstance(item, str):
            coeffs.append(ring.index_of(item.strip()))
        else:
            raise SpecError(f"bad coefficient {item!r}")
    return Poly(ring, tuple(coeffs))


def run_polydist(spec: str, f_text: str, g_text: str, fmt: str = "text") -> str:
    ring = ring_from_arg(spec)
    f, g = parse_poly(ring, f_text), parse_poly(ring, g_text)
    res = gamma_rx_path(f, g)
    if fmt == "json":
        return _dumps({"ring": ring.label, **res.to_dict()})
    lines = [f"ring: {ring.label}", f"f = {f}", f"g = {g}", f"distance: {res.distance}"]
    if res.distance == 1:
        lines.append("certificate: f*g = 0")
    elif res.distance == 2:
        lines.append(f"certificate: f -- {res.middle} -- g")
    else:
        lines.append("certificate: f*g != 0 and no nonzero constant kills both")
    return "\n".join(lines) + "\n"


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zdiam", description="Zero-divisor graph diameters of finite rings.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="predict and compute diam Γ(R), Γ̃(R), Γ(R[X])")
    p.add_argument("ring", help="ring spec: shorthand (zn:12), JSON, or @file.json")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-deg", type=int, default=1, help="degree bound for R[X] witnesses")
    p.add_argument("--out")

    p = sub.add_parser("graph", help="export Γ(R) or Γ̃(R)")
    p.add_argument("ring")
    p.add_argument("--variant", choices=("gamma", "tilde"), default="gamma")
    p.add_argument("--format", choices=("dot", "text", "json"), default="dot")
    p.add_argument("--out")

    p = sub.add_parser("sweep", help="closed-form vs BFS diameters for composite n")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--budget", type=int, default=None, help="maximum number of rows")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run every invariant over a ring corpus")
    p.add_argument("--corpus", help="corpus JSON file (default: shipped corpus)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("witness", help="first zero-annihilator pair")
    p.add_argument("ring")
    p.add_argument("--out")

    p = sub.add_parser("polydist", help="exact distance of two polynomials in Γ(R[X])")
    p.add_argument("ring")
    p.add_argument("f", help="coefficients low to high, e.g. [6,3] or 6,3")
    p.add_argument("g")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code = EXIT_OK
        if args.verb == "classify":
            text, code = run_classify(args.ring, args.format, args.max_deg)
        elif args.verb == "graph":
            variant = GAMMA if args.variant == "gamma" else GAMMA_TILDE
            text = run_graph(args.ring, variant, args.format)
        elif args.verb == "sweep":
            result = run_sweep(args.max_n, args.budget, args.jobs)
            text = format_sweep(result, args.format)
            code = EXIT_OK if result.mismatches == 0 else EXIT_DISAGREE
        elif args.verb == "verify":
            text, code = run_verify(args.corpus, args.format)
        elif args.verb == "witness":
            text = run_witness(args.ring)
        else:
            text = run_polydist(args.ring, args.f, args.g, args.format)
    except (RingError, UsageError) as exc:
        print(f"zdiam {args.verb}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
