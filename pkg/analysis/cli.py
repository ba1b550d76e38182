"""
Command-line front end.

    python -m analysis.cli [--json] [-v] [--seed-corpus] <command> ...

Exit codes: 0 on success, 1 when a verified implication fails, 2 on input
errors. Errors go to standard error as ``error[CODE]: message``.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from analysis.config import Settings
from analysis.loader import dump_category, dump_presheaf, load_category, resolve_presheaf, resolve_site
from analysis.pipeline import CorpusPipeline, presheaf_entries, seed_corpus
from model.errors import MalformedInput, TheoremViolation, ToposError
from model.fincat.category import FinCategory
from model.fincat.hypotheses import check_hypotheses
from model.fincat.levels import enumerate_levels
from model.fincat.structure import heights, minimal_objects
from model.geometry.dimension import depth, verify_dimension_theorem
from model.geometry.figures import minimal_elements, preterminal_elements
from model.geometry.skeleton import dim
from model.logic.forcing import ForcingEvaluator
from model.logic.parser import parse_formula
from model.order import format_extended, to_json_extended
from model.presheaf.omega import ObjectSieve, object_sieve
from model.sites import GlobalRegistry, register_all_sites

logger = logging.getLogger(__name__)

RULE = "=" * 70


def _mark(flag: bool) -> str:
    return "✅" if flag else "❌"


class Reporter:
    """Prints either the JSON payload or the human-readable lines, never both."""

    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, payload: Any, lines: List[str]) -> None:
        if self.as_json:
            print(json.dumps(payload, indent=2, ensure_ascii=False))
        else:
            print("\n".join(lines))

    def error(self, code: str, message: str) -> None:
        if self.as_json:
            print(json.dumps({"error": code, "message": message}, ensure_ascii=False), file=sys.stderr)
        else:
            print(f"error[{code}]: {message}", file=sys.stderr)


class Cli:
    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self.out = Reporter(args.json)

    # ---- reference resolution ---------------------------------------------

    def site(self, ref: str) -> FinCategory:
        return resolve_site(ref, self.settings.size_limit(ref.split(":")[0]))

    def presheaf(self, ref: str, base: Optional[str]):
        return resolve_presheaf(ref, self.site(base) if base else None)

    # ---- commands -----------------------------------------------------------

    def validate(self) -> int:
        cat = load_category(self.args.file)
        report = check_hypotheses(cat)
        payload = {
            "valid": True,
            "name": cat.name,
            "objects": len(cat.objects),
            "morphisms": cat.n_morphisms,
            "hypotheses": report.to_dict(),
        }
        lines = [f"✅ {cat.describe()} is a valid category"]
        for flag in ("split_epi_mono_factorization", "strong_epi_mono_factorization", "acc", "well_founded"):
            held = getattr(report, flag)
            witness = "" if held else f" (witness: {', '.join(map(str, report.witnesses.get(flag, [])))})"
            lines.append(f"   {_mark(held)} {flag}{witness}")
        self.out.emit(payload, lines)
        return 0

    def site_command(self) -> int:
        register_all_sites()
        limit = self.args.size_limit if self.args.size_limit is not None else self.settings.size_limit(self.args.kind)
        cat = GlobalRegistry.build(self.args.kind, self.args.max, limit)
        if self.args.emit or self.args.out:
            text = dump_category(cat, self.args.out)
            if self.args.out:
                self.out.emit({"written": self.args.out, "name": cat.name},
                              [f"✅ wrote {cat.describe()} to {self.args.out}"])
            else:
                print(text)
            return 0
        hs = heights(cat)
        report = check_hypotheses(cat)
        payload = {
            "name": cat.name,
            "objects": list(cat.objects),
            "morphisms": cat.n_morphisms,
            "heights": {c: to_json_extended(hs[c]) for c in cat.objects},
            "minimal_objects": minimal_objects(cat),
            "hypotheses": report.to_dict(),
        }
        lines = [RULE, f"SITE {cat.describe()}", RULE]
        lines += [f"   height({c}) = {format_extended(hs[c])}" for c in cat.objects]
        lines.append(f"   minimal objects: {', '.join(minimal_objects(cat)) or '-'}")
        lines.append(f"   {_mark(report.all_hold)} hypotheses" +
                     ("" if report.all_hold else f" (failed: {', '.join(report.failed())})"))
        self.out.emit(payload, lines)
        return 0

    def presheaf_build(self) -> int:
        X = resolve_presheaf(self.args.example, self.site(self.args.base))
        text = dump_presheaf(X, self.args.out)
        if self.args.out:
            self.out.emit({"written": self.args.out, "name": X.name}, [f"✅ wrote {X.describe()} to {self.args.out}"])
        else:
            print(text)
        return 0

    def analyze(self) -> int:
        X = self.presheaf(self.args.presheaf, self.args.base)
        report = verify_dimension_theorem(X)
        payload = dict(report.to_dict(), theorem_status=report.theorem_status)
        lines = [RULE, f"ANALYSIS {X.describe()}", RULE,
                 f"   dim:   {format_extended(report.dim)}",
                 f"   depth: {format_extended(report.depth)} "
                 f"(chain characterisation on the minimal-figure site, cross-checked by forcing)",
                 f"   minimal figures: {', '.join(f'{x}@{c}' for x, c in minimal_elements(X)) or '-'}",
                 f"   preterminal figures: {', '.join(f'{x}@{c}' for x, c in preterminal_elements(X)) or '-'}",
                 f"   {_mark(report.strongly_regular)} strongly regular",
                 f"   {_mark(report.non_singular)} non-singular",
                 f"   {_mark(report.localic)} localic minimal-figure site",
                 f"   {_mark(report.etendue)} all minimal-figure maps monic",
                 "",
                 "   n     dim<=n  IBD_n"]
        for row in report.table:
            lines.append(f"   {format_extended(row['n']):<5} {_mark(row['dim_le_n'])}      {_mark(row['ibd_n'])}")
        for key, value in report.witnesses.items():
            if key not in ("heights_le_n", "extended_rows"):
                lines.append(f"   ⚠️ {key}: {value}")
        lines += ["", f"   theorem: {report.theorem_status}", RULE]
        self.out.emit(payload, lines)
        return 0

    def dim_command(self) -> int:
        X = self.presheaf(self.args.presheaf, self.args.base)
        value = dim(X)
        self.out.emit({"dim": to_json_extended(value)}, [f"dim {X.describe()} = {format_extended(value)}"])
        return 0

    def depth_command(self) -> int:
        X = self.presheaf(self.args.presheaf, self.args.base)
        value = depth(X)
        self.out.emit({"depth": to_json_extended(value)}, [f"depth {X.describe()} = {format_extended(value)}"])
        return 0

    def _named_sieves(self, cat: FinCategory) -> Dict[str, ObjectSieve]:
        sieves = {}
        for entry in self.args.sieve or []:
            name, sep, members = entry.partition("=")
            if not sep or not name:
                raise MalformedInput(f"--sieve expects NAME=obj,obj, got {entry!r}")
            sieves[name] = object_sieve(cat, [c for c in members.split(",") if c])
        return sieves

    def logic_eval(self) -> int:
        cat = self.site(self.args.site)
        phi = parse_formula(self.args.formula, self._named_sieves(cat))
        value = ForcingEvaluator(cat, sieve_budget=self.settings.sieve_budget).sentence_value(phi)
        payload = {"formula": str(phi), "site": cat.name, "value": value.ordered(), "satisfied": value.covers_all()}
        lines = [f"{phi}", f"   value: {{{', '.join(value.ordered())}}}",
                 f"   {_mark(value.covers_all())} holds at every object of {cat.name}"]
        self.out.emit(payload, lines)
        return 0

    def levels(self) -> int:
        cat = self.site(self.args.cat)
        budget = self.args.budget if self.args.budget is not None else self.settings.level_budget
        found = enumerate_levels(cat, budget)
        payload = {"site": cat.name, "levels": [level.to_dict(cat) for level in found]}
        lines = [RULE, f"LEVELS of {cat.describe()}: {len(found)}", RULE]
        for level in found:
            sub = level.to_dict(cat)["full_subcategory"]
            tag = " ← level é" if level.level_e else ""
            lines.append(f"   |ideal| = {len(level.ideal):<4} subcategory: "
                         f"{'{' + ', '.join(sub) + '}' if sub is not None else 'none'}{tag}")
        self.out.emit(payload, lines)
        return 0

    def theorem(self) -> int:
        X = self.presheaf(self.args.presheaf, self.args.base)
        report = verify_dimension_theorem(X, n_max=self.args.nmax)
        payload = dict(report.to_dict(), theorem_status=report.theorem_status)
        lines = [f"{_mark(True)} {X.describe()}: {report.theorem_status}",
                 f"   dim = {format_extended(report.dim)}, depth = {format_extended(report.depth)}"]
        self.out.emit(payload, lines)
        return 0

    def _run_pipeline(self, pipeline: CorpusPipeline) -> int:
        summary = pipeline.run()
        self.out.emit(summary, pipeline.format_summary())
        return 1 if pipeline.metrics['violations'] else 0

    def sweep(self) -> int:
        from data.generators.simplicial_generator import generate_presheaves

        presheaves = generate_presheaves(max_dim=2, max_per_stage=self.args.max_per_stage, cap=self.args.cap)
        workers = self.args.workers or self.settings.workers
        return self._run_pipeline(CorpusPipeline(presheaf_entries(presheaves), parallel_workers=workers))

    def seed(self) -> int:
        return self._run_pipeline(CorpusPipeline(seed_corpus(), parallel_workers=self.settings.workers))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="analysis.cli", description='Finite presheaf dimension toolkit')
    parser.add_argument('--json', action='store_true', help='Print only the JSON report')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='More logging (-vv for debug)')
    parser.add_argument('--seed-corpus', action='store_true', help='Verify the built-in example corpus')
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('validate', help='Validate a category JSON file')
    p.add_argument('file')

    p = sub.add_parser('site', help='Build a generated site')
    p.add_argument('kind', choices=['delta', 'finset'])
    p.add_argument('--max', type=int, required=True, help='Truncation size')
    p.add_argument('--emit', action='store_true', help='Print the category JSON')
    p.add_argument('--out', help='Write the category JSON to a file')
    p.add_argument('--size-limit', type=int, help='Raise the size guard')

    p = sub.add_parser('presheaf', help='Presheaf utilities')
    presheaf_sub = p.add_subparsers(dest='presheaf_command', required=True)
    b = presheaf_sub.add_parser('build', help='Build an example presheaf')
    b.add_argument('example')
    b.add_argument('--base', required=True)
    b.add_argument('--out')

    for name, text in (('analyze', 'Full dimension report'), ('dim', 'Dimension'), ('depth', 'Depth')):
        p = sub.add_parser(name, help=text)
        p.add_argument('presheaf')
        p.add_argument('--base')

    p = sub.add_parser('logic', help='Forcing semantics')
    logic_sub = p.add_subparsers(dest='logic_command', required=True)
    e = logic_sub.add_parser('eval', help='Value of a closed formula')
    e.add_argument('--site', required=True)
    e.add_argument('--formula', required=True)
    e.add_argument('--sieve', action='append', help='Named object sieve NAME=obj,obj for const(NAME)')

    p = sub.add_parser('levels', help='Enumerate levels of a site')
    p.add_argument('cat')
    p.add_argument('--budget', type=int)

    p = sub.add_parser('theorem', help='Verify dim <= n iff IBD_n')
    p.add_argument('presheaf')
    p.add_argument('--base')
    p.add_argument('--nmax', type=int)

    p = sub.add_parser('sweep', help='Verify the theorem over all small simplicial presheaves')
    p.add_argument('--max-per-stage', type=int, default=3)
    p.add_argument('--cap', type=int, default=5000)
    p.add_argument('--workers', type=int)
    return parser


_DISPATCH = {
    'validate': Cli.validate,
    'site': Cli.site_command,
    'presheaf': Cli.presheaf_build,
    'analyze': Cli.analyze,
    'dim': Cli.dim_command,
    'depth': Cli.depth_command,
    'logic': Cli.logic_eval,
    'levels': Cli.levels,
    'theorem': Cli.theorem,
    'sweep': Cli.sweep,
}


def _configure_logging(verbose: int, settings: Settings) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level)
    logging.basicConfig(format='%(name)s:%(levelname)s:%(message)s', level=level)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None and not args.seed_corpus:
        parser.print_help(sys.stderr)
        return 2
    settings = Settings.from_env()
    _configure_logging(args.verbose, settings)
    cli = Cli(args, settings)
    try:
        code = cli.seed() if args.seed_corpus else 0
        if args.command is not None:
            code = max(code, _DISPATCH[args.command](cli))
        return code
    except TheoremViolation as e:
        cli.out.error(e.code, str(e))
        return 1
    except ToposError as e:
        cli.out.error(e.code, str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
