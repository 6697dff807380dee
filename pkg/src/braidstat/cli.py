"""Batch front end.

Commands: ``check``, ``gram``, ``apply``, ``transmute``, ``normalize``.
Exit codes: 0 all executed checks pass, 1 some check failed, 2 input error.
``--json`` switches standard output to a machine-readable report
``{"checks": [...], "results": {...}}``; reports are deterministic for
identical inputs.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .coherence import ExprSyntaxError, normalize as normalize_expr, parse_expr
from .fock import (AnnihilateFree, AnnihilateTwisted, Create, Exchange, HermiticityError,
                   ProgramStep, ResourceLimitError, apply_program,
                   check_braid_exchange_relations, check_infinite_statistics,
                   commutator_defect, gram_matrix, gram_psd_check, sector_dimension)
from .groups import check_transmutation
from .modelfile import (ModelFileError, load_bicharacter_file, load_hom_file, load_model_file,
                        model_to_dict)
from .models import check_symmetry, check_yang_baxter
from .report import CheckReport, FAIL, PASS, SKIPPED, jsonable
from .transmute import check_cross_symmetric, check_relation_transport, make_transmutation
from .words import FockVector

INPUT_ERRORS = (ModelFileError, ExprSyntaxError, ResourceLimitError, ValueError, OSError)

_STEP_RE = re.compile(r"^([cabx])(\d+)$")


def parse_program(text: str) -> list[ProgramStep]:
    """Parse ``"c1;a2;b1;x1"``: c=create, a=free annihilate, b=twisted, x=exchange."""
    steps: list[ProgramStep] = []
    for raw in text.split(";"):
        token = raw.strip()
        if not token:
            continue
        m = _STEP_RE.match(token)
        if not m:
            raise ValueError(f"bad program step {token!r}; expected c<i>, a<i>, b<i>, or x<k>")
        kind, arg = m.group(1), int(m.group(2))
        if kind == "c":
            steps.append(Create(arg))
        elif kind == "a":
            steps.append(AnnihilateFree(arg))
        elif kind == "b":
            steps.append(AnnihilateTwisted(arg))
        else:
            steps.append(Exchange(arg))
    return steps


def parse_vector(text: str) -> FockVector:
    """Empty string is the vacuum; otherwise comma-separated letters of one word."""
    if not text.strip():
        return FockVector.vacuum()
    letters = [int(tok) for tok in text.split(",")]
    return FockVector.basis(letters)


def _emit(report: dict, checks: list[CheckReport], as_json: bool) -> int:
    code = 1 if any(c.status == FAIL for c in checks) else 0
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for check in checks:
            line = f"  {check.status.upper():7s} {check.name:24s} defect={check.defect:.3e}"
            if check.status != PASS and check.witness is not None:
                line += f"  witness={json.dumps(jsonable(check.witness), sort_keys=True)}"
            print(line)
        for key, value in report.get("results", {}).items():
            print(f"  {key}: {json.dumps(value, sort_keys=True)}")
    return code


def cmd_check(args) -> int:
    loaded = load_model_file(args.model)
    model = loaded.model
    tol = args.tol if args.tol is not None else loaded.tolerance
    n_max = args.nmax if args.nmax is not None else loaded.n_max

    checks: list[CheckReport] = [
        CheckReport("bicharacter-wellformed", PASS, 0.0, None,
                    {"group": str(model.group)}),
    ]
    normalized = model.eps.is_normalized()
    checks.append(CheckReport("bicharacter-normalized", PASS if normalized.ok else FAIL,
                              0.0, normalized.witness))
    checks.append(check_yang_baxter(model, max(tol, 1e-12)))
    checks.append(check_symmetry(model, tol))
    checks.append(check_infinite_statistics(model, n_max, tol))

    worst = CheckReport("twisted-commutators", PASS, 0.0)
    for i in range(1, model.n_generators + 1):
        for j in range(1, model.n_generators + 1):
            for n in range(n_max + 1):
                rep = commutator_defect(model, i, j, n, tol)
                if rep.defect >= worst.defect:
                    worst = CheckReport("twisted-commutators", rep.status, rep.defect,
                                        rep.witness if rep.status == FAIL else None, rep.data)
    checks.append(worst)
    checks.append(check_braid_exchange_relations(model, n_max, tol))

    dims = []
    max_asym = 0.0
    psd: CheckReport | None = None
    for n in range(n_max + 1):
        result = gram_matrix(model, n)
        max_asym = max(max_asym, result.asymmetry)
        try:
            dim = sector_dimension(model, n, tol)
            dims.append({"sector": n, "full": dim.full, "quotient": dim.quotient})
        except HermiticityError:
            dims.append({"sector": n, "full": model.n_generators ** n, "quotient": None,
                         "status": SKIPPED})
        rep = gram_psd_check(model, n, tol)
        # keep the worst sector's report; a skipped sector outranks defects
        if psd is None:
            psd = rep
        elif psd.status != SKIPPED and (rep.status == SKIPPED or rep.defect > psd.defect):
            psd = rep
    checks.append(CheckReport.from_defect("gram-hermitian", max_asym, tol))
    checks.append(psd if psd is not None else CheckReport("gram-psd", PASS, 0.0))

    report = {
        "command": "check",
        "input": str(args.model),
        "checks": [c.as_dict() for c in checks],
        "results": {
            "sector_dimensions": dims,
            "model": {"generators": model.n_generators,
                      "group_orders": list(model.group.orders),
                      "braid": "grade-diagonal" if model.is_grade_diagonal else "matrix"},
            "tolerance": tol,
            "n_max": n_max,
        },
    }
    return _emit(report, checks, args.json)


def cmd_gram(args) -> int:
    loaded = load_model_file(args.model)
    model = loaded.model
    tol = args.tol if args.tol is not None else loaded.tolerance
    result = gram_matrix(model, args.sector)
    checks = [CheckReport.from_defect("gram-hermitian", result.asymmetry, tol)]
    rank = None
    min_eig = None
    if checks[0].status == PASS:
        dim = sector_dimension(model, args.sector, tol)
        rank = dim.quotient
        psd = gram_psd_check(model, args.sector, tol)
        checks.append(psd)
        min_eig = psd.data.get("min_eigenvalue")
    report = {
        "command": "gram",
        "input": str(args.model),
        "checks": [c.as_dict() for c in checks],
        "results": {
            "sector": args.sector,
            "full": model.n_generators ** args.sector,
            "rank": rank,
            "min_eigenvalue": min_eig,
            "basis": [list(w) for w in result.words],
            "matrix": [[[v.real, v.imag] for v in row] for row in result.matrix.tolist()],
        },
    }
    return _emit(report, checks, args.json)


def cmd_apply(args) -> int:
    loaded = load_model_file(args.model)
    program = parse_program(args.program)
    vector = parse_vector(args.vector)
    out = apply_program(loaded.model, program, vector)
    report = {
        "command": "apply",
        "input": str(args.model),
        "checks": [],
        "results": {
            "program": args.program,
            "vector": [{"word": list(w), "amplitude": [a.real, a.imag]}
                       for w, a in out.sorted_items()],
        },
    }
    return _emit(report, [], args.json)


def cmd_transmute(args) -> int:
    loaded = load_model_file(args.model)
    model = loaded.model
    tol = args.tol if args.tol is not None else loaded.tolerance
    n_max = args.nmax if args.nmax is not None else loaded.n_max
    hom, _target_group = load_hom_file(args.hom, model.group)
    eps_target = load_bicharacter_file(args.target_bichar, hom.target)

    transport = check_transmutation(hom, model.eps, eps_target)
    checks = [CheckReport(
        "bicharacter-transport", PASS if transport.ok else FAIL, 0.0,
        None if transport.ok else {"pair": transport.witness,
                                   "source_phase": transport.source_phase,
                                   "target_phase": transport.target_phase})]
    t = make_transmutation(model, hom, eps_target)
    checks.append(check_cross_symmetric(t, tol))
    checks.append(check_relation_transport(t, n_max, tol))

    out_path = None
    if all(c.status == PASS for c in checks):
        out_path = Path(args.out) if args.out else Path(Path(args.model).stem + ".transmuted.json")
        out_path.write_text(json.dumps(model_to_dict(t.target, tol, n_max),
                                       sort_keys=True, indent=2) + "\n")
    report = {
        "command": "transmute",
        "input": str(args.model),
        "checks": [c.as_dict() for c in checks],
        "results": {
            "hom_images": [list(im.residues) for im in hom.images],
            "target_group": list(hom.target.orders),
            "target_grades": [list(g.residues) for g in t.target.grades],
            "output_file": str(out_path) if out_path else None,
        },
    }
    return _emit(report, checks, args.json)


def cmd_normalize(args) -> int:
    expr = parse_expr(args.expr)
    nf = normalize_expr(expr)
    report = {
        "command": "normalize",
        "input": args.expr,
        "checks": [],
        "results": {"normal_form": nf.render(), "is_unit": nf.is_unit},
    }
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(nf.render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidstat",
                                     description="checks and computations for graded statistics models")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, model=True):
        if model:
            p.add_argument("model", help="model JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable report on stdout")

    p_check = sub.add_parser("check", help="run the full check suite on a model file")
    add_common(p_check)
    p_check.add_argument("--tol", type=float, default=None)
    p_check.add_argument("--nmax", type=int, default=None)
    p_check.set_defaults(func=cmd_check)

    p_gram = sub.add_parser("gram", help="sector Gram matrix, rank, and min eigenvalue")
    add_common(p_gram)
    p_gram.add_argument("--sector", type=int, required=True)
    p_gram.add_argument("--tol", type=float, default=None)
    p_gram.set_defaults(func=cmd_gram)

    p_apply = sub.add_parser("apply", help="apply a process program to a vector")
    add_common(p_apply)
    p_apply.add_argument("--program", required=True, help='e.g. "c1;c2;x1;b2"')
    p_apply.add_argument("--vector", default="", help="comma-separated word; empty = vacuum")
    p_apply.set_defaults(func=cmd_apply)

    p_trans = sub.add_parser("transmute", help="push a model along a group homomorphism")
    add_common(p_trans)
    p_trans.add_argument("--hom", required=True, help="homomorphism JSON file")
    p_trans.add_argument("--target-bichar", required=True, help="target bicharacter JSON file")
    p_trans.add_argument("--out", default=None, help="where to write the transmuted model")
    p_trans.add_argument("--tol", type=float, default=None)
    p_trans.add_argument("--nmax", type=int, default=None)
    p_trans.set_defaults(func=cmd_transmute)

    p_norm = sub.add_parser("normalize", help="normal form of a monoidal expression")
    add_common(p_norm, model=False)
    p_norm.add_argument("--expr", required=True, help='e.g. "(A (x) B)^"')
    p_norm.set_defaults(func=cmd_normalize)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
