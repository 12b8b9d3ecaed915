"""Command-line front end.

    skewgqc build SPEC                    construct a code and report its parameters
    skewgqc verify-identities             check the factorizations of x^n - 1
    skewgqc reproduce-tables [--table N]  rebuild the table rows under both conventions
    skewgqc count                         code counts: formula next to enumeration
    skewgqc search                        rank 1-generator codes from right-divisor tuples
    skewgqc export-matrix SPEC --out F    write the generator matrix over the ring

Exit codes: 0 success, 1 a reported check failed, 2 usage, 3 schema
violation, 4 polynomial parse error, 5 divisor violation, 6 budget
exceeded, 7 hypothesis violated, 8 other construction error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from pathlib import Path

import jsonschema

try:
    import tomllib
except ImportError:  # python < 3.11
    import tomli as tomllib

from . import analysis, golden
from .errors import (BudgetExceededError, ConstructionError, DivisorError, HypothesisError, ParseError,
                     SkewGqcError)
from .finite_field import FieldSpec
from .sgqc import (CONVENTIONS, BlockProfile, PolyTuple, build_1gen, build_rho_gen, combine_crt_sgqc,
                   count_1gen_sgqc, dual_code)
from .skew_cyclic import build_skew_cyclic, count_skew_cyclic, count_skew_cyclic_oracle, make_idempotent_generator
from .skew_poly import SkewRing, enumerate_right_divisors

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_SCHEMA = 3
EXIT_PARSE = 4
EXIT_DIVISOR = 5
EXIT_BUDGET = 6
EXIT_HYPOTHESIS = 7
EXIT_CONSTRUCTION = 8

SEARCH_BUDGET = 10 ** 4

SPEC_SCHEMA = {
    "type": "object",
    "required": ["field", "ring", "blocks", "generators"],
    "additionalProperties": False,
    "properties": {
        "field": {
            "type": "object",
            "required": ["p"],
            "additionalProperties": False,
            "properties": {
                "p": {"type": "integer", "minimum": 2},
                "d": {"type": "integer", "minimum": 1},
                "modulus": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                "primitive": {"type": "integer", "minimum": 1},
            },
        },
        "theta_t": {"type": "integer", "minimum": 0},
        "ring": {"enum": ["Fq", "S"]},
        "blocks": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}},
        "generators": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "minItems": 1, "items": {"type": "string"}},
        },
        "kind": {"enum": ["1gen", "rho", "crt"]},
        "convention": {"enum": list(CONVENTIONS)},
        "strict_divisors": {"type": "boolean"},
        "check_conventions": {"type": "boolean"},
        "analyses": {
            "type": "object",
            "additionalProperties": False,
            "properties": {k: {"type": "boolean"} for k in ("distance", "dual", "idempotent", "count")},
        },
    },
}


class SchemaError(SkewGqcError):
    pass


def load_spec(path) -> dict:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".toml":
        doc = tomllib.loads(text)
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError:
            try:
                doc = tomllib.loads(text)
            except tomllib.TOMLDecodeError as exc:
                raise SchemaError(f"{path}: neither JSON nor TOML ({exc})") from exc
    validate_spec(doc)
    return doc


def validate_spec(doc: dict):
    try:
        jsonschema.validate(doc, SPEC_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"spec invalid at {where}: {exc.message}") from exc
    for i, row in enumerate(doc["generators"]):
        if doc.get("kind", "1gen" if len(doc["generators"]) == 1 else "rho") != "crt" \
                and len(row) != len(doc["blocks"]):
            raise SchemaError(f"generator row {i + 1} has {len(row)} entries for {len(doc['blocks'])} blocks")


def field_of(doc: dict) -> FieldSpec:
    f = doc["field"]
    return FieldSpec(f["p"], f.get("d", 1), f.get("modulus"), f.get("primitive"))


def build_from_doc(doc: dict, convention: str | None = None):
    """Construct the code described by a validated spec document."""
    F = field_of(doc)
    t = doc.get("theta_t", 1 if F.d > 1 else 0)
    kind = doc.get("kind", "1gen" if len(doc["generators"]) == 1 else "rho")
    conv = convention or doc.get("convention", "paper-table")
    if kind == "crt":
        if doc["ring"] != "Fq" or len(doc["generators"]) != 2:
            raise SchemaError("a 'crt' spec lists two generator rows over Fq")
        prof = BlockProfile(tuple(doc["blocks"]), SkewRing.over(F, "Fq", t))
        comps = [build_1gen(prof, PolyTuple.parse(prof, row), doc.get("strict_divisors", False), conv)
                 for row in doc["generators"]]
        code = combine_crt_sgqc(*comps)
        code.convention = conv
        return code
    prof = BlockProfile(tuple(doc["blocks"]), SkewRing.over(F, doc["ring"], t))
    rows = [PolyTuple.parse(prof, row) for row in doc["generators"]]
    if kind == "1gen":
        if len(rows) != 1:
            raise SchemaError("a 1-generator spec lists exactly one generator row")
        return build_1gen(prof, rows[0], doc.get("strict_divisors", False), conv)
    return build_rho_gen(prof, rows, doc.get("check_conventions", False), conv)


def golden_code(case: golden.GoldenCase, convention: str = "paper-table"):
    return build_from_doc(case.to_doc(convention), convention)


# -- reports ------------------------------------------------------------------------

def _emit(args, text: str, data: dict):
    if getattr(args, "json", False):
        print(json.dumps(data, indent=2, default=str))
    else:
        print(text)


def build_report(code, doc: dict, conventions, budget: int) -> dict:
    rep = {"ring": code.ring.coef.kind, "q": code.field.q, "theta_t": code.ring.t,
           "blocks": list(code.profile.blocks), "generators": [str(r) for r in code.ledger],
           "params": {}}
    if len(code.ledger) == 1:
        rep["parity_check"] = str(code.parity_check)
        rep["dimension"] = code.parity_check.deg
    if code.joined is not None:
        rep["joined_generator"] = str(code.joined)
    rep["flags"] = list(code.flags)
    want = doc.get("analyses", {})
    for conv in conventions:
        if want.get("distance", True):
            rep["params"][conv] = analysis.params_report(code, conv, budget).to_dict()
        else:
            g = code.gray_code(conv)
            rep["params"][conv] = {"n": g.n, "k": g.k, "d": None, "convention": conv}
        closure = analysis.verify_closure(code, conv)
        rep["params"][conv]["shift_closed"] = bool(closure)
        if not closure:
            rep["params"][conv].setdefault("flags", []).append("span not closed under the block shift")
    if code.kind == "rho":
        rank = code.rank_report()
        rep["rank"] = {k: v for k, v in rank.items()}
    if want.get("dual"):
        w = dual_code(code)
        rep["dual"] = {"k": w.gray.k, "closed": bool(w.closure), "hermitian_checked": w.hermitian_checked}
    if want.get("idempotent") and len(code.ledger) == 1:
        idem = []
        for p, t in zip(code.ledger[0].polys, code.profile.blocks):
            try:
                idem.append(str(make_idempotent_generator(build_skew_cyclic(t, p))))
            except SkewGqcError as exc:
                idem.append(f"unavailable: {exc}")
        rep["idempotents"] = idem
    if want.get("count"):
        try:
            rep["count_1gen"] = count_1gen_sgqc(code.profile)
        except HypothesisError as exc:
            rep["count_1gen"] = f"refused: {exc}"
    return rep


def _fmt_params(p: dict) -> str:
    d = "undefined" if p.get("d") is None else p["d"]
    return f"[{p['n']},{p['k']},{d}]"


def format_build(rep: dict) -> str:
    lines = [f"ring {'F_%d' % rep['q'] if rep['ring'] == 'Fq' else 'F_%d+vF_%d' % (rep['q'], rep['q'])}"
             f"[x; theta_{rep['theta_t']}], blocks {tuple(rep['blocks'])}"]
    for i, g in enumerate(rep["generators"]):
        lines.append(f"generator {i + 1}: {g}")
    if "joined_generator" in rep:
        lines.append(f"joined generator h = {rep['joined_generator']}")
    if "parity_check" in rep:
        lines.append(f"f = {rep['parity_check']}")
        lines.append(f"dimension {rep['dimension']}")
    for conv, p in rep["params"].items():
        lines.append(f"{conv}: {_fmt_params(p)}" + (f"  ({'; '.join(p['flags'])})" if p.get("flags") else ""))
    if "rank" in rep and rep["rank"].get("formula") is not None:
        r = rep["rank"]
        lines.append(f"triangular-form rank {r['formula']} (|C| = q^{r['formula_log_q_size']}); "
                     f"row reduction: paper-table {r['paper-table']}, full-module {r['full-module']}")
        lines.extend(f"warning: {f}" for f in r["flags"])
    lines.extend(f"flag: {f}" for f in rep["flags"])
    if "dual" in rep:
        d = rep["dual"]
        lines.append(f"dual: Gray dimension {d['k']}, shift-closed {d['closed']}, "
                     f"Hermitian check {'done' if d['hermitian_checked'] else 'not applicable'}")
    if "idempotents" in rep:
        lines.extend(f"idempotent block {i + 1}: {e}" for i, e in enumerate(rep["idempotents"]))
    if "count_1gen" in rep:
        lines.append(f"1-generator codes with this profile: {rep['count_1gen']}")
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------------

def cmd_build(args) -> int:
    doc = load_spec(args.spec)
    conv = [args.convention] if args.convention else [doc.get("convention", "paper-table"), "full-module"]
    conv = list(dict.fromkeys(conv))
    code = build_from_doc(doc, conv[0])
    rep = build_report(code, doc, conv, args.budget)
    _emit(args, format_build(rep), rep)
    return EXIT_OK


def check_identity(ident: golden.Identity, primitive: int | None = None):
    F = FieldSpec(*ident.field, primitive=primitive)
    ring = SkewRing.over(F, ident.ring, ident.theta_t)
    prod = ring.parse(ident.left) * ring.parse(ident.right)
    return prod == ring.xn_minus_1(ident.n), prod


def verify_identities(identities=None) -> list:
    """[(identity, passed, primitive used, product)] with primitive retries on failure."""
    out = []
    for ident in identities or golden.IDENTITIES:
        ok, prod = check_identity(ident)
        used = None
        if not ok and ident.field[1] > 1:
            for prim in FieldSpec(*ident.field).primitive_elements():
                ok2, _ = check_identity(ident, prim)
                if ok2:
                    ok, used = True, prim
                    break
        out.append((ident, ok, used, prod))
    return out


def cmd_verify_identities(args) -> int:
    start = time.perf_counter()
    results = verify_identities()
    lines, data = [], []
    for ident, ok, prim, prod in results:
        status = "pass" if ok else "FAIL"
        if ok and prim is not None:
            status += f" (primitive element code {prim})"
        lhs = f"({ident.left})*({ident.right})"
        lines.append(f"{ident.ident}: x^{ident.n}-1 = {lhs}: {status}"
                     + ("" if ok else f"; product is {prod}"))
        data.append({"id": ident.ident, "passed": ok, "primitive": prim, "product": str(prod)})
    lines.append(f"{sum(r[1] for r in results)}/{len(results)} identities hold "
                 f"({time.perf_counter() - start:.2f}s)")
    _emit(args, "\n".join(lines), {"identities": data})
    return EXIT_OK if all(r[1] for r in results) else EXIT_FAILED


def reproduce_row(case: golden.GoldenCase, budget: int) -> dict:
    code = golden_code(case)
    res = {"id": case.ident, "expected": list(case.expected), "conventions": {}}
    for conv in ("paper-table", "full-module"):
        rep = analysis.params_report(code, conv, budget)
        res["conventions"][conv] = [rep.n, rep.k, rep.d]
    matches = [c for c, v in res["conventions"].items() if tuple(v) == tuple(case.expected)]
    res["match"] = matches
    res["note"] = case.note
    return res


def cmd_reproduce_tables(args) -> int:
    tables = [args.table] if args.table else sorted(golden.TABLES)
    lines, data = [], []
    for t in tables:
        for case in golden.TABLES[t]:
            r = reproduce_row(case, args.budget)
            data.append(r)
            got = "; ".join(f"{c} {_fmt_params(dict(zip('nkd', v)))}" for c, v in r["conventions"].items())
            exp = _fmt_params(dict(zip("nkd", r["expected"])))
            tag = f"MATCH ({', '.join(r['match'])})" if r["match"] else "MISMATCH"
            lines.append(f"{r['id']} blocks {case.blocks}: expected {exp}: {tag}; {got}")
    _emit(args, "\n".join(lines), {"rows": data})
    return EXIT_OK


def _ring_from_args(args) -> SkewRing:
    F = FieldSpec(args.p, args.d)
    t = args.theta if args.theta is not None else (1 if args.d > 1 else 0)
    return SkewRing.over(F, args.ring, t)


def cmd_count(args) -> int:
    ring = _ring_from_args(args)
    blocks = args.blocks or [args.n]
    formula = count_1gen_sgqc(BlockProfile(tuple(blocks), ring))
    oracle = None
    try:
        oracle = 1
        for t in blocks:
            oracle *= count_skew_cyclic_oracle(t, ring, bound=min(args.budget, 10 ** 5))
    except BudgetExceededError:
        oracle = None
    text = f"formula {formula}" + (f", enumeration {oracle}" if oracle is not None else ", enumeration skipped")
    _emit(args, text, {"blocks": blocks, "formula": formula, "oracle": oracle})
    return EXIT_OK if oracle in (None, formula) else EXIT_FAILED


def search(profile: BlockProfile, degrees, budget: int, resume: int = 0, convention: str = "paper-table",
           distance_budget: int = 10 ** 6):
    """Build 1-generator codes from tuples of monic right divisors within degree bounds.

    Returns (ranked results, cursor); the cursor is None when the search
    finished, else the index of the first tuple not yet visited.
    """
    per_block = []
    for t, (lo, hi) in zip(profile.blocks, degrees):
        divs = []
        for k in range(max(lo, 0), min(hi, t) + 1):
            divs += enumerate_right_divisors(t, k, profile.ring)
        per_block.append(divs)
    results, cursor = [], None
    for idx, combo in enumerate(itertools.product(*per_block)):
        if idx < resume:
            continue
        if idx - resume >= budget:
            cursor = idx
            break
        e = PolyTuple(profile, combo)
        if e.is_zero():
            continue
        code = build_1gen(profile, e, convention=convention)
        rep = analysis.params_report(code, convention, distance_budget)
        results.append({"index": idx, "generator": str(e), "params": [rep.n, rep.k, rep.d]})
    results.sort(key=lambda r: (-(r["params"][2] or 0), -r["params"][1], r["index"]))
    return results, cursor


def cmd_search(args) -> int:
    ring = _ring_from_args(args)
    prof = BlockProfile(tuple(args.blocks), ring)
    lo = args.min_deg if args.min_deg is not None else [0] * prof.l
    hi = args.max_deg if args.max_deg is not None else list(prof.blocks)
    if len(lo) == 1:
        lo = lo * prof.l
    if len(hi) == 1:
        hi = hi * prof.l
    results, cursor = search(prof, list(zip(lo, hi)), args.budget, args.resume, args.convention or "paper-table")
    lines = [f"{_fmt_params(dict(zip('nkd', r['params'])))}  {r['generator']}" for r in results[:args.top]]
    if cursor is not None:
        lines.append(f"budget reached; resume with --resume {cursor}")
    _emit(args, "\n".join(lines) or "no codes in range", {"results": results, "resume": cursor})
    return EXIT_OK


def cmd_export_matrix(args) -> int:
    doc = load_spec(args.spec)
    code = build_from_doc(doc, args.convention)
    text = code.export_matrix()
    Path(args.out).write_text(text)
    _emit(args, f"wrote {code.generator_matrix().shape[0]} rows to {args.out}",
          {"rows": code.generator_matrix().shape[0], "out": str(args.out)})
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--convention", choices=CONVENTIONS[:2], default=None,
                        help="span convention for Gray images")
    common.add_argument("--budget", type=int, default=None,
                        help=f"enumeration budget in words (default {analysis.DEFAULT_BUDGET}); "
                             f"for search, tuples visited (default {SEARCH_BUDGET})")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ring_args = argparse.ArgumentParser(add_help=False)
    ring_args.add_argument("--p", type=int, required=True)
    ring_args.add_argument("--d", type=int, default=1)
    ring_args.add_argument("--theta", type=int, default=None, help="Frobenius exponent t")
    ring_args.add_argument("--ring", choices=["Fq", "S"], default="S")

    parser = argparse.ArgumentParser(prog="skewgqc", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="construct a code from a spec file")
    p.add_argument("spec")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify-identities", parents=[common], help="check the x^n - 1 factorizations")
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("reproduce-tables", parents=[common], help="rebuild the tabulated codes")
    p.add_argument("--table", type=int, choices=sorted(golden.TABLES))
    p.set_defaults(func=cmd_reproduce_tables)

    p = sub.add_parser("count", parents=[common, ring_args], help="count skew cyclic / 1-generator codes")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--blocks", type=int, nargs="+")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("search", parents=[common, ring_args], help="search 1-generator codes")
    p.add_argument("--blocks", type=int, nargs="+", required=True)
    p.add_argument("--min-deg", type=int, nargs="+")
    p.add_argument("--max-deg", type=int, nargs="+")
    p.add_argument("--resume", type=int, default=0)
    p.add_argument("--top", type=int, default=20)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export-matrix", parents=[common], help="write the generator matrix")
    p.add_argument("spec")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_matrix)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = SEARCH_BUDGET if args.command == "search" else analysis.DEFAULT_BUDGET
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DivisorError as exc:
        print(f"divisor violation: {exc}", file=sys.stderr)
        return EXIT_DIVISOR
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except HypothesisError as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (ConstructionError, SkewGqcError) as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION


if __name__ == "__main__":
    sys.exit(main())
