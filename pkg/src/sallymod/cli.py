"""Command line: ``sallymod analyze | verify-paper | question | example``."""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .families import EXAMPLE_IDS, QUESTION_BUDGET, graph_ideal, paper_example, question44
from .field import FieldError, FieldSpec
from .groebner import DegreeCapExceeded, GroebnerError
from .ideal import IdealError
from .invariants import (AnalysisConfig, BudgetExceeded, HypothesisError, ReductionError,
                         depth_scan, lemma37_witness, multilinear_form, narita_rescale_check,
                         pair_data, ratliff_rush, sally_data, sample_reductions, v_dimension,
                         v_dimension_audit)
from .io import AnalysisInput, InputError, build, dump_input, load_input, to_json
from .poly import format_polynomial
from .semigroup import SemigroupError

SCHEMA = "1"
EXIT_OK, EXIT_ASSERT, EXIT_INPUT, EXIT_ENGINE = 0, 1, 2, 3


def example_input(id: str) -> AnalysisInput:
    ex = paper_example(id)
    if ex.engine == "semigroup":
        S = ex.I.semigroup
        return AnalysisInput(semigroup=tuple(S.generators), ideal="maximal",
                             reduction=(f"t^{ex.J.least}",))
    ring = ex.I.ring
    return AnalysisInput(variables=ring.variables,
                         ideal=tuple(format_polynomial(g) for g in ex.I.generators),
                         reduction=tuple(format_polynomial(g) for g in ex.J.generators))


def _apply_flags(inp: AnalysisInput, args) -> AnalysisInput:
    if args.field:
        inp.field = args.field
    for key, val in (("bound_reduction", args.bound_reduction), ("bound_gb_degree", args.bound_gb_degree),
                     ("seed", args.seed), ("trials", args.trials), ("power_budget", args.power_budget),
                     ("j_max", args.j_max)):
        if val is not None:
            inp.config[key] = val
    if args.oracle:
        inp.config["oracle"] = True
    return inp


def _elem(p):
    return format_polynomial(p)


def analyze(inp: AnalysisInput) -> tuple[dict, bool]:
    """Full report for one input; returns (document, all assertions passed)."""
    fld = inp.field_spec()
    I, J = build(inp, fld)
    cfg = AnalysisConfig(bound_reduction=inp.setting("bound_reduction"),
                         power_budget=inp.setting("power_budget"), N=inp.setting("N"),
                         oracle=bool(inp.setting("oracle")))
    doc: dict = {
        "provenance": {"tool": "sallymod", "version": __version__, "schema": SCHEMA,
                       "engine": I.engine, "field": fld.token, "seed": inp.setting("seed"),
                       "bound_reduction": cfg.bound_reduction, "power_budget": cfg.power_budget,
                       "bound_gb_degree": inp.setting("bound_gb_degree")},
        "input": {"I": [_elem(g) for g in I.generator_elements()],
                  "J": [_elem(g) for g in J.generator_elements()]},
    }
    ok = True
    pd = pair_data(I, J)
    try:
        rep = sally_data(I, J, config=cfg)
    except BudgetExceeded as exc:
        scan = depth_scan(I, J, pair=pd)
        doc["partial"] = True
        doc["notes"] = [str(exc)]
        doc["lengths"] = {"colength_I": pd.len_power(1), "colength_J": pd.len_j()}
        doc["step_lengths"] = scan.steps
        doc["vv_flags"] = scan.vv
        doc["depth_class"] = scan.depth_class.value
        doc["depth_routes"] = {"certificate": scan.certificate, "vv_failure": scan.vv_failure}
        doc["ok"] = True
        return doc, True

    doc["partial"] = False
    doc["d"] = rep.d
    doc["r"] = rep.r
    doc["N"] = rep.N
    doc["lengths"] = {"colength_I": rep.colength_I, "colength_J": rep.colength_J,
                      "len_I_over_J": rep.colength_J - rep.colength_I}
    doc["values"] = rep.values
    doc["step_lengths"] = rep.step_lengths
    doc["sally_lengths"] = rep.sally_lengths
    doc["vv_flags"] = rep.vv_flags
    if rep.hilbert is not None:
        doc["hilbert"] = {"e": list(rep.e), "postulation": rep.hilbert.postulation}
        doc["sally"] = {"s": list(rep.s)}
    doc["depth_class"] = rep.depth_class.value
    doc["depth_routes"] = rep.depth_routes
    if rep.hp_numerator is not None:
        doc["hp_numerator"] = list(rep.hp_numerator)
    doc["theorem_flags"] = {k: v.as_dict() for k, v in rep.theorem_flags.items()}
    doc["checks"] = [c.as_dict() for c in rep.checks]
    doc["notes"] = list(rep.notes)
    ok = rep.ok

    extras: dict = {}
    monomial_J = getattr(J, "monomial", True)
    if monomial_J:
        extras["v_dimension"] = {n: v_dimension(I, J, n, pd) for n in range(1, rep.r + 1)}
        forms, l37 = {}, {}
        for n in range(1, rep.r + 1):
            if pd.step_length(n + 1) != 1:
                continue
            try:
                ft = multilinear_form(I, J, n, pd)
                forms[n] = {"dim_V": ft.dim, "alpha": _elem(ft.alpha), "symmetric": ft.symmetric,
                            "nondegenerate": ft.nondegenerate, "alpha_I_in_JI": ft.alpha_I_in_JI}
                ok = ok and ft.symmetric and ft.nondegenerate and ft.alpha_I_in_JI in (None, True)
            except HypothesisError as exc:
                forms[n] = {"refused": exc.hypothesis}
            res = lemma37_witness(I, J, n, pair=pd)
            l37[n] = {"kind": res.kind, "z": _elem(res.z) if res.z is not None else None,
                      "step_lengths": res.step_lengths}
            ok = ok and res.ok
        extras["multilinear_form"] = forms
        extras["principal_or_stable"] = l37
        if getattr(I, "monomial", True) and I.equals(I.maximal_ideal()):
            a = v_dimension_audit(I, J)
            extras["v_dimension_audit"] = vars(a) | {"ok": a.ok}
            ok = ok and a.ok
    if inp.setting("j_max"):
        rr = ratliff_rush(I, J, rep.r + 1, inp.setting("j_max"), pd)
        extras["ratliff_rush"] = {"settled_at": rr.settled_at, "powers_closed": rr.powers_closed,
                                  "terms": rr.terms, "e1_sum": rr.e1_sum, "notes": rr.notes}
        if rr.e1_sum is not None and rep.e is not None:
            ok = ok and rr.e1_sum == rep.e[1]
    if rep.d == 2 and rep.hilbert is not None:
        q = max(rep.hilbert.postulation, 1)
        na = narita_rescale_check(I, q, J if monomial_J else None)
        extras["rescaling"] = {"q": q, "e_tilde": list(na.e_tilde), "s0_tilde": na.s0_tilde,
                               "checks": na.checks}
        ok = ok and na.ok
    trials = inp.setting("trials")
    if trials:
        samp = sample_reductions(I, trials, inp.setting("seed"), include=J,
                                 depth_at_least_d_minus_1=rep.depth_class.at_least_d_minus_1,
                                 bound=cfg.bound_reduction)
        extras["sample_reductions"] = {
            "seed": samp.seed, "valid": sum(s.valid for s in samp.samples),
            "constant": samp.constant, "cap_varies": samp.cap_varies,
            "inconclusive": samp.inconclusive}
        ok = ok and samp.ok
    doc["extras"] = extras
    doc["ok"] = ok
    return doc, ok


def _render_text(doc: dict) -> str:
    lines = []
    prov = doc["provenance"]
    lines.append(f"engine {prov['engine']}  field {prov['field']}  sallymod {prov['version']}")
    L = doc["lengths"]
    lines.append(f"λ(R/I) = {L['colength_I']}   λ(R/J) = {L['colength_J']}")
    if "r" in doc:
        lines.append(f"reduction number r = {doc['r']}")
    lines.append("step lengths λ(I^n/JI^(n-1)): " +
                 ", ".join(f"{n}:{v}" for n, v in sorted(doc["step_lengths"].items())))
    if "sally_lengths" in doc:
        lines.append("Sally lengths λ(I^n/J^(n-1)I): " +
                     ", ".join(f"{n}:{v}" for n, v in sorted(doc["sally_lengths"].items())))
    if doc.get("vv_flags") is not None:
        lines.append("J ∩ I^k = JI^(k-1): " +
                     ", ".join(f"{k}:{v}" for k, v in sorted(doc["vv_flags"].items())))
    if "hilbert" in doc:
        lines.append(f"e = {tuple(doc['hilbert']['e'])}   s = {tuple(doc['sally']['s'])}")
    if "hp_numerator" in doc:
        lines.append(f"h-polynomial coefficients {tuple(doc['hp_numerator'])}")
    lines.append(f"depth class: {doc['depth_class']}")
    for name, f in doc.get("theorem_flags", {}).items():
        lines.append(f"  {name:16s} applies={f['applies']!s:5s} consistent={f['consistent']}")
    bad = [c["name"] for c in doc.get("checks", []) if not c["holds"]]
    lines.append(f"checks: {len(doc.get('checks', [])) - len(bad)} passed, {len(bad)} failed"
                 + (f" ({', '.join(bad)})" if bad else ""))
    for n in doc.get("notes", []):
        lines.append(f"note: {n}")
    lines.append("OK" if doc["ok"] else "ASSERTION FAILURES")
    return "\n".join(lines) + "\n"


def _load(target: str) -> AnalysisInput:
    if target in EXAMPLE_IDS:
        return example_input(target)
    with open(target, encoding="utf-8") as fh:
        return load_input(fh.read())


def cmd_analyze(args) -> int:
    inp = _apply_flags(_load(args.input), args)
    t0 = time.perf_counter()
    doc, ok = analyze(inp)
    if args.timing:
        doc["provenance"]["wall_seconds"] = f"{time.perf_counter() - t0:.3f}"
    sys.stdout.write(to_json(doc) if args.format == "json" else _render_text(doc))
    return EXIT_OK if ok else EXIT_ASSERT


def _parse_override(text: str):
    key, _, val = text.partition("=")
    id, _, qty = key.partition(":")
    try:
        v = int(val)
    except ValueError:
        v = {"true": True, "false": False}.get(val.lower(), val)
    return (id, qty), v


def cmd_verify(args) -> int:
    from .verify import verify_paper

    overrides = dict(_parse_override(o) for o in args.override or [])
    fields = [FieldSpec.parse(f) for f in args.fields.split(",")]
    rows = verify_paper(fields, fast=args.fast, oracle=args.oracle, overrides=overrides)
    if args.format == "json":
        sys.stdout.write(to_json([vars(r) for r in rows]))
    else:
        tokens = [f.token for f in fields]
        head = f"{'example':18s} {'quantity':22s} {'expected':16s} " + " ".join(
            f"{t:16s}" for t in tokens) + " status"
        print(head)
        for r in rows:
            vals = " ".join(f"{str(r.values.get(t, '')):16s}" for t in tokens)
            print(f"{r.example:18s} {r.quantity:22s} {str(r.expected):16s} {vals} {r.status}")
    return EXIT_ASSERT if any(r.status == "FAIL" for r in rows) else EXIT_OK


def cmd_question(args) -> int:
    fld = FieldSpec.parse(args.field) if args.field else None
    row = question44(args.n, fld, force=args.force)
    if args.format == "json":
        sys.stdout.write(to_json({"n": row.n, "vv": row.vv, "step_next": row.step_next,
                                  "power_in_J": row.power_in_J, "a": row.a, "b": row.b,
                                  "c": row.c, "partial": row.partial, "note": row.note}))
    else:
        for k, v in sorted(row.vv.items()):
            print(f"(a) J ∩ I^{k} = JI^{k - 1}: {v}")
        if row.partial:
            print(f"PARTIAL: {row.note}")
        else:
            print(f"(b) λ(I^{row.n + 1}/JI^{row.n}) = {row.step_next}: {row.b}")
            print(f"(c) I^{row.n + 1} ⊆ J: {row.c}")
    return EXIT_OK


def cmd_example(args) -> int:
    sys.stdout.write(dump_input(example_input(args.id)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sallymod", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze an input file or a built-in example id")
    a.add_argument("input")
    a.add_argument("--field", help="q or p:<prime>")
    a.add_argument("--bound-reduction", type=int)
    a.add_argument("--bound-gb-degree", type=int)
    a.add_argument("--power-budget", type=int)
    a.add_argument("--seed", type=int)
    a.add_argument("--oracle", action="store_true", help="cross-check with elimination routes")
    a.add_argument("--trials", type=int, help="sampled reductions for the independence audit")
    a.add_argument("--j-max", type=int, help="run the Ratliff-Rush audit with this chain bound")
    a.add_argument("--timing", action="store_true", help="record wall time (breaks byte-identity)")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(fn=cmd_analyze)

    v = sub.add_parser("verify-paper", help="recompute the example tables")
    v.add_argument("--fast", action="store_true", help="skip the heavy example")
    v.add_argument("--fields", default="p:32003,q")
    v.add_argument("--oracle", action="store_true")
    v.add_argument("--override", action="append", metavar="ID:QUANTITY=VALUE",
                   help="replace an expected value (harness self-test)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(fn=cmd_verify)

    q = sub.add_parser("question", help="evidence rows for the graph family at n")
    q.add_argument("n", type=int)
    q.add_argument("--force", action="store_true", help=f"allow n > {QUESTION_BUDGET}")
    q.add_argument("--field")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(fn=cmd_question)

    e = sub.add_parser("example", help="print the input file of a built-in example")
    e.add_argument("id", choices=EXAMPLE_IDS)
    e.set_defaults(fn=cmd_example)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, FieldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DegreeCapExceeded, GroebnerError, IdealError, SemigroupError, ReductionError,
            BudgetExceeded, HypothesisError) as exc:
        print(f"error in {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
