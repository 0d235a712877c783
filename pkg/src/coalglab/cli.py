"""Command-line interface: ``coalglab <command> ...``.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad input (including
exceeded budgets and questions the exact procedures cannot settle).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import acceptance, interchange as io
from .budget import Budget, default_budget
from .coalgebra import (Coalgebra, Quiver, Subspace, check_coalgebra, coradical_filtration, grouplike_labels,
                        is_pointed, path_coalgebra, wedge)
from .comodule import Comodule, DimensionVector, cf, check_comodule
from .corpus import QUIVER_CORPUS, corpus_quiver
from .embeddings import (F_functor, FreeAlgebraModule, G_functor, QuiverRep, bounded_functor, bounded_quiver_embedding,
                         functor_F, functor_G, g_end_shape, identity_functor, nilpotent_module_corpus,
                         quiver_rep_classes, shift_embedding, shift_functor, verify_representation_embedding,
                         zero_functor)
from .errors import BudgetExceeded, CoalgLabError, InputError, UndecidedError
from .exactlin.field import Field, QQ, field_from_name
from .ext import cf_dimvec, ext_quiver, wildness_witness
from .localization import lift_idempotent, localization, section_S, ts_counit
from .oracle import cf_dimvec_oracle, enumerate_comodules


class Ctx:
    def __init__(self, args):
        self.args = args
        self.field: Field | None = field_from_name(args.field) if args.field else None
        self.seed: int = args.seed
        self.budget: Budget = default_budget().with_overrides(args.budget)

    def field_or(self, default: Field = QQ) -> Field:
        return self.field or default

    def agree(self, f: Field) -> None:
        if self.field is not None and self.field != f:
            raise InputError(f"--field {self.field.name} disagrees with the document field {f.name}")


def _report(command: str, result: dict) -> dict:
    return {"version": io.VERSION, "kind": "report", "command": command, "result": result}


def _load(ctx: Ctx, path: str, want: type | tuple | None = None):
    obj = io.load(path)
    if want is not None and not isinstance(obj, want):
        names = want.__name__ if isinstance(want, type) else " or ".join(w.__name__ for w in want)
        raise InputError(f"{path}: expected a {names} document")
    fld = getattr(obj, "field", None)
    if isinstance(obj, Comodule):
        fld = obj.coalgebra.field
    if isinstance(fld, Field):
        ctx.agree(fld)
    return obj


def _labels(v: Subspace, c: Coalgebra) -> list[str]:
    out = []
    f = c.field
    for r in v.rows:
        terms = []
        for lab, x in zip(c.labels, r):
            if x:
                terms.append(lab if x == f.one else f"{f.format(x)}*{lab}")
        out.append(" + ".join(terms))
    return out


def _subspace_arg(ctx: Ctx, c: Coalgebra, arg: str) -> Subspace:
    arg = arg.strip()
    if arg.startswith("@"):
        v = _load(ctx, arg[1:], Subspace)
        if v.n != c.dim or v.field != c.field:
            raise InputError(f"{arg[1:]}: subspace does not live in this coalgebra")
        return v
    if arg in ("all", "*"):
        return c.full()
    if arg in ("none", ""):
        return c.zero_space()
    return c.span_labels(*[s.strip() for s in arg.split(",") if s.strip()])


def _dimvec(text: str) -> DimensionVector:
    entries = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, val = item.partition(":")
        if not sep:
            raise InputError(f"bad dimension vector entry {item!r}; use label:count")
        try:
            entries[key.strip()] = entries.get(key.strip(), 0) + int(val)
        except ValueError:
            raise InputError(f"bad count in {item!r}") from None
    return DimensionVector.of(entries)


# ---------------------------------------------------------------- commands


def cmd_check(ctx: Ctx):
    obj = _load(ctx, ctx.args.file, (Coalgebra, Comodule))
    rep = check_coalgebra(obj) if isinstance(obj, Coalgebra) else check_comodule(obj)
    kind = "coalgebra" if isinstance(obj, Coalgebra) else "comodule"
    result = {"object": kind, "valid": rep.valid, "violations": rep.violations}
    return _report("check", result), f"{kind}: {rep.summary()}\n", 0 if rep.valid else 1


def cmd_path_coalgebra(ctx: Ctx):
    a = ctx.args
    q = corpus_quiver(a.quiver) if a.quiver in QUIVER_CORPUS else _load(ctx, a.quiver, Quiver)
    c = path_coalgebra(q, a.max_len, ctx.field_or(), ctx.budget)
    text = f"path coalgebra of dimension {c.dim}: {', '.join(c.labels)}\n"
    return io.coalgebra_doc(c), text, 0


def cmd_wedge(ctx: Ctx):
    c = _load(ctx, ctx.args.coalgebra, Coalgebra)
    v = _subspace_arg(ctx, c, ctx.args.left)
    w = _subspace_arg(ctx, c, ctx.args.right)
    out = wedge(c, v, w)
    text = f"wedge: dimension {out.dim} of {c.dim}\n" + "".join(f"  {s}\n" for s in _labels(out, c))
    return io.subspace_doc(out), text, 0


def cmd_coradical(ctx: Ctx):
    c = _load(ctx, ctx.args.coalgebra, Coalgebra)
    filt = coradical_filtration(c)
    result = {"filtration": [io.subspace_doc(v) for v in filt], "dims": [v.dim for v in filt],
              "pointed": is_pointed(c)}
    if result["pointed"]:
        result["grouplikes"] = grouplike_labels(c)
    text = f"coradical filtration dims: {result['dims']}\n"
    if result["pointed"]:
        text += f"pointed; grouplikes {', '.join(result['grouplikes'])}\n"
    else:
        text += "not pointed\n"
    return _report("coradical", result), text, 0


def cmd_cf(ctx: Ctx):
    m = _load(ctx, ctx.args.comodule, Comodule)
    v = cf(m)
    text = f"cf: dimension {v.dim}\n" + "".join(f"  {s}\n" for s in _labels(v, m.coalgebra))
    return io.subspace_doc(v), text, 0


def cmd_cfdim(ctx: Ctx):
    c = _load(ctx, ctx.args.coalgebra, Coalgebra)
    d = _dimvec(ctx.args.dimvec)
    rec = cf_dimvec(c, d, ctx.budget)
    status = 0
    if ctx.args.no_oracle:
        verdict = "skipped"
    elif not c.p:
        verdict = "skipped (needs GF(p))"
    else:
        orc = cf_dimvec_oracle(c, d, ctx.budget)
        if not orc <= rec:
            verdict, status = "not contained", 1
        elif orc == rec:
            verdict = "equal"
        else:
            verdict = f"strict (oracle dimension {orc.dim})"
    result = {"dimvec": d.as_dict(), "recursion": io.subspace_doc(rec), "dim": rec.dim, "oracle": verdict}
    text = (f"cf{d}: dimension {rec.dim} of {c.dim}\n" + "".join(f"  {s}\n" for s in _labels(rec, c))
            + f"oracle: {verdict}\n")
    return _report("cfdim", result), text, status


def cmd_ext_quiver(ctx: Ctx):
    c = _load(ctx, ctx.args.coalgebra, Coalgebra)
    eq = ext_quiver(c)
    mult = [[h, g, k] for (h, g), k in sorted(eq.multiplicity.items())]
    result = {"quiver": io.quiver_doc(eq.quiver), "multiplicities": mult}
    text = f"vertices: {', '.join(eq.quiver.vertices)}\n" + "".join(f"  {h} -> {g}: {k}\n" for h, g, k in mult)
    return _report("ext-quiver", result), text, 0


def cmd_wild_witness(ctx: Ctx):
    c = _load(ctx, ctx.args.coalgebra, Coalgebra)
    w = wildness_witness(c)
    f = c.field
    result = {"found": w.found, "description": w.describe(),
              "multiplicities": [[h, g, k] for (h, g), k in sorted(w.multiplicities.items())]}
    status = 0
    if w.found:
        result.update({"kind": w.kind, "pair": list(w.pair), "checks": w.checks,
                       "basis": [[f.format(x) for x in r] for r in w.basis],
                       "model": io.coalgebra_doc(w.model)})
        if not all(w.checks.values()):
            status = 1
    if ctx.args.expect == "found" and not w.found or ctx.args.expect == "none" and w.found:
        status = 1
    text = w.describe() + "\n" + "".join(f"  {k}: {v}\n" for k, v in sorted(w.checks.items()))
    return _report("wild-witness", result), text, status


def _keep(text: str) -> list[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def cmd_localize(ctx: Ctx):
    c = _load(ctx, ctx.args.coalgebra, Coalgebra)
    pres = lift_idempotent(c, _keep(ctx.args.keep))
    loc = localization(pres)
    f = c.field
    D = loc.coalgebra
    check = check_coalgebra(D)
    result = {"keep": list(pres.keep), "idempotent": [f.format(x) for x in pres.e],
              "coalgebra": io.coalgebra_doc(D), "valid": check.valid}
    text = f"eCe: dimension {D.dim}, basis {', '.join(D.labels) or '(empty)'}; {check.summary()}\n"
    return _report("localize", result), text, 0 if check.valid else 1


def cmd_section(ctx: Ctx):
    c = _load(ctx, ctx.args.coalgebra, Coalgebra)
    pres = lift_idempotent(c, _keep(ctx.args.keep))
    D = localization(pres).coalgebra
    n = _load(ctx, ctx.args.comodule, Comodule)
    if n.coalgebra != D:
        raise InputError("the comodule is not over the localized coalgebra (run `localize` to get it)")
    S = section_S(pres, n)
    ts = ts_counit(pres, n)
    f = c.field
    result = {"section": io.comodule_doc(S), "ts_is_identity": ts.is_isomorphism,
              "ts_witness": [[f.format(x) for x in r] for r in (ts.witness or [])]}
    text = f"S(N): dimension {S.dim}; T S(N) -> N is {'an isomorphism' if ts.is_isomorphism else 'NOT an isomorphism'}\n"
    return _report("section", result), text, 0 if ts.is_isomorphism else 1


def _lambdas(ctx: Ctx, f: Field):
    if ctx.args.lambdas is None:
        return None
    return [f.parse(s.strip()) for s in ctx.args.lambdas.split(",") if s.strip()]


def cmd_embed(ctx: Ctx):
    a = ctx.args
    if a.functor == "bounded":
        r = _load(ctx, a.input, QuiverRep)
        lam = _lambdas(ctx, r.field)
        if lam is not None:
            lam = dict(zip(r.quiver.vertices, lam))
        out = bounded_quiver_embedding(r, a.bound, lam)
        return io.module_doc(out), f"module of dimension {out.dim} over {out.k} variables\n", 0
    m = _load(ctx, a.input, FreeAlgebraModule)
    if a.functor == "F":
        rep = functor_F(m)
        return io.representation_doc(rep), f"representation with spaces {rep.spaces}\n", 0
    if a.functor == "G":
        com = functor_G(m)
        return io.comodule_doc(com), f"comodule of dimension {com.dim}\n", 0
    out = shift_embedding(m, a.trunc, _lambdas(ctx, m.field))
    return io.module_doc(out), f"module of dimension {out.dim} over y, z, t\n", 0


def cmd_enumerate(ctx: Ctx):
    c = _load(ctx, ctx.args.coalgebra, Coalgebra)
    d = _dimvec(ctx.args.dimvec)
    classes = enumerate_comodules(c, d, ctx.budget, ctx.seed)
    result = {"dimvec": d.as_dict(), "count": len(classes), "comodules": [io.comodule_doc(m) for m in classes]}
    return _report("enumerate", result), f"{len(classes)} isomorphism classes with dimension vector {d}\n", 0


def cmd_verify_embedding(ctx: Ctx):
    a = ctx.args
    f = ctx.field_or(field_from_name("GF:5"))
    if a.functor == "bounded":
        q = corpus_quiver(a.quiver)
        corpus = quiver_rep_classes(q, f, a.max_total, ctx.budget, ctx.seed)
        lam = _lambdas(ctx, f)
        functor = bounded_functor(a.bound, dict(zip(q.vertices, lam)) if lam else None)
        end_shape = None
    else:
        corpus = nilpotent_module_corpus(f, a.max_dim, a.max_vars, ctx.budget, ctx.seed)
        functor = {"F": F_functor, "G": G_functor, "identity": identity_functor, "zero": zero_functor}.get(a.functor)
        functor = functor() if functor else shift_functor(a.trunc, _lambdas(ctx, f))
        end_shape = g_end_shape if a.functor == "G" else None
    rep = verify_representation_embedding(functor, corpus, ctx.budget, ctx.seed, end_shape=end_shape)
    result = {"functor": rep.functor, "objects": len(corpus), "passed": rep.passed,
              "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in rep.checks],
              "end_defect": rep.end_defect}
    text = "".join(line + "\n" for line in rep.lines())
    return _report("verify-embedding", result), text, 0 if rep.passed else 1


def cmd_acceptance(ctx: Ctx):
    only = [int(x) for x in ctx.args.criteria.split(",")] if ctx.args.criteria else None
    if only and any(x not in acceptance.CRITERIA for x in only):
        raise InputError(f"criteria must be among {sorted(acceptance.CRITERIA)}")
    results = acceptance.run(only, ctx.budget, ctx.seed)
    ok = all(r.passed for r in results)
    result = {"passed": ok, "criteria": [r.as_dict() for r in results]}
    return _report("acceptance", result), acceptance.format_text(results), 0 if ok else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Q or GF:p")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", help="overrides such as max_total_dim=4,max_prime=7")
    common.add_argument("--out", help="write the output here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="coalglab", description="Exact computations with coalgebras and comodules.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(run=fn)
        return sp

    sp = add("check", cmd_check, "check coalgebra or comodule axioms")
    sp.add_argument("file")
    sp = add("path-coalgebra", cmd_path_coalgebra, "truncated path coalgebra of a quiver")
    sp.add_argument("quiver", help=f"quiver document or one of {', '.join(QUIVER_CORPUS)}")
    sp.add_argument("--max-len", type=int, default=1)
    sp = add("wedge", cmd_wedge, "V ^ W")
    sp.add_argument("coalgebra")
    sp.add_argument("--left", default="all", help="labels a,b / all / none / @subspace.json")
    sp.add_argument("--right", default="all")
    sp = add("coradical", cmd_coradical, "coradical filtration")
    sp.add_argument("coalgebra")
    sp = add("cf", cmd_cf, "coefficient coalgebra of a comodule")
    sp.add_argument("comodule")
    sp = add("cfdim", cmd_cfdim, "cf(d) by recursion, checked against the oracle")
    sp.add_argument("coalgebra")
    sp.add_argument("--dimvec", required=True, help="e.g. a:1,b:1")
    sp.add_argument("--no-oracle", action="store_true")
    sp = add("ext-quiver", cmd_ext_quiver, "Ext quiver of a pointed coalgebra")
    sp.add_argument("coalgebra")
    sp = add("wild-witness", cmd_wild_witness, "search the Ext quiver for a wildness witness")
    sp.add_argument("coalgebra")
    sp.add_argument("--expect", choices=("found", "none"))
    sp = add("localize", cmd_localize, "eCe for the idempotent of a vertex set")
    sp.add_argument("coalgebra")
    sp.add_argument("--keep", required=True, help="comma separated grouplike labels")
    sp = add("section", cmd_section, "S(N) for an eCe-comodule N, with the T S = Id check")
    sp.add_argument("coalgebra")
    sp.add_argument("--keep", required=True)
    sp.add_argument("--comodule", required=True)
    sp = add("embed", cmd_embed, "apply an embedding functor")
    sp.add_argument("functor", choices=("F", "G", "shift", "bounded"))
    sp.add_argument("input")
    sp.add_argument("--trunc", type=int, default=2)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--lambdas", help="comma separated distinct scalars")
    sp = add("enumerate", cmd_enumerate, "comodules with a dimension vector, up to isomorphism")
    sp.add_argument("coalgebra")
    sp.add_argument("--dimvec", required=True)
    sp = add("verify-embedding", cmd_verify_embedding, "run the embedding harness")
    sp.add_argument("functor", choices=("F", "G", "shift", "bounded", "identity", "zero"))
    sp.add_argument("--max-dim", type=int, default=2)
    sp.add_argument("--max-vars", type=int, default=2)
    sp.add_argument("--trunc", type=int, default=2)
    sp.add_argument("--quiver", default="kronecker")
    sp.add_argument("--max-total", type=int, default=3)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--lambdas")
    sp = add("acceptance", cmd_acceptance, "run the acceptance suite")
    sp.add_argument("--criteria", help="comma separated subset, e.g. 1,2")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        ctx = Ctx(args)
        doc, text, status = args.run(ctx)
    except (InputError, BudgetExceeded, UndecidedError) as exc:
        print(f"coalglab {args.command}: {exc}", file=sys.stderr)
        return 2
    except CoalgLabError as exc:  # pragma: no cover
        print(f"coalglab {args.command}: {exc}", file=sys.stderr)
        return 2
    output = io.dumps(doc) if args.format == "json" else text
    if args.out:
        try:
            Path(args.out).write_text(output, encoding="utf-8")
        except OSError as exc:
            print(f"coalglab: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
