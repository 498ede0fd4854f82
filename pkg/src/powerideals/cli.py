"""Command-line front end.

    powerideals tutte SOURCE
    powerideals hilbert --k K [--method formula|oracle|both] SOURCE
    powerideals basis --k K SOURCE
    powerideals oracle --k K [--max-degree D] [--ideal flats|lines|spanning] SOURCE
    powerideals fatpoints [--k K] [--max-degree D] SOURCE
    powerideals cox [--mode ring|central|internal] [--trunc-t T] [--trunc-a A] [--method ...] SOURCE
    powerideals verify (SOURCE | --corpus)

SOURCE is an arrangement file or an inline family such as ``braid:4``,
``boolean:3,1``, ``graphic:1-2,2-3,1-3`` or ``corpus:G``.  Exit codes: 0 on
success, 1 on a computation error or failed check, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Callable

from .arrangement import ArrangementFormatError, VectorConfiguration, corpus, parse_family, read_arrangement
from .coxring import (
    LEMMAS,
    MODES,
    cox_closed_form,
    cox_table_direct,
    lemma_generating_check,
    line_hyperplane_matrix,
)
from .fatpoints import (
    fatpoint_ideal_series,
    fatpoint_quotient_closed,
    fatpoint_quotient_corrected,
    fatpoint_quotient_series,
    principal_series,
    ring_series,
)
from .oracle import (
    annihilation_check,
    directional_degree_poly,
    flats_ideal_dims,
    lines_ideal_dims,
    polys_rank,
    product_of_forms,
    spanning_set_dims,
)
from .tutte import (
    all_activities,
    internal_bases,
    tutte,
    tutte_by_activities,
    tutte_deletion_contraction,
    tutte_subset_sum,
)
from .zonotopal import (
    GradedDims,
    Skipped,
    basis_monomials,
    deletion_contraction_check,
    degree_counts,
    hilbert_series,
)

FAMILIES = ("braid", "boolean", "graphic", "corpus")


class UsageError(Exception):
    pass


class ComputationError(Exception):
    pass


def load_source(source: str) -> VectorConfiguration:
    name = source.partition(":")[0]
    if ":" in source and name in FAMILIES and not Path(source).exists():
        try:
            return parse_family(source)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    path = Path(source)
    if not path.exists():
        raise UsageError(f"cannot read {source!r}: no such file or family spec")
    try:
        return read_arrangement(path)
    except ArrangementFormatError as exc:
        raise UsageError(str(exc)) from None
    except OSError as exc:
        raise UsageError(f"cannot read {source!r}: {exc}") from None


def summary(cfg: VectorConfiguration) -> dict:
    return {"n": cfg.n, "rank": cfg.r, "ambient_dim": cfg.ambient_dim}


def dec(values) -> list[str]:
    return [str(v) for v in values]


# ---------------------------------------------------------------------------
# commands; each returns (result dict, human-readable lines)


def cmd_tutte(cfg, args):
    T = tutte(cfg)
    table = T.table()
    lines = [f"T(x, y) = {T}", "coefficients b[i][j] (row i = power of x, column j = power of y):"]
    lines += ["  " + " ".join(f"{c:>4}" for c in row) for row in table]
    return {"polynomial": str(T), "table": [dec(row) for row in table]}, lines


def _formula_or_oracle(cfg, k, method, D):
    result, lines = {}, []
    if method in ("formula", "both"):
        if k < -2:
            raise UsageError(f"no closed form for k = {k}; use the 'oracle' subcommand")
        f = hilbert_series(cfg, k)
        result["formula"] = dec(f.padded(D + 1) if method == "both" else f.dims)
        lines.append(f"formula: {f}    {list(f.dims)}")
    if method in ("oracle", "both"):
        o = flats_ideal_dims(cfg, k, D)
        result["oracle"] = dec(o.padded(D + 1) if method == "both" else o.dims)
        lines.append(f"oracle:  {o}    {list(o.dims)}")
    if method == "both":
        agree = result["formula"] == result["oracle"]
        result["agree"] = agree
        lines.append("agree: " + ("yes" if agree else "NO"))
        if not agree:
            raise ComputationError("formula and oracle disagree:\n" + "\n".join(lines))
    return result, lines


def cmd_hilbert(cfg, args):
    k = _require_k(args)
    D = args.max_degree if args.max_degree is not None else cfg.n + max(k, 0) + 2
    return _formula_or_oracle(cfg, k, args.method or "formula", D)


def cmd_basis(cfg, args):
    k = _require_k(args)
    if k < -2:
        raise UsageError(f"no monomial basis is known for k = {k}; use the 'oracle' subcommand")
    monos = basis_monomials(cfg, k)
    counts = degree_counts(monos)
    lines = [f"{len(monos)} monomials, per degree {list(counts.dims)}"]
    out = []
    for m in monos:
        text = str(m)
        B = sorted(i + 1 for i in m.basis_B)
        I = sorted(i + 1 for i in m.active_I)
        lines.append(f"  deg {m.degree}: {text}    B={B} I={I}")
        out.append({"monomial": text, "degree": m.degree, "basis": B, "active": I,
                    "exponents": dec(m.exponents),
                    "complement": dec(m.complement)})
    return {"count": len(monos), "per_degree": dec(counts.dims), "monomials": out}, lines


def cmd_oracle(cfg, args):
    k = _require_k(args)
    D = args.max_degree if args.max_degree is not None else cfg.n + max(k, 0) + 2
    if args.ideal == "lines":
        dims = lines_ideal_dims(cfg, k, D)
    elif args.ideal == "spanning":
        if k not in (0, -1, -2):
            raise UsageError("spanning families exist for k in {0, -1, -2}")
        dims = spanning_set_dims(cfg, k, D)
    else:
        dims = flats_ideal_dims(cfg, k, D)
    return {"ideal": args.ideal, "max_degree": D, "dims": dec(dims.dims)}, [f"{dims}    {list(dims.dims)}"]


def cmd_fatpoints(cfg, args):
    D = args.max_degree if args.max_degree is not None else cfg.n + 4
    ks = [args.k] if args.k is not None else list(range(cfg.n + 1))
    for k in ks:
        if not 0 <= k <= cfg.n:
            raise UsageError(f"--k must lie in 0..{cfg.n}")
    result, lines = {"max_degree": D, "levels": []}, []
    for k in ks:
        ideal = fatpoint_ideal_series(cfg, k, D).padded()
        quot = fatpoint_quotient_series(cfg, k, D).padded()
        corrected = fatpoint_quotient_corrected(cfg, k, D).padded()
        printed = fatpoint_quotient_closed(cfg, k, D).padded()
        result["levels"].append({
            "k": k, "ideal": dec(ideal), "quotient": dec(quot),
            "closed_corrected": dec(corrected), "closed_printed": dec(printed),
        })
        lines += [f"k={k}", f"  ideal J(f-k):        {ideal}", f"  quotient J_k:        {quot}",
                  f"  corrected closed:    {corrected}",
                  f"  printed closed form: {printed}" + ("" if printed == quot else "   (differs)")]
    if args.k is None:
        total = [sum(level) for level in zip(*[fatpoint_quotient_series(cfg, k, D).padded() for k in ks])]
        result["telescoped"] = dec(total)
        lines.append(f"sum of quotients: {total}  (ring: {ring_series(cfg, D).padded(D + 1)})")
    return result, lines


def cmd_cox(cfg, args):
    mode = args.mode or "ring"
    method = args.method or "formula"
    tables = {}
    if method in ("formula", "both"):
        tables["closed_form"] = cox_closed_form(cfg, mode, args.trunc_t, args.trunc_a)
    if method in ("oracle", "both"):
        tables["direct"] = cox_table_direct(cfg, mode, args.trunc_t, args.trunc_a)
    result = {"mode": mode, "trunc_t": args.trunc_t, "trunc_a": args.trunc_a}
    lines = []
    H = line_hyperplane_matrix(cfg) if cfg.is_essential() else None
    if H is not None:
        result["lines"] = [dec(h) for h in H.lines]
        result["matrix"] = [dec(row) for row in H.entries]
        lines += [f"lines: {[list(h) for h in H.lines]}",
                  f"line-hyperplane matrix: {[list(r) for r in H.entries]}"]
    else:
        lines.append("not essential: fake grading only")
    for name, table in tables.items():
        entries = sorted(table.entries.items(), key=lambda kv: (sum(kv[0][1]), kv[0][1], kv[0][0]))
        result[name] = [{"d": d, "a": dec(a), "dim": str(c)} for (d, a), c in entries]
        lines.append(f"{name} ({len(entries)} nonzero entries, fake grading (d, a)):")
        lines += [f"  d={d} a={list(a)}: {c}" for (d, a), c in entries]
        if H is not None:
            true = sorted(table.true_grading().items(), key=lambda kv: (kv[0][1], kv[0][0]))
            result[name + "_true_grading"] = [{"d": d, "s": dec(s), "dim": str(c)} for (d, s), c in true]
    if method == "both":
        agree = tables["closed_form"] == tables["direct"]
        result["agree"] = agree
        lines.append("agree: " + ("yes" if agree else "NO"))
        if not agree:
            raise ComputationError("closed form and direct table disagree")
    return result, lines


def _require_k(args) -> int:
    if args.k is None:
        raise UsageError("--k is required for this command")
    return args.k


# ---------------------------------------------------------------------------
# verification battery


@dataclass
class Check:
    config: str
    name: str
    status: str
    detail: str = ""


def _run(checks, config, name, fn: Callable[[], object]):
    try:
        outcome = fn()
    except Skipped as exc:
        checks.append(Check(config, name, "SKIP", str(exc)))
        return
    if isinstance(outcome, tuple):
        ok, detail = outcome
    else:
        ok, detail = outcome, ""
    if ok == "SKIP":
        checks.append(Check(config, name, "SKIP", detail))
    else:
        checks.append(Check(config, name, "PASS" if ok else "FAIL", detail))


def battery(name: str, cfg: VectorConfiguration, D_t: int, D_a: int, seed: int) -> list[Check]:
    checks: list[Check] = []
    rng = random.Random(seed)

    for k in range(-2, 4):
        D = cfg.n + k + 2

        def formula_vs_oracle(k=k, D=D):
            f, o = hilbert_series(cfg, k), flats_ideal_dims(cfg, k, D)
            return f == o, f"{list(f.dims)} vs {list(o.dims)}"

        _run(checks, name, f"formula = oracle, k={k}", formula_vs_oracle)

    def triple():
        a, b, c = tutte_subset_sum(cfg), tutte_deletion_contraction(cfg), tutte_by_activities(cfg)
        return a == b == c, str(a)

    _run(checks, name, "Tutte: subset sum = deletion-contraction = activities", triple)

    def partition():
        if cfg.n > 10:
            return "SKIP", "ground set larger than 10"
        seen = {}
        for rec in all_activities(cfg):
            lower = rec.basis - rec.internally_active
            free = sorted(rec.internally_active | rec.externally_active)
            for size in range(len(free) + 1):
                for extra in combinations(free, size):
                    S = frozenset(lower ^ frozenset(extra))
                    if S in seen:
                        return False, f"subset {sorted(S)} covered twice"
                    seen[S] = rec.basis
        return len(seen) == 2**cfg.n, f"{len(seen)} of {2**cfg.n} subsets"

    _run(checks, name, "activity intervals partition all subsets", partition)

    def evaluations():
        T = tutte(cfg)
        ok = T.evaluate(1, 1) == len(cfg.bases()) and T.evaluate(0, 1) == len(internal_bases(cfg))
        return ok, f"T(1,1)={T.evaluate(1, 1)}, T(0,1)={T.evaluate(0, 1)}"

    _run(checks, name, "T(1,1) = bases, T(0,1) = internal bases", evaluations)

    for k in (-2, -1, 0, 1):
        def basis_check(k=k):
            monos = basis_monomials(cfg, k)
            if degree_counts(monos) != hilbert_series(cfg, k):
                return False, "per-degree counts differ from the Hilbert series"
            polys = [m.expand(cfg) for m in monos]
            by_deg: dict[int, list] = {}
            for m, p in zip(monos, polys):
                by_deg.setdefault(m.degree, []).append(p)
            for d, ps in by_deg.items():
                if polys_rank(ps, cfg.ambient_dim) != len(ps):
                    return False, f"dependent in degree {d}"
            bad = sum(1 for p in polys if not annihilation_check(cfg, k, p))
            return bad == 0, f"{len(monos)} monomials, {bad} outside the inverse system"

        _run(checks, name, f"monomial basis, k={k}", basis_check)

    for k in (0, -1, -2):
        D = cfg.n + 2

        def span_check(k=k, D=D):
            s, o = spanning_set_dims(cfg, k, D), flats_ideal_dims(cfg, k, D)
            return s == o, f"{list(s.dims)} vs {list(o.dims)}"

        _run(checks, name, f"spanning family = oracle, k={k}", span_check)

        def lines_check(k=k, D=D):
            if not cfg.is_essential():
                return "SKIP", "not essential"
            a, b = lines_ideal_dims(cfg, k, D), flats_ideal_dims(cfg, k, D)
            return a == b, f"{list(a.dims)} vs {list(b.dims)}"

        _run(checks, name, f"lines ideal = full ideal, k={k}", lines_check)

    for k in (-2, -1, 0, 1, 2):
        for i in cfg.ground_set:
            _run(checks, name, f"deletion-contraction at element {i + 1}, k={k}",
                 lambda i=i, k=k: deletion_contraction_check(cfg, i, k))

    def flats_rho():
        f = product_of_forms(cfg, cfg.ground_set)
        bad = []
        flats = cfg.flats(min_dim=1)
        for flat in flats:
            h = _generic_point(cfg, flat, rng)
            if cfg.directional_degree(h) != flat.rho:
                bad.append(flat.rho)
            elif directional_degree_poly(f, h, seed=rng.randrange(2**32)) != flat.rho:
                bad.append(flat.rho)
        return not bad, f"{len(flats)} flats"

    _run(checks, name, "directional degree of the product on each flat = rho", flats_rho)

    D = cfg.n + 4

    def telescoping():
        total = [sum(x) for x in zip(*[fatpoint_quotient_series(cfg, k, D).padded() for k in range(cfg.n + 1)])]
        return total == ring_series(cfg, D).padded(D + 1), str(total)

    _run(checks, name, "fat points: quotients telescope to the ring", telescoping)
    _run(checks, name, "fat points: J(f_A) = t^n/(1-t)^(r+m)",
         lambda: fatpoint_ideal_series(cfg, 0, D).padded() == principal_series(cfg, D).padded(D + 1))

    def corrected():
        bad = [k for k in range(cfg.n + 1)
               if fatpoint_quotient_corrected(cfg, k, D).padded() != fatpoint_quotient_series(cfg, k, D).padded()]
        return not bad, f"mismatch at k={bad}" if bad else ""

    _run(checks, name, "fat points: corrected closed form = direct", corrected)

    printed_bad = [k for k in range(cfg.n + 1)
                   if fatpoint_quotient_closed(cfg, k, D).padded() != fatpoint_quotient_series(cfg, k, D).padded()]
    checks.append(Check(name, "fat points: printed closed form = direct (reported only)", "REPORT",
                        f"differs at k={printed_bad}" if printed_bad else "agrees"))

    for mode, k in MODES.items():
        def cox(mode=mode):
            a, b = cox_table_direct(cfg, mode, D_t, D_a), cox_closed_form(cfg, mode, D_t, D_a)
            return a == b, f"{len(a.entries)} nonzero entries"

        _run(checks, name, f"Cox {mode}: closed form = direct", cox)

        def all_ones(mode=mode, k=k):
            if cfg.n > D_a:
                return "SKIP", f"a = (1,...,1) lies outside |a| <= {D_a}"
            table = cox_closed_form(cfg, mode, D_t, D_a)
            column = table.column((1,) * cfg.n)
            expected = GradedDims(tuple(hilbert_series(cfg, k, literal=False).padded(D_t + 1)), "t")
            return column == expected, f"{list(column.dims)}"

        _run(checks, name, f"Cox {mode}: column a = (1,...,1) is the Hilbert series", all_ones)

    for which in LEMMAS:
        def lemma(which=which):
            if cfg.n > 6:
                return "SKIP", "ground set larger than 6"
            return lemma_generating_check(cfg, which, D_a)

        _run(checks, name, f"multiset generating identity {which}", lemma)
    return checks


def _generic_point(cfg, flat, rng):
    while True:
        coeffs = [rng.randint(-50, 50) for _ in flat.basis]
        h = [sum(c * v[i] for c, v in zip(coeffs, flat.basis)) for i in range(cfg.ambient_dim)]
        if any(x != 0 for x in h) and all(
            cfg.evaluate(i, h) != 0 for i in cfg.ground_set if i not in flat.containing_set
        ):
            return h


def cmd_verify(cfg_items, args):
    checks = []
    for name, cfg in cfg_items:
        checks += battery(name, cfg, args.trunc_t, args.trunc_a, args.seed)
    width = max(len(c.name) for c in checks)
    cw = max(len(c.config) for c in checks)
    lines = [f"{'config':<{cw}}  {'check':<{width}}  status  detail"]
    lines += [f"{c.config:<{cw}}  {c.name:<{width}}  {c.status:<6}  {c.detail}" for c in checks]
    counts = {s: sum(1 for c in checks if c.status == s) for s in ("PASS", "FAIL", "SKIP", "REPORT")}
    lines.append(", ".join(f"{v} {k.lower()}" for k, v in counts.items()))
    result = {"checks": [c.__dict__ for c in checks], "counts": counts}
    return result, lines, counts["FAIL"] == 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="powerideals", description="Power ideals of hyperplane arrangements.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, source_required=True):
        sp.add_argument("source", nargs=None if source_required else "?",
                        help="arrangement file or family spec (braid:4, boolean:3,1, graphic:1-2,2-3, corpus:G)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
        return sp

    common(sub.add_parser("tutte", help="Tutte polynomial"))
    sp = common(sub.add_parser("hilbert", help="Hilbert series of C_{A,k}"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--method", choices=["formula", "oracle", "both"])
    sp = common(sub.add_parser("basis", help="l-monomial basis of C_{A,k}"))
    sp.add_argument("--k", type=int)
    sp = common(sub.add_parser("oracle", help="brute-force graded dimensions"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--ideal", choices=["flats", "lines", "spanning"], default="flats")
    sp = common(sub.add_parser("fatpoints", help="fat-point filtration series"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--max-degree", type=int)
    sp = common(sub.add_parser("cox", help="zonotopal Cox ring tables"))
    sp.add_argument("--mode", choices=sorted(MODES))
    sp.add_argument("--trunc-t", type=int, default=6)
    sp.add_argument("--trunc-a", type=int, default=3)
    sp.add_argument("--method", choices=["formula", "oracle", "both"])
    sp = common(sub.add_parser("verify", help="run the cross-check battery"), source_required=False)
    sp.add_argument("--corpus", action="store_true", help="verify the built-in corpus")
    sp.add_argument("--trunc-t", type=int, default=6)
    sp.add_argument("--trunc-a", type=int, default=3)
    return p


COMMANDS = {
    "tutte": cmd_tutte,
    "hilbert": cmd_hilbert,
    "basis": cmd_basis,
    "oracle": cmd_oracle,
    "fatpoints": cmd_fatpoints,
    "cox": cmd_cox,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        for flag in ("max_degree", "trunc_t", "trunc_a"):
            value = getattr(args, flag, None)
            if value is not None and value < 0:
                raise UsageError(f"--{flag.replace('_', '-')} must be nonnegative")
        ok = True
        if args.command == "verify":
            if args.corpus == (args.source is not None):
                raise UsageError("verify takes exactly one of SOURCE or --corpus")
            items = list(corpus().items()) if args.corpus else [(args.source, load_source(args.source))]
            result, lines, ok = cmd_verify(items, args)
            inp = {"configurations": {n: summary(c) for n, c in items}} if args.corpus else summary(items[0][1])
        else:
            cfg = load_source(args.source)
            result, lines = COMMANDS[args.command](cfg, args)
            inp = summary(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (ValueError, ArithmeticError, AssertionError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.json:
        payload = {"command": args.command, "input_summary": inp, "result": result, "seed": args.seed}
        print(json.dumps(payload, indent=2, sort_keys=True), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
