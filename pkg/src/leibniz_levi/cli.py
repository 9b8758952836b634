"""Command line interface.

Exit codes: 0 success, 1 mathematical negative or failure (e.g. NotNilpotent,
a Leibniz identity violation), 2 input or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import fileformat as ff
from . import linalg as la
from .conjugacy import (Automorphism, E_subspace, classify, exp_R, find_inner_conjugator,
                        s_theta)
from .core import AlgebraTable, LinearMap, Subspace, apply_to_subspace, verify_leibniz
from .errors import FormatError, LeibnizError
from .fixtures import corpus
from .levi import levi_subalgebra, verify_levi
from .report import analyze
from .smodules import canonical_decomposition, hom_space

COMMANDS = ("verify", "analyze", "levi", "hom", "decompose", "classify", "conjugate", "exp",
            "fixtures")


def resolve_algebra(spec: str) -> AlgebraTable:
    """Load a file; fall back to ``spec.json`` and then to the embedded corpus by name."""
    p = Path(spec)
    if p.is_file():
        return ff.load_algebra(p)
    if p.with_name(p.name + ".json").is_file():
        return ff.load_algebra(p.with_name(p.name + ".json"))
    fixtures = corpus()
    if p.name in fixtures:
        return fixtures[p.name]
    raise FormatError(f"cannot read {spec}: no such file or embedded fixture")


def _vecs(A, U: Subspace) -> list:
    return [A.format_vector(v) for v in U.basis]


def _emit(args, data: dict, text: str):
    if args.json:
        print(json.dumps(data, indent=1, sort_keys=True, default=str))
    else:
        print(text)


def cmd_verify(args) -> int:
    A = resolve_algebra(args.file)
    bad = verify_leibniz(A)
    total = A.dim ** 3
    data = {"name": A.name, "triples": total, "violations": [
        {"triple": [A.basis_names[i] for i in v.triple],
         "left": A.format_vector(v.left), "right": A.format_vector(v.right)} for v in bad]}
    if bad:
        lines = [f"Leibniz identity: FAIL ({len(bad)} of {total} triples)"]
        for d in data["violations"][:20]:
            lines.append(f"  ({', '.join(d['triple'])}): left {d['left']}, right {d['right']}")
        _emit(args, data, "\n".join(lines))
        return 1
    _emit(args, data, f"Leibniz identity: PASS ({total} triples)")
    return 0


def _require_verified(A: AlgebraTable):
    if not A.verified:
        raise LeibnizError("table fails the Leibniz identity (run `verify` for details)")


def _analyze_one(path: str) -> dict:
    A = resolve_algebra(path)
    _require_verified(A)
    return analyze(A).to_dict()


def cmd_analyze(args) -> int:
    if len(args.files) > 1 and args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_analyze_one, args.files))
    else:
        results = [_analyze_one(f) for f in args.files]
    from .report import Report
    if args.json:
        print(json.dumps(results if len(results) > 1 else results[0], indent=1, sort_keys=True))
    else:
        print("\n\n".join(Report.from_dict(r).render() for r in results))
    return 0


def cmd_levi(args) -> int:
    A = resolve_algebra(args.file)
    _require_verified(A)
    rep = levi_subalgebra(A)
    chk = verify_levi(A, rep.S, rep.R)
    data = {"name": A.name, "S": _vecs(A, rep.S), "R": _vecs(A, rep.R), "N": _vecs(A, rep.N),
            "I": _vecs(A, rep.I), "killing_rank_on_S": rep.killing_rank_on_S,
            "checks": dict(chk.items())}
    lines = ["S = <" + ", ".join(data["S"]) + ">", "R = <" + ", ".join(data["R"]) + ">"]
    lines += [f"  {k}: {'PASS' if v else 'FAIL'}" for k, v in chk.items()]
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_hom(args) -> int:
    A = resolve_algebra(args.file)
    _require_verified(A)
    rep = levi_subalgebra(A)
    homs = hom_space(A, rep.S, rep.I)
    maps = [{A.format_vector(s): A.format_vector(th(s)) for s in rep.S.basis} for th in homs]
    data = {"name": A.name, "dimension": len(homs), "maps": maps,
            "matrices": [[[str(c) for c in row] for row in th.matrix] for th in homs]}
    lines = [f"Hom_S(S, I) dimension: {len(homs)}"]
    for k, m in enumerate(maps):
        lines.append(f"theta_{k + 1}: " + ", ".join(f"{s} -> {t}" for s, t in m.items()))
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_decompose(args) -> int:
    A = resolve_algebra(args.file)
    _require_verified(A)
    rep = levi_subalgebra(A)
    dec = canonical_decomposition(A, rep.S, rep.I)
    data = {"name": A.name, "G": _vecs(A, dec.G), "Q": _vecs(A, dec.Q), "J": _vecs(A, dec.J),
            "K": _vecs(A, dec.K), "simple_ideals": [_vecs(A, G) for G in dec.simple_ideals],
            "J_components": [[_vecs(A, C) for C in comps] for comps in dec.J_components]}
    lines = [f"{k} = <{', '.join(data[k])}>" for k in ("G", "Q", "J", "K")]
    lines.append(f"simple ideals: {len(dec.simple_ideals)}")
    for idx, comps in zip(dec.supporting, dec.J_components):
        lines.append(f"  ideal {idx + 1}: {len(comps)} isomorphic J component(s)")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    A = resolve_algebra(args.file)
    _require_verified(A)
    c = classify(A)
    data = {"name": A.name, "verdict": c.verdict.value, "predicates": c.predicates,
            "evidence": c.evidence}
    lines = [f"verdict: {c.verdict.value}"]
    lines += [f"  {k}: {v}" for k, v in c.predicates.items()]
    lines += [f"  {k}: {v}" for k, v in c.evidence.items()]
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_conjugate(args) -> int:
    A = resolve_algebra(args.file)
    _require_verified(A)
    try:
        text = Path(args.theta).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {args.theta}: {exc.strerror}") from None
    pairs = ff.parse_map(text, A)
    rep = levi_subalgebra(A)
    S = rep.S
    srcs = Subspace.span(A.dim, [p[0] for p in pairs])
    if srcs != S or len(pairs) != S.dim:
        raise FormatError("map 'from' vectors must form a basis of the computed Levi subalgebra "
                          f"<{', '.join(_vecs(A, S))}>")
    # theta on the canonical S basis
    B = [list(S.coords(p[0])) for p in pairs]
    Binv = la.inverse(B)
    images = [la.lincomb(la.vecmat(S.coords(s), Binv, S.dim), [p[1] for p in pairs], A.dim)
              for s in S.basis]
    try:
        tau = LinearMap.from_images(S, rep.I, images)
    except ValueError:
        raise FormatError("map 'to' vectors must lie in the squares ideal I") from None
    E = E_subspace(A, S, rep.N, rep.I)
    conj = find_inner_conjugator(A, S, tau, E)
    phi = exp_R(A, conj.b)
    ok = apply_to_subspace(phi.map, S) == s_theta(A, S, tau, rep.R)
    data = {"name": A.name, "b": A.format_vector(conj.b), "route": conj.route,
            "b_coords": [str(c) for c in conj.b], "exp(R_b)(S) = S_tau": ok}
    _emit(args, data, f"b = {data['b']}  (route: {conj.route})\nexp(R_b)(S) = S_tau: {ok}")
    return 0


def cmd_exp(args) -> int:
    A = resolve_algebra(args.file)
    parts = [p for p in args.element.split(",")]
    if len(parts) != A.dim:
        raise FormatError(f"--element: expected {A.dim} coefficients, got {len(parts)}")
    a = tuple(ff.parse_coef(p.strip(), f"--element[{k}]") for k, p in enumerate(parts))
    phi: Automorphism = exp_R(A, a)
    M = [[str(c) for c in row] for row in phi.map.matrix]
    data = {"name": A.name, "element": A.format_vector(a), "matrix": M,
            "rows": "images of basis vectors"}
    w = max((len(c) for row in M for c in row), default=1)
    lines = [f"exp(R_a), a = {A.format_vector(a)}; row i = image of {'/'.join(A.basis_names)}[i]"]
    for nm, row in zip(A.basis_names, M):
        lines.append(f"{nm:>6}: " + " ".join(c.rjust(w) for c in row))
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_fixtures(args) -> int:
    out = Path(args.directory)
    try:
        out.mkdir(parents=True, exist_ok=True)
        for name, A in corpus().items():
            ff.save_algebra(A, out / f"{name}.json")
            print(out / f"{name}.json")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leibniz-levi",
                                description="Levi decompositions and conjugacy of Levi "
                                            "subalgebras of Leibniz algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    add("verify", cmd_verify, "check the Leibniz identity on all basis triples")
    sp = add("analyze", cmd_analyze, "full report", file=False)
    sp.add_argument("files", nargs="+")
    sp.add_argument("--jobs", type=int, default=1)
    add("levi", cmd_levi, "compute and verify a Levi subalgebra")
    add("hom", cmd_hom, "basis of Hom_S(S, I)")
    add("decompose", cmd_decompose, "S = G + Q and I = J + K")
    add("classify", cmd_classify, "conjugacy verdict with witnesses")
    sp = add("conjugate", cmd_conjugate, "find b with exp(R_b)|_S = id + theta")
    sp.add_argument("--theta", required=True, help="map file")
    sp = add("exp", cmd_exp, "matrix of exp(R_a)")
    sp.add_argument("--element", required=True, help='comma separated coefficients "c1,...,cn"')
    sp = add("fixtures", cmd_fixtures, "write the embedded corpus", file=False)
    sp.add_argument("directory")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LeibnizError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
