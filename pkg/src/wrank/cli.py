"""Command-line front end.

Exit codes: 0 pass, 1 a claim verified false, 2 usage or parse error.
Brute-force caps come from the environment variables ``WRANK_MAX_BIT_DIM``
and ``WRANK_MAX_ZK_ASSIGNMENTS``.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import warnings

from . import construct
from .construct import (algebraic_entropy_binary, algebraic_entropy_zk, brute_force_distribution_binary,
                        brute_force_distribution_zk, build_binary, build_graphic_zk, figure2)
from .dist import EntropyValue, entropy
from .io import MatroidFile, ParseError, load_matroid, mask_key, parse_subset, vector_to_dict
from .matroid import GraphicMatroid, circuits, effective_weights, labels, loops, phi_vector, to_binary, weighted_rank
from .setfunc import (check_monotone, check_submodular, gamma_polytope, is_extreme_point,
                      reflection_pairs, refute_convexity, MAX_POLYTOPE_N)

FIGURE2_NOTE = ("Replacing each weight-2 edge by a path of two unit edges (b) or by two parallel "
                "unit edges (c) changes the entropy, so neither rewrite preserves the weighted rank.")


class UsageError(Exception):
    pass


def _caps() -> tuple[int, int]:
    def read(name, default):
        raw = os.environ.get(name)
        if raw is None:
            return default
        try:
            val = int(raw)
        except ValueError:
            raise UsageError(f"{name} must be an integer, got {raw!r}")
        if val <= 0:
            raise UsageError(f"{name} must be positive")
        return val

    return (read("WRANK_MAX_BIT_DIM", construct.MAX_BIT_DIM),
            read("WRANK_MAX_ZK_ASSIGNMENTS", construct.MAX_ZK_ASSIGNMENTS))


def _emit(args, payload: dict, text_lines: list[str]):
    if args.output == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _integer_weights(mf: MatroidFile) -> None:
    if any(w.denominator != 1 for w in mf.weights):
        raise UsageError("this command needs integer weights")


def cmd_rank(args) -> int:
    mf = load_matroid(args.file)
    m = mf.matroid
    s = m.full if args.subset is None else parse_subset(args.subset, m.n)
    r = m.rank(s)
    phi = weighted_rank(m, mf.weights, s)
    payload = {"subset": mask_key(s, m.n), "elements": labels(s), "rank": r, "phi": str(phi)}
    _emit(args, payload, [f"subset {mask_key(s, m.n)} {labels(s)}", f"rank {r}", f"phi {phi}"])
    return 0


def cmd_circuits(args) -> int:
    m = load_matroid(args.file).matroid
    cs = circuits(m)
    payload = {"circuits": [mask_key(c, m.n) for c in cs], "count": len(cs)}
    _emit(args, payload, [f"{mask_key(c, m.n)} {labels(c)}" for c in cs] + [f"{len(cs)} circuits"])
    return 0


def _vector_payload(mf: MatroidFile, method: str, k: int | None) -> dict:
    max_dim, max_assign = _caps()
    m = mf.matroid
    payload: dict = {"n": m.n, "method": method}
    if k is not None:
        if not isinstance(m, GraphicMatroid):
            raise UsageError("--k needs a graphic matroid")
        c = build_graphic_zk(m, k)
        payload["k"] = k
        payload["phi"] = {mask_key(s, m.n): str(EntropyValue(m.rank(s), k)) for s in range(1, 1 << m.n)}
        if method != "bruteforce":
            payload["algebraic"] = {mask_key(s, m.n): str(algebraic_entropy_zk(c, s))
                                    for s in range(1, 1 << m.n)}
        if method != "algebraic":
            if k ** m.vertices > max_assign:
                raise UsageError(f"{k}^{m.vertices} assignments exceed cap {max_assign}")
            d = brute_force_distribution_zk(c, max_assign)
            payload["bruteforce"] = {mask_key(s, m.n): entropy(d, s) for s in range(1, 1 << m.n)}
        return payload
    _integer_weights(mf)
    try:
        c = build_binary(to_binary(m), mf.weights)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc))
    payload["phi"] = vector_to_dict(phi_vector(m, mf.weights))
    if method != "bruteforce":
        payload["algebraic"] = {mask_key(s, m.n): str(algebraic_entropy_binary(c, s))
                                for s in range(1, 1 << m.n)}
    if method != "algebraic":
        if c.bit_dim > max_dim:
            raise UsageError(f"bit space dimension {c.bit_dim} exceeds cap {max_dim}")
        d = brute_force_distribution_binary(c, max_dim)
        payload["bruteforce"] = {mask_key(s, m.n): entropy(d, s) for s in range(1, 1 << m.n)}
    return payload


def cmd_entropy_vector(args) -> int:
    mf = load_matroid(args.file)
    payload = _vector_payload(mf, args.method, args.k)
    lines = []
    for key in payload["phi"]:
        row = [key, f"phi={payload['phi'][key]}"]
        if "algebraic" in payload:
            row.append(f"algebraic={payload['algebraic'][key]}")
        if "bruteforce" in payload:
            row.append(f"bruteforce={payload['bruteforce'][key]!r}")
        lines.append(" ".join(row))
    _emit(args, payload, lines)
    return 0


def _verify_submodular(mf: MatroidFile, args) -> dict:
    v = phi_vector(mf.matroid, mf.weights)
    sub_ok, sub_w = check_submodular(v)
    mono_ok, mono_w = check_monotone(v)
    witness = None
    if not sub_ok:
        witness = {"base": mask_key(sub_w.base, v.n), "i": sub_w.i, "j": sub_w.j}
    elif not mono_ok:
        witness = {"base": mask_key(mono_w.base, v.n), "i": mono_w.i}
    return {"claim": "submodular", "passed": sub_ok and mono_ok, "submodular": sub_ok,
            "monotone": mono_ok, "witness": witness}


def _verify_vertex(mf: MatroidFile, args) -> dict:
    m = mf.matroid
    if m.n > MAX_POLYTOPE_N:
        raise UsageError(f"vertex claim limited to n <= {MAX_POLYTOPE_N}")
    # phi ignores loop weights; the singleton plane has to agree with phi
    w = effective_weights(m, mf.weights)
    if w != mf.weights:
        print(f"warning: weights of loops {labels(loops(m))} treated as 0", file=sys.stderr)
    v = phi_vector(m, w)
    desc = gamma_polytope(m.n, w)
    cert = is_extreme_point(desc, v)
    rng = random.Random(args.seed)
    pairs = reflection_pairs(v, rng, args.samples)
    refuted = sum(refute_convexity(desc, v, a, b) for a, b in pairs)
    return {
        "claim": "vertex",
        "passed": cert.is_vertex and refuted == 0,
        "dimension": (1 << m.n) - 1,
        "tight_rank": cert.rank,
        "tight_constraints": len(cert.tight),
        "constraints": len(desc.constraints),
        "sampled_pairs": len(pairs),
        "refuted_pairs": refuted,
        "seed": args.seed,
    }


def _verify_entropic(mf: MatroidFile, args) -> dict:
    _integer_weights(mf)
    max_dim, _ = _caps()
    try:
        to_binary(mf.matroid)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"entropic claim needs a binary or graphic matroid: {exc}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = construct.verify_theorem2(mf.matroid, mf.weights, args.tolerance, args.method, max_dim)
    for note in report.notes:
        print(f"warning: {note}", file=sys.stderr)
    return report.to_dict()


def _verify_zk(mf: MatroidFile, args) -> dict:
    if not isinstance(mf.matroid, GraphicMatroid):
        raise UsageError("zk claim needs a graphic matroid")
    if args.k is None or args.k < 2:
        raise UsageError("zk claim needs --k K with K >= 2")
    _, max_assign = _caps()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = construct.verify_theorem4(mf.matroid, args.k, args.tolerance, args.method, max_assign)
    for note in report.notes:
        print(f"warning: {note}", file=sys.stderr)
    out = report.to_dict()
    out["k"] = args.k
    return out


VERIFIERS = {
    "submodular": _verify_submodular,
    "vertex": _verify_vertex,
    "entropic": _verify_entropic,
    "zk": _verify_zk,
}


def cmd_verify(args) -> int:
    mf = load_matroid(args.file)
    payload = VERIFIERS[args.claim](mf, args)
    status = "PASS" if payload["passed"] else "FAIL"
    lines = [f"{status} {args.claim} {args.file}"]
    if payload.get("failure"):
        lines.append(f"first failure: {payload['failure']}")
    _emit(args, payload, lines)
    return 0 if payload["passed"] else 1


def cmd_figure2(args) -> int:
    rows = figure2(args.method)
    payload: dict = {"note": FIGURE2_NOTE}
    lines = []
    for name, row in rows.items():
        entry = {"edges": row["edges"], "vertices": row["vertices"], "weights": row["weights"],
                 "phi": str(row["phi"])}
        text = f"({name}) {row['vertices']} vertices, {row['edges']} edges, weights {row['weights']}:"
        if "algebraic" in row:
            entry["algebraic"] = str(row["algebraic"])
            text += f" algebraic {row['algebraic']}"
        if "bruteforce" in row:
            entry["bruteforce"] = row["bruteforce"]
            text += f" bruteforce {row['bruteforce']!r}"
        payload[name] = entry
        lines.append(text + " bits")
    lines.append(FIGURE2_NOTE)
    _emit(args, payload, lines)
    return 0


def _tolerance(text: str) -> float:
    val = float(text)
    if not val > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return val


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="wrank", description="Weighted matroid rank functions and their entropic realizations.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rank", parents=[common], help="rank and weighted rank of a subset")
    r.add_argument("file")
    r.add_argument("--subset", help="hex mask (0x5) or element labels (1,3); default: whole ground set")
    r.set_defaults(func=cmd_rank)

    c = sub.add_parser("circuits", parents=[common], help="list all circuits")
    c.add_argument("file")
    c.set_defaults(func=cmd_circuits)

    e = sub.add_parser("entropy-vector", parents=[common], help="entropy vector of the construction next to phi")
    e.add_argument("file")
    e.add_argument("--method", choices=("algebraic", "bruteforce", "both"), default="both")
    e.add_argument("--k", type=int, help="use the Z_k graph construction with this k")
    e.set_defaults(func=cmd_entropy_vector)

    v = sub.add_parser("verify", parents=[common], help="verify a claim over all subsets")
    v.add_argument("file")
    v.add_argument("--claim", choices=sorted(VERIFIERS), required=True)
    v.add_argument("--k", type=int)
    v.add_argument("--method", choices=("algebraic", "bruteforce", "both"), default="both")
    v.add_argument("--tolerance", type=_tolerance, default=construct.DEFAULT_TOL)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=200, help="sampled segment pairs for --claim vertex")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("figure2", parents=[common], help="entropies of the weight-2 triangle and its rewrites")
    f.add_argument("--method", choices=("algebraic", "bruteforce", "both"), default="both")
    f.set_defaults(func=cmd_figure2)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
