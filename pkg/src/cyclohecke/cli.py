"""``cyclohecke`` command line interface."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .blocks import block_center_dimensions, block_idempotents
from .combinatorics import Multipartition, Partition, enumerate_multipartitions, residue_tuple
from .errors import VerificationError
from .graded import graded_algebra
from .hecke import CyclotomicSpec, hecke_algebra
from .parser import EvaluationError, ParseError, evaluate, parse
from .specht import central_character, dual_specht, relation_failures


class UsageError(ValueError):
    pass


def _rationals(text: str) -> tuple:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(",") if p.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}") from exc


def _spec(args, need_roots=False) -> CyclotomicSpec:
    if (args.roots is None) == (args.coeffs is None):
        raise UsageError("give exactly one of --roots and --coeffs")
    if need_roots and args.roots is None:
        raise UsageError("this command needs --roots")
    if args.roots is not None:
        spec = CyclotomicSpec.from_roots(_rationals(args.roots), args.d)
    else:
        spec = CyclotomicSpec.from_coeffs(_rationals(args.coeffs), args.d)
    if args.l is not None and args.l != spec.l:
        raise UsageError(f"--l {args.l} does not match the degree {spec.l} of f")
    return spec


def _level(args) -> int:
    if args.roots is not None or args.coeffs is not None:
        return _spec(args).l
    if args.l is None:
        raise UsageError("give --l, --roots or --coeffs")
    return args.l


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def parse_multipartition(text: str, level: int | None = None) -> Multipartition:
    """Read ``"2,1|1"`` or ``"(2,1)|(1)"``; empty components may be blank, ``-`` or ``∅``."""
    comps = []
    for piece in text.split("|"):
        piece = piece.strip().strip("()").strip()
        if piece in ("", "-", "∅"):
            comps.append(Partition())
            continue
        try:
            parts = [int(p) for p in piece.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad multipartition {text!r}") from exc
        if any(p <= 0 for p in parts) or parts != sorted(parts, reverse=True):
            raise UsageError(f"components must be partitions: {text!r}")
        comps.append(Partition(parts))
    if level is not None and len(comps) != level:
        raise UsageError(f"multipartition has {len(comps)} components, expected {level}")
    return Multipartition(comps)


# --- commands ---------------------------------------------------------------

def cmd_nf(args):
    spec = _spec(args)
    z = evaluate(parse(args.expression), hecke_algebra(spec))
    if args.format == "json":
        return _dump(z.to_json())
    return z.to_text()


def cmd_graded_nf(args):
    d, l = args.d, _level(args)
    z = evaluate(parse(args.expression), graded_algebra(d, l))
    if args.format == "json":
        return _dump({"d": d, "l": l, **z.to_json()})
    return z.to_text()


def cmd_center(args):
    spec = _spec(args)
    alg = hecke_algebra(spec)
    basis = alg.p_basis()
    alg.center_basis_bruteforce(check=True)
    if args.format == "json":
        return _dump(
            {
                "spec": spec.to_json(),
                "dimension": len(basis),
                "basis": [{"mu": list(mu), **z.to_json()} for mu, z in basis.items()],
            }
        )
    lines = [f"center of H_{spec.d} ({spec}): dimension {len(basis)}"]
    lines += [f"p({','.join(map(str, mu))}) = {z.to_text()}" for mu, z in basis.items()]
    return "\n".join(lines)


def cmd_graded_center(args):
    d, l = args.d, _level(args)
    g = graded_algebra(d, l)
    sums = g.class_sums()
    center = g.center_basis_bruteforce()
    if len(center) != len(sums) or not g.same_span(center, list(sums.values())):
        raise VerificationError("class sums do not span the graded center")
    if args.format == "json":
        return _dump(
            {
                "d": d,
                "l": l,
                "dimension": len(sums),
                "basis": [{"multipartition": [list(c) for c in mp], **z.to_json()} for mp, z in sums.items()],
            }
        )
    lines = [f"graded center for d={d}, l={l}: dimension {len(sums)}"]
    lines += [f"z{mp!r} = {z.to_text()}" for mp, z in sums.items()]
    return "\n".join(lines)


def cmd_blocks(args):
    spec = _spec(args, need_roots=True)
    blocks = block_idempotents(spec)
    block_center_dimensions(spec, blocks)
    if args.format == "json":
        return _dump({"spec": spec.to_json(), "blocks": [b.to_json() for b in blocks]})
    lines = [f"{len(blocks)} blocks for {spec}"]
    for b in blocks:
        fiber = ", ".join(repr(mp) for mp in b.fiber)
        lines.append(f"{b.residues!r}  dim {b.center_dimension}  fiber {fiber}")
    return "\n".join(lines)


def cmd_specht_char(args):
    spec = _spec(args, need_roots=True)
    mp = parse_multipartition(args.multipartition, spec.l)
    if mp.size() != spec.d:
        raise UsageError(f"multipartition has size {mp.size()}, expected {spec.d}")
    rep = dual_specht(mp, spec.roots)
    fails = relation_failures(rep, spec.roots)
    if fails:
        raise VerificationError("relations fail: " + ", ".join(fails))
    chi = central_character(rep)
    expected = residue_tuple(mp, spec.roots)
    if chi != expected:
        raise VerificationError(f"central character {chi!r} differs from residues {expected!r}")
    if args.format == "json":
        return _dump(
            {
                "spec": spec.to_json(),
                "multipartition": [list(c) for c in mp],
                "dimension": rep.dim,
                "central_character": [str(r) for r in chi],
                "matrices": rep.to_json(),
            }
        )
    return f"S{mp!r}: dimension {rep.dim}, central character {chi!r}"


def cmd_verify(args):
    from .checks import run_checks

    results = run_checks(args.suite, set(args.only) if args.only else None)
    ok = all(r.passed for r in results)
    report = {"suite": args.suite, "passed": ok, "criteria": [r.to_json() for r in results]}
    if args.format == "json":
        text = _dump(report)
    else:
        text = "\n".join(
            f"[{'PASS' if r.passed else 'FAIL'}] {r.number:2d} {r.title} ({r.cases} cases, {r.seconds:.1f}s)"
            + "".join(f"\n       {f}" for f in r.failures)
            for r in results
        )
    if not ok:
        raise _Failed(text, report)
    return text


class _Failed(Exception):
    def __init__(self, text, report):
        super().__init__(text)
        self.text = text
        self.report = report


# --- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclohecke",
        description="Exact computations in degenerate cyclotomic Hecke algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, d_required=True):
        p.add_argument("--d", type=int, required=d_required, help="rank d")
        p.add_argument("--l", type=int, help="level l (checked against f)")
        p.add_argument("--roots", help="comma-separated roots q_1,...,q_l of f")
        p.add_argument("--coeffs", help="comma-separated c_1,...,c_l of f = x^l + c_1 x^(l-1) + ...")
        p.add_argument("--format", choices=["text", "json"], default="text")

    for name, fn, helptext in [
        ("nf", cmd_nf, "PBW normal form of an expression"),
        ("graded-nf", cmd_graded_nf, "normal form in the graded algebra"),
    ]:
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("expression")
        p.set_defaults(func=fn)
    for name, fn, helptext in [
        ("center", cmd_center, "basis p_d(mu) of the center, checked by brute force"),
        ("graded-center", cmd_graded_center, "class-sum basis of the graded center"),
        ("blocks", cmd_blocks, "blocks, idempotents and block center dimensions"),
    ]:
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.set_defaults(func=fn)
    p = sub.add_parser("specht-char", help="dual Specht module and its central character")
    common(p)
    p.add_argument("--multipartition", required=True, help='e.g. "2,1|1" or "(1)|()"')
    p.set_defaults(func=cmd_specht_char)
    p = sub.add_parser("verify", help="run the oracle checks")
    p.add_argument("--suite", choices=["small", "full"], default="small")
    p.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def _error(kind, exc, **extra) -> int:
    print(json.dumps({"error": kind, "message": str(exc), **extra}, sort_keys=True), file=sys.stderr)
    return 2 if kind in ("usage", "syntax", "index") else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except _Failed as exc:
        print(exc.text)
        if args.format != "json":
            print(json.dumps(exc.report, sort_keys=True), file=sys.stderr)
        return 1
    except ParseError as exc:
        return _error("syntax", exc, offset=exc.offset)
    except EvaluationError as exc:
        return _error("index", exc)
    except UsageError as exc:
        return _error("usage", exc)
    except VerificationError as exc:
        return _error("verification", exc)
    except ValueError as exc:
        return _error("usage", exc)
    print(out)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
