"""Command-line front end for the munn package.

Element literals use the syntax ``({w1,w2,...},w)`` with ``e`` for the
empty word and ``X^-1`` or ``X'`` for inverse letters; whitespace is
ignored.  Exit codes: 0 success, 1 domain error, 2 usage error,
3 resource-cap or timeout exhaustion.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from typing import List, Optional, Sequence, Tuple

from .congruences import (
    CongruencePresentation,
    HSequence,
    annihilator_candidate,
    intersection_candidate,
    irreducible_form,
    project_alphabet,
    relate,
)
from .counterexample import refute_finite_generation, tau_pairs_up_to_weight
from .elements import (
    MonoidElement,
    element_json_str,
    element_to_dot,
    element_to_json,
    inverse,
    multiply,
    parse_element,
    plus,
    render_element,
    star,
)
from .errors import MunnError, ParseError, PreconditionError, ResourceCapError
from .finitary import GeneratingSetReport, gen_L, gen_R, gen_l, gen_r
from .retracts import fla_to_free_retract, transfer_annihilator
from .words import Alphabet

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alphabet", default="x,y", help="comma-separated letter names")
    p.add_argument("--flavor", default="fi", choices=["fi", "fa", "fla"])
    p.add_argument("--format", default="text", choices=["text", "json", "dot"])
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--timeout-ms", type=int, default=None)


def _alphabet(args: argparse.Namespace) -> Alphabet:
    names = tuple(n for n in args.alphabet.split(",") if n)
    if not names:
        raise PreconditionError("alphabet must be nonempty")
    return Alphabet(names)


def _caps(args: argparse.Namespace) -> None:
    for name in ("max_weight", "max_nodes", "timeout_ms"):
        v = getattr(args, name, None)
        if v is not None and v <= 0:
            raise PreconditionError(f"{name.replace('_', '-')} must be positive")


def _emit_element(m: MonoidElement, alphabet: Alphabet, fmt: str) -> None:
    if fmt == "json":
        print(element_json_str(m, alphabet))
    elif fmt == "dot":
        print(element_to_dot(m, alphabet))
    else:
        print(render_element(m, alphabet))


def _emit_pairs(
    pairs: Sequence[Tuple[MonoidElement, MonoidElement]],
    alphabet: Alphabet,
    fmt: str,
    extra: Optional[dict] = None,
) -> None:
    if fmt == "json":
        obj = dict(extra or {})
        obj["count"] = len(pairs)
        obj["pairs"] = [
            [element_to_json(u, alphabet), element_to_json(v, alphabet)]
            for u, v in pairs
        ]
        print(json.dumps(obj, sort_keys=True))
    else:
        for key, val in (extra or {}).items():
            print(f"{key}: {val}")
        print(f"count: {len(pairs)}")
        for u, v in pairs:
            print(f"{render_element(u, alphabet)} {render_element(v, alphabet)}")


def _emit_sequence(s: HSequence, alphabet: Alphabet, fmt: str) -> None:
    if fmt == "json":
        obj = {
            "side": s.side,
            "start": element_to_json(s.start, alphabet),
            "end": element_to_json(s.end, alphabet),
            "steps": [
                {
                    "c": element_to_json(c, alphabet),
                    "d": element_to_json(d, alphabet),
                    "t": element_to_json(t, alphabet),
                }
                for (c, d), t in s.steps
            ],
        }
        print(json.dumps(obj, sort_keys=True))
    else:
        print(f"side: {s.side}")
        print(f"start: {render_element(s.start, alphabet)}")
        for (c, d), t in s.steps:
            print(
                f"  step: c={render_element(c, alphabet)}"
                f" d={render_element(d, alphabet)}"
                f" t={render_element(t, alphabet)}"
            )
        print(f"end: {render_element(s.end, alphabet)}")


def _load_presentation(path: str, alphabet: Alphabet, flavor: str, side: str
                       ) -> CongruencePresentation:
    """Pairs file: JSON list of two-element lists of element literals."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise ParseError("pairs file must hold a JSON list of pairs")
    pairs = []
    for item in raw:
        if not (isinstance(item, list) and len(item) == 2):
            raise ParseError(f"bad pair entry: {item!r}")
        pairs.append(
            (parse_element(item[0], alphabet, flavor),
             parse_element(item[1], alphabet, flavor))
        )
    return CongruencePresentation(alphabet, flavor, side, tuple(pairs))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_element(args: argparse.Namespace) -> int:
    alphabet = _alphabet(args)
    flavor = args.flavor.upper()
    ops = {"parse": 1, "mul": 2, "inverse": 1, "plus": 1, "star": 1,
           "weight": 1, "dot": 1}
    arity = ops[args.verb]
    if len(args.operands) != arity:
        raise PreconditionError(
            f"element {args.verb} takes {arity} operand(s), got {len(args.operands)}"
        )
    ms = [parse_element(t, alphabet, flavor) for t in args.operands]
    if args.verb == "mul":
        out = multiply(ms[0], ms[1])
    elif args.verb == "inverse":
        out = inverse(ms[0])
    elif args.verb == "plus":
        out = plus(ms[0])
    elif args.verb == "star":
        out = star(ms[0])
    elif args.verb == "weight":
        if args.format == "json":
            print(json.dumps({"diameter": ms[0].diameter,
                              "weight": ms[0].weight}, sort_keys=True))
        else:
            print(ms[0].weight)
        return EXIT_OK
    else:
        out = ms[0]
    fmt = "dot" if args.verb == "dot" else args.format
    _emit_element(out, alphabet, fmt)
    return EXIT_OK


def _cmd_finitary(args: argparse.Namespace) -> int:
    alphabet = _alphabet(args)
    flavor = args.flavor.upper()
    a = parse_element(args.a, alphabet, flavor)
    b = parse_element(args.b, alphabet, flavor)
    fns = {"R": gen_R, "r": gen_r, "L": gen_L, "l": gen_l}
    report: GeneratingSetReport = fns[args.condition](a, b)
    if args.condition in ("R", "L"):
        _emit_pairs(
            report.generators, alphabet, args.format,
            extra={"condition": report.condition},
        )
    elif args.format == "json":
        print(json.dumps({
            "condition": report.condition,
            "count": len(report.generators),
            "generators": [element_to_json(u, alphabet) for u in report.generators],
        }, sort_keys=True))
    else:
        print(f"condition: {report.condition}")
        print(f"count: {len(report.generators)}")
        for u in report.generators:
            print(render_element(u, alphabet))
    return EXIT_OK


def _cmd_congruence(args: argparse.Namespace) -> int:
    alphabet = _alphabet(args)
    flavor = args.flavor.upper()

    if args.verb == "project":
        d = parse_element(args.d, alphabet, flavor)
        z = parse_element(args.z, alphabet, flavor)
        b = parse_element(args.b, alphabet, flavor)
        v = parse_element(args.v, alphabet, flavor)
        letters = frozenset(
            alphabet.code(name) for name in args.letters.split(",") if name
        )
        z2, v2, x = project_alphabet(d, z, b, v, letters)
        if args.format == "json":
            print(json.dumps({
                "z": element_to_json(z2, alphabet),
                "v": element_to_json(v2, alphabet),
                "x": element_to_json(x, alphabet),
            }, sort_keys=True))
        else:
            print(f"z': {render_element(z2, alphabet)}")
            print(f"v': {render_element(v2, alphabet)}")
            print(f"x:  {render_element(x, alphabet)}")
        return EXIT_OK

    rho = _load_presentation(args.pairs, alphabet, flavor, args.side)

    if args.verb in ("relate", "reduce"):
        if args.max_weight is None:
            raise PreconditionError(f"congruence {args.verb} needs --max-weight")
        u = parse_element(args.u, alphabet, flavor)
        v = parse_element(args.v, alphabet, flavor)
        seq = relate(rho, u, v, args.max_weight, args.max_nodes)
        if seq is None:
            print("not related within bound")
            return EXIT_DOMAIN
        if args.verb == "reduce":
            seq, y = irreducible_form(seq)
            _emit_sequence(seq, alphabet, args.format)
            if args.format != "json":
                print(f"y: {render_element(y, alphabet)}")
            return EXIT_OK
        _emit_sequence(seq, alphabet, args.format)
        return EXIT_OK

    if args.verb == "annihilator":
        a = parse_element(args.a, alphabet, flavor)
        kwargs = {}
        if args.max_nodes is not None:
            kwargs["max_nodes"] = args.max_nodes
        pairs, bounds = annihilator_candidate(rho, a, args.relate_bound, **kwargs)
        _emit_pairs(pairs, alphabet, args.format, extra={
            "script_K": bounds.script_K,
            "script_W_prime": bounds.script_W_prime,
            "pair_weight_bound": bounds.pair_weight_bound,
        })
        return EXIT_OK

    if args.verb == "intersect":
        a = parse_element(args.a, alphabet, flavor)
        b = parse_element(args.b, alphabet, flavor)
        kwargs = {}
        if args.max_nodes is not None:
            kwargs["max_nodes"] = args.max_nodes
        reps = intersection_candidate(rho, a, b, args.relate_bound, **kwargs)
        if args.format == "json":
            print(json.dumps({
                "count": len(reps),
                "representatives": [element_to_json(m, alphabet) for m in reps],
            }, sort_keys=True))
        else:
            print(f"count: {len(reps)}")
            for m in reps:
                print(render_element(m, alphabet))
        return EXIT_OK

    raise PreconditionError(f"unknown congruence verb: {args.verb}")


def _cmd_retract(args: argparse.Namespace) -> int:
    alphabet = _alphabet(args)
    phi = fla_to_free_retract(alphabet)
    if args.verb == "check":
        phi.validate(samples=args.samples, seed=args.seed)
        print("ok")
        return EXIT_OK
    if args.verb == "apply":
        m = parse_element(args.operand, alphabet, "FLA")
        _emit_element(phi(m), alphabet, args.format)
        return EXIT_OK
    # transfer
    with open(args.pairs, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    pairs = tuple(
        (parse_element(p[0], alphabet, "FLA"), parse_element(p[1], alphabet, "FLA"))
        for p in raw
    )
    out = transfer_annihilator(phi, pairs)
    _emit_pairs(out, alphabet, args.format)
    return EXIT_OK


def _cmd_counterexample(args: argparse.Namespace) -> int:
    alphabet = Alphabet(("x", "y"))
    pairs = tau_pairs_up_to_weight(args.max_h_weight)
    report = refute_finite_generation(pairs, args.k)
    if args.format == "json":
        print(json.dumps({
            "refuted": report.refuted,
            "k": report.k,
            "u_k": element_to_json(report.u_k, alphabet),
            "u_k1": element_to_json(report.u_k1, alphabet),
            "tau_witness": list(report.tau_witness)
            if report.tau_witness is not None else None,
            "factorizations": report.factorizations,
            "class_is_singleton": report.class_is_singleton,
            "h_size": len(pairs),
        }, sort_keys=True))
    else:
        print(f"H: all tau pairs of component weight <= {args.max_h_weight}"
              f" ({len(pairs)} pairs after symmetrizing)")
        print(report.summary())
    return EXIT_OK if report.refuted else EXIT_DOMAIN


# ---------------------------------------------------------------------------
# parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="munn",
        description="Exact computation in free inverse and free (left) ample"
        " monoids via prefix-closed tree representations.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("element", help="reduced-tree element arithmetic")
    p.add_argument("verb", choices=["parse", "mul", "inverse", "plus", "star",
                                    "weight", "dot"])
    p.add_argument("operands", nargs="*")
    _common_flags(p)

    p = sub.add_parser("finitary", help="generating slices for R/r/L/l")
    p.add_argument("--condition", required=True, choices=["R", "r", "L", "l"])
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    _common_flags(p)

    p = sub.add_parser("congruence", help="one-sided congruence computations")
    p.add_argument("verb", choices=["relate", "reduce", "annihilator",
                                    "intersect", "project"])
    p.add_argument("--pairs", help="JSON file: list of [literal, literal] pairs")
    p.add_argument("--side", default="right", choices=["right", "left"])
    p.add_argument("--u")
    p.add_argument("--v")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--d")
    p.add_argument("--z")
    p.add_argument("--letters", help="comma-separated sub-alphabet for project")
    p.add_argument("--relate-bound", type=int, default=8)
    _common_flags(p)

    p = sub.add_parser("retract", help="the retract from FLA onto the free monoid")
    p.add_argument("verb", choices=["check", "apply", "transfer"])
    p.add_argument("operand", nargs="?")
    p.add_argument("--pairs")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    _common_flags(p)

    p = sub.add_parser("counterexample",
                       help="refute finite generation of the path congruence tau")
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--max-h-weight", type=int, default=4)
    _common_flags(p)

    return top


_DISPATCH = {
    "element": _cmd_element,
    "finitary": _cmd_finitary,
    "congruence": _cmd_congruence,
    "retract": _cmd_retract,
    "counterexample": _cmd_counterexample,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses status 2 for usage errors and 0 for --help
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    old_handler = None
    try:
        _caps(args)
        if args.timeout_ms is not None and hasattr(signal, "setitimer"):
            def _on_alarm(signum, frame):
                raise ResourceCapError("timeout exceeded")
            old_handler = signal.signal(signal.SIGALRM, _on_alarm)
            signal.setitimer(signal.ITIMER_REAL, args.timeout_ms / 1000.0)
        return _DISPATCH[args.command](args)
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except MunnError as exc:
        print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    finally:
        if old_handler is not None:
            signal.setitimer(signal.ITIMER_REAL, 0.0)
            signal.signal(signal.SIGALRM, old_handler)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
