"""Command-line entry point: the ``cantor`` tool.

Every operation of the library is reachable through a subcommand, with
deterministic text output, an optional ``--json`` envelope
``{command, inputs, result, status}``, and CSV export where tabular data is
produced.  Numbers are printed in their exact text form alongside a decimal
rendering; decimals never feed back into any computation.

Exit codes: 0 success, 1 domain/input errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import acceptance, dimension, exactnum, expansions, thuemorse, words
from .exactnum import QAlphaElement, decimal_string, format_real, parse_real
from .expansions import BaseSystem
from .words import TERNARY, Alphabet, EPSeq, FiniteWord, format_seq, parse_seq


class CliError(Exception):
    pass


def _depth_cap(default: int) -> int:
    env = os.environ.get("CANTOR_DEPTH_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise CliError(f"CANTOR_DEPTH_CAP must be an integer, got {env!r}")
    return default


def _parse_alpha(text: str):
    try:
        return parse_real(text)
    except exactnum.ExactnumError as e:
        raise CliError(str(e))


def _parse_t(text: str, sys_: BaseSystem):
    """Translation values: a number format, or closed-form sugar."""
    if text == "sum-neg-alpha":
        a = sys_.ctx.alpha_element
        return -a / (sys_.ctx.one + a)
    if text == "ex52":
        a = sys_.ctx.alpha_element
        a3 = a * a * a
        return a / (a3 - sys_.ctx.one) + a * a / (sys_.ctx.one - a3)
    value = _parse_alpha(text)
    if isinstance(value, Fraction):
        return sys_.embed(value)
    raise CliError("translation must be rational or one of the named forms "
                   "(sum-neg-alpha, ex52)")


def _num_payload(x) -> dict:
    if isinstance(x, QAlphaElement):
        return {"exact": ",".join(str(c) for c in x.coeffs),
                "decimal": decimal_string(x)}
    if isinstance(x, Fraction):
        return {"exact": format_real(x), "decimal": decimal_string(x)}
    return {"exact": format_real(x), "decimal": decimal_string(x)}


def _dim_payload(dv: dimension.DimensionValue) -> dict:
    return {"exact": dv.exact_str(), "decimal": repr(dv.decimal),
            "enclosure": [repr(dv.lo), repr(dv.hi)], "empty": dv.empty}


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (inputs, result) dictionaries
# ---------------------------------------------------------------------------

def _cmd_expand(args):
    alpha = _parse_alpha(args.alpha)
    alphabet = _alphabet_from_arg(args.alphabet)
    sys_ = BaseSystem(alpha, alphabet)
    x = _parse_alpha(args.x)
    fn = expansions.greedy_expansion if args.algorithm == "greedy" \
        else expansions.quasi_greedy_expansion
    word = fn(sys_, x, args.length)
    return ({"alpha": args.alpha, "x": args.x, "algorithm": args.algorithm,
             "length": args.length},
            {"digits": format_seq(word)})


def _cmd_delta(args):
    alpha = _parse_alpha(args.alpha)
    alphabet = _alphabet_from_arg(args.alphabet)
    sys_ = BaseSystem(alpha, alphabet)
    word = expansions.delta(sys_, args.length)
    ep = expansions.try_ep_form(sys_, depth_cap=_depth_cap(2048))
    return ({"alpha": args.alpha, "length": args.length},
            {"prefix": format_seq(word),
             "eventually_periodic": format_seq(ep) if ep else None})


def _cmd_unique(args):
    alpha = _parse_alpha(args.alpha)
    sys_ = BaseSystem(alpha, TERNARY)
    seq = parse_seq(args.t_seq)
    if isinstance(seq, FiniteWord):
        raise CliError("uniqueness needs an infinite sequence; add a "
                       "parenthesised period")
    res = expansions.is_unique_expansion(sys_, seq,
                                         depth_cap=_depth_cap(4096))
    return ({"alpha": args.alpha, "t_seq": args.t_seq},
            {"status": res.status.value,
             "violation": list(res.violation) if res.violation else None})


def _cmd_tm(args):
    n = args.n
    if args.what == "tau":
        word = thuemorse.tau_prefix(n)
    elif args.what == "lambda":
        word = thuemorse.lambda_prefix(n)
    elif args.what == "w":
        word = thuemorse.w_word(n)
    elif args.what == "zeta":
        word = thuemorse.zeta(n)
    else:
        word = thuemorse.eta(n)
    if word.alphabet == TERNARY:
        text = format_seq(word)
    else:
        text = ",".join(str(d) for d in word)
    return ({"what": args.what, "n": n}, {"word": text, "length": len(word)})


def _cmd_alpha_kl(args):
    width = Fraction(args.width)
    lo, hi = thuemorse.alpha_kl_enclosure(width)
    return ({"width": args.width},
            {"lo": f"rat:{lo.numerator}/{lo.denominator}",
             "hi": f"rat:{hi.numerator}/{hi.denominator}",
             "decimal": repr(float((lo + hi) / 2))})


def _cmd_dset(args):
    alpha = _parse_alpha(args.alpha)
    ds = dimension.d_set(alpha, depth_cap=_depth_cap(4096))
    result = {
        "kind": ds.kind.value,
        "proper_subset": ds.proper_subset,
        "full_dimension": _dim_payload(ds.full),
        "values": [_dim_payload(v) for v in ds.values],
        "nstar": ds.nstar,
        "sft_n": ds.sft_n,
        "sft_interval": [_dim_payload(v) for v in ds.sft_interval]
        if ds.sft_interval else None,
        "excluded_frequency_band": [str(ds.excluded_band[0]),
                                    str(ds.excluded_band[1])]
        if ds.excluded_band else None,
        "note": ds.note,
    }
    return ({"alpha": args.alpha}, result)


def _cmd_dim(args):
    alpha = _parse_alpha(args.alpha)
    sys_ = BaseSystem(alpha, TERNARY)
    seq = parse_seq(args.t_seq)
    if isinstance(seq, FiniteWord):
        raise CliError("the frequency route needs an infinite sequence")
    uniq = expansions.is_unique_expansion(sys_, seq,
                                          depth_cap=_depth_cap(4096))
    if uniq.status is expansions.UniqStatus.NOT_UNIQUE:
        raise CliError("sequence is not a unique expansion; the frequency "
                       "formula does not apply (use `cantor intersect`)")
    freq = words.zero_density(seq)
    dv = dimension.dim_from_frequency(
        alpha, freq, unique_certified=uniq.status
        is expansions.UniqStatus.UNIQUE)
    return ({"alpha": args.alpha, "t_seq": args.t_seq},
            {"zero_density": str(freq.lower), "uniqueness": uniq.status.value,
             "dimension": _dim_payload(dv)})


def _cmd_intersect(args):
    alpha = _parse_alpha(args.alpha)
    sys_ = BaseSystem(alpha, TERNARY)
    t = _parse_t(args.t, sys_)
    auto = expansions.build_expansion_automaton(
        sys_, t, state_cap=args.state_cap)
    result = {"states": len(auto.states), "complete": auto.complete,
              "t": _num_payload(t)}
    if args.export:
        with open(args.export, "w") as fh:
            json.dump(auto.to_json_dict(), fh, indent=1, sort_keys=False)
        result["exported"] = args.export
    if auto.complete:
        g = dimension.build_intersection_graph(auto)
        dv = dimension.perron_dimension(g, alpha)
        info = g.count_matrix.perron() if not g.empty else None
        result["count_matrix"] = [list(r) for r in g.count_matrix.entries]
        result["lambda"] = (
            {"exact": info.exact_str(),
             "decimal": repr(float(sum(info.enclosure()) / 2))}
            if info else None)
        result["dimension"] = _dim_payload(dv)
        bound = dimension.freq_upper_bound_over_expansions(auto)
        result["cycle_zero_frequency_bound"] = str(bound)
    return ({"alpha": args.alpha, "t": args.t}, result)


def _cmd_boxcount(args):
    alpha = _parse_alpha(args.alpha)
    sys_ = BaseSystem(alpha, TERNARY)
    t = _parse_t(args.t, sys_)
    rep = dimension.box_count_oracle(alpha, t, args.depth,
                                     max_depth=_depth_cap(20))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("n,lower,upper\n")
            for (n, lo, up) in rep.rows:
                fh.write(f"{n},{lo},{up}\n")
    return ({"alpha": args.alpha, "t": args.t, "depth": args.depth},
            {"rows": [list(r) for r in rep.rows],
             "slope": repr(rep.slope),
             "csv": args.csv or None})


def _cmd_selfsimilar(args):
    alpha = _parse_alpha(args.alpha)
    sys_ = BaseSystem(alpha, TERNARY)
    seq = parse_seq(args.t_seq)
    if not isinstance(seq, EPSeq):
        raise CliError("self-similarity test needs an eventually periodic "
                       "sequence")
    res = dimension.self_similar_check(sys_, seq)
    payload = {"status": res.status.value}
    if res.witness:
        payload["witness"] = {"I": format_seq(res.witness[0]),
                              "J": format_seq(res.witness[1])}
    return ({"alpha": args.alpha, "t_seq": args.t_seq}, payload)


def _cmd_dense_targets(args):
    alpha = _parse_alpha(args.alpha)
    targets = [Fraction(x) for x in args.targets.split(",")]
    tol = Fraction(args.tol)
    seqs = dimension.dense_selfsimilar_targets(alpha, targets, tol)
    rows = []
    for tg, sq in zip(targets, seqs):
        dens = words.zero_density(sq).value
        dv = dimension.dim_from_frequency(alpha, dens)
        rows.append({"target": str(tg), "sequence": format_seq(sq),
                     "zero_density": str(dens),
                     "dimension": _dim_payload(dv)})
    return ({"alpha": args.alpha, "targets": args.targets,
             "tol": args.tol}, {"rows": rows})


def _cmd_liouville(args):
    pq = Fraction(args.pq)
    lw = dimension.liouville_witness(pq, args.k,
                                     free_digit_rule=args.free_rule)
    approx = [{"p": a.numerator, "q": a.denominator,
               "decimal": repr(float(a))} for a in lw.approximants]
    lo, hi = lw.x_enclosure
    return ({"pq": args.pq, "k": args.k, "free_rule": args.free_rule},
            {"nk": lw.nk[:args.k + 1],
             "approximants": approx,
             "x_enclosure": [f"rat:{lo.numerator}/{lo.denominator}",
                             f"rat:{hi.numerator}/{hi.denominator}"],
             "x_decimal": repr(float((lo + hi) / 2))})


def _cmd_verify_paper(args):
    results = acceptance.run_all(verbose=not args.json)
    payload = [{"number": r.number, "name": r.name,
                "passed": r.passed, "detail": r.detail} for r in results]
    ok = all(r.passed for r in results)
    return ({}, {"checks": payload, "all_passed": ok})


def _alphabet_from_arg(text: str) -> Alphabet:
    if text == "ternary":
        return TERNARY
    low, size = text.split(":")
    return Alphabet(int(low), int(size))


_HANDLERS = {}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cantor",
        description="expansions in non-integer bases and dimensions of "
                    "Cantor set self-intersections")
    p.add_argument("--json", action="store_true",
                   help="emit a JSON envelope instead of text")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, handler, configure, help_):
        sp = sub.add_parser(name, help=help_)
        configure(sp)
        _HANDLERS[name] = handler

    def alpha_arg(sp):
        sp.add_argument("--alpha", required=True,
                        help="base: rat:p/q | alg:c0,..,ck@[lo,hi] | akl")

    add("expand", _cmd_expand, lambda sp: (
        alpha_arg(sp),
        sp.add_argument("--x", required=True, help="value to expand"),
        sp.add_argument("--length", type=int, default=32),
        sp.add_argument("--algorithm", choices=("greedy", "quasi-greedy"),
                        default="greedy"),
        sp.add_argument("--alphabet", default="ternary",
                        help="'ternary' or low:size, e.g. 0:3"),
    ), "greedy / quasi-greedy digit expansions")
    add("delta", _cmd_delta, lambda sp: (
        alpha_arg(sp),
        sp.add_argument("--length", type=int, default=32),
        sp.add_argument("--alphabet", default="ternary"),
    ), "quasi-greedy expansion of 1")
    add("unique", _cmd_unique, lambda sp: (
        alpha_arg(sp),
        sp.add_argument("--t-seq", required=True,
                        help="sequence, e.g. '(+-0)'"),
    ), "lexicographic uniqueness test")
    add("tm", _cmd_tm, lambda sp: (
        sp.add_argument("--what", required=True,
                        choices=("tau", "lambda", "w", "zeta", "eta")),
        sp.add_argument("--n", type=int, required=True),
    ), "Thue-Morse words")
    add("alpha-kl", _cmd_alpha_kl, lambda sp: (
        sp.add_argument("--width", default="1e-10"),
    ), "enclosure of the critical base alpha_KL")
    add("dset", _cmd_dset, lambda sp: (alpha_arg(sp),),
        "describe the dimension spectrum D_alpha")
    add("dim", _cmd_dim, lambda sp: (
        alpha_arg(sp),
        sp.add_argument("--t-seq", required=True),
    ), "dimension via the zero-frequency formula")
    add("intersect", _cmd_intersect, lambda sp: (
        alpha_arg(sp),
        sp.add_argument("--t", required=True,
                        help="rat:p/q | sum-neg-alpha | ex52"),
        sp.add_argument("--export", help="write the automaton as JSON"),
        sp.add_argument("--state-cap", type=int, default=10_000),
    ), "automaton + Perron dimension of the intersection")
    add("boxcount", _cmd_boxcount, lambda sp: (
        alpha_arg(sp),
        sp.add_argument("--t", required=True),
        sp.add_argument("--depth", type=int, required=True),
        sp.add_argument("--csv", help="write n,lower,upper rows"),
    ), "box-counting oracle")
    add("selfsimilar", _cmd_selfsimilar, lambda sp: (
        alpha_arg(sp),
        sp.add_argument("--t-seq", required=True),
    ), "is the intersection self-similar?")
    add("dense-targets", _cmd_dense_targets, lambda sp: (
        alpha_arg(sp),
        sp.add_argument("--targets", default="0,0.1,0.2,0.3,0.4,0.5,"
                                             "0.6,0.7,0.8,0.9,1"),
        sp.add_argument("--tol", default="0.01"),
    ), "self-similar words hitting target zero densities")
    add("liouville", _cmd_liouville, lambda sp: (
        sp.add_argument("--pq", required=True, help="rational base p/q"),
        sp.add_argument("--k", type=int, default=2),
        sp.add_argument("--free-rule", type=int, choices=(0, 1), default=0),
    ), "Liouville-number intersection construction")
    add("verify-paper", _cmd_verify_paper, lambda sp: None,
        "run the full acceptance table")
    return p


def _render_text(result, indent=0):
    pad = "  " * indent
    if isinstance(result, dict):
        for k, v in result.items():
            if isinstance(v, list) and all(
                    not isinstance(x, (dict, list)) for x in v):
                print(f"{pad}{k}: [{', '.join(str(x) for x in v)}]")
            elif isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _render_text(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(result, list):
        for v in result:
            if isinstance(v, list) and all(
                    not isinstance(x, (dict, list)) for x in v):
                print(f"{pad}- [{', '.join(str(x) for x in v)}]")
            elif isinstance(v, (dict, list)):
                _render_text(v, indent)
                if indent == 1:
                    print()
            else:
                print(f"{pad}- {v}")
    else:
        print(f"{pad}{result}")


_DOMAIN_ERRORS = (CliError, exactnum.ExactnumError, words.WordsError,
                  expansions.ExpansionError, dimension.DimensionError,
                  ValueError, ZeroDivisionError, OSError)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        inputs, result = _HANDLERS[args.command](args)
    except _DOMAIN_ERRORS as e:
        if args.json:
            print(json.dumps({"command": args.command, "inputs": {},
                              "result": None,
                              "status": f"error: {e}"}, sort_keys=False))
        else:
            print(f"error: {e}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"command": args.command, "inputs": inputs,
                          "result": result, "status": "ok"},
                         sort_keys=False))
    else:
        if args.command != "verify-paper":
            _render_text(result)
        else:
            ok = result["all_passed"]
            print(f"\nall checks passed: {ok}")
    if args.command == "verify-paper" and not result["all_passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
