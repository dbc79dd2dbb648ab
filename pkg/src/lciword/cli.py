"""Command-line entry point.

Exit codes: 0 success/pass, 1 verification failure, 2 usage or I/O
error.  Every sample file embeds the full config and master seed, and
rerunning a command with the same flags reproduces outputs byte for
byte, independent of --threads.
"""

import argparse
import inspect
import json
import sys

from .exact import lci_bruteforce, lci_dp, lci_representation
from .laws import LetterLaw
from .limits import FunctionalSpec, default_grid, sample_functional_batch, sample_prelimit_batch
from .percolation import indicator_lattice, lpp_t3
from .stats import SampleBatch, ks_two_sample
from .verify import SUITES
from .words import Word


def parse_word(text: str, m: int) -> Word:
    """Digit string for m <= 9, comma-separated integers otherwise."""
    text = text.strip()
    if text == "":
        return Word([], m)
    if "," in text:
        letters = [int(tok) for tok in text.split(",")]
    elif m <= 9:
        if not text.isdigit():
            raise ValueError(f"not a digit-string word: {text!r}")
        letters = [int(ch) for ch in text]
    else:
        raise ValueError("alphabets beyond 9 letters need comma-separated input")
    return Word(letters, m)


def _read_word_file(path: str, m: int) -> Word:
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                return parse_word(line, m)
    return Word([], m)


def _parse_probs(text: str) -> LetterLaw:
    return LetterLaw(tuple(float(tok) for tok in text.split(",")))


def cmd_exact(args) -> int:
    m = args.m
    x = _read_word_file(args.x_file, m) if args.x_file else parse_word(args.x or "", m)
    y = _read_word_file(args.y_file, m) if args.y_file else parse_word(args.y or "", m)
    if args.route == "dp":
        res = lci_dp(x, y, strict=args.strict)
    elif args.route == "brute":
        res = lci_bruteforce(x, y, strict=args.strict)
    elif args.route == "repr":
        if args.strict:
            raise ValueError("the representation route is defined for the weak order")
        res = lci_representation(x, y)
    else:
        if args.strict:
            raise ValueError("the percolation route is defined for the weak order")
        length = int(round(lpp_t3(indicator_lattice(x, y))))
        print(length)
        return 0
    print(res.length)
    if args.route == "repr" and res.argmax_k is not None:
        print("argmax_k=" + ",".join(str(v) for v in res.argmax_k))
    return 0


def cmd_verify(args) -> int:
    fn = SUITES[args.suite]
    kwargs = {"seed": args.seed}
    if args.trials is not None:
        if "trials" not in inspect.signature(fn).parameters:
            raise ValueError(f"suite {args.suite!r} does not take --trials")
        kwargs["trials"] = args.trials
    report = fn(**kwargs)
    text = json.dumps(report, indent=1, default=str)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if report["pass"] else 1


def cmd_simulate(args) -> int:
    law = _parse_probs(args.probs) if args.probs else LetterLaw.uniform(args.m)
    if law.m != args.m:
        raise ValueError("--probs length must equal --m")
    workers = max(1, args.threads)
    if args.what == "prelimit":
        if args.n is None:
            raise ValueError("--what prelimit needs --n")
        batch = sample_prelimit_batch(
            args.m, args.n, law, args.samples, args.seed, statistic=args.stat, workers=workers
        )
    else:
        if args.what == "limit":
            spec = FunctionalSpec("uniform_eq00", args.m)
        elif args.what == "lconst":
            spec = FunctionalSpec("single_letter_lconst", args.m)
        elif args.what == "nonuniform":
            spec = FunctionalSpec("nonuniform_eq00max", args.m, law.p_max, law.multiplicity())
        else:
            spec = FunctionalSpec("driftfree_conjecture", args.m)
        grid = args.grid
        if grid is None:
            grid = 1 if args.what == "lconst" else default_grid(args.m)
        batch = sample_functional_batch(spec, grid, args.samples, args.seed, workers=workers)
    if args.format == "csv":
        batch.to_csv(args.out)
    else:
        batch.to_json(args.out)
    print(f"wrote {len(batch)} samples to {args.out}")
    return 0


def cmd_compare(args) -> int:
    a = SampleBatch.from_csv(args.a)
    b = SampleBatch.from_csv(args.b)
    report = ks_two_sample(a, b, alpha=args.alpha, bias_allowance=args.bias)
    text = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lci",
        description="Longest common increasing subsequences of random words: "
        "exact computation and limit-law simulation.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("exact", help="compute one LCI length")
    pe.add_argument("--m", type=int, required=True)
    pe.add_argument("--x", help="first word (digit string for m <= 9)")
    pe.add_argument("--y", help="second word")
    pe.add_argument("--x-file", help="file with the first word")
    pe.add_argument("--y-file", help="file with the second word")
    pe.add_argument("--route", choices=["dp", "brute", "repr", "perc"], default="dp")
    pe.add_argument("--strict", action="store_true", help="strictly increasing order")
    pe.set_defaults(fn=cmd_exact)

    pv = sub.add_parser("verify", help="run a named invariant suite")
    pv.add_argument("--suite", choices=sorted(SUITES), required=True)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--trials", type=int, default=None)
    pv.add_argument("--out")
    pv.set_defaults(fn=cmd_verify)

    ps = sub.add_parser("simulate", help="write a sample batch")
    ps.add_argument(
        "--what",
        choices=["prelimit", "limit", "lconst", "nonuniform", "conjecture"],
        required=True,
    )
    ps.add_argument("--m", type=int, required=True)
    ps.add_argument("--n", type=int, help="word length for prelimit sampling")
    ps.add_argument("--grid", type=int, help="time grid for limit functionals")
    ps.add_argument("--samples", type=int, required=True)
    ps.add_argument("--seed", type=int, required=True)
    ps.add_argument("--probs", help="comma list of letter probabilities (uniform default)")
    ps.add_argument("--stat", choices=["lci", "align"], default="lci")
    ps.add_argument("--threads", type=int, default=1)
    ps.add_argument("--out", required=True)
    ps.add_argument("--format", choices=["csv", "json"], default="csv")
    ps.set_defaults(fn=cmd_simulate)

    pc = sub.add_parser("compare", help="two-sample KS test between sample files")
    pc.add_argument("--a", required=True)
    pc.add_argument("--b", required=True)
    pc.add_argument("--alpha", type=float, default=0.01)
    pc.add_argument("--bias", type=float, default=0.0)
    pc.add_argument("--out")
    pc.set_defaults(fn=cmd_compare)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
