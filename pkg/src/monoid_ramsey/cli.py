"""Command-line front end.

Subcommands: green, dlength, decompose, witness, oracle, bounds, and the
boolmat group (analyze, phi, fuzz).  Every subcommand accepts --json, which
emits one document {command, input, result, timing_ms}.  Exit codes: 0 on
success, 1 when a fuzz run reports failures, 2 on usage or precondition
errors, 3 on resource refusals.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import boolmat as bm
from .core import (
    FiniteMonoid,
    KDecomposition,
    ResourceLimitError,
    parse_monoid_file,
    parse_word_file,
)
from .families import make_boolmat_monoid, make_cyclic, make_max, make_transformation
from .green import (
    MaxEmbedding,
    chain_to_embedding,
    green_structure,
    longest_regular_chain,
)
from .ramsey import (
    absorbing_decomposition,
    decompose_in_group,
    decompose_in_max,
    decompose_or_embed,
    embedding_witness,
    group_witness,
    max_monoid_witness,
    ramsey_bounds,
    ramsey_oracle,
)

FAMILY_KINDS = ("max", "cyclic", "transformation", "boolmat", "table")


@dataclass(frozen=True)
class MonoidSpec:
    """A monoid naming string: max:<n>, cyclic:<n>, transformation:<n>,
    boolmat:<n>, or table:<path>."""

    kind: str
    param: int | str

    @classmethod
    def parse(cls, text: str) -> "MonoidSpec":
        kind, sep, rest = text.partition(":")
        if not sep or kind not in FAMILY_KINDS:
            raise ValueError(
                f"bad monoid spec {text!r}; expected one of "
                + ", ".join(f"{k}:<{'path' if k == 'table' else 'n'}>" for k in FAMILY_KINDS)
            )
        if kind == "table":
            return cls(kind, rest)
        try:
            n = int(rest)
        except ValueError:
            raise ValueError(f"bad monoid spec {text!r}: parameter must be an integer") from None
        return cls(kind, n)

    def build(self) -> FiniteMonoid:
        if self.kind == "max":
            return make_max(self.param)
        if self.kind == "cyclic":
            return make_cyclic(self.param)
        if self.kind == "transformation":
            return make_transformation(self.param)
        if self.kind == "boolmat":
            return make_boolmat_monoid(self.param)
        return parse_monoid_file(Path(self.param).read_text())


def _default_threads() -> int:
    env = os.environ.get("MONOID_RAMSEY_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def format_word(monoid: FiniteMonoid, word) -> str:
    names = monoid.word_names(word)
    sep = "" if all(len(n) == 1 for n in names) else " "
    return sep.join(names)


def _parse_word_arg(monoid: FiniteMonoid, text: str):
    """Inline words are comma-separated element names; anything naming an
    existing file is read as a word file of element indices."""
    if "," not in text and os.path.exists(text):
        return parse_word_file(Path(text).read_text(), monoid)
    name_to_index = {name: i for i, name in enumerate(monoid.names)}
    word = []
    for token in text.split(","):
        token = token.strip()
        if token not in name_to_index:
            raise ValueError(f"unknown element name {token!r}")
        word.append(name_to_index[token])
    return tuple(word)


def _spec_arg(args) -> str:
    spec = getattr(args, "monoid_spec", None) or getattr(args, "monoid", None)
    if not spec:
        raise ValueError("a monoid spec is required (positional or --monoid)")
    return spec


def _cmd_green(args):
    spec = _spec_arg(args)
    monoid = MonoidSpec.parse(spec).build()
    gs = green_structure(monoid)
    chain = longest_regular_chain(gs)
    result = {
        "classes": gs.class_count,
        "regular_classes": len(gs.regular),
        "chain_length": len(chain),
    }
    human = [
        f"classes: {result['classes']}",
        f"regular classes: {result['regular_classes']}",
        f"regular chain length: {result['chain_length']}",
    ]
    return {"monoid": spec}, result, human


def _cmd_dlength(args):
    spec = _spec_arg(args)
    monoid = MonoidSpec.parse(spec).build()
    gs = green_structure(monoid)
    chain = longest_regular_chain(gs)
    result = {"length": len(chain)}
    human = [str(len(chain))]
    if args.witness:
        emb = chain_to_embedding(monoid, gs, chain)
        names = monoid.word_names(emb.images)
        result["witness"] = names
        human.append("witness: " + " ".join(names))
    return {"monoid": spec, "witness": bool(args.witness)}, result, human


def _decomposition_result(monoid: FiniteMonoid, word, dec: KDecomposition, algorithm: str):
    result = {
        "algorithm": algorithm,
        "cuts": list(dec.cuts),
        "idempotent": None
        if dec.idempotent is None
        else {"index": dec.idempotent, "name": monoid.names[dec.idempotent]},
    }
    human = [f"cuts: {' '.join(str(c) for c in dec.cuts)}"]
    if dec.idempotent is not None:
        human.append(f"idempotent: {monoid.names[dec.idempotent]}")
    else:
        x = monoid.reduce(word[: dec.cuts[0]])
        z = monoid.reduce(word[dec.cuts[-1] :])
        result["prefix_reduction"] = monoid.names[x]
        result["suffix_reduction"] = monoid.names[z]
        human.append(f"prefix reduces to: {monoid.names[x]}")
        human.append(f"suffix reduces to: {monoid.names[z]}")
    return result, human


def _cmd_decompose(args):
    spec = MonoidSpec.parse(args.monoid)
    monoid = spec.build()
    word = _parse_word_arg(monoid, args.word)
    k = args.k
    alg = args.alg
    if alg == "auto":
        if spec.kind == "max":
            alg = "2"
        elif monoid.is_group():
            alg = "1"
        else:
            alg = "4"
    if alg == "1":
        dec = decompose_in_group(monoid, word, k)
        result, human = _decomposition_result(monoid, word, dec, "group-prefix")
    elif alg == "2":
        if spec.kind != "max":
            raise ValueError("--alg 2 needs a max:<n> monoid")
        dec = decompose_in_max(spec.param, word, k)
        result, human = _decomposition_result(monoid, word, dec, "max-divide")
    elif alg == "3":
        dec = absorbing_decomposition(monoid, word, k)
        result, human = _decomposition_result(monoid, word, dec, "absorbing")
    else:
        from .green import regular_d_length

        n = regular_d_length(monoid)
        out = decompose_or_embed(monoid, word, k, n)
        if isinstance(out, KDecomposition):
            result, human = _decomposition_result(monoid, word, out, "general")
        else:
            names = monoid.word_names(out.images)
            result = {"algorithm": "general", "embedding": names}
            human = ["embedding: " + " ".join(names)]
    inp = {"monoid": args.monoid, "word": args.word, "k": k, "alg": args.alg}
    return inp, result, human


def _cmd_witness(args):
    spec = MonoidSpec.parse(args.monoid)
    monoid = spec.build()
    k = args.k
    if spec.kind == "max":
        word = max_monoid_witness(spec.param, k)
        method = "max"
    elif monoid.is_group():
        word = group_witness(monoid, k)
        method = "group"
    else:
        word = embedding_witness(monoid, k)
        method = "embedding"
    names = monoid.word_names(word)
    result = {"word": names, "length": len(word), "method": method}
    return (
        {"monoid": args.monoid, "k": k},
        result,
        [format_word(monoid, word)],
    )


def _cmd_oracle(args):
    monoid = MonoidSpec.parse(args.monoid).build()
    value = ramsey_oracle(monoid, args.k, args.max_len, threads=args.threads)
    result = {"value": value, "max_len": args.max_len}
    human = [str(value) if value is not None else f"unknown (no value <= {args.max_len})"]
    inp = {"monoid": args.monoid, "k": args.k, "max_len": args.max_len}
    return inp, result, human


def _cmd_bounds(args):
    monoid = MonoidSpec.parse(args.monoid).build()
    lower, upper = ramsey_bounds(monoid, args.k)
    result = {"lower": lower, "upper": upper}
    human = [f"lower: {lower}", f"upper: {upper}"]
    return {"monoid": args.monoid, "k": args.k}, result, human


def _cmd_boolmat_analyze(args):
    matrix = bm.parse_matrix_file(Path(args.matrix_file).read_text())
    idem = bm.is_idempotent(matrix)
    result = {"n": matrix.n, "idempotent": idem, "stable": bm.is_stable(matrix)}
    human = [
        f"idempotent: {str(idem).lower()}",
        f"stable: {str(result['stable']).lower()}",
    ]
    if idem:
        ps = bm.positive_sets(matrix)
        fp = sorted(bm.free_pairs(matrix))
        arrows = bm.arrow_relation(matrix)
        table = [
            [1 if arrows.holds(i, j) else 0 for j in range(matrix.n)]
            for i in range(matrix.n)
        ]
        result.update(
            positive_sets=[sorted(s) for s in ps],
            free_pairs=[list(p) for p in fp],
            arrow=table,
        )
        human.append(
            "positive sets: "
            + (" ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in ps) or "none")
        )
        human.append(
            "free pairs: "
            + (" ".join("{" + f"{i},{j}" + "}" for i, j in fp) or "none")
        )
        human.append("arrow relation:")
        human += ["  " + "".join(str(v) for v in row) for row in table]
    else:
        human.append("positive sets, free pairs, arrow relation: idempotent input only")
    return {"matrix_file": args.matrix_file}, result, human


def _cmd_boolmat_phi(args):
    chain = bm.standard_idempotent_chain(args.n)
    blocks = [bm.format_matrix_file(m).rstrip("\n") for m in chain]
    result = {"count": len(chain), "matrices": [m.to_lines() for m in chain]}
    return {"n": args.n}, result, ["\n\n".join(blocks)]


def _cmd_boolmat_fuzz(args):
    counts = bm.fuzz_suite(args.n, args.trials, args.seed)
    failures = {k: v for k, v in counts.items() if k != "trials"}
    result = {"trials": counts["trials"], "failures": failures}
    human = [f"trials: {counts['trials']}"]
    human += [f"{name}: {'ok' if c == 0 else f'{c} FAILURES'}" for name, c in failures.items()]
    exit_code = 0 if all(c == 0 for c in failures.values()) else 1
    inp = {"n": args.n, "trials": args.trials, "seed": args.seed}
    return inp, result, human, exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoid-ramsey",
        description="Finite-monoid Ramsey decompositions, regular D-length, "
        "and Boolean-matrix idempotent analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def add_monoid_positional(p):
        p.add_argument("monoid_spec", nargs="?", help="monoid spec, e.g. max:3")
        p.add_argument("--monoid", help="monoid spec (alternative to positional)")

    p = sub.add_parser("green", help="D-class census of a monoid")
    add_monoid_positional(p)
    add_json(p)
    p.set_defaults(handler=_cmd_green)

    p = sub.add_parser("dlength", help="regular D-length")
    add_monoid_positional(p)
    p.add_argument("--witness", action="store_true", help="also print embedding images")
    add_json(p)
    p.set_defaults(handler=_cmd_dlength)

    p = sub.add_parser("decompose", help="extract a decomposition from a word")
    p.add_argument("--monoid", required=True)
    p.add_argument("--word", required=True, help="file of indices, or inline comma-separated names")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alg", choices=("auto", "1", "2", "3", "4"), default="auto")
    add_json(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("witness", help="word one letter below the Ramsey bound")
    p.add_argument("--monoid", required=True)
    p.add_argument("--k", type=int, required=True)
    add_json(p)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("oracle", help="exact Ramsey value by enumeration")
    p.add_argument("--monoid", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--threads", type=int, default=_default_threads())
    add_json(p)
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("bounds", help="degree bracket from the regular D-length")
    p.add_argument("--monoid", required=True)
    p.add_argument("--k", type=int, required=True)
    add_json(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("boolmat", help="Boolean matrix analysis")
    bsub = p.add_subparsers(dest="boolmat_command", required=True)

    q = bsub.add_parser("analyze", help="idempotent structure of one matrix")
    q.add_argument("matrix_file")
    add_json(q)
    q.set_defaults(handler=_cmd_boolmat_analyze)

    q = bsub.add_parser("phi", help="standard idempotent chain of length (n^2+n+2)/2")
    q.add_argument("--n", type=int, required=True)
    add_json(q)
    q.set_defaults(handler=_cmd_boolmat_phi)

    q = bsub.add_parser("fuzz", help="randomized idempotent-structure checks")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--trials", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--threads", type=int, default=_default_threads())
    add_json(q)
    q.set_defaults(handler=_cmd_boolmat_fuzz)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code) if ex.code else 0
    start = time.perf_counter()
    try:
        out = args.handler(args)
    except ResourceLimitError as ex:
        print(f"refused: {ex}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    if len(out) == 3:
        inp, result, human = out
        exit_code = 0
    else:
        inp, result, human, exit_code = out
    timing_ms = (time.perf_counter() - start) * 1000.0
    if args.json:
        command = args.command
        if getattr(args, "boolmat_command", None):
            command = f"{args.command} {args.boolmat_command}"
        print(
            json.dumps(
                {
                    "command": command,
                    "input": inp,
                    "result": result,
                    "timing_ms": timing_ms,
                }
            )
        )
    else:
        for line in human:
            print(line)
    return exit_code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
