"""Command-line front end.

Exit codes: 0 ok, 2 input could not be parsed, 3 a precondition was violated,
4 a checked claim failed, 5 the search budget ran out.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence, TextIO

from . import checks
from .completion import dm_completion, completion_matches_mtamari
from .dyck import (
    fuss_catalan,
    mtamari,
    tamari_join_irreducibles_predicted,
)
from .families import bounded_posets, random_bounded_poset
from .mcover import (
    hasse_minus_bottom_is_rooted_tree,
    mcover,
    mcover_irreducibles_predicted,
    mcover_length,
    mcover_size_for,
    satisfies_condition_S,
)
from .poset import BudgetExceeded, Poset, PosetError, PreconditionError
from .strip import strip_decompose, verify_conjecture, zeta

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CLAIM, EXIT_BUDGET = 0, 2, 3, 4, 5
FORMATS = ("dot", "json", "csv")


@dataclass
class RunConfig:
    subcommand: str
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    n_values: list[int] = field(default_factory=list)
    m_values: list[int] = field(default_factory=list)
    checks: list[str] = field(default_factory=list)
    fmt: Optional[str] = None
    seed: int = 0
    budget: int = 10**7
    claim: Optional[str] = None
    pairs: list[tuple[int, int]] = field(default_factory=list)
    random_size: Optional[int] = None
    dot_path: Optional[str] = None
    reverse: bool = False

    def __post_init__(self) -> None:
        if self.fmt is not None and self.fmt not in FORMATS:
            raise PreconditionError(f"unknown format {self.fmt!r}")
        for name in ("n_values", "m_values"):
            vals = getattr(self, name)
            if self.subcommand in ("tamari", "strip") and not vals:
                raise PreconditionError(f"{name} must be non-empty")


# -- argument parsing -----------------------------------------------------------


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            a, b = part.split("-", 1)
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    return out


def _pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for item in text.split(","):
        a, b = item.split(":")
        out.append((int(a), int(b)))
    return out


CHECKS: dict[str, Callable[[Poset], bool]] = {
    "lattice": Poset.is_lattice,
    "two-plus-two-free": Poset.is_two_plus_two_free,
    "left-modular": Poset.is_left_modular,
    "extremal": Poset.is_extremal,
    "trim": Poset.is_trim,
    "tree": hasse_minus_bottom_is_rooted_tree,
    "condition-s": satisfies_condition_S,
}

CLAIMS = ("conjecture", "completion", "lattice-criterion", "left-modular", "trim", "sizes")


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--in", dest="input_path")
    shared.add_argument("--out", dest="output_path")
    shared.add_argument("--format", dest="fmt", choices=FORMATS)
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--budget", type=int, default=10**7)

    p = argparse.ArgumentParser(prog="multicover", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("poset", parents=[shared], help="predicates of a poset")
    sp.add_argument("--check", default="lattice")
    sp.add_argument("--dot", dest="dot_path")
    sp.add_argument("--random", dest="random_size", type=int)

    sp = sub.add_parser("mcover", parents=[shared], help="build the m-cover poset")
    sp.add_argument("-m", dest="m_values", type=_int_list, default=[2])
    sp.add_argument("--random", dest="random_size", type=int)

    sp = sub.add_parser("tamari", parents=[shared], help="build an m-Tamari lattice")
    sp.add_argument("-n", dest="n_values", type=_int_list, required=True)
    sp.add_argument("-m", dest="m_values", type=_int_list, default=[1])

    sp = sub.add_parser("dm", parents=[shared], help="Dedekind-MacNeille completion")
    sp.add_argument("-n", dest="n_values", type=_int_list, default=[])
    sp.add_argument("-m", dest="m_values", type=_int_list, default=[])

    sp = sub.add_parser("strip", parents=[shared], help="strip decomposition and bouncing")
    sp.add_argument("-n", dest="n_values", type=_int_list, required=True)
    sp.add_argument("-m", dest="m_values", type=_int_list, required=True)
    sp.add_argument("--reverse", action="store_true")

    sp = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    sp.add_argument("claim", choices=CLAIMS)
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--m-max", type=int, default=3)
    sp.add_argument("--pairs", type=_pairs, default=None)
    sp.add_argument("--exhaustive-n", type=int, default=5)
    sp.add_argument("--m", dest="m_list", type=_int_list, default=[2, 3])
    sp.add_argument("--reverse", action="store_true")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    d = vars(ns)
    cfg = RunConfig(
        subcommand=ns.subcommand,
        input_path=d.get("input_path"),
        output_path=d.get("output_path"),
        n_values=list(d.get("n_values") or []),
        m_values=list(d.get("m_values") or []),
        checks=[c.strip() for c in d.get("check", "").split(",") if c.strip()],
        fmt=d.get("fmt"),
        seed=ns.seed,
        budget=ns.budget,
        claim=d.get("claim"),
        random_size=d.get("random_size"),
        dot_path=d.get("dot_path"),
        reverse=d.get("reverse", False),
    )
    if ns.subcommand == "verify":
        if ns.claim == "conjecture":
            cfg.n_values = list(range(1, ns.n_max + 1))
            cfg.m_values = list(range(1, ns.m_max + 1))
        elif ns.claim == "completion":
            cfg.pairs = ns.pairs or [(3, 2), (3, 3), (4, 2)]
        else:
            cfg.n_values = [ns.exhaustive_n]
            cfg.m_values = ns.m_list
        if not (cfg.pairs or (cfg.n_values and cfg.m_values)):
            raise PreconditionError("empty parameter range")
    return cfg


# -- output helpers -------------------------------------------------------------


def _read_poset(cfg: RunConfig) -> Poset:
    if cfg.random_size is not None:
        return random_bounded_poset(cfg.random_size, random.Random(cfg.seed))
    if cfg.input_path is None:
        raise PreconditionError("--in is required")
    try:
        with open(cfg.input_path) as fh:
            text = fh.read()
    except OSError as exc:
        raise PosetError(f"cannot read {cfg.input_path}: {exc}") from None
    return Poset.from_json(text)


def _csv_text(rows: Sequence[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _lower(v):
    return str(v).lower() if isinstance(v, bool) else v


def _emit(cfg: RunConfig, text: str, out: TextIO) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


# -- subcommands ----------------------------------------------------------------


def cmd_poset(cfg: RunConfig, out: TextIO) -> int:
    P = _read_poset(cfg)
    results = {}
    for name in cfg.checks:
        if name not in CHECKS:
            raise PreconditionError(f"unknown check {name!r}")
        try:
            results[name] = CHECKS[name](P)
        except PreconditionError as exc:
            raise PreconditionError(f"{name}: {exc}") from None
    if cfg.fmt == "json":
        _emit(cfg, json.dumps({"poset": P.to_dict(), "checks": results}, sort_keys=True) + "\n", out)
    elif cfg.fmt == "dot":
        _emit(cfg, P.to_dot(), out)
    else:
        _emit(cfg, ", ".join(f"{k}: {_lower(v)}" for k, v in results.items()) + "\n", out)
    if cfg.dot_path:
        with open(cfg.dot_path, "w") as fh:
            fh.write(P.to_dot())
    return EXIT_OK


def cmd_mcover(cfg: RunConfig, out: TextIO) -> int:
    P = _read_poset(cfg)
    chunks = []
    for m in cfg.m_values:
        Q = mcover(P, m)
        if cfg.fmt == "dot":
            chunks.append(Q.poset.to_dot(f"cover{m}"))
            continue
        J, M = mcover_irreducibles_predicted(P, m)
        info = {
            "m": m,
            "size": Q.poset.n,
            "size_formula": mcover_size_for(P, m),
            "length": Q.poset.length(),
            "length_formula": mcover_length(P, m),
            "join_irreducibles": len(Q.poset.join_irreducibles()),
            "meet_irreducibles": len(Q.poset.meet_irreducibles()),
            "predicted_join_irreducibles": len(J),
            "predicted_meet_irreducibles": len(M),
        }
        if cfg.fmt == "json":
            info["poset"] = Q.poset.to_dict()
            info["tuples"] = [list(t) for t in Q.elements]
            chunks.append(json.dumps(info, sort_keys=True) + "\n")
        else:
            line = (
                f"m={m}: size {info['size']} (formula {info['size_formula']}), "
                f"length {info['length']}, J {info['join_irreducibles']}, "
                f"M {info['meet_irreducibles']}"
            )
            if m == 1:
                line += f", isomorphic to input: {_lower(Q.poset.is_isomorphic(P, cfg.budget))}"
            chunks.append(line + "\n")
    _emit(cfg, "".join(chunks), out)
    return EXIT_OK


def cmd_tamari(cfg: RunConfig, out: TextIO) -> int:
    rows = []
    chunks = []
    for n in cfg.n_values:
        for m in cfg.m_values:
            if n < 1 or m < 1:
                raise PreconditionError("n and m must be positive")
            T = mtamari(n, m)
            if cfg.fmt == "dot":
                chunks.append(T.poset.to_dot(f"tamari_{n}_{m}"))
                continue
            rows.append(
                {
                    "n": n,
                    "m": m,
                    "elements": T.poset.n,
                    "fuss_catalan": fuss_catalan(n, m),
                    "join_irreducibles": len(T.poset.join_irreducibles()),
                    "meet_irreducibles": len(T.poset.meet_irreducibles()),
                    "predicted_irreducibles": len(tamari_join_irreducibles_predicted(n, m)) if n > 1 else 0,
                }
            )
    if cfg.fmt == "dot":
        text = "".join(chunks)
    elif cfg.fmt == "json":
        text = json.dumps(rows) + "\n"
    elif cfg.fmt == "csv":
        text = _csv_text(rows)
    else:
        text = "".join(
            f"n={r['n']} m={r['m']}: elements {r['elements']}, J {r['join_irreducibles']}, "
            f"M {r['meet_irreducibles']}\n"
            for r in rows
        )
    _emit(cfg, text, out)
    return EXIT_OK


def cmd_dm(cfg: RunConfig, out: TextIO) -> int:
    if cfg.input_path or cfg.random_size is not None:
        P = _read_poset(cfg)
        C = dm_completion(P)
        if cfg.fmt == "dot":
            text = C.poset.to_dot("completion")
        else:
            info = {"input_size": P.n, "completed_size": C.poset.n, "added": len(C.added())}
            if cfg.fmt == "json":
                info["poset"] = C.poset.to_dict()
            text = json.dumps(info, sort_keys=True) + "\n"
        _emit(cfg, text, out)
        return EXIT_OK
    if not (cfg.n_values and cfg.m_values):
        raise PreconditionError("give --in or both -n and -m")
    reports = [completion_matches_mtamari(n, m, cfg.budget) for n in cfg.n_values for m in cfg.m_values]
    _emit(cfg, json.dumps([r.to_dict() for r in reports]) + "\n", out)
    return EXIT_OK if all(r.ok() for r in reports) else EXIT_CLAIM


def cmd_strip(cfg: RunConfig, out: TextIO) -> int:
    rows = []
    for n in cfg.n_values:
        for m in cfg.m_values:
            for u in mtamari(n, m).paths:
                rows.append(
                    {
                        "n": n,
                        "m": m,
                        "path": list(u),
                        "strips": [list(q) for q in strip_decompose(u, m)],
                        "bounced": [list(q) for q in zeta(u, m, cfg.reverse)],
                    }
                )
    if cfg.fmt == "csv":
        flat = [{k: json.dumps(v) if isinstance(v, list) else v for k, v in r.items()} for r in rows]
        text = _csv_text(flat)
    else:
        text = "".join(json.dumps(r) + "\n" for r in rows)
    _emit(cfg, text, out)
    return EXIT_OK


def _claim_rows(cfg: RunConfig) -> Iterator[tuple[dict, bool]]:
    claim = cfg.claim
    if claim == "conjecture":
        for n in cfg.n_values:
            for m in cfg.m_values:
                r = verify_conjecture(n, m, cfg.reverse)
                yield r.row(), r.injective and r.order_iso
        return
    if claim == "completion":
        for n, m in cfg.pairs:
            r = completion_matches_mtamari(n, m, cfg.budget)
            row = {k: v for k, v in r.to_dict().items() if k != "added_cuts"}
            row["added"] = len(r.added_cuts)
            yield row, r.ok()
        return
    size = cfg.n_values[0]
    ms = cfg.m_values
    if claim == "lattice-criterion":
        source = ((f"#{i}", P) for i, P in enumerate(bounded_posets(size, min_size=2)))
        fn = lambda P: checks.check_lattice_equivalence(P, ms)  # noqa: E731
    elif claim == "left-modular":
        trees = ((f"tree#{i}", P) for i, P in enumerate(checks.tree_criterion_posets(size)))
        source = _chain(checks.path_poset_family(), trees)
        fn = lambda P: checks.check_left_modular_equivalence(P, ms)  # noqa: E731
    elif claim == "trim":
        source = checks.path_poset_family()
        fn = lambda P: checks.check_trim(P, ms)  # noqa: E731
    else:  # sizes
        source = ((f"#{i}", P) for i, P in enumerate(bounded_posets(size, min_size=2)))
        fn = lambda P: all(checks.check_size_and_length(P, m).ok for m in ms)  # noqa: E731
    for name, P in source:
        res = fn(P)
        ok = res if isinstance(res, bool) else res.ok
        detail = "" if isinstance(res, bool) else res.detail
        yield {"instance": name, "size": P.n, "ok": ok, "detail": detail}, ok


def _chain(*its):
    for it in its:
        yield from it


def cmd_verify(cfg: RunConfig, out: TextIO) -> int:
    fmt = cfg.fmt or "csv"
    sink = open(cfg.output_path, "w") if cfg.output_path else out
    writer = None
    rows = []
    failure = None
    try:
        for row, ok in _claim_rows(cfg):
            printable = {k: _lower(v) for k, v in row.items()}
            if fmt == "csv":
                if writer is None:
                    writer = csv.DictWriter(sink, fieldnames=list(printable), lineterminator="\n")
                    writer.writeheader()
                writer.writerow(printable)
                sink.flush()
            else:
                rows.append(row)
            if not ok and failure is None:
                failure = row
        if fmt != "csv":
            sink.write(json.dumps(rows) + "\n")
    finally:
        if sink is not out:
            sink.close()
    if failure is not None:
        print(f"claim failed: {json.dumps(failure)}", file=sys.stderr)
        return EXIT_CLAIM
    return EXIT_OK


COMMANDS = {
    "poset": cmd_poset,
    "mcover": cmd_mcover,
    "tamari": cmd_tamari,
    "dm": cmd_dm,
    "strip": cmd_strip,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.subcommand](cfg, out)
    except PosetError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
