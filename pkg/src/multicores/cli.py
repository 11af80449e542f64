"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 complete enumeration of an
infinite set, 3 precondition violation, 4 a ``verify`` suite found a
discrepancy.  Diagnostics go to stderr prefixed with ``error:``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import gcd
from typing import Sequence

from .enumeration import (
    aa_decode,
    aa_encode,
    aa_members,
    average_size,
    conjecture_value,
    count_aa,
    count_anderson,
    count_ss,
    count_t0,
    st_cores,
    st_decode,
    st_encode,
)
from .errors import InfiniteSetError, ParseError, PreconditionError
from .finiteness import decide_finite, enumerate_members
from .multicore import (
    Datum,
    DatumSet,
    Multipartition,
    format_datum,
    format_datum_set,
    format_multipartition,
    is_core,
    mp_content,
    parse_datum,
    parse_datum_set,
    parse_multipartition,
    weight,
)
from .partitions import format_partition, is_s_core, parse_partition
from .verify import SCALES, SUITES, run_suites
from .weyl_orbit import orbit_members

EXIT_OK, EXIT_USAGE, EXIT_INFINITE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _frac(x: Fraction | None) -> str | None:
    if x is None:
        return None
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers: {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


# --------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> str:
    d, m = parse_datum(args.datum), parse_multipartition(args.mp)
    core = is_core(m, d)
    w = None if d.modulus == 1 else weight(m, d)
    if args.format == "json":
        return _dump({"datum": format_datum(d), "mp": format_multipartition(m), "core": core, "weight": w})
    if args.format == "csv":
        return _csv(["datum", "mp", "core", "weight"], [[format_datum(d), format_multipartition(m), core, w]])
    text = f"core={str(core).lower()}"
    return text if w is None else f"{text} weight={w}"


def cmd_content(args) -> str:
    d, m = parse_datum(args.datum), parse_multipartition(args.mp)
    n = mp_content(m, d)
    items = sorted(n.counts.items())
    if args.format == "json":
        return _dump({"datum": format_datum(d), "mp": format_multipartition(m),
                      "content": {str(k): v for k, v in items}})
    if args.format == "csv":
        return _csv(["residue", "count"], items)
    return " ".join(f"{k}:{v}" for k, v in items)


def cmd_finite(args) -> str:
    T = parse_datum_set(args.data)
    v = decide_finite(T)
    if args.format == "text":
        x = "n/a" if v.condition_x is None else str(v.condition_x).lower()
        return f"finite={str(v.finite).lower()} g={v.g_value} conditionX={x} reason={v.reason}"
    if args.format == "csv":
        return _csv(["finite", "g", "conditionX", "reason"], [[v.finite, v.g_value, v.condition_x, v.reason]])
    return _dump(v.as_dict())


def _members_out(fmt: str, head: dict, members: list[Multipartition]) -> str:
    if fmt == "json":
        return _dump({**head, "count": len(members), "members": [format_multipartition(m) for m in members]})
    if fmt == "csv":
        return _csv(["index", "size", "multipartition"],
                    [[i, m.size, format_multipartition(m)] for i, m in enumerate(members)])
    lines = [format_multipartition(m) for m in members]
    summary = " ".join(f"{k}={v}" for k, v in head.items() if not isinstance(v, dict))
    lines.append(f"# count={len(members)} {summary}")
    return "\n".join(lines)


def cmd_enumerate(args) -> str:
    T = parse_datum_set(args.data)
    mode = "complete" if args.complete else "bounded"
    res = enumerate_members(T, max_size=args.max_size, mode=mode, ceiling=args.ceiling)
    head = {"data": format_datum_set(T), "mode": mode, "certificate": res.certificate,
            "saturated": res.saturated, "bound": res.bound_used}
    return _members_out(args.format, head, res.members)


def cmd_orbit(args) -> str:
    d = parse_datum(args.datum)
    members = orbit_members(d, args.max_size)
    return _members_out(args.format, {"datum": format_datum(d), "max_size": args.max_size}, members)


def _family_params(family: str, params: list[int]) -> list[int]:
    arity = {"ss": (3, 4), "t0": (3,), "aa": (3,), "anderson": (2,)}[family]
    if len(params) not in arity:
        raise ParseError(f"family {family} takes {' or '.join(map(str, arity))} parameters")
    if family == "ss" and len(params) == 3:
        s, a, b = params
        return [s, s, a, b]
    return params


def _closed_count(family: str, p: list[int]) -> int:
    if family == "ss":
        return count_ss(*p)
    if family == "t0":
        return count_t0(*p)
    if family == "aa":
        return count_aa(*p)
    return count_anderson(*p)


def _family_members(family: str, p: list[int]) -> list:
    if family == "aa":
        return [Multipartition((lam, mu)) for lam, mu in aa_members(*p)]
    if family == "anderson":
        return [Multipartition((q,)) for q in st_cores(*p)]
    if family == "ss":
        s, t, a, b = p
        T = DatumSet((Datum(s, (0, a)), Datum(t, (0, b))))
        g = gcd(s, t)
        members = enumerate_members(T, mode="complete").members
        return [m for m in members if all(is_s_core(c, g) for c in m)]
    s, a, b = p
    T = DatumSet((Datum(s, (0, a)), Datum(0, (0, b))))
    return enumerate_members(T, mode="complete").members


def _conjecture(family: str, p: list[int]) -> Fraction | None:
    if family == "ss":
        s, t, a, b = p
        return conjecture_value("ss", (s, a, b)) if s == t else None
    return conjecture_value(family, p)


def _family_out(fmt: str, record: dict) -> str:
    if fmt == "json":
        return _dump(record)
    row = [record["family"], ",".join(map(str, record["params"])), record["count"],
           record["average"], record["conjecture"], record["match"]]
    if fmt == "csv":
        return _csv(list(record), [row])
    if record["average"] is None:
        return str(record["count"])
    parts = [f"{k}={'n/a' if v is None else v}" for k, v in zip(record, row)]
    return " ".join(p.replace("True", "true").replace("False", "false") for p in parts)


def cmd_count(args) -> str:
    p = _family_params(args.family, _ints(args.params))
    record = {"family": args.family, "params": p, "count": _closed_count(args.family, p),
              "average": None, "conjecture": None, "match": None}
    return _family_out(args.format, record)


def cmd_avg(args) -> str:
    p = _family_params(args.family, _ints(args.params))
    members = _family_members(args.family, p)
    closed = _closed_count(args.family, p)
    if len(members) != closed:
        raise RuntimeError(f"enumerated {len(members)} members but the closed form gives {closed}")
    avg = average_size(members)
    conj = _conjecture(args.family, p)
    record = {"family": args.family, "params": p, "count": len(members), "average": _frac(avg),
              "conjecture": _frac(conj), "match": None if conj is None else avg == conj}
    return _family_out(args.format, record)


def cmd_stcores(args) -> str:
    if gcd(args.s, args.t) != 1:
        raise PreconditionError("s and t must be coprime")
    cores = st_cores(args.s, args.t)
    if args.format == "json":
        obj = {"s": args.s, "t": args.t, "count": len(cores)}
        if args.list:
            obj["cores"] = [format_partition(c) for c in cores]
        return _dump(obj)
    if args.format == "csv":
        return _csv(["s", "t", "size", "core"], [[args.s, args.t, c.size, format_partition(c)] for c in cores])
    lines = [str(len(cores))]
    if args.list:
        lines += [format_partition(c) for c in cores]
    return "\n".join(lines)


def cmd_codec(args) -> str:
    p = _ints(args.params)
    if args.family == "st" and len(p) != 2 or args.family == "aa" and len(p) != 3:
        raise ParseError("st takes s,t and aa takes s,t,a")
    if args.direction == "decode":
        if not args.word:
            raise ParseError("decode needs --word")
        if args.family == "st":
            out = {"word": args.word, "partition": format_partition(st_decode(args.word, *p))}
        else:
            lam, mu = aa_decode(args.word, *p)
            out = {"word": args.word, "multipartition": format_multipartition(Multipartition((lam, mu)))}
    else:
        if not args.mp:
            raise ParseError("encode needs --mp")
        if args.family == "st":
            word = st_encode(parse_partition(args.mp), *p)
        else:
            m = parse_multipartition(args.mp)
            if m.level != 2:
                raise ParseError("aa encoding needs a bipartition")
            word = aa_encode(m[0], m[1], *p)
        out = {"mp": args.mp, "word": word.letters}
    if args.format == "json":
        return _dump({"family": args.family, "direction": args.direction, "params": p, **out})
    if args.format == "csv":
        return _csv(list(out), [list(out.values())])
    return out.get("partition") or out.get("multipartition") or out["word"]


def cmd_verify(args) -> tuple[str, int]:
    results = run_suites(args.suite, args.scale)
    ok = all(r.passed for r in results)
    if args.format == "json":
        text = _dump({"scale": args.scale, "passed": ok, "suites": [r.as_dict() for r in results]})
    elif args.format == "csv":
        text = _csv(["suite", "passed", "cases", "failures"],
                    [[r.name, r.passed, r.cases, len(r.failures)] for r in results])
    else:
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} cases={r.cases} failures={len(r.failures)}"
                 for r in results]
        for r in results:
            lines += [f"  {r.name}: {f}" for f in r.failures[:5]]
        text = "\n".join(lines)
    return text, EXIT_OK if ok else EXIT_VERIFY


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multicores", description="Core multipartitions and their simultaneous core sets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, default_format="text"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "csv", "text"), default=default_format)
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "is the multipartition a core, and what is its weight")
    p.add_argument("--datum", required=True)
    p.add_argument("--mp", required=True)

    p = add("content", cmd_content, "residue content of a multipartition")
    p.add_argument("--datum", required=True)
    p.add_argument("--mp", required=True)

    p = add("finite", cmd_finite, "decide whether a simultaneous core set is finite", default_format="json")
    p.add_argument("--data", required=True)

    p = add("enumerate", cmd_enumerate, "list members of a simultaneous core set")
    p.add_argument("--data", required=True)
    p.add_argument("--complete", action="store_true")
    p.add_argument("--max-size", type=int, default=12)
    p.add_argument("--ceiling", type=int, default=40, help="largest size tried by the saturation fallback")

    p = add("orbit", cmd_orbit, "cores of one datum by orbit search")
    p.add_argument("--datum", required=True)
    p.add_argument("--max-size", type=int, default=12)

    for name, func, help_text in (("count", cmd_count, "closed-form counts"),
                                  ("avg", cmd_avg, "enumerated average size against the conjectured value")):
        p = add(name, func, help_text)
        p.add_argument("--family", required=True, choices=("ss", "t0", "aa", "anderson"))
        p.add_argument("--params", required=True)

    p = add("stcores", cmd_stcores, "simultaneous (s,t)-cores")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--list", action="store_true")

    p = add("codec", cmd_codec, "lattice path encoding of simultaneous cores")
    p.add_argument("direction", choices=("encode", "decode"))
    p.add_argument("--family", required=True, choices=("st", "aa"))
    p.add_argument("--params", required=True, help="s,t for st and s,t,a for aa")
    p.add_argument("--word")
    p.add_argument("--mp")

    p = add("verify", cmd_verify, "run the oracle suites")
    p.add_argument("--scale", choices=sorted(SCALES), default="quick")
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
        text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except InfiniteSetError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INFINITE
    except PreconditionError as exc:
        print(f"error: precondition violated: {exc}", file=err)
        return EXIT_PRECONDITION
    print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
