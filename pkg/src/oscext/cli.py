"""Command-line surface.

Commands parse a diagram from the text grammar (K:{...} index sets or
B:(...) block coordinates), run a construction or verification, and emit
deterministic text or JSON.  Exit codes: 0 success, 1 a verification
found a violated identity, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .extension import (
    eigenfunction,
    is_regular,
    potential,
    schrodinger_operator,
)
from .wronskians import normalized_wronskian, wronskian_polynomial
from .intertwining import (
    first_order_factorization,
    intertwiner_multiset,
    ladder,
    ladder_order,
    syzygy,
    verify_intertwining,
)
from .algebra import sturm_real_roots
from .maya import IntegerMultiset, MayaDiagram
from .verify import default_suite


class ParseError(ValueError):
    """Grammar error with the offending position."""

    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_INT = re.compile(r"[+-]?\d+")


def _scan_int_list(text: str, pos: int, closing: str) -> list[int]:
    items = []
    n = len(text)
    while pos < n and text[pos] == " ":
        pos += 1
    if pos < n and text[pos] == closing:
        if pos != n - 1:
            raise ParseError(text, pos + 1, "trailing characters")
        return items
    while True:
        while pos < n and text[pos] == " ":
            pos += 1
        m = _INT.match(text, pos)
        if not m:
            raise ParseError(text, pos, "expected an integer")
        items.append(int(m.group()))
        pos = m.end()
        while pos < n and text[pos] == " ":
            pos += 1
        if pos >= n:
            raise ParseError(text, pos, f"expected ',' or '{closing}'")
        if text[pos] == ",":
            pos += 1
            continue
        if text[pos] == closing:
            if pos != n - 1:
                raise ParseError(text, pos + 1, "trailing characters")
            return items
        raise ParseError(text, pos, f"expected ',' or '{closing}'")


def _normalize_spec(s: str) -> str:
    # tolerate the unicode minus that the rendered notation uses
    return s.strip().replace("−", "-")


def parse_diagram_spec(s: str) -> MayaDiagram:
    """Parse K:{k1,k2,...} (index set) or B:(b0,b1,...) (block coords)."""
    text = _normalize_spec(s)
    if text.startswith("K:{"):
        items = _scan_int_list(text, 3, "}")
        if len(set(items)) != len(items):
            raise ParseError(text, 3, "duplicate elements in index set")
        return MayaDiagram(items)
    if text.startswith("B:("):
        items = _scan_int_list(text, 3, ")")
        if len(items) % 2 == 0:
            raise ParseError(text, 3, "block tuple must have odd length")
        if any(a >= b for a, b in zip(items, items[1:])):
            raise ParseError(text, 3, "block tuple must be strictly increasing")
        return MayaDiagram.from_block_coordinates(items)
    raise ParseError(text, 0, "expected 'K:{...}' or 'B:(...)'")


def parse_multiset_spec(s: str) -> IntegerMultiset:
    """Parse K:{...} allowing repeated entries (multiplicities)."""
    text = _normalize_spec(s)
    if not text.startswith("K:{"):
        raise ParseError(text, 0, "expected 'K:{...}'")
    return IntegerMultiset(_scan_int_list(text, 3, "}"))


@dataclass(frozen=True)
class CommandRequest:
    command: str
    diagram: str | None = None
    flips: str | None = None
    k: int | None = None
    n: int | None = None
    lo: int | None = None
    hi: int | None = None
    fmt: str = "text"
    ascii_safe: bool = False
    window: int = 4
    max_size: int = 3
    max_shift: int = 3
    directory: str = "corpus"


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _diagram_info(m: MayaDiagram) -> dict:
    fs = m.frobenius_symbol()
    bc = m.block_coordinates()
    return {
        "indexSet": list(m.index_set),
        "sigma": m.index,
        "genus": bc.genus,
        "blockCoordinates": list(bc.coords),
        "frobenius": {"s": list(fs.s), "t": list(fs.t)},
        "regular": is_regular(m),
    }


def _default_window(m: MayaDiagram) -> tuple[int, int]:
    ks = m.index_set
    lo = min((-2,) + tuple(k - 1 for k in ks))
    hi = max((2,) + tuple(k + 1 for k in ks))
    return lo, hi


def _cmd_render(req: CommandRequest) -> tuple[int, str]:
    m = parse_diagram_spec(req.diagram)
    lo, hi = _default_window(m)
    lo = req.lo if req.lo is not None else lo
    hi = req.hi if req.hi is not None else hi
    row = m.render(lo, hi, ascii_safe=req.ascii_safe)
    if req.fmt == "json":
        return 0, _dump({"indexSet": list(m.index_set), "from": lo,
                          "to": hi, "row": row})
    return 0, row


def _cmd_info(req: CommandRequest) -> tuple[int, str]:
    m = parse_diagram_spec(req.diagram)
    doc = _diagram_info(m)
    if req.fmt == "json":
        return 0, _dump(doc)
    fs = m.frobenius_symbol()
    lo, hi = _default_window(m)
    lines = [
        f"diagram: {m}",
        f"index (sigma): {doc['sigma']}",
        f"genus: {doc['genus']}",
        f"block coordinates: ({', '.join(str(b) for b in doc['blockCoordinates'])})",
        f"frobenius symbol: {fs}",
        f"regular: {'true' if doc['regular'] else 'false'}",
        f"render [{lo},{hi}]: {m.render(lo, hi, ascii_safe=req.ascii_safe)}",
    ]
    return 0, "\n".join(lines)


def _cmd_hm(req: CommandRequest) -> tuple[int, str]:
    m = parse_diagram_spec(req.diagram)
    h = wronskian_polynomial(m)
    hhat = normalized_wronskian(m)
    if req.fmt == "json":
        return 0, _dump({"H": str(h), "Hhat": str(hhat),
                          "sigma": m.index, "genus": m.genus})
    return 0, "\n".join([
        f"H: {h}",
        f"Hhat: {hhat}",
        f"sigma: {m.index}",
        f"genus: {m.genus}",
    ])


def _cmd_potential(req: CommandRequest) -> tuple[int, str]:
    m = parse_diagram_spec(req.diagram)
    u = potential(m)
    if req.fmt == "json":
        return 0, _dump({"indexSet": list(m.index_set), "sigma": m.index,
                          "potential": u.to_json(), "human": str(u)})
    return 0, f"U: {u}"


def _cmd_eigencheck(req: CommandRequest) -> tuple[int, str]:
    m = parse_diagram_spec(req.diagram)
    if req.k is None:
        raise ParseError("-k", 0, "eigencheck requires -k")
    state = eigenfunction(m, req.k)
    op = schrodinger_operator(m)
    holds = op.apply(state.function) == state.function * (2 * req.k + 1)
    doc = {
        "k": req.k,
        "epsilon": state.epsilon,
        "bound": state.bound,
        "eigenvalue": 2 * req.k + 1,
        "function": state.function.to_json(),
        "identityHolds": holds,
    }
    code = 0 if holds else 1
    if req.fmt == "json":
        return code, _dump(doc)
    return code, "\n".join([
        f"k: {req.k}",
        f"epsilon: {state.epsilon}",
        f"bound: {'true' if state.bound else 'false'}",
        f"eigenvalue: {doc['eigenvalue']}",
        f"function: {state.function}",
        f"identity: {'holds' if holds else 'VIOLATED'}",
    ])


def _cmd_intertwiner(req: CommandRequest) -> tuple[int, str]:
    m = parse_diagram_spec(req.diagram)
    if req.flips is None:
        raise ParseError("flips", 0, "intertwiner requires a flip multiset")
    ms = parse_multiset_spec(req.flips)
    op = intertwiner_multiset(m, ms)
    holds = verify_intertwining(m, ms)
    target = m.multi_flip(ms)
    doc = {
        "source": m.to_json(),
        "target": target.to_json(),
        "flips": ms.to_json(),
        "order": op.order,
        "primitive": all(mult == 1 for _, mult in ms.entries),
        "operator": op.to_json(),
        "intertwines": holds,
    }
    code = 0 if holds else 1
    if req.fmt == "json":
        return code, _dump(doc)
    return code, "\n".join([
        f"source: {m}",
        f"target: {target}",
        f"order: {op.order}",
        f"operator: {op}",
        f"intertwining identity: {'holds' if holds else 'VIOLATED'}",
    ])


def _cmd_ladder(req: CommandRequest) -> tuple[int, str]:
    m = parse_diagram_spec(req.diagram)
    n = req.n if req.n is not None else 1
    result = ladder(m, n)
    doc = {
        "indexSet": list(m.index_set),
        "shift": n,
        "flipSet": list(result.flip_set),
        "order": result.order,
        "operator": result.operator.to_json(),
    }
    if n >= 1:
        doc["predictedOrder"] = ladder_order(m, n)
    if req.fmt == "json":
        return 0, _dump(doc)
    lines = [
        f"shift: {n}",
        f"flip set: {{{', '.join(str(k) for k in result.flip_set)}}}",
        f"order: {result.order}",
        f"operator: {result.operator}",
    ]
    if n >= 1:
        lines.append(f"predicted order: {doc['predictedOrder']}")
    return 0, "\n".join(lines)


def _cmd_syzygy(req: CommandRequest) -> tuple[int, str]:
    m = parse_diagram_spec(req.diagram)
    n = req.n if req.n is not None else 2
    s = syzygy(m, n)
    doc = {
        "indexSet": list(m.index_set),
        "n": n,
        "multiset": s.multiset.to_json(),
        "flipSet": list(s.flip_set),
        "evenPart": s.even_part.to_json(),
        "roots": list(s.polynomial_roots),
        "identityHolds": s.identity_holds,
    }
    code = 0 if s.identity_holds else 1
    if req.fmt == "json":
        return code, _dump(doc)
    return code, "\n".join([
        f"n: {n}",
        f"multiset: {s.multiset}",
        f"flip set K0: {{{', '.join(str(k) for k in s.flip_set)}}}",
        f"even part K1: {s.even_part}",
        f"roots of p: {{{', '.join(str(r) for r in s.polynomial_roots)}}}",
        f"identity: {'holds' if s.identity_holds else 'VIOLATED'}",
    ])


def _cmd_regular(req: CommandRequest) -> tuple[int, str]:
    m = parse_diagram_spec(req.diagram)
    regular = is_regular(m)
    roots = sturm_real_roots(wronskian_polynomial(m))
    agree = regular == (roots == 0)
    doc = {
        "indexSet": list(m.index_set),
        "regular": regular,
        "filledBlockLengths": list(m.block_coordinates().filled_block_lengths()),
        "realRootsOfH": roots,
        "routesAgree": agree,
    }
    code = 0 if agree else 1
    if req.fmt == "json":
        return code, _dump(doc)
    return code, "\n".join([
        f"regular: {'true' if regular else 'false'}",
        f"filled block lengths: {doc['filledBlockLengths']}",
        f"real roots of H: {roots}",
        f"routes agree: {'yes' if agree else 'NO'}",
    ])


def _cmd_verify_all(req: CommandRequest) -> tuple[int, str]:
    results = default_suite(req.window, req.max_size, req.max_shift)
    ok = all(r.passed for r in results)
    if req.fmt == "json":
        doc = {
            "window": req.window,
            "maxSize": req.max_size,
            "maxShift": req.max_shift,
            "checks": [
                {"name": r.name, "cases": r.cases, "passed": r.passed,
                 "detail": r.detail}
                for r in results
            ],
            "allPassed": ok,
        }
        return (0 if ok else 1), _dump(doc)
    lines = [str(r) for r in results]
    lines.append("all checks passed" if ok else "FAILURES detected")
    return (0 if ok else 1), "\n".join(lines)


def _one_gap_fixture(n: int) -> dict:
    m = MayaDiagram([-n])
    elementary = ladder(m, 1)
    minimal = ladder(m, n)
    s = syzygy(m, n)
    chain = first_order_factorization(m, minimal.flip_set)
    return {
        "diagram": _diagram_info(m),
        "elementaryLadder": {
            "flipSet": list(elementary.flip_set),
            "order": elementary.order,
            "operator": elementary.operator.to_json(),
        },
        "minimalLadder": {
            "flipSet": list(minimal.flip_set),
            "order": minimal.order,
            "operator": minimal.operator.to_json(),
        },
        "syzygy": {
            "multiset": s.multiset.to_json(),
            "flipSet": list(s.flip_set),
            "evenPart": s.even_part.to_json(),
            "roots": list(s.polynomial_roots),
            "identityHolds": s.identity_holds,
        },
        "factorization": [a.to_json() for a in chain],
    }


def _cmd_seed_corpus(req: CommandRequest) -> tuple[int, str]:
    outdir = Path(req.directory)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for n in range(1, 5):
        path = outdir / f"one_gap_n{n}.json"
        payload = json.dumps(_one_gap_fixture(n), sort_keys=True, indent=2)
        path.write_text(payload + "\n")
        written.append(str(path))
    if req.fmt == "json":
        return 0, _dump({"written": written})
    return 0, "\n".join(f"wrote {p}" for p in written)


_HANDLERS = {
    "render": _cmd_render,
    "info": _cmd_info,
    "hm": _cmd_hm,
    "potential": _cmd_potential,
    "eigencheck": _cmd_eigencheck,
    "intertwiner": _cmd_intertwiner,
    "ladder": _cmd_ladder,
    "syzygy": _cmd_syzygy,
    "regular": _cmd_regular,
    "verify-all": _cmd_verify_all,
    "seed-corpus": _cmd_seed_corpus,
}


def run(request: CommandRequest) -> tuple[int, str]:
    """Execute a request; returns (exit code, emitted document)."""
    handler = _HANDLERS.get(request.command)
    if handler is None:
        return 2, f"unknown command: {request.command}"
    try:
        return handler(request)
    except ParseError as exc:
        return 2, f"error: {exc}"
    except ValueError as exc:
        return 2, f"error: {exc}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscext",
        description="Exact rational extensions of the harmonic oscillator "
                    "from Maya diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, diagram=True, help_=""):
        p = sub.add_parser(name, help=help_)
        if diagram:
            p.add_argument("diagram", help="K:{k1,k2,...} or B:(b0,b1,...)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("render", help_="draw a window of the diagram")
    p.add_argument("--from", dest="lo", type=int, default=None)
    p.add_argument("--to", dest="hi", type=int, default=None)
    p.add_argument("--ascii-safe", action="store_true")

    p = add("info", help_="index set, sigma, genus, blocks, Frobenius symbol")
    p.add_argument("--ascii-safe", action="store_true")

    add("hm", help_="Wronskian polynomial and its normalization")
    add("potential", help_="extension potential as an exact rational function")

    p = add("eigencheck", help_="verify the eigenfunction relation at level k")
    p.add_argument("-k", type=int, required=True)

    p = add("intertwiner", help_="build and verify an intertwining operator")
    p.add_argument("flips", help="flip multiset K:{...} (repeats allowed)")

    p = add("ladder", help_="ladder operator between T and T + 2n")
    p.add_argument("-n", type=int, default=1)

    p = add("syzygy", help_="relate the n-th power of the one-step ladder")
    p.add_argument("-n", type=int, default=2)

    add("regular", help_="Krein-Adler regularity, cross-checked by Sturm count")

    p = add("verify-all", diagram=False,
            help_="run the bounded-family invariant suite")
    p.add_argument("--window", type=int, default=4)
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--max-shift", type=int, default=3)

    p = add("seed-corpus", diagram=False,
            help_="write the golden JSON fixtures")
    p.add_argument("--dir", dest="directory", default="corpus")
    return parser


def main(argv=None) -> int:
    ns = _build_parser().parse_args(argv)
    request = CommandRequest(
        command=ns.command,
        diagram=getattr(ns, "diagram", None),
        flips=getattr(ns, "flips", None),
        k=getattr(ns, "k", None),
        n=getattr(ns, "n", None),
        lo=getattr(ns, "lo", None),
        hi=getattr(ns, "hi", None),
        fmt=getattr(ns, "format", "text"),
        ascii_safe=getattr(ns, "ascii_safe", False),
        window=getattr(ns, "window", 4),
        max_size=getattr(ns, "max_size", 3),
        max_shift=getattr(ns, "max_shift", 3),
        directory=getattr(ns, "directory", "corpus"),
    )
    code, document = run(request)
    if code == 2:
        print(document, file=sys.stderr)
    else:
        print(document)
    return code


def entry() -> None:  # console-script hook
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
