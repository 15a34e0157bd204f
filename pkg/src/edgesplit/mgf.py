"""The MGF multigraph text format.

::

    # optional comments anywhere
    mgf <n> <m>
    u v
    ...

Edge ids follow line order.  :func:`serialize_mgf` is canonical: header,
then one ``u v`` line per edge in id order, single spaces, trailing newline.
"""

from __future__ import annotations

import hashlib

from edgesplit.multigraph import GraphError, Multigraph


class MgfError(ValueError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_mgf(text: str, name: str = "") -> Multigraph:
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if header is None:
            if len(tok) != 3 or tok[0] != "mgf":
                raise MgfError(lineno, f"expected header 'mgf <n> <m>', got {raw!r}")
            try:
                n, m = int(tok[1]), int(tok[2])
            except ValueError:
                raise MgfError(lineno, f"non-integer header field in {raw!r}") from None
            if n < 0 or m < 0:
                raise MgfError(lineno, "negative count in header")
            header = (n, m)
            continue
        if len(tok) != 2:
            raise MgfError(lineno, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise MgfError(lineno, f"non-integer vertex in {raw!r}") from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise MgfError(lineno, f"vertex out of range 0..{n - 1} in {raw!r}")
        if u == v:
            raise MgfError(lineno, f"loop at vertex {u}")
        pairs.append((u, v))
    if header is None:
        raise MgfError(0, "missing 'mgf <n> <m>' header")
    if len(pairs) != header[1]:
        raise MgfError(0, f"header declares {header[1]} edges, found {len(pairs)}")
    try:
        return Multigraph(header[0], tuple(pairs), name=name)
    except GraphError as exc:  # pragma: no cover - guarded above
        raise MgfError(0, str(exc)) from exc


def serialize_mgf(g: Multigraph) -> str:
    lines = [f"mgf {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def digest(g: Multigraph) -> str:
    return "sha256:" + hashlib.sha256(serialize_mgf(g).encode()).hexdigest()


def read_mgf(path: str) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_mgf(fh.read(), name=path)
