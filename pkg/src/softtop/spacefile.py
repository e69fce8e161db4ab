"""The line-oriented text format for soft spaces.

    # comments run to end of line
    universe: x1 x2 x3
    params: e1 e2
    set F1 { e1 = { x1, x2 } ; e2 = { x1 } }
    set H { e2 = { x1 } }          # omitted params default to empty
    topology: F1 H                 # or: discrete | indiscrete

Parsing is strict: unique labels, no duplicate set names, every referenced
name defined, every mentioned parameter/element declared. Errors carry a
1-based line and column. Serialization writes every parameter block
explicitly so that serialize-then-parse returns an identical space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import SoftContext, SoftSet, SoftTopError, absolute_set, null_set
from .topology import SoftTopology, discrete, indiscrete, validate_topology

_PUNCT = "{}=;,:"
TOPOLOGY_KEYWORDS = ("discrete", "indiscrete")


class SpaceParseError(SoftTopError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class SpaceFile:
    """Parsed form of a space file."""

    context: SoftContext
    sets: dict[str, SoftSet]
    topology_names: tuple[str, ...] = ()
    topology_keyword: Optional[str] = None

    def build_topology(self) -> SoftTopology:
        if self.topology_keyword == "discrete":
            return discrete(self.context)
        if self.topology_keyword == "indiscrete":
            return indiscrete(self.context)
        return validate_topology(
            self.context, [self.sets[name] for name in self.topology_names]
        )

    def __eq__(self, other):
        return (
            isinstance(other, SpaceFile)
            and self.context == other.context
            and self.sets == other.sets
            and self.topology_names == other.topology_names
            and self.topology_keyword == other.topology_keyword
        )


def _tokenize(text: str, lineno: int) -> list[tuple[str, int]]:
    """Tokens of one line as (token, column); comments already stripped."""
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            out.append((ch, i + 1))
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace() and text[j] not in _PUNCT:
            j += 1
        out.append((text[i:j], i + 1))
        i = j
    return out


class _LineParser:
    def __init__(self, tokens: list[tuple[str, int]], lineno: int):
        self.tokens = tokens
        self.lineno = lineno
        self.pos = 0

    def error(self, message: str, column: Optional[int] = None):
        if column is None:
            column = self.tokens[self.pos - 1][1] if self.tokens else 1
        raise SpaceParseError(message, self.lineno, column)

    def peek(self) -> Optional[tuple[str, int]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: Optional[str] = None, what: str = "") -> tuple[str, int]:
        got = self.peek()
        if got is None:
            last_col = self.tokens[-1][1] + len(self.tokens[-1][0]) if self.tokens else 1
            raise SpaceParseError(
                f"unexpected end of line, expected {what or expected!r}",
                self.lineno,
                last_col,
            )
        tok, col = got
        if expected is not None and tok != expected:
            raise SpaceParseError(
                f"expected {what or expected!r}, found {tok!r}", self.lineno, col
            )
        self.pos += 1
        return tok, col

    def done(self) -> None:
        got = self.peek()
        if got is not None:
            raise SpaceParseError(
                f"unexpected trailing {got[0]!r}", self.lineno, got[1]
            )


def parse_space_file(text: str) -> SpaceFile:
    universe: Optional[tuple[tuple[str, int], ...]] = None
    params: Optional[tuple[tuple[str, int], ...]] = None
    context: Optional[SoftContext] = None
    sets: dict[str, SoftSet] = {}
    topology_refs: Optional[list[tuple[str, int, int]]] = None
    topology_keyword: Optional[str] = None
    topology_line = 0
    lineno = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        p = _LineParser(tokens, lineno)
        head, head_col = p.take(what="a directive")

        if head in ("universe", "params"):
            p.take(":", what="':'")
            labels = []
            while p.peek() is not None:
                tok, col = p.take(what="a label")
                if tok in _PUNCT:
                    p.error(f"unexpected {tok!r} in label list", col)
                labels.append((tok, col))
            if not labels:
                p.error(f"{head} list must not be empty", head_col)
            seen = set()
            for lab, col in labels:
                if lab in seen:
                    p.error(f"duplicate {head} label {lab!r}", col)
                seen.add(lab)
            if head == "universe":
                if universe is not None:
                    p.error("duplicate universe declaration", head_col)
                universe = tuple(labels)
            else:
                if params is not None:
                    p.error("duplicate params declaration", head_col)
                params = tuple(labels)
            if universe is not None and params is not None and context is None:
                context = SoftContext(
                    tuple(lab for lab, _ in universe), tuple(lab for lab, _ in params)
                )

        elif head == "set":
            if context is None:
                p.error("universe and params must be declared before sets", head_col)
            name, name_col = p.take(what="a set name")
            if name in _PUNCT or name in TOPOLOGY_KEYWORDS:
                p.error(f"invalid set name {name!r}", name_col)
            if name in sets:
                p.error(f"duplicate set name {name!r}", name_col)
            sets[name] = _parse_set_body(p, context)
            p.done()

        elif head == "topology":
            p.take(":", what="':'")
            if topology_refs is not None or topology_keyword is not None:
                p.error("duplicate topology declaration", head_col)
            topology_line = lineno
            first = p.peek()
            if first is None:
                p.error("topology declaration must not be empty", head_col)
            if first[0] in TOPOLOGY_KEYWORDS:
                topology_keyword = first[0]
                p.take()
                p.done()
            else:
                topology_refs = []
                while p.peek() is not None:
                    tok, col = p.take(what="a set name")
                    if tok in _PUNCT:
                        p.error(f"unexpected {tok!r} in topology list", col)
                    topology_refs.append((tok, lineno, col))

        else:
            p.error(
                f"unknown directive {head!r}; expected 'universe', 'params', "
                "'set' or 'topology'",
                head_col,
            )

    end = lineno + 1
    if universe is None:
        raise SpaceParseError("missing universe declaration", end, 1)
    if params is None:
        raise SpaceParseError("missing params declaration", end, 1)
    if topology_refs is None and topology_keyword is None:
        raise SpaceParseError("missing topology declaration", end, 1)

    names: tuple[str, ...] = ()
    if topology_refs is not None:
        for ref, line, col in topology_refs:
            if ref not in sets:
                raise SpaceParseError(f"undefined set name {ref!r}", line, col)
        names = tuple(ref for ref, _, _ in topology_refs)
    assert context is not None
    return SpaceFile(context, sets, names, topology_keyword)


def _parse_set_body(p: _LineParser, ctx: SoftContext) -> SoftSet:
    p.take("{", what="'{'")
    families: dict[int, set[str]] = {}
    while True:
        got = p.peek()
        if got is None:
            p.take(what="'}' closing the set body")
        if got[0] == "}":
            p.take()
            break
        param_tok, param_col = p.take(what="a parameter label")
        if param_tok in _PUNCT:
            p.error(f"expected a parameter label, found {param_tok!r}", param_col)
        try:
            e = ctx.param_index(param_tok)
        except KeyError:
            p.error(f"undeclared parameter {param_tok!r}", param_col)
        if e in families:
            p.error(f"parameter {param_tok!r} listed twice", param_col)
        p.take("=", what="'='")
        p.take("{", what="'{'")
        elems: set[str] = set()
        while True:
            tok, col = p.take(what="an element label or '}'")
            if tok == "}":
                break
            if tok in _PUNCT:
                p.error(f"expected an element label, found {tok!r}", col)
            if tok not in ctx.universe:
                p.error(f"undeclared element {tok!r}", col)
            if tok in elems:
                p.error(f"element {tok!r} listed twice", col)
            elems.add(tok)
            nxt = p.peek()
            if nxt is not None and nxt[0] == ",":
                p.take()
        families[e] = elems
        nxt = p.peek()
        if nxt is not None and nxt[0] == ";":
            p.take()
    blocks = [families.get(e, set()) for e in range(ctx.n_params)]
    return ctx.soft_set(*blocks)


def format_soft_set_body(f: SoftSet) -> str:
    """The ``{ e1 = { x1, x2 } ; e2 = {} }`` body for one soft set."""
    ctx = f.context
    parts = []
    for e, param in enumerate(ctx.params):
        labels = f.labels(e)
        inner = "{ " + ", ".join(labels) + " }" if labels else "{}"
        parts.append(f"{param} = {inner}")
    return "{ " + " ; ".join(parts) + " }"


def serialize_space_file(sf: SpaceFile) -> str:
    lines = [
        "universe: " + " ".join(sf.context.universe),
        "params: " + " ".join(sf.context.params),
    ]
    for name, f in sf.sets.items():
        lines.append(f"set {name} {format_soft_set_body(f)}")
    if sf.topology_keyword is not None:
        lines.append(f"topology: {sf.topology_keyword}")
    else:
        lines.append("topology: " + " ".join(sf.topology_names))
    return "\n".join(lines) + "\n"


def space_file_for(
    top: SoftTopology, extra_sets: Optional[dict[str, SoftSet]] = None
) -> SpaceFile:
    """A SpaceFile describing a topology, naming members M1, M2, ...

    The null and absolute sets are left implicit (validation re-inserts
    them); the indiscrete and full topologies collapse to their keywords.
    Extra named sets are carried along for witness serialization.
    """
    ctx = top.context
    sets: dict[str, SoftSet] = {}
    names: list[str] = []
    keyword: Optional[str] = None
    if len(top.members) == 2:
        keyword = "indiscrete"
    elif len(top.members) == 1 << ctx.cells:
        keyword = "discrete"
    else:
        trivial = {null_set(ctx).mask, absolute_set(ctx).mask}
        proper = [m for m in top.members if m.mask not in trivial]
        for i, member in enumerate(proper, start=1):
            name = f"M{i}"
            sets[name] = member
            names.append(name)
    if extra_sets:
        for name, f in extra_sets.items():
            if name in sets:
                raise ValueError(f"set name {name!r} already used by a member")
            sets[name] = f
    return SpaceFile(ctx, sets, tuple(names), keyword)
