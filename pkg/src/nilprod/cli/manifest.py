"""Line-oriented manifest format.

    # comment
    [fgab A]
    factors = [4]

    [lie h3] dim = 3; bracket e1 e2 = e3

    [central z]
    algebra = h3
    span = center

    [commands]
    tensor fgab A A
    ganea h3 z

A header ``[kind name]`` opens a declaration whose ``key = value`` entries
follow, on the same line or on later lines; ``;`` separates entries.
The ``[commands]`` section holds one command per line.
"""
from __future__ import annotations

import re
import shlex
from dataclasses import dataclass, field

from ..errors import NilprodError

SC_ALIASES = {"sc", "lie", "leib", "leibniz", "assoc", "comm", "commassoc"}
KINDS = {"fgab", "gp", "operad", "nil2alg", "lierep", "xmod", "central", "ideal"} | SC_ALIASES

# entries whose value names another declaration, with the kinds it may have
REFERENCE_KEYS = {
    ("nil2alg", "operad"): {"operad"},
    ("lierep", "algebra"): {"sc"},
    ("central", "algebra"): {"sc"},
    ("ideal", "algebra"): {"sc"},
}

_INLINE_KEYS = ("dim", "field", "ring", "factors", "rank", "generators", "relators", "preset",
                "p2", "t", "operad", "module", "decomposables", "abelian", "free", "relations",
                "variety", "algebra", "top", "middle", "boundary", "span", "name")
_INLINE_SPLIT = re.compile(r"\s*;\s*|\s+(?=(?:%s)\s*=|(?:bracket|product|rho|action|boundary)\s+\S+.*=)"
                           % "|".join(_INLINE_KEYS))
_HEADER = re.compile(r"\[\s*([A-Za-z_][\w-]*)(?:\s+([A-Za-z_][\w.-]*))?\s*\]")


class ManifestError(NilprodError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line, self.column = line, column
        where = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{where}: {message}" if line else message)


class ManifestSyntaxError(ManifestError):
    pass


class DuplicateName(ManifestError):
    pass


class UnresolvedReference(ManifestError):
    pass


class KindMismatch(ManifestError):
    pass


def canonical_kind(kind: str) -> str:
    return "sc" if kind in SC_ALIASES else kind


@dataclass(frozen=True)
class Entry:
    key: str
    value: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Declaration:
    kind: str
    name: str
    entries: tuple
    line: int = field(default=0, compare=False)

    @property
    def base_kind(self) -> str:
        return canonical_kind(self.kind)

    def get(self, key: str, default=None) -> str | None:
        for e in self.entries:
            if e.key == key:
                return e.value
        return default

    def entry(self, key: str) -> Entry | None:
        for e in self.entries:
            if e.key == key:
                return e
        return None

    def prefixed(self, word: str) -> list[Entry]:
        """Entries such as ``bracket e1 e2`` whose key starts with ``word``."""
        return [e for e in self.entries if e.key.split()[0] == word and len(e.key.split()) > 1]


@dataclass(frozen=True)
class Command:
    words: tuple
    line: int = field(default=0, compare=False)

    @property
    def verb(self) -> str:
        return self.words[0]

    @property
    def text(self) -> str:
        return " ".join(self.words)


@dataclass(frozen=True)
class Manifest:
    declarations: tuple
    commands: tuple

    def lookup(self, name: str) -> Declaration | None:
        for d in self.declarations:
            if d.name == name:
                return d
        return None

    @property
    def names(self) -> dict:
        return {d.name: d for d in self.declarations}


# -- command signatures ---------------------------------------------------------
# (verb, selector) -> kinds of the name arguments that follow; trailing extras are ints or flags

SIGNATURES = {
    ("tensor", "gp"): ({"gp"}, {"gp"}),
    ("tensor", "fgab"): ({"fgab"}, {"fgab"}),
    ("tensor", "nil2"): ({"nil2alg"}, {"nil2alg"}),
    ("tensor", "sc"): ({"sc"}, {"sc"}),
    ("tensor", "xmod"): ({"xmod"}, {"xmod"}),
    ("tensor", "rep"): ({"lierep"}, {"lierep"}),
    ("pxmod", None): ({"xmod"}, {"xmod"}),
    ("coproduct", "fgab"): ({"fgab"}, {"fgab"}),
    ("coproduct", "nil2"): ({"nil2alg"}, {"nil2alg"}),
    ("symmetry", "fgab"): ({"fgab"}, {"fgab"}),
    ("symmetry", "nil2"): ({"nil2alg"}, {"nil2alg"}),
    ("abelianize", None): ({"gp", "sc", "nil2alg", "xmod"},),
    ("validate", None): ({"nil2alg", "sc", "lierep", "operad"},),
    ("describe", None): (set(KINDS) | {"sc"},),
    ("lcs", None): ({"sc", "nil2alg"},),
    ("homology", None): ({"sc"},),
    ("ganea", None): ({"sc"}, {"central", "ideal"}),
    ("lcs-ganea", None): ({"sc"},),
    ("nil", None): ({"sc"},),
    ("birkhoff", None): ({"sc"},),
    ("extension", None): ({"sc"}, {"ideal", "central"}),
    ("table1", None): (),
    ("check", None): (),
}
SELECTOR_VERBS = {"tensor", "coproduct", "symmetry"}


def signature(words) -> tuple[tuple, tuple]:
    """(kinds of name arguments, remaining words) for a command."""
    verb = words[0]
    if verb in SELECTOR_VERBS:
        if len(words) < 2 or (verb, words[1]) not in SIGNATURES:
            options = sorted(s for v, s in SIGNATURES if v == verb)
            raise KeyError(f"'{verb}' needs one of {options}")
        kinds = SIGNATURES[(verb, words[1])]
        return kinds, tuple(words[2:])
    if (verb, None) not in SIGNATURES:
        raise KeyError(f"unknown command '{verb}'")
    return SIGNATURES[(verb, None)], tuple(words[1:])


# -- parsing --------------------------------------------------------------------

def _strip_comment(raw: str) -> str:
    i = raw.find("#")
    return raw if i < 0 else raw[:i]


def _split_inline(text: str) -> list[str]:
    return [p for p in _INLINE_SPLIT.split(text) if p and p.strip()]


def _parse_entry(text: str, lineno: int, col: int) -> Entry:
    if "=" not in text:
        raise ManifestSyntaxError(f"expected 'key = value', got {text.strip()!r}", lineno, col)
    key, value = text.split("=", 1)
    key = " ".join(key.split())
    if not key:
        raise ManifestSyntaxError("missing key before '='", lineno, col)
    return Entry(key, value.strip(), lineno)


def parse_manifest(text: str) -> Manifest:
    decls: list[Declaration] = []
    commands: list[Command] = []
    current = None  # (kind, name, entries, line) or "commands"
    seen: dict[str, int] = {}

    def close():
        nonlocal current
        if current and current != "commands":
            kind, name, entries, line = current
            decls.append(Declaration(kind, name, tuple(entries), line))
        current = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        indent = len(body) - len(body.lstrip())
        stripped = body.strip()
        if stripped.startswith("["):
            m = _HEADER.match(stripped)
            if not m:
                raise ManifestSyntaxError("malformed section header", lineno, indent + 1)
            close()
            kind, name = m.group(1), m.group(2)
            rest = stripped[m.end():]
            if kind == "commands":
                if name:
                    raise ManifestSyntaxError("[commands] takes no name", lineno, indent + 1)
                current = "commands"
                if rest.strip():
                    raise ManifestSyntaxError("commands go on their own lines", lineno, indent + m.end() + 1)
                continue
            if kind not in KINDS:
                raise ManifestSyntaxError(f"unknown kind '{kind}'", lineno, indent + 2)
            if not name:
                raise ManifestSyntaxError(f"[{kind}] needs a name", lineno, indent + 1)
            if name in seen:
                raise DuplicateName(f"'{name}' already declared on line {seen[name]}", lineno, indent + 1)
            seen[name] = lineno
            entries = []
            col = indent + m.end() + 1
            for part in _split_inline(rest):
                entries.append(_parse_entry(part, lineno, col + max(rest.find(part.strip()), 0)))
            current = (kind, name, entries, lineno)
            continue
        if current is None:
            raise ManifestSyntaxError("content outside any section", lineno, indent + 1)
        if current == "commands":
            try:
                words = tuple(shlex.split(stripped))
            except ValueError as exc:
                raise ManifestSyntaxError(str(exc), lineno, indent + 1) from None
            commands.append(Command(words, lineno))
            continue
        for part in _split_inline(stripped) if ";" in stripped else [stripped]:
            current[2].append(_parse_entry(part, lineno, indent + 1 + max(stripped.find(part.strip()), 0)))
    close()
    manifest = Manifest(tuple(decls), tuple(commands))
    resolve(manifest)
    return manifest


def _kind_of(manifest: Manifest, name: str, line: int, column: int = 0) -> str:
    d = manifest.lookup(name)
    if d is None:
        raise UnresolvedReference(f"'{name}' is not declared", line, column)
    return d.base_kind


def resolve(manifest: Manifest) -> None:
    """Check that references resolve and that kinds fit their use."""
    for d in manifest.declarations:
        for (kind, key), allowed in REFERENCE_KEYS.items():
            if d.base_kind != kind:
                continue
            e = d.entry(key)
            if e is None:
                continue
            got = _kind_of(manifest, e.value, e.line)
            if got not in allowed:
                raise KindMismatch(f"{key} '{e.value}' is a {got}, expected {sorted(allowed)}", e.line)
    for c in manifest.commands:
        try:
            kinds, rest = signature(c.words)
        except KeyError as exc:
            raise ManifestSyntaxError(exc.args[0], c.line, 1) from None
        if len(rest) < len(kinds):
            raise ManifestSyntaxError(f"'{c.text}' needs {len(kinds)} names", c.line, 1)
        for name, allowed in zip(rest, kinds):
            got = _kind_of(manifest, name, c.line, _column(c, name))
            if got not in allowed:
                raise KindMismatch(f"'{name}' is a {got}, expected {sorted(allowed)}", c.line, _column(c, name))


def _column(c: Command, word: str) -> int:
    return c.text.find(word) + 1


def serialise(manifest: Manifest) -> str:
    out = []
    for d in manifest.declarations:
        out.append(f"[{d.kind} {d.name}]")
        out.extend(f"{e.key} = {e.value}" for e in d.entries)
        out.append("")
    if manifest.commands:
        out.append("[commands]")
        out.extend(" ".join(shlex.quote(w) for w in c.words) for c in manifest.commands)
    return "\n".join(out) + "\n"


def parse_manifest_file(path) -> Manifest:
    with open(path, encoding="utf-8") as fh:
        return parse_manifest(fh.read())
