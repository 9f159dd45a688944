"""
Finite presentations and their realization by coset enumeration.

Syntax::

    < a, b | a^8, b^2, b^-1 a b = a^5 >
    < a, b, c | a^8 = b^2 = c^2 = 1, [c,b], b^-1 a b = a c >

``^`` takes a (possibly negative) integer exponent, ``[x,y]`` is
``x^-1 y^-1 x y``, ``1`` is the empty word and ``u = v`` means ``u v^-1``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

from .group import CayleyGroup, from_generators

DEFAULT_MAX_COSETS = 4096

Letter = tuple[int, int]
Word = tuple[Letter, ...]


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class CosetLimitExceeded(RuntimeError):
    def __init__(self, max_cosets: int, used: int):
        super().__init__(f"coset enumeration exceeded {max_cosets} cosets ({used} defined)")
        self.max_cosets = max_cosets
        self.used = used


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __str__(self):
        return format_presentation(self)


def free_reduce(word) -> Word:
    out: list[Letter] = []
    for g, s in word:
        if out and out[-1] == (g, -s):
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def invert(word) -> Word:
    return tuple((g, -s) for g, s in reversed(word))


def cyclic_reduce(word) -> Word:
    w = list(free_reduce(word))
    while len(w) > 1 and w[0] == (w[-1][0], -w[-1][1]):
        w = w[1:-1]
    return tuple(w)


def format_word(word, names) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        g, s = word[i]
        j = i
        while j < len(word) and word[j] == (g, s):
            j += 1
        k = (j - i) * s
        parts.append(names[g] if k == 1 else f"{names[g]}^{k}")
        i = j
    return " ".join(parts)


def format_presentation(p: Presentation) -> str:
    rels = ", ".join(format_word(w, p.generators) for w in p.relators)
    return f"< {', '.join(p.generators)} | {rels} >"


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<sym>[<>|,=^\[\]]))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PresentationSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        toks.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0
        self.gens: dict[str, int] = {}

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PresentationSyntaxError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def at(self, value):
        tok = self.peek()
        return tok[0] == "sym" and tok[1] == value

    def presentation(self) -> Presentation:
        self.take("sym", "<")
        names = [self.take("name")]
        while self.at(","):
            self.take()
            names.append(self.take("name"))
        for _, name, pos in names:
            if name in self.gens:
                raise PresentationSyntaxError(f"duplicate generator {name!r}", pos)
            self.gens[name] = len(self.gens)
        self.take("sym", "|")
        relators = list(self.relation())
        while self.at(","):
            self.take()
            relators.extend(self.relation())
        self.take("sym", ">")
        self.take("end")
        return Presentation(tuple(self.gens), tuple(relators))

    def relation(self):
        start = self.peek()[2]
        words = [self.word()]
        while self.at("="):
            self.take()
            words.append(self.word())
        if len(words) == 1:
            pairs = [words[0]]
        else:
            pairs = [u + invert(v) for u, v in zip(words, words[1:])]
        out = []
        for w in pairs:
            w = free_reduce(w)
            if not w:
                raise PresentationSyntaxError("relator is empty after free reduction", start)
            out.append(w)
        return out

    def word(self) -> Word:
        tok = self.peek()
        if tok[0] == "int" and tok[1] == "1":
            self.take()
            return ()
        letters: list[Letter] = []
        while True:
            tok = self.peek()
            if tok[0] == "name":
                letters.extend(self.power())
            elif self.at("["):
                letters.extend(self.commutator())
            else:
                break
        if not letters:
            raise PresentationSyntaxError(f"expected a word, found {tok[1] or 'end of input'!r}", tok[2])
        return tuple(letters)

    def generator(self) -> int:
        _, name, pos = self.take("name")
        if name not in self.gens:
            raise PresentationSyntaxError(f"unknown generator {name!r}", pos)
        return self.gens[name]

    def power(self):
        g = self.generator()
        k = 1
        if self.at("^"):
            self.take()
            k = int(self.take("int")[1])
        return [(g, 1 if k > 0 else -1)] * abs(k)

    def commutator(self):
        self.take("sym", "[")
        x = self.generator()
        self.take("sym", ",")
        y = self.generator()
        self.take("sym", "]")
        return [(x, -1), (y, -1), (x, 1), (y, 1)]


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).presentation()


# -- coset enumeration ---------------------------------------------------------


@dataclass
class CosetTable:
    """
    Coset table for the trivial subgroup. Column ``2*g`` is generator ``g``,
    column ``2*g + 1`` its inverse. Coset 0 is the subgroup itself.
    """

    presentation: Presentation
    entries: list[list[int]]  # -1 marks an undefined entry
    live: list[bool]
    defined: int  # total cosets ever allocated

    @property
    def rows(self) -> int:
        return len(self.entries)

    def live_cosets(self) -> list[int]:
        return [c for c, ok in enumerate(self.live) if ok]

    @property
    def order(self) -> int:
        return sum(self.live)

    def compressed(self) -> list[list[int]]:
        """Table restricted to live cosets, renumbered in increasing order."""
        live = self.live_cosets()
        new = {c: i for i, c in enumerate(live)}
        return [[new[self.entries[c][x]] for x in range(len(self.entries[c]))] for c in live]

    def scan_closes(self, coset: int, word) -> bool:
        c = coset
        for g, s in word:
            c = self.entries[c][2 * g + (s < 0)]
            if c < 0:
                return False
        return c == coset


class _Enumerator:
    def __init__(self, p: Presentation, max_cosets: int):
        self.ncols = 2 * len(p.generators)
        self.max = max_cosets
        self.table = [[-1] * self.ncols]
        self.parent = [0]
        self.live = [True]
        self.queue: deque[int] = deque()

    def define(self, c: int, x: int):
        if len(self.table) >= self.max:
            raise CosetLimitExceeded(self.max, len(self.table))
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live.append(True)
        self.table[c][x] = d
        self.table[d][x ^ 1] = c

    def rep(self, c: int) -> int:
        p = self.parent
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            p[c], c = r, p[c]
        return r

    def merge(self, a: int, b: int):
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.live[b] = False
        self.queue.append(b)

    def coincidence(self, a: int, b: int):
        self.merge(a, b)
        t = self.table
        while self.queue:
            dead = self.queue.popleft()
            for x in range(self.ncols):
                d = t[dead][x]
                if d < 0:
                    continue
                if t[d][x ^ 1] == dead:
                    t[d][x ^ 1] = -1
                e1 = self.rep(dead)
                e2 = self.rep(d)
                if t[e1][x] >= 0:
                    self.merge(e2, t[e1][x])
                elif t[e2][x ^ 1] >= 0:
                    self.merge(e1, t[e2][x ^ 1])
                else:
                    t[e1][x] = e2
                    t[e2][x ^ 1] = e1

    def scan_and_fill(self, c: int, word: list[int]):
        t = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            # forward scan
            while i <= j and t[f][word[i]] >= 0:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            # backward scan
            while j >= i and t[b][word[j] ^ 1] >= 0:
                b = t[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                # deduction
                t[f][word[i]] = b
                t[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])

    def run(self, relators: list[list[int]]):
        c = 0
        while c < len(self.table):
            for w in relators:
                if not self.live[c]:
                    break
                self.scan_and_fill(c, w)
            if self.live[c]:
                for x in range(self.ncols):
                    if self.table[c][x] < 0:
                        self.define(c, x)
            c += 1


def todd_coxeter(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate cosets of the trivial subgroup (HLT relator scanning)."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    relators = []
    for w in p.relators:
        w = cyclic_reduce(w)
        if w:
            relators.append([2 * g + (s < 0) for g, s in w])
    en = _Enumerator(p, max_cosets)
    if not p.generators:
        return CosetTable(p, [[]], [True], 1)
    en.run(relators)
    return CosetTable(p, en.table, en.live, len(en.table))


def realize(p: Presentation | str, max_cosets: int = DEFAULT_MAX_COSETS, label: str | None = None) -> CayleyGroup:
    """
    Build the group presented by ``p`` from its regular right action on cosets.
    ``gens`` of the result are the images of the presentation generators.
    """
    if isinstance(p, str):
        p = parse_presentation(p)
    ct = todd_coxeter(p, max_cosets)
    rows = ct.compressed()
    n = len(rows)
    perms = [[rows[c][2 * g] for c in range(n)] for g in range(len(p.generators))]
    g = from_generators(n, perms, label=label or str(p))
    assert g.n == n, "regular action lost cosets"
    return g
