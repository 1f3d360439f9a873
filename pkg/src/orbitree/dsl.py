"""Text formats: automaton sources, group words, and tree words.

Automaton source::

    # lamplighter
    alphabet 0 1
    state a -> (b, a) perm [1, 0]
    state b -> (b, a)

``perm`` lists images by alphabet position and defaults to the identity.
Section names may refer to states declared further down.
"""
from __future__ import annotations

import re

from .automaton import Alphabet, GroupWord, MealyAutomaton, Permutation
from .errors import AutomatonSyntaxError

_TOKEN = re.compile(r"\s*(?:(->)|([()\[\],])|([^\s()\[\],#]+))")


def _tokenize(line, lineno):
    code = line.split("#", 1)[0]
    pos = 0
    tokens = []
    while pos < len(code):
        if code[pos:].strip() == "":
            break
        m = _TOKEN.match(code, pos)
        if m is None or m.end() == pos:
            raise AutomatonSyntaxError(f"unexpected character {code[pos]!r}", lineno, pos + 1)
        text = m.group(1) or m.group(2) or m.group(3)
        tokens.append((text, m.start(m.lastindex) + 1))
        pos = m.end()
    return tokens


class _Cursor:
    def __init__(self, tokens, lineno, line):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.eol_col = len(line.split("#", 1)[0].rstrip()) + 1

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def column(self):
        return self.tokens[self.i][1] if self.i < len(self.tokens) else self.eol_col

    def error(self, message):
        return AutomatonSyntaxError(message, self.lineno, self.column())

    def take(self, expected=None, what=None):
        tok = self.peek()
        if tok is None:
            raise self.error(f"expected {what or repr(expected)}, got end of line")
        if expected is not None and tok != expected:
            raise self.error(f"expected {expected!r}, got {tok!r}")
        if expected is None and tok in ("->", "(", ")", "[", "]", ","):
            raise self.error(f"expected {what}, got {tok!r}")
        self.i += 1
        return tok

    def done(self):
        return self.i >= len(self.tokens)


def parse_automaton(text):
    """Parse automaton source into a :class:`MealyAutomaton`.

    Raises :class:`AutomatonSyntaxError` carrying line and column for
    syntax errors, unknown state names, non-bijective permutations, and
    section lists whose length differs from the alphabet size.
    """
    alphabet = None
    decls = []  # (name, [(section, col)], perm, lineno, name_col, perm_col)
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno, line)
        keyword = cur.peek()
        if alphabet is None:
            if keyword != "alphabet":
                raise cur.error("source must start with an 'alphabet' header")
            cur.take("alphabet")
            symbols = []
            while not cur.done():
                symbols.append(cur.take(what="alphabet symbol"))
            try:
                alphabet = Alphabet(tuple(symbols))
            except ValueError as exc:
                raise AutomatonSyntaxError(str(exc), lineno, tokens[0][1]) from None
            continue
        if keyword != "state":
            raise cur.error(f"expected 'state', got {keyword!r}")
        cur.take("state")
        name_col = cur.column()
        name = cur.take(what="state name")
        cur.take("->")
        cur.take("(")
        col = cur.column()
        sections = [(cur.take(what="section name"), col)]
        while cur.peek() == ",":
            cur.take(",")
            col = cur.column()
            sections.append((cur.take(what="section name"), col))
        cur.take(")")
        if len(sections) != alphabet.size:
            raise AutomatonSyntaxError(
                f"state {name!r} has {len(sections)} sections, alphabet has {alphabet.size} letters",
                lineno,
                name_col,
            )
        perm = None
        perm_col = None
        if cur.peek() == "perm":
            perm_col = cur.column()
            cur.take("perm")
            cur.take("[")
            images = [_int(cur)]
            while cur.peek() == ",":
                cur.take(",")
                images.append(_int(cur))
            cur.take("]")
            perm = images
        if not cur.done():
            raise cur.error(f"unexpected token {cur.peek()!r}")
        decls.append((name, sections, perm, lineno, name_col, perm_col))

    if alphabet is None:
        raise AutomatonSyntaxError("empty automaton source", 1, 1)
    if not decls:
        raise AutomatonSyntaxError("no states declared", len(text.splitlines()) or 1, 1)

    index = {}
    for name, _, _, lineno, col, _ in decls:
        if name in index:
            raise AutomatonSyntaxError(f"duplicate state {name!r}", lineno, col)
        index[name] = len(index)

    d = alphabet.size
    transitions, outputs = [], []
    for name, sections, perm, lineno, _, perm_col in decls:
        row = []
        for section_name, col in sections:
            if section_name not in index:
                raise AutomatonSyntaxError(f"unknown state name {section_name!r}", lineno, col)
            row.append(index[section_name])
        transitions.append(row)
        if perm is None:
            outputs.append(Permutation.identity(d))
            continue
        if len(perm) != d or sorted(perm) != list(range(d)):
            raise AutomatonSyntaxError(
                f"permutation {perm} of state {name!r} is not a bijection on 0..{d - 1}",
                lineno,
                perm_col,
            )
        outputs.append(Permutation(tuple(perm)))
    return MealyAutomaton(alphabet, list(index), transitions, outputs)


def _int(cur):
    col = cur.column()
    tok = cur.take(what="integer")
    try:
        return int(tok)
    except ValueError:
        raise AutomatonSyntaxError(f"expected integer, got {tok!r}", cur.lineno, col) from None


def format_automaton(automaton):
    """Inverse of :func:`parse_automaton` (up to whitespace and comments)."""
    lines = ["alphabet " + " ".join(automaton.alphabet.symbols)]
    for q, name in enumerate(automaton.states):
        sections = ", ".join(automaton.states[t] for t in automaton.transitions[q])
        line = f"state {name} -> ({sections})"
        perm = automaton.outputs[q]
        if not perm.is_identity:
            line += " perm [" + ", ".join(str(i) for i in perm.images) + "]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_group_word(text, automaton):
    """``"a b^-1 c"`` -> GroupWord.  An empty string is the identity."""
    factors = []
    for tok in text.replace(",", " ").split():
        sign = 1
        if tok.endswith("^-1"):
            tok, sign = tok[:-3], -1
        try:
            factors.append((automaton.state_index(tok), sign))
        except KeyError:
            raise ValueError(f"unknown state {tok!r} in group word {text!r}") from None
    return GroupWord(tuple(factors))


def format_group_word(g, automaton):
    parts = []
    for state, sign in g.factors:
        name = automaton.states[state]
        parts.append(name if sign > 0 else f"{name}^-1")
    return " ".join(parts) if parts else "1"


def parse_tree_word(text, alphabet):
    """Concatenated alphabet symbols with ``^k`` repeating the previous symbol.

    ``"10^7"`` is ``1`` followed by seven ``0``.  Symbols are matched
    greedily, longest first.
    """
    symbols = sorted(alphabet.symbols, key=len, reverse=True)
    letters = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos] == "^":
            m = re.compile(r"\^(\d+)").match(text, pos)
            if m is None or not letters:
                raise ValueError(f"bad repetition at position {pos} in {text!r}")
            k = int(m.group(1))
            if k == 0:
                letters.pop()
            else:
                letters.extend([letters[-1]] * (k - 1))
            pos = m.end()
            continue
        for s in symbols:
            if text.startswith(s, pos):
                letters.append(alphabet.index(s))
                pos += len(s)
                break
        else:
            raise ValueError(f"unknown symbol at position {pos} in {text!r}")
    return tuple(letters)


def format_tree_word(word, alphabet):
    return "".join(alphabet.symbols[x] for x in word)
