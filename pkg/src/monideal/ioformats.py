"""Ideal parsing and canonical serialization (text grammar and JSON).

Text grammar:

    ring: x1 x2 x3
    gens:
    x1^2*x2^2
    x1^2*x3^2

Generators may also be comma-separated, including on the `gens:` line
itself.  A monomial is `1` or term(*term)* with term = var(^uint)?.
JSON form: {"vars": [...], "gens": [[...], ...]}.  Parsed ideals are
minimalized on load; serialization is canonical, so output is
byte-stable and round-trips.
"""

import json
import re

from .core import MonomialIdeal
from .errors import ParseError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUM = re.compile(r"[0-9]+")


def parse_monomial(text, variables, line=1, col_offset=0):
    """Exponent vector of one monomial in the given variables."""
    var_index = {v: i for i, v in enumerate(variables)}
    exps = [0] * len(variables)
    pos = 0
    text_len = len(text)

    def err(msg, at):
        raise ParseError(msg, line, col_offset + at + 1)

    def skip_ws():
        nonlocal pos
        while pos < text_len and text[pos] in " \t":
            pos += 1

    skip_ws()
    if pos >= text_len:
        err("empty monomial", pos)
    if text[pos] == "1":
        pos += 1
        skip_ws()
        if pos < text_len:
            err("unexpected input after '1'", pos)
        return tuple(exps)
    first = True
    while True:
        skip_ws()
        if not first:
            if pos >= text_len:
                break
            if text[pos] != "*":
                err("expected '*' between terms", pos)
            pos += 1
            skip_ws()
        first = False
        m = _IDENT.match(text, pos)
        if not m:
            err("expected a variable name", pos)
        name = m.group(0)
        if name not in var_index:
            err("unknown variable %r" % name, pos)
        pos = m.end()
        exp = 1
        if pos < text_len and text[pos] == "^":
            pos += 1
            nm = _NUM.match(text, pos)
            if not nm:
                err("expected a non-negative integer exponent", pos)
            exp = int(nm.group(0))
            pos = nm.end()
        exps[var_index[name]] += exp
        skip_ws()
        if pos >= text_len:
            break
    return tuple(exps)


def _parse_text(text):
    lines = text.splitlines()
    variables = None
    gens = []
    in_gens = False
    saw_gens_header = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if variables is None:
            if not line.startswith("ring:"):
                raise ParseError("expected a 'ring:' line", lineno, 1)
            names = line[len("ring:"):].split()
            if not names:
                raise ParseError("empty variable list", lineno, len(line))
            seen = set()
            for name in names:
                if not _IDENT.fullmatch(name):
                    raise ParseError("bad variable name %r" % name, lineno,
                                     raw.index(name) + 1)
                if name in seen:
                    raise ParseError("duplicate variable %r" % name, lineno,
                                     raw.rindex(name) + 1)
                seen.add(name)
            variables = tuple(names)
            continue
        if not in_gens:
            if not line.startswith("gens:"):
                raise ParseError("expected a 'gens:' line", lineno, 1)
            in_gens = saw_gens_header = True
            rest = raw[raw.index("gens:") + len("gens:"):]
            _parse_gen_chunk(rest, variables, lineno,
                             raw.index("gens:") + len("gens:"), gens)
            continue
        _parse_gen_chunk(raw, variables, lineno, 0, gens)
    if variables is None:
        raise ParseError("expected a 'ring:' line", max(len(lines), 1), 1)
    if not saw_gens_header or not gens:
        raise ParseError("empty gens section", max(len(lines), 1), 1)
    return MonomialIdeal.make(variables, gens)


def _parse_gen_chunk(chunk, variables, lineno, col_offset, out):
    offset = col_offset
    for piece in chunk.split(","):
        if piece.strip():
            lead = len(piece) - len(piece.lstrip())
            out.append(parse_monomial(piece.strip(), variables, lineno,
                                      offset + lead))
        offset += len(piece) + 1


def parse_ideal(text):
    """Parse either the JSON form or the text grammar; minimalized."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc.msg, exc.lineno, exc.colno)
        if not isinstance(doc, dict) or "vars" not in doc or "gens" not in doc:
            raise ParseError("JSON ideal needs 'vars' and 'gens'", 1, 1)
        variables = doc["vars"]
        if (not isinstance(variables, list) or not variables
                or len(set(variables)) != len(variables)
                or not all(isinstance(v, str) and _IDENT.fullmatch(v)
                           for v in variables)):
            raise ParseError("bad variable list", 1, 1)
        gens = doc["gens"]
        if not isinstance(gens, list) or not gens:
            raise ParseError("empty gens section", 1, 1)
        for row in gens:
            if (not isinstance(row, list) or len(row) != len(variables)
                    or not all(isinstance(e, int) and e >= 0 for e in row)):
                raise ParseError("bad generator row %r" % (row,), 1, 1)
        return MonomialIdeal.make(tuple(variables), gens)
    return _parse_text(text)


def format_monomial(vec, variables):
    terms = []
    for name, e in zip(variables, vec):
        if e == 1:
            terms.append(name)
        elif e > 1:
            terms.append("%s^%d" % (name, e))
    return "*".join(terms) if terms else "1"


def format_ideal_text(I):
    lines = ["ring: " + " ".join(I.vars), "gens:"]
    lines += [format_monomial(g, I.vars) for g in I.gens]
    return "\n".join(lines) + "\n"


def ideal_to_obj(I):
    return {"vars": list(I.vars), "gens": [list(g) for g in I.gens]}


def to_json(obj):
    """Canonical JSON: sorted keys, stable separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n"


def format_ideal_json(I):
    return to_json(ideal_to_obj(I))


def format_prime(prime, variables):
    return "<" + ", ".join(variables[i] for i in sorted(prime)) + ">"


def primes_to_obj(primes, variables):
    return [[variables[i] for i in sorted(p)] for p in
            sorted(primes, key=lambda p: (len(p), sorted(p)))]
