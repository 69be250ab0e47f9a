"""Shared polynomial text grammar.

Terms are joined by + / -, a term is a '*'-separated product of an
optional rational coefficient and variable powers, exponents use '^'.
Examples: "T^2 - 2*T + 8", "x*y^2 - 3/2*z^3".
"""

from fractions import Fraction

from .errors import InputError

_RAT_CHARS = set("0123456789/")


def _split_terms(s):
    """Split at top-level + and -, keeping signs. Returns nonempty strings."""
    s = s.replace(" ", "").replace("\t", "")
    if not s:
        raise InputError("empty polynomial string")
    terms = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*^/":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    return terms


def _parse_factor(tok, variables):
    """A factor is a rational literal or var or var^k. Returns (coeff, expvec)."""
    exps = [0] * len(variables)
    if not tok:
        raise InputError("empty factor in polynomial term")
    base, _, power = tok.partition("^")
    if base in variables:
        k = 1
        if power:
            if not power.isdigit():
                raise InputError(f"bad exponent {power!r}")
            k = int(power)
        exps[variables.index(base)] = k
        return Fraction(1), exps
    if power:
        raise InputError(f"cannot raise literal {base!r} to a power: {tok!r}")
    if not set(base) <= _RAT_CHARS:
        raise InputError(f"unknown variable or malformed factor {tok!r}")
    try:
        return Fraction(base), exps
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coefficient {base!r}") from exc


def parse_terms(s, variables):
    """Parse a polynomial string into {exponent tuple: Fraction} over `variables`."""
    terms = {}
    for term in _split_terms(s):
        sign = Fraction(1)
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if not term:
            raise InputError("dangling sign in polynomial string")
        coeff = sign
        exps = [0] * len(variables)
        for tok in term.split("*"):
            c, e = _parse_factor(tok, variables)
            coeff *= c
            exps = [a + b for a, b in zip(exps, e)]
        key = tuple(exps)
        coeff += terms.get(key, 0)
        if coeff:
            terms[key] = coeff
        else:
            terms.pop(key, None)
    return terms


def format_coeff(c):
    """Fraction -> 'num/den' or 'num'."""
    c = Fraction(c)
    return str(c)


def format_terms(terms, variables):
    """Canonical string: terms sorted by descending total degree then
    reverse-lex exponent, coefficient 1 omitted on variable terms."""
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda e: (sum(e), e), reverse=True)
    out = []
    for key in keys:
        c = terms[key]
        mono = "*".join(
            v if k == 1 else f"{v}^{k}"
            for v, k in zip(variables, key) if k
        )
        if not mono:
            piece = format_coeff(abs(c))
        elif abs(c) == 1:
            piece = mono
        else:
            piece = f"{format_coeff(abs(c))}*{mono}"
        out.append(("-" if c < 0 else "+", piece))
    head_sign, head = out[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, piece in out[1:]:
        text += sign + piece
    return text
