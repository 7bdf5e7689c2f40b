"""Text format for exact matrices.

    # comment lines start with a hash
    field F5          (or: field Q)
    3 3
    2 2 4
    1 3 4
    1 2 0

Entries are integers over F_p, integers or a/b fractions over Q.  A file may
hold several matrices: the field header appears once, then each matrix is an
``r c`` line followed by its entries.  Whitespace is free-form.
"""

from fractions import Fraction

from .errors import NotPrime, ParseError
from .fields import QQ, PrimeField
from .linalg import Matrix


def _tokens_with_lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for tok in body.split():
            yield tok, lineno


def parse_field(token, lineno):
    if token == "Q":
        return QQ
    if token.startswith("F"):
        try:
            p = int(token[1:])
        except ValueError:
            raise ParseError("bad field %r" % token, lineno)
        try:
            return PrimeField(p)
        except NotPrime as exc:
            raise ParseError(str(exc), lineno)
    raise ParseError("bad field %r (expected F<p> or Q)" % token, lineno)


def _parse_entry(field, token, lineno):
    try:
        if field is QQ or not field.is_prime_field:
            return Fraction(token)
        return int(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad entry %r" % token, lineno)


def parse_matrices(text):
    """Parse a matrix file into (field, [Matrix, ...])."""
    toks = _tokens_with_lines(text)

    def next_tok(expect):
        try:
            return next(toks)
        except StopIteration:
            raise ParseError("unexpected end of input, expected %s" % expect)

    tok, lineno = next_tok("'field'")
    if tok != "field":
        raise ParseError("expected 'field', got %r" % tok, lineno)
    tok, lineno = next_tok("field name")
    field = parse_field(tok, lineno)
    matrices = []
    while True:
        try:
            tok, lineno = next(toks)
        except StopIteration:
            break
        try:
            r = int(tok)
            tok2, lineno2 = next_tok("column count")
            c = int(tok2)
        except ValueError:
            raise ParseError("expected matrix dimensions, got %r" % tok, lineno)
        if r <= 0 or c <= 0:
            raise ParseError("dimensions must be positive", lineno)
        entries = []
        for _ in range(r):
            row = []
            for _ in range(c):
                tok3, lineno3 = next_tok("matrix entry")
                row.append(_parse_entry(field, tok3, lineno3))
            entries.append(row)
        matrices.append(Matrix(field, entries))
    if not matrices:
        raise ParseError("no matrices in input")
    return field, matrices


def parse_matrix(text):
    field, matrices = parse_matrices(text)
    if len(matrices) != 1:
        raise ParseError("expected exactly one matrix, found %d" % len(matrices))
    return field, matrices[0]


def field_name(field):
    return "Q" if not field.is_prime_field else "F%d" % field.p


def format_matrix(M, with_header=False):
    lines = []
    if with_header:
        lines.append("field %s" % field_name(M.field))
    lines.append("%d %d" % (M.rows, M.cols))
    for row in M.entries:
        lines.append(" ".join(M.field.format(e) for e in row))
    return "\n".join(lines)
