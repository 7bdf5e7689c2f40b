"""Brute-force ground truth on small groups: enumerate GL_n(F_p) or
GA_n(F_p), find the reflections by definition, BFS the Cayley graph over
them, and compare the resulting word lengths against the closed-form
formulas.
"""

from itertools import product as iproduct

from . import affine, kernels
from .errors import NoReflections, NotPrime, ShapeMismatch, TooLarge
from .factorization import reflection_length_gl
from .fields import PrimeField
from .linalg import LinearForm, Matrix, Vector, rref
from .reflection import classify_reflection, is_reflection_matrix, make_reflection, \
    reflection_from_matrix

GL = "GL"
GA = "GA"

DEFAULT_CAP = 10**6


def gl_order(n, p):
    order = 1
    pn = p**n
    for i in range(n):
        order *= pn - p**i
    return order


def ga_order(n, p):
    return p**n * gl_order(n, p)


class GroupTable:
    """A fully enumerated small group of matrices, in deterministic
    (lexicographic, row-major) order, with an id lookup by entries."""

    __slots__ = ("kind", "n", "p", "field", "elements", "index", "identity_id")

    def __init__(self, kind, n, p, elements):
        self.kind = kind
        self.n = n
        self.p = p
        self.field = PrimeField(p)
        self.elements = elements
        self.index = {m.entries: i for i, m in enumerate(elements)}
        dim = self.matrix_dim
        self.identity_id = self.index[Matrix.identity(self.field, dim).entries]

    @property
    def matrix_dim(self):
        return self.n if self.kind == GL else self.n + 1

    def __len__(self):
        return len(self.elements)

    def id_of(self, m):
        return self.index[m.entries]

    def flattened(self):
        return [tuple(e for row in m.entries for e in row) for m in self.elements]

    def affine_map(self, eid):
        if self.kind != GA:
            raise ShapeMismatch("affine view only for GA tables")
        return affine.AffineMap.from_block_matrix(self.elements[eid])


def _invertible_matrices(field, n):
    """All of GL_n(F_p), rows chosen lexicographically, each row outside the
    span of the previous ones.  Yields matrices in lex order of their
    flattened entries."""
    p = field.p
    all_rows = list(iproduct(range(p), repeat=n))

    def rec(chosen, span):
        if len(chosen) == n:
            yield Matrix(field, chosen)
            return
        for row in all_rows:
            if row in span:
                continue
            new_span = set()
            for s in span:
                for c in range(p):
                    new_span.add(tuple((a + c * b) % p for a, b in zip(s, row)))
            yield from rec(chosen + [row], new_span)

    zero_span = {tuple([0] * n)}
    yield from rec([], zero_span)


def enumerate_group(kind, n, p, cap=DEFAULT_CAP):
    if kind not in (GL, GA):
        raise ShapeMismatch("kind must be GL or GA")
    field = PrimeField(p)  # raises NotPrime for bad p
    order = gl_order(n, p) if kind == GL else ga_order(n, p)
    if order > cap:
        raise TooLarge("group order %d exceeds cap %d" % (order, cap))
    if kind == GL:
        elements = list(_invertible_matrices(field, n))
    else:
        f = field
        blocks = []
        translations = list(iproduct(range(p), repeat=n))
        for g in _invertible_matrices(field, n):
            for lam in translations:
                rows = [list(g.entries[i]) + [lam[i]] for i in range(n)]
                rows.append([0] * n + [1])
                blocks.append(Matrix(f, rows))
        blocks.sort(key=lambda m: m.entries)
        elements = blocks
    assert len(elements) == order
    return GroupTable(kind, n, p, elements)


def reflections_of(table):
    """Element ids of the reflections, straight from the definition: a
    codimension-1 space fixed pointwise."""
    out = set()
    for i, m in enumerate(table.elements):
        if table.kind == GL:
            if rref(m.minus_identity())[1] == 1:
                out.add(i)
        else:
            if affine.is_affine_reflection(table.affine_map(i)):
                out.add(i)
    return out


class LengthTable:
    __slots__ = ("lengths", "classes", "mov_dims")

    def __init__(self, lengths, classes=None, mov_dims=None):
        self.lengths = lengths
        self.classes = classes
        self.mov_dims = mov_dims

    def length(self, eid):
        return self.lengths[eid]

    def reachable(self, eid):
        return self.lengths[eid] != kernels.UNREACHED


def bfs_lengths(table, gens, backend=None):
    """Exact word length of every element over the generator set, by BFS.

    Elements outside the generated subgroup keep kernels.UNREACHED.
    """
    gen_ids = sorted(gens)
    if not gen_ids:
        lengths = [kernels.UNREACHED] * len(table)
        lengths[table.identity_id] = 0
        return LengthTable(lengths)
    lengths = kernels.bfs_lengths(
        table.flattened(), gen_ids, table.matrix_dim, table.p,
        table.identity_id, backend=backend,
    )
    return LengthTable(list(lengths))


def formula_length(table, eid):
    """The closed-form prediction: rank(g - 1) for GL, dim mov plus the class
    offset for GA."""
    if table.kind == GL:
        return reflection_length_gl(table.elements[eid])
    gg = table.affine_map(eid)
    return affine.reflection_length_affine(gg)


class VerificationReport:
    __slots__ = (
        "kind", "n", "p", "total", "agreements", "disagreements",
        "first_counterexample", "tuple_checks", "tuple_failures",
    )

    def __init__(self, kind, n, p, total, agreements, disagreements,
                 first_counterexample=None, tuple_checks=0, tuple_failures=0):
        self.kind = kind
        self.n = n
        self.p = p
        self.total = total
        self.agreements = agreements
        self.disagreements = disagreements
        self.first_counterexample = first_counterexample
        self.tuple_checks = tuple_checks
        self.tuple_failures = tuple_failures

    @property
    def ok(self):
        return self.disagreements == 0 and self.tuple_failures == 0

    def records(self):
        lines = [
            ("group", "%s %d %d" % (self.kind, self.n, self.p)),
            ("elements", str(self.total)),
            ("agreements", str(self.agreements)),
            ("disagreements", str(self.disagreements)),
        ]
        if self.first_counterexample is not None:
            eid, bfs_len, formula = self.first_counterexample
            lines.append(("first_counterexample_id", str(eid)))
            lines.append(("first_counterexample_bfs", str(bfs_len)))
            lines.append(("first_counterexample_formula", str(formula)))
        if self.tuple_checks:
            lines.append(("tuple_checks", str(self.tuple_checks)))
            lines.append(("tuple_failures", str(self.tuple_failures)))
        return lines


def verify_formulas(table, check_tuples_up_to=0, backend=None):
    """Compare BFS word lengths against the closed-form lengths for every
    element; optionally also check the reducedness criterion on every
    reflection tuple up to the given length."""
    refl = reflections_of(table)
    if not refl:
        raise NoReflections(
            "%s_%d(F_%d) contains no reflections" % (table.kind, table.n, table.p)
        )
    lt = bfs_lengths(table, refl, backend=backend)
    agreements = 0
    disagreements = 0
    first = None
    for eid in range(len(table)):
        expected = formula_length(table, eid)
        got = lt.length(eid)
        if got == expected:
            agreements += 1
        else:
            disagreements += 1
            if first is None:
                first = (eid, got, expected)
    tuple_checks = 0
    tuple_failures = 0
    if check_tuples_up_to:
        from .factorization import OrderedFactorization, is_reduced

        refl_sorted = sorted(refl)
        dim = table.matrix_dim
        # reducedness of a tuple versus the BFS length of its product
        def tuples(k):
            return iproduct(refl_sorted, repeat=k)

        for k in range(1, check_tuples_up_to + 1):
            for ids in tuples(k):
                prod = Matrix.identity(table.field, dim)
                for i in ids:
                    prod = prod.mul(table.elements[i])
                bfs_len = lt.length(table.id_of(prod))
                if table.kind == GL:
                    S = OrderedFactorization(
                        table.field, dim,
                        [reflection_from_matrix(table.elements[i]) for i in ids],
                    )
                    reduced = is_reduced(S)
                else:
                    # The subspace criterion lives in GL; a translation's
                    # block matrix is a GL reflection but not an affine one,
                    # so for GA the tuple is reduced exactly when the affine
                    # length formula gives k.
                    gg = affine.AffineMap.from_block_matrix(prod)
                    reduced = affine.reflection_length_affine(gg) == k
                tuple_checks += 1
                if reduced != (bfs_len == k):
                    tuple_failures += 1
    return VerificationReport(
        table.kind, table.n, table.p, len(table), agreements, disagreements,
        first, tuple_checks, tuple_failures,
    )


class CensusReport:
    __slots__ = (
        "kind", "n", "p", "total", "reflections", "length_counts",
        "class_counts", "translations", "nontranslation_hyperbolic",
        "kind_counts", "unreachable", "notes",
    )

    def __init__(self, kind, n, p, total, reflections, length_counts,
                 class_counts=None, translations=None,
                 nontranslation_hyperbolic=None, kind_counts=None,
                 unreachable=0, notes=()):
        self.kind = kind
        self.n = n
        self.p = p
        self.total = total
        self.reflections = reflections
        self.length_counts = length_counts
        self.class_counts = class_counts
        self.translations = translations
        self.nontranslation_hyperbolic = nontranslation_hyperbolic
        self.kind_counts = kind_counts
        self.unreachable = unreachable
        self.notes = tuple(notes)

    def records(self):
        lines = [
            ("group", "%s %d %d" % (self.kind, self.n, self.p)),
            ("elements", str(self.total)),
            ("reflections", str(self.reflections)),
        ]
        for length in sorted(self.length_counts):
            lines.append(("length_%d" % length, str(self.length_counts[length])))
        if self.unreachable:
            lines.append(("unreachable", str(self.unreachable)))
        if self.class_counts is not None:
            for name in (affine.ELLIPTIC, affine.PARABOLIC, affine.HYPERBOLIC):
                lines.append((name, str(self.class_counts.get(name, 0))))
            lines.append(("translations", str(self.translations)))
            lines.append(
                ("nontranslation_hyperbolic", str(self.nontranslation_hyperbolic))
            )
        if self.kind_counts is not None:
            for name in sorted(self.kind_counts):
                lines.append((name, str(self.kind_counts[name])))
        for i, note in enumerate(self.notes):
            lines.append(("note_%d" % i, note))
        return lines


def census(table, backend=None):
    """Deterministic per-length and per-class counts from the BFS oracle."""
    refl = reflections_of(table)
    lt = bfs_lengths(table, refl, backend=backend)
    length_counts = {}
    unreachable = 0
    for eid in range(len(table)):
        ln = lt.length(eid)
        if ln == kernels.UNREACHED:
            unreachable += 1
        else:
            length_counts[ln] = length_counts.get(ln, 0) + 1
    notes = []
    if table.kind == GL:
        kind_counts = {"semisimple": 0, "transvection": 0}
        for eid in refl:
            r = reflection_from_matrix(table.elements[eid])
            key = classify_reflection(r).name
            kind_counts[key] += 1
        return CensusReport(
            table.kind, table.n, table.p, len(table), len(refl),
            length_counts, kind_counts=kind_counts, unreachable=unreachable,
            notes=notes,
        )
    class_counts = {affine.ELLIPTIC: 0, affine.PARABOLIC: 0, affine.HYPERBOLIC: 0}
    translations = 0
    nontrans_hyp = 0
    for eid in range(len(table)):
        gg = table.affine_map(eid)
        if gg.is_identity():
            class_counts[affine.ELLIPTIC] += 1
            continue
        kind = affine.classify(gg)
        class_counts[kind] += 1
        if kind == affine.HYPERBOLIC:
            if gg.is_translation():
                translations += 1
            else:
                nontrans_hyp += 1
    if table.p == 2 and table.n == 2:
        notes.append(
            "the eight order-3 elements fix a point, so they are counted "
            "elliptic here even though the S4 picture often labels the "
            "3-cycles parabolic"
        )
    return CensusReport(
        table.kind, table.n, table.p, len(table), len(refl), length_counts,
        class_counts=class_counts, translations=translations,
        nontranslation_hyperbolic=nontrans_hyp, unreachable=unreachable,
        notes=notes,
    )


def enumerate_reflections(field, n):
    """All reflection matrices of GL_n(F_p): canonical lines (leading entry
    1) paired with every admissible form."""
    p = field.p
    lines = []
    for tup in iproduct(range(p), repeat=n):
        if any(tup):
            lead = next(i for i, e in enumerate(tup) if e)
            if tup[lead] == 1:
                lines.append(Vector(field, tup))
    for v in lines:
        for tup in iproduct(range(p), repeat=n):
            if not any(tup):
                continue
            alpha = LinearForm(field, tup)
            if alpha(v) != field.neg(field.one):
                yield make_reflection(v, alpha)


def is_product_of_two_reflections(g):
    """Exhaustive two-factor test: exists a reflection r with r^-1 g again a
    reflection.  Definition-level, no length formula involved."""
    field, n = g.field, g.rows
    for r in enumerate_reflections(field, n):
        residual = r.inverse().matrix().mul(g)
        if is_reflection_matrix(residual):
            return True
    return False
