from itertools import product as iproduct

import pytest

from conftest import F2, F3, F5, random_affine, random_vector
from reflen import (
    ELLIPTIC,
    HYPERBOLIC,
    PARABOLIC,
    QQ,
    AffineMap,
    AffineSubspace,
    Matrix,
    SubspaceBasis,
    Vector,
    classify,
    factor_minimal_affine,
    fix_aff,
    fix_lin,
    image_basis,
    include_at,
    is_affine_reflection,
    make_affine_reflection,
    mov,
    project,
    reflection_length_affine,
)
from reflen.affine import compose_all
from reflen.errors import (
    NoReflections,
    NotAReflection,
    PointOnHyperplane,
    ShapeMismatch,
)
from reflen.oracle import enumerate_group


def flip_f3():
    # (x, y) -> (x, -y)
    return AffineMap(Matrix(F3, [[1, 0], [0, -1]]), Vector.zero(F3, 2))


def shift_f3():
    # (x, y) -> (x + 1, y)
    return AffineMap.translation_by(Vector(F3, [1, 0]))


def swap_shift_f3():
    # (x, y) -> (y + 1, x)
    return AffineMap(Matrix(F3, [[0, 1], [1, 0]]), Vector(F3, [1, 0]))


def line(field, base, direction):
    return AffineSubspace(
        Vector(field, base),
        SubspaceBasis.from_vectors(field, 2, [Vector(field, direction)]),
    )


def test_block_matrix_round_trip():
    s = swap_shift_f3()
    B = s.block_matrix()
    assert B == Matrix(F3, [[0, 1, 1], [1, 0, 0], [0, 0, 1]])
    assert AffineMap.from_block_matrix(B) == s
    with pytest.raises(ShapeMismatch):
        AffineMap.from_block_matrix(Matrix(F3, [[1, 0], [1, 1]]))


def test_project_and_include():
    assert include_at(Matrix.identity(F3, 2), Vector(F3, [1, 2])).is_identity()
    assert project(shift_f3()).is_identity()
    r = include_at(Matrix(F3, [[1, 0], [0, -1]]), Vector.zero(F3, 2))
    assert r == flip_f3()


def test_mov_examples():
    assert mov(flip_f3()) == line(F3, [0, 0], [0, 1])
    t_mov = mov(shift_f3())
    assert t_mov.dim == 0
    assert t_mov.base == Vector(F3, [1, 0])
    s_mov = mov(swap_shift_f3())
    assert s_mov.dim == 1
    assert s_mov.contains(Vector(F3, [1, 0]))
    assert s_mov.directions.contains(Vector(F3, [1, -1]))


def test_fix_examples():
    assert fix_aff(flip_f3()) == line(F3, [0, 0], [1, 0])
    assert fix_lin(flip_f3()).basis == ((1, 0),)
    assert fix_aff(shift_f3()).is_empty
    assert fix_lin(shift_f3()).is_full()
    assert fix_aff(swap_shift_f3()).is_empty
    assert fix_lin(swap_shift_f3()).basis == ((1, 1),)


def test_classify_examples():
    assert classify(flip_f3()) == ELLIPTIC
    assert classify(shift_f3()) == HYPERBOLIC
    assert classify(swap_shift_f3()) == PARABOLIC
    assert classify(AffineMap.identity(F3, 2)) == ELLIPTIC
    # (x, y) -> (x + 1, x + y) over F_2: hyperbolic but not a translation
    gg = AffineMap(Matrix(F2, [[1, 0], [1, 1]]), Vector(F2, [1, 0]))
    assert classify(gg) == HYPERBOLIC
    assert not gg.is_translation()


def test_lengths_examples():
    assert reflection_length_affine(flip_f3()) == 1
    assert reflection_length_affine(swap_shift_f3()) == 2
    assert reflection_length_affine(shift_f3()) == 2
    glide = AffineMap(Matrix(QQ, [[1, 0], [0, -1]]), Vector(QQ, [1, 0]))
    assert classify(glide) == PARABOLIC
    assert reflection_length_affine(glide) == 2
    gg = AffineMap(Matrix(F2, [[1, 0], [1, 1]]), Vector(F2, [1, 0]))
    assert mov(gg).dim == 1
    assert reflection_length_affine(gg) == 3


def test_degenerate_group_raises():
    gg = AffineMap.translation_by(Vector(F2, [1]))
    with pytest.raises(NoReflections):
        reflection_length_affine(gg)
    with pytest.raises(NoReflections):
        factor_minimal_affine(gg)
    assert reflection_length_affine(AffineMap.identity(F2, 1)) == 0
    assert factor_minimal_affine(AffineMap.identity(F2, 1)) == []


def test_make_affine_reflection_flip():
    H = line(F3, [0, 0], [1, 0])
    r = make_affine_reflection(H, Vector(F3, [0, 1]), Vector(F3, [0, 2]))
    assert r == flip_f3()


def test_make_affine_reflection_off_origin():
    H = line(F3, [0, 1], [1, 0])  # y = 1
    r = make_affine_reflection(H, Vector(F3, [0, 0]), Vector(F3, [0, 2]))
    # r(x, y) = (x, 2 - y): fixes y = 1, swaps y = 0 and y = 2
    assert r.apply(Vector(F3, [0, 0])) == Vector(F3, [0, 2])
    assert r.apply(Vector(F3, [1, 1])) == Vector(F3, [1, 1])
    assert is_affine_reflection(r)


def test_make_affine_reflection_errors():
    H = line(F3, [0, 0], [1, 0])
    with pytest.raises(PointOnHyperplane):
        make_affine_reflection(H, Vector(F3, [1, 0]), Vector(F3, [0, 1]))
    with pytest.raises(NotAReflection):
        make_affine_reflection(H, Vector(F3, [0, 1]), Vector(F3, [0, 1]))


@pytest.mark.parametrize("p", [2, 3])
def test_make_affine_reflection_uniqueness(p):
    from reflen.fields import GF

    field = GF(p)
    table = enumerate_group("GA", 2, p)
    reflections = [
        table.affine_map(i)
        for i in range(len(table))
        if is_affine_reflection(table.affine_map(i))
    ]
    points = [Vector(field, t) for t in iproduct(range(p), repeat=2)]
    hyperplanes = {fix_aff(r) for r in reflections}
    for H in hyperplanes:
        off = [a for a in points if not H.contains(a)]
        for a in off:
            for b in off:
                if a == b:
                    continue
                r = make_affine_reflection(H, a, b)
                matching = [
                    m for m in reflections if fix_aff(m) == H and m.apply(a) == b
                ]
                assert matching == [r]


def test_is_affine_reflection_examples():
    assert is_affine_reflection(flip_f3())
    assert not is_affine_reflection(shift_f3())
    assert not is_affine_reflection(AffineMap.identity(F3, 2))


def test_mov_probe_point_independent(rng):
    for field in (F3, F5, QQ):
        for _ in range(10):
            gg = random_affine(field, 3, rng)
            m = mov(gg)
            directions = image_basis(gg.linear.minus_identity())
            for _ in range(5):
                a = random_vector(field, 3, rng)
                probe = AffineSubspace(gg.apply(a).sub(a), directions)
                assert probe == m


def test_complementary_dimensions(rng):
    for field in (F2, F3, F5, QQ):
        for _ in range(15):
            gg = random_affine(field, 3, rng)
            assert mov(gg).dim + fix_lin(gg).dim == 3


def test_mov_subadditivity_and_lower_bound(rng):
    for _ in range(15):
        g1 = random_affine(F3, 3, rng)
        g2 = random_affine(F3, 3, rng)
        m12 = mov(g1.compose(g2))
        total = mov(g1)
        # affine sum: base points add, directions add
        from reflen.linalg import subspace_sum

        dirs = subspace_sum(
            subspace_sum(mov(g1).directions, mov(g2).directions),
            SubspaceBasis.zero(F3, 3),
        )
        summed = AffineSubspace(mov(g1).base.add(mov(g2).base), dirs)
        assert summed.contains(m12.base)
        for v in m12.directions.vectors():
            assert dirs.contains(v)
        assert reflection_length_affine(g1) >= mov(g1).dim


def check_affine_factorization(gg):
    factors = factor_minimal_affine(gg)
    assert compose_all(factors, gg.field, gg.dim) == gg
    assert len(factors) == reflection_length_affine(gg)
    for fmap in factors:
        assert is_affine_reflection(fmap)


def test_glide_factorization_matches_known_pair():
    glide = AffineMap(Matrix(QQ, [[1, 0], [0, -1]]), Vector(QQ, [1, 0]))
    r1 = AffineMap(Matrix(QQ, [[1, 1], [0, -1]]), Vector.zero(QQ, 2))
    r2 = AffineMap(Matrix(QQ, [[1, -1], [0, 1]]), Vector(QQ, [1, 0]))
    assert is_affine_reflection(r1)
    assert is_affine_reflection(r2)
    assert r1.compose(r2) == glide
    check_affine_factorization(glide)


def test_translation_factorization():
    check_affine_factorization(shift_f3())
    check_affine_factorization(AffineMap.translation_by(Vector(F2, [1, 0])))
    check_affine_factorization(AffineMap.translation_by(Vector(QQ, [2, -3])))


@pytest.mark.parametrize("n,p", [(2, 2), (1, 3)])
def test_factor_minimal_exhaustive(n, p):
    table = enumerate_group("GA", n, p)
    for i in range(len(table)):
        check_affine_factorization(table.affine_map(i))


def test_factor_minimal_random(rng):
    for field in (F3, F5, QQ):
        for _ in range(200):
            check_affine_factorization(random_affine(field, 2, rng))
