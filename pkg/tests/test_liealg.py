import random
from fractions import Fraction

import pytest

from sheet_atlas.liealg import (
    ClassicalForm,
    RationalMatrix,
    bracket,
    build_model,
    centralizer_dim,
    char_poly,
    determinant,
    fraction_free_rank,
    in_algebra,
    so_gram,
    sp_gram,
)
from sheet_atlas.scalars import RatPoly
from sheet_atlas.sheets import type_a, type_b, type_c, type_d
from sheet_atlas.spectral import GradedPolynomial
from sheet_atlas.triples import sp4_e, sp4_f, sp4_h, sp4_model, sp4_semisimple, sp4_slice

from oracles import charpoly_by_expansion, rank_by_rational_elimination


def test_bracket_sp4_triple():
    e, h, f = sp4_e(), sp4_h(), sp4_f()
    assert bracket(e, f) == h
    assert bracket(h, e) == e.scale(2)
    assert bracket(h, f) == f.scale(-2)


def test_bracket_antisymmetry_and_mismatch():
    x = RationalMatrix([[1, 2], [3, 4]])
    assert bracket(x, x).is_zero()
    with pytest.raises(ValueError):
        bracket(x, RationalMatrix.identity(3))


def test_in_algebra_sp4():
    model = sp4_model()
    assert in_algebra(sp4_e(), model)
    assert not in_algebra(RationalMatrix.identity(4), model)
    t = RatPoly.variable()
    assert in_algebra(sp4_slice(t), model)  # symbolic in t


def test_centralizer_dims_table1():
    model = sp4_model()
    cases = [
        (RationalMatrix.diagonal([1, 2, -2, -1]), 2),
        (sp4_semisimple(1), 4),
        (RationalMatrix.diagonal([1, 1, -1, -1]), 4),
        (RationalMatrix.unit(4, 0, 3), 6),  # minimal nilpotent
        (RationalMatrix.zero(4), 10),
    ]
    for x, expected in cases:
        assert centralizer_dim(x, model) == expected


def test_centralizer_requires_membership():
    with pytest.raises(ValueError):
        centralizer_dim(RationalMatrix.identity(4), sp4_model())


def test_char_poly_examples():
    t = RatPoly.variable()
    x = RationalMatrix.diagonal([t, 0, 0, -t])
    assert char_poly(x) == GradedPolynomial([RatPoly([]), -(t * t), RatPoly([]), RatPoly([])])
    assert char_poly(RationalMatrix.zero(4)) == GradedPolynomial.monomial(4)
    assert char_poly(sp4_slice(t)) == GradedPolynomial([RatPoly([]), -(t * t), RatPoly([]), RatPoly([])])


def test_char_poly_against_cofactor_expansion():
    rng = random.Random(5)
    for n in (2, 3, 4, 5):
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        got = char_poly(RationalMatrix(rows)).dense()
        expected = charpoly_by_expansion(rows)
        expected = [Fraction(0)] * (n + 1 - len(expected)) + expected
        assert [Fraction(c) for c in got] == expected


def test_model_dimensions():
    assert build_model(type_a(3)).dimension == 9
    assert build_model(type_b(2), so_gram(5)).dimension == 10
    assert build_model(type_c(2), sp_gram(4)).dimension == 10
    assert build_model(type_c(3)).dimension == 21
    assert build_model(type_d(3)).dimension == 15
    assert build_model(type_d(4)).dimension == 28


def test_model_default_forms():
    model = build_model(type_b(3))
    assert model.form is not None and model.form.kind == "symmetric"
    model = build_model(type_c(2))
    assert model.form.kind == "antisymmetric"
    # every basis element satisfies the membership condition
    for b in model.basis:
        assert in_algebra(b, model)


def test_jacobi_identity_random_triples():
    rng = random.Random(11)
    for model in (build_model(type_c(2)), build_model(type_b(2)), build_model(type_d(3)), build_model(type_c(4))):
        basis = model.basis
        for _ in range(10):
            a, b, c = (basis[rng.randrange(len(basis))] for _ in range(3))
            total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
            assert total.is_zero()


def _nilpotent_basis_elements(model):
    out = []
    for b in model.basis:
        power = b
        for _ in range(model.matrix_size):
            power = power @ b
        if power.is_zero():
            out.append(b)
    return out


def _exp_nilpotent(x):
    n = x.dim
    out = RationalMatrix.identity(n)
    term = RationalMatrix.identity(n)
    k = 1
    while True:
        term = (term @ x).scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
        k += 1


def test_centralizer_dim_ad_invariance():
    rng = random.Random(23)
    model = build_model(type_c(2))
    gram = model.form.gram
    nil = _nilpotent_basis_elements(model)
    x = sp4_semisimple(1)
    base = centralizer_dim(x, model)
    for _ in range(20):
        g = RationalMatrix.identity(4)
        for _ in range(2):
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            g = g @ _exp_nilpotent(nil[rng.randrange(len(nil))].scale(c))
        # g preserves the form, so conjugation stays inside the algebra
        assert g.transpose() @ gram @ g == gram
        ginv = _inverse_unipotent_product(g)
        conj = g @ x @ ginv
        assert in_algebra(conj, model)
        assert centralizer_dim(conj, model) == base


def _inverse_unipotent_product(g):
    # exact inverse: solve g * y = I by Gauss-Jordan on the augmented matrix
    n = g.dim
    aug = [[Fraction(g.rows[i][j]) for j in range(n)] + [Fraction(int(i == k)) for k in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return RationalMatrix([row[n:] for row in aug])


def test_fraction_free_rank_matches_rational_elimination():
    rng = random.Random(3)
    for _ in range(30):
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(6)] for _ in range(5)]
        assert fraction_free_rank(rows) == rank_by_rational_elimination(rows)


def test_classical_form_validation():
    with pytest.raises(ValueError):
        ClassicalForm("symmetric", RationalMatrix([[0, 1], [-1, 0]]))
    with pytest.raises(ValueError):
        ClassicalForm("antisymmetric", RationalMatrix([[0, 0], [0, 0]]))
    assert determinant(so_gram(4).gram) in (Fraction(1), Fraction(-1))


def test_matrix_json_roundtrip():
    t = RatPoly.variable()
    x = sp4_slice(t)
    assert RationalMatrix.from_json(x.to_json()) == x
    y = RationalMatrix.diagonal([Fraction(1, 2), -2])
    assert RationalMatrix.from_json(y.to_json()) == y
