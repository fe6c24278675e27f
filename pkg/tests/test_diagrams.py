import pytest
from hypothesis import given, strategies as st

from brauerc.diagrams import (
    AlgebraElement,
    Diagram,
    Monomial,
    algebra_multiply,
    double_factorial_odd,
    enumerate_diagrams,
    evaluate_word,
    generator_E,
    generator_R,
    height,
    is_symmetric,
    min_crossing_words,
    multiply,
    op,
    sigma,
)
from brauerc.laurent import DELTA, LaurentPoly
from brauerc.relations import relation_suite_A

from oracles import compose_pairs, crossing_count, double_factorial

LONG_WORD = "R2,R5,E1,R3,R6,E2,E4,E3,E5,E7,R2,E4,E6,R1,E3,E5,R2,E4"


def mono(word, n):
    return evaluate_word(word, n)


def test_generator_R_pairs():
    assert generator_R(2, 1).pairs() == [(1, 4), (2, 3)]
    assert generator_R(4, 2).pairs() == [(1, 5), (2, 7), (3, 6), (4, 8)]


def test_generator_E_pairs():
    assert generator_E(2, 1).pairs() == [(1, 2), (3, 4)]


@pytest.mark.parametrize("gen", [generator_R, generator_E])
@pytest.mark.parametrize("i", [0, 4])
def test_generator_index_range(gen, i):
    with pytest.raises(ValueError):
        gen(4, i)


def test_small_products():
    assert multiply(mono("R1", 2), mono("R1", 2)) == Monomial.identity(2)
    assert multiply(mono("E1", 2), mono("E1", 2)) == Monomial(1, generator_E(2, 1))
    assert mono("E1,E2,E1", 3) == mono("E1", 3)
    assert mono("R2,R1,E2", 3).diagram == mono("E1,E2", 3).diagram


def test_multiply_rejects_mismatched_strands():
    with pytest.raises(ValueError):
        multiply(mono("E1", 2), mono("E1", 3))


def test_empty_word_and_disjoint_generators():
    assert evaluate_word([], 3) == Monomial.identity(3)
    d = mono("E1,E3", 4).diagram
    assert d.top_arcs() == [(1, 2), (3, 4)] and d.bottom_arcs() == [(1, 2), (3, 4)]


def test_invalid_tokens():
    for bad in ("X1", "R9", "E0"):
        with pytest.raises(ValueError):
            evaluate_word(bad, 4)


def test_delta_tokens():
    assert evaluate_word("d,d,D", 2) == Monomial(1, Diagram.identity(2))


def test_long_word_heights():
    a = mono(LONG_WORD, 8)
    assert height(a) == 7
    assert a.diagram.top_arcs() == [(1, 3), (2, 6), (5, 8)]
    assert a.diagram.bottom_arcs() == [(1, 8), (2, 6), (4, 5)]
    # a single crossing inserted in the middle raises the height by one
    b = mono(LONG_WORD.replace("E7,R2", "E7,R1,R2"), 8)
    assert height(b) == 8


def test_sigma_examples():
    assert sigma(mono("E1", 4)) == mono("E3", 4)
    assert sigma(mono("R2", 4)) == mono("R2", 4)
    assert is_symmetric(generator_E(4, 2))
    assert not is_symmetric(generator_R(4, 1))


def test_op_examples():
    for i in (1, 2, 3):
        assert op(mono(f"E{i}", 4)) == mono(f"E{i}", 4)
        assert op(mono(f"R{i}", 4)) == mono(f"R{i}", 4)


def test_height_of_generators():
    assert height(Diagram.identity(5)) == 0
    assert height(generator_R(5, 2)) == 1
    assert height(generator_E(5, 2)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_height_matches_word_oracle(n):
    dist = min_crossing_words(n)
    diagrams = list(enumerate_diagrams(n))
    assert len(dist) == len(diagrams)
    for d in diagrams:
        assert dist[d] == height(d)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_height_matches_drawing_count(n):
    for d in enumerate_diagrams(n):
        assert crossing_count(n, d.pairs()) == height(d)


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_counts(n):
    diagrams = list(enumerate_diagrams(n))
    assert len(diagrams) == double_factorial(2 * n - 1) == double_factorial_odd(n)
    assert len(set(diagrams)) == len(diagrams)
    keys = [d.pairs() for d in diagrams]
    assert keys == sorted(keys)


def test_enumeration_examples_and_bound():
    assert len(list(enumerate_diagrams(1))) == 1
    assert len(list(enumerate_diagrams(4))) == 105
    assert len(list(enumerate_diagrams(6))) == 10395
    with pytest.raises(ValueError):
        list(enumerate_diagrams(9))


def test_symmetric_count_n4():
    assert sum(is_symmetric(d) for d in enumerate_diagrams(4)) == 25


@pytest.mark.parametrize("n", [3, 4])
def test_composition_matches_union_find(n):
    diagrams = list(enumerate_diagrams(n))
    for a in diagrams[::7]:
        for b in diagrams[::5]:
            pairs, loops = compose_pairs(n, a.pairs(), b.pairs())
            m = multiply(Monomial(0, a), Monomial(0, b))
            assert m.diagram.pairs() == pairs and m.delta_exp == loops


@pytest.mark.parametrize("n", range(2, 9))
def test_type_A_relations(n):
    report = relation_suite_A(n)
    assert report.ok, [c.instance() for c in report.failures]


def test_misprinted_relation_is_false():
    # the version with a repeated R_j collapses to E_i, which differs from E_i E_j
    assert mono("E1,R2,R2", 3) != mono("E1,E2", 3)
    assert mono("E1,R2,R1", 3) == mono("E1,E2", 3)


def test_diagram_validation_and_json():
    with pytest.raises(ValueError):
        Diagram(2, [1, 0, 2, 2])
    with pytest.raises(ValueError):
        Diagram.from_pairs(2, [(1, 2), (2, 3)])
    d = mono("R1,E2", 3).diagram
    assert Diagram.from_json(d.to_json()) == d
    m = mono("E1,E1,R2", 3)
    assert Monomial.from_json(m.to_json()) == m
    assert m.to_json()["delta_exp"] == 1


def test_algebra_examples():
    e1 = AlgebraElement.from_monomial(mono("E1", 2))
    one = AlgebraElement.from_monomial(Monomial.identity(2))
    x = e1 - one.scale(DELTA)
    assert algebra_multiply(x, one) == x
    assert e1 * e1 == e1.scale(DELTA)
    assert AlgebraElement.from_monomial(Monomial(2, generator_E(2, 1))) == e1.scale(LaurentPoly({2: 1}))
    with pytest.raises(ValueError):
        algebra_multiply(e1, AlgebraElement.from_monomial(Monomial.identity(3)))


# properties ---------------------------------------------------------------------

def diagrams_on(n):
    return st.permutations(range(2 * n)).map(
        lambda perm: Diagram.from_pairs(n, [(perm[k] + 1, perm[k + 1] + 1) for k in range(0, 2 * n, 2)])
    )


strands = st.integers(1, 6)


@st.composite
def monomial_tuple(draw, size):
    n = draw(strands)
    return [Monomial(draw(st.integers(-3, 3)), draw(diagrams_on(n))) for _ in range(size)]


@given(monomial_tuple(3))
def test_associativity(ms):
    a, b, c = ms
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@given(monomial_tuple(2))
def test_sigma_is_automorphism_and_op_anti(ms):
    a, b = ms
    assert sigma(multiply(a, b)) == multiply(sigma(a), sigma(b))
    assert op(multiply(a, b)) == multiply(op(b), op(a))
    assert sigma(sigma(a)) == a and op(op(a)) == a


@given(monomial_tuple(1))
def test_height_invariant_under_symmetries(ms):
    (a,) = ms
    assert height(op(a)) == height(a) == height(sigma(a))


@given(monomial_tuple(3))
def test_distributivity(ms):
    a, b, c = (AlgebraElement.from_monomial(m) for m in ms)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
