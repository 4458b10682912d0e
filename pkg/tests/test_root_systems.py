import random

import pytest

from commgrowth.errors import DomainError
from commgrowth.root_systems import root_system, supported_labels

# closed-form positive-root counts, independent of the closure code
CLASSICAL_N = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
}
EXCEPTIONAL_N = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


class TestBuild:
    def test_a1(self):
        rs = root_system("A1")
        assert rs.rank == 1
        assert rs.num_positive_roots == 1
        assert rs.degrees == (2,)
        assert rs.dimension == 3

    def test_g2(self):
        rs = root_system("G2")
        assert rs.num_positive_roots == 6
        assert rs.degrees == (2, 6)
        assert rs.dimension == 14

    def test_a2_roots(self):
        rs = root_system("A2")
        assert rs.num_positive_roots == 3
        assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}

    def test_c2_and_e8_dimensions(self):
        assert root_system("C2").dimension == 10
        assert root_system("E8").dimension == 248

    def test_lowercase_accepted(self):
        assert root_system("f4") == root_system("F4")

    @pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D3", "E5", "E9",
                                     "F3", "G3", "H4", "A", "7", "", "AA2"])
    def test_malformed_labels(self, bad):
        with pytest.raises(DomainError):
            root_system(bad)


class TestStructuralInvariants:
    @pytest.mark.parametrize("label", supported_labels())
    def test_degree_identity_and_dimension(self, label):
        rs = root_system(label)
        n = rs.num_positive_roots
        assert n == sum(d - 1 for d in rs.degrees)
        assert rs.dimension == 2 * n + rs.rank

    @pytest.mark.parametrize("label", supported_labels())
    def test_closure_count_against_closed_form(self, label):
        rs = root_system(label)
        family = label[0]
        if label in EXCEPTIONAL_N:
            assert rs.num_positive_roots == EXCEPTIONAL_N[label]
        else:
            assert rs.num_positive_roots == CLASSICAL_N[family](rs.rank)

    @pytest.mark.parametrize("label", supported_labels())
    def test_simple_roots_are_unit_vectors(self, label):
        rs = root_system(label)
        units = {tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)}
        assert units <= set(rs.positive_roots)

    @pytest.mark.parametrize("label", supported_labels())
    def test_cartan_shape(self, label):
        rs = root_system(label)
        for i, row in enumerate(rs.cartan):
            assert row[i] == 2
            assert all(v <= 0 for j, v in enumerate(row) if j != i)

    @pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "F4", "G2", "E6"])
    def test_root_string_closure_property(self, label):
        # alpha + alpha_i is listed exactly when the string count admits it
        rs = root_system(label)
        roots = set(rs.positive_roots)
        for alpha in roots:
            for i in range(rs.rank):
                pair = sum(a * rs.cartan[j][i] for j, a in enumerate(alpha))
                p = 0
                down = list(alpha)
                while True:
                    down[i] -= 1
                    if tuple(down) not in roots:
                        break
                    p += 1
                up = list(alpha)
                up[i] += 1
                assert (tuple(up) in roots) == (p - pair >= 1)

    @pytest.mark.parametrize("label", supported_labels())
    def test_roots_sorted_by_height(self, label):
        rs = root_system(label)
        heights = [sum(r) for r in rs.positive_roots]
        assert heights == sorted(heights)


class TestPairing:
    def test_zero_coweight(self):
        rs = root_system("C2")
        assert all(rs.pairing((0, 0), r) == 0 for r in rs.positive_roots)

    def test_a1_duality(self):
        rs = root_system("A1")
        for a in range(-5, 6):
            assert rs.pairing((a,), (1,)) == a

    def test_a2_sum_root(self):
        rs = root_system("A2")
        assert rs.pairing((1, 1), (1, 1)) == 2

    def test_bilinearity(self):
        rs = root_system("B3")
        rng = random.Random(6)
        for _ in range(100):
            x = tuple(rng.randint(-4, 4) for _ in range(3))
            y = tuple(rng.randint(-4, 4) for _ in range(3))
            c = rng.randint(-3, 3)
            root = rng.choice(rs.positive_roots)
            lhs = rs.pairing(tuple(a + c * b for a, b in zip(x, y)), root)
            assert lhs == rs.pairing(x, root) + c * rs.pairing(y, root)

    @pytest.mark.parametrize("label", supported_labels())
    def test_highest_root_duality(self, label):
        # pairing the highest root's own coefficients against each simple
        # root must read those coefficients back
        rs = root_system(label)
        theta = rs.highest_root
        for i in range(rs.rank):
            simple = tuple(int(i == j) for j in range(rs.rank))
            assert rs.pairing(theta, simple) == theta[i]

    def test_length_mismatch(self):
        rs = root_system("A2")
        with pytest.raises(DomainError):
            rs.pairing((1,), (1, 0))
        with pytest.raises(DomainError):
            rs.pairing((1, 0), (1,))


def test_b2_c2_isomorphic_data():
    b2, c2 = root_system("B2"), root_system("C2")
    assert b2.num_positive_roots == c2.num_positive_roots
    assert b2.degrees == c2.degrees
    assert b2.dimension == c2.dimension
