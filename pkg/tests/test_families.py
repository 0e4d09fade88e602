import random
from fractions import Fraction

import pytest

from simplexkite import (
    DegenerateSimplexError,
    PreKite,
    Realizability,
    SquaredDistanceMatrix,
    classify,
    find_apexes,
    is_realizable,
    matrix_from_beta,
    recover_circumscriptible,
    recover_isodynamic,
    recover_orthocentric,
    recover_tetra_isogonic,
)

FAMILIES = {
    "orthocentric": recover_orthocentric,
    "circumscriptible": recover_circumscriptible,
    "isodynamic": recover_isodynamic,
    "tetra_isogonic": recover_tetra_isogonic,
}

NOT_A_MEMBER = PreKite(3, 1, (1, 1, 2)).to_sdm()


class TestOrthocentric:
    def test_regular_all_two(self):
        vec = recover_orthocentric(SquaredDistanceMatrix.regular(3, 2))
        assert vec.beta == (1, 1, 1, 1)
        assert vec.residual == 0

    def test_counterexample(self):
        assert recover_orthocentric(NOT_A_MEMBER) is None

    def test_forward_round_trip(self):
        beta = (Fraction(1), Fraction(2), Fraction(3), Fraction(4))
        d = matrix_from_beta("orthocentric", beta)
        assert is_realizable(d).status is Realizability.NONDEGENERATE
        vec = recover_orthocentric(d)
        assert vec.beta == beta

    def test_negative_weight_allowed(self):
        # a right-angle corner gives one zero/negative weight; still a member
        beta = (Fraction(0), Fraction(1), Fraction(2), Fraction(3))
        d = matrix_from_beta("orthocentric", beta)
        vec = recover_orthocentric(d)
        assert vec is not None and vec.beta == beta


class TestCircumscriptible:
    def test_regular_unit(self):
        vec = recover_circumscriptible(SquaredDistanceMatrix.regular(3))
        assert vec.beta == pytest.approx((0.5, 0.5, 0.5, 0.5))

    def test_kite_example(self):
        # base length 2 (squared 4), apex length 3 (squared 9)
        vec = recover_circumscriptible(PreKite(3, 4, (9, 9, 9)).to_sdm())
        assert vec.beta == pytest.approx((2.0, 1.0, 1.0, 1.0))

    def test_counterexample(self):
        assert recover_circumscriptible(NOT_A_MEMBER) is None


class TestIsodynamic:
    def test_regular_unit(self):
        vec = recover_isodynamic(SquaredDistanceMatrix.regular(3))
        assert vec.beta == pytest.approx((1.0, 1.0, 1.0, 1.0))

    def test_kite_example(self):
        d = PreKite(3, 1, (2, 2, 2)).to_sdm()
        assert is_realizable(d).status is Realizability.NONDEGENERATE
        vec = recover_isodynamic(d)
        assert vec.beta == pytest.approx((2.0, 1.0, 1.0, 1.0))

    def test_counterexample(self):
        assert recover_isodynamic(NOT_A_MEMBER) is None


class TestTetraIsogonic:
    def test_regular_scaled(self):
        for c in (1, 2):
            d = SquaredDistanceMatrix.regular(3, 3 * c * c)
            vec = recover_tetra_isogonic(d)
            assert vec.beta == pytest.approx((c,) * 4)

    def test_kite_example(self):
        vec = recover_tetra_isogonic(PreKite(3, 3, (7, 7, 7)).to_sdm())
        assert vec.beta == pytest.approx((2.0, 1.0, 1.0, 1.0))

    def test_counterexample(self):
        assert recover_tetra_isogonic(NOT_A_MEMBER) is None


class TestRoundTrips:
    def sample_beta(self, rng, family, count):
        if family == "orthocentric":
            return tuple(Fraction(rng.randint(1, 12), 4) for _ in range(count))
        return tuple(Fraction(rng.randint(2, 9), 4) for _ in range(count))

    @pytest.mark.parametrize("family", sorted(FAMILIES))
    def test_recovery_matches_input(self, family):
        rng = random.Random(hash(family) % 1000)
        recover = FAMILIES[family]
        done = 0
        while done < 30:
            count = rng.randint(3, 6)
            beta = self.sample_beta(rng, family, count)
            d = matrix_from_beta(family, beta)
            if is_realizable(d).status is not Realizability.NONDEGENERATE:
                continue
            vec = recover(d)
            assert vec is not None
            if family == "orthocentric":
                assert vec.beta == beta
                assert vec.residual == 0
            else:
                for got, want in zip(vec.beta, beta):
                    assert float(got) == pytest.approx(float(want), rel=1e-9, abs=1e-9)
                assert vec.residual <= 1e-9
            done += 1

    @pytest.mark.parametrize("family", sorted(FAMILIES))
    def test_member_prekites_are_kites(self, family):
        # constant tails induce pre-kites; the family intersection theorem
        # then forces kite status
        rng = random.Random(len(family))
        done = 0
        while done < 20:
            count = rng.randint(4, 6)
            apex = Fraction(rng.randint(2, 9), 4)
            tail = Fraction(rng.randint(2, 9), 4)
            beta = (apex,) + (tail,) * (count - 1)
            d = matrix_from_beta(family, beta)
            if is_realizable(d).status is not Realizability.NONDEGENERATE:
                continue
            assert FAMILIES[family](d) is not None
            report = find_apexes(d)
            assert report.apexes
            assert report.is_kite
            done += 1

    def test_constant_beta_regular_and_in_all_families(self):
        profiles = {
            "orthocentric": Fraction(3, 2),
            "circumscriptible": Fraction(1, 2),
            "isodynamic": Fraction(2),
            "tetra_isogonic": Fraction(5, 4),
        }
        for family, b in profiles.items():
            d = matrix_from_beta(family, (b,) * 5)
            assert d.is_regular()
            for recover in FAMILIES.values():
                assert recover(d) is not None


class TestClassify:
    def test_tetra_isogonic_kite(self):
        report = classify(PreKite(3, 3, (7, 7, 7)).to_sdm())
        payload = report.to_json()
        assert payload["families"]["tetra_isogonic"]["member"]
        assert payload["kite"]
        assert payload["kite_consistent"]

    def test_two_apexed_no_family(self):
        report = classify(NOT_A_MEMBER)
        payload = report.to_json()
        assert payload["apexes"] == [0, 3]
        assert not any(entry["member"] for entry in payload["families"].values())
        assert payload["kite_consistent"]

    def test_regular_member_of_all(self):
        report = classify(SquaredDistanceMatrix.regular(3))
        payload = report.to_json()
        assert all(entry["member"] for entry in payload["families"].values())
        assert payload["kite"] and payload["regular"]

    def test_rejects_degenerate(self):
        flat = SquaredDistanceMatrix([[0, 1, 4], [1, 0, 1], [4, 1, 0]])
        with pytest.raises(DegenerateSimplexError):
            classify(flat)

    def test_matrix_from_beta_validation(self):
        with pytest.raises(ValueError):
            matrix_from_beta("isodynamic", (1, -1, 2))
        with pytest.raises(ValueError):
            matrix_from_beta("nonsense", (1, 2, 3))
