import random
from fractions import Fraction

import numpy as np
import pytest

from simplexkite import (
    DegenerateSimplexError,
    PreKite,
    SquaredDistanceMatrix,
    circumcenter_barycentrics,
    circumradius_sq,
    coincidence_report,
    embed,
    equiareal_prekite_solve,
    equiareal_scan,
    centroid,
    circumcenter,
    facet_sdm,
    incenter,
    is_circumcenter_interior,
    is_equiareal,
    is_equiradial,
    is_well_distributed,
    prekite_equiradial_residual,
    volume_sq,
)
from conftest import random_prekite, random_realizable_prekite


def sdm_triangle(x, y, z):
    return SquaredDistanceMatrix([[0, x, y], [x, 0, z], [y, z, 0]])


class TestPredicates:
    def test_regular_satisfies_all(self):
        d = SquaredDistanceMatrix.regular(4)
        assert is_well_distributed(d)
        assert is_equiradial(d)
        assert is_equiareal(d)

    def test_two_apexed_example_fails_all(self):
        d = PreKite(3, 1, (1, 1, 2)).to_sdm()
        assert not is_well_distributed(d)
        assert not is_equiradial(d)
        assert not is_equiareal(d)

    def test_equiradial_facet_radii_example(self):
        d = PreKite(3, 1, (1, 1, 2)).to_sdm()
        radii = [circumradius_sq(facet_sdm(d, j)) for j in range(4)]
        assert radii == [Fraction(1, 3), Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)]

    def test_kite_is_not_equiradial(self):
        assert not is_equiradial(PreKite(3, 1, (2, 2, 2)).to_sdm())

    def test_equiareal_prekite_instance(self):
        d = PreKite(4, 1, (1, 1, 1, 2)).to_sdm()
        assert is_equiareal(d)
        assert not is_well_distributed(d)
        assert not is_equiradial(d)

    def test_scaling_invariance(self):
        rng = random.Random(3)
        for _ in range(15):
            d = random_realizable_prekite(rng, rng.randint(3, 5)).to_sdm()
            lam = Fraction(rng.randint(1, 9), rng.randint(1, 4))
            scaled = d.scaled(lam)
            assert is_well_distributed(d) == is_well_distributed(scaled)
            assert is_equiradial(d) == is_equiradial(scaled)
            assert is_equiareal(d) == is_equiareal(scaled)

    def test_equiradial_degenerate_facet_reported(self):
        # one facet of this 3-simplex is a collinear triple
        rows = [
            [0, 1, 1, 4],
            [1, 0, 4, 1],
            [1, 4, 0, 1],
            [4, 1, 1, 0],
        ]
        d = SquaredDistanceMatrix(rows)
        assert cm_det_nonzero_facets_exist(d)
        with pytest.raises(DegenerateSimplexError):
            is_equiradial(d)


def cm_det_nonzero_facets_exist(d):
    from simplexkite import cm_det

    return any(cm_det(facet_sdm(d, j)) == 0 for j in range(d.n + 1))


class TestEquiradialResidual:
    def test_regular_vanishes(self):
        pk = PreKite(4, 1, (1, 1, 1, 1))
        for j in range(1, 5):
            assert prekite_equiradial_residual(pk, j) == 0

    def test_two_apexed_example(self):
        pk = PreKite(3, 1, (1, 1, 2))
        assert pk.sum1 == 5 and pk.sum2 == 7
        # facets 1 and 2 (radius**2 = 1/2) are not coradial with the base
        assert prekite_equiradial_residual(pk, 1) == -4
        assert prekite_equiradial_residual(pk, 2) == -4
        # facet 3 is the second regular base and shares the base radius 1/3
        assert prekite_equiradial_residual(pk, 3) == 0

    def test_residual_zero_iff_equiradial(self):
        rng = random.Random(7)
        for _ in range(40):
            pk = random_realizable_prekite(rng, rng.randint(3, 5))
            all_zero = all(
                prekite_equiradial_residual(pk, j) == 0 for j in range(1, pk.n + 1)
            )
            assert all_zero == is_equiradial(pk.to_sdm())

    def test_residual_matches_cross_multiplied_radii(self):
        from simplexkite import pk_facet_cm, pk_facet_inner_cm

        rng = random.Random(11)
        for _ in range(40):
            pk = random_prekite(rng, rng.randint(3, 6))
            for j in range(1, pk.n + 1):
                lhs = pk.n * pk_facet_inner_cm(pk, j)
                rhs = (pk.n - 1) * pk_facet_cm(pk, j) * (-1)  # scale factors below
                # direct cross-multiplied equality of the two facet radii
                c0, d0 = pk_facet_cm(pk, 0), pk_facet_inner_cm(pk, 0)
                cj, dj = pk_facet_cm(pk, j), pk_facet_inner_cm(pk, j)
                equal_radii = c0 * dj == cj * d0
                assert (prekite_equiradial_residual(pk, j) == 0) == equal_radii


class TestCircumcenterBarycentrics:
    def test_regular_uniform_weights(self):
        for n in (2, 3, 5):
            bary = circumcenter_barycentrics(SquaredDistanceMatrix.regular(n))
            assert all(w == Fraction(1, n + 1) for w in bary)
            assert sum(bary) == 1

    def test_obtuse_triangle_exterior(self):
        d = sdm_triangle(1, 1, Fraction(7, 2))
        assert not is_circumcenter_interior(d)

    def test_acute_triangle_interior(self):
        assert is_circumcenter_interior(sdm_triangle(2, 2, 1))

    def test_matches_embedded_circumcenter(self):
        rng = random.Random(13)
        for _ in range(10):
            pk = random_realizable_prekite(rng, 3)
            d = pk.to_sdm()
            bary = np.array([float(w) for w in circumcenter_barycentrics(d)])
            s = embed(d)
            q, _ = circumcenter(s)
            assert np.allclose(bary @ s.vertices, q, atol=1e-8)


class TestCoincidenceReport:
    def test_regular_all_true(self):
        rep = coincidence_report(SquaredDistanceMatrix.regular(3))
        assert rep.qg_coincide and rep.qi_coincide and rep.ig_coincide
        assert rep.circumcenter_interior
        assert rep.fermat_coincidences is None

    def test_equiareal_prekite(self):
        rep = coincidence_report(PreKite(4, 1, (1, 1, 1, 2)).to_sdm())
        assert rep.ig_coincide
        assert not rep.qg_coincide
        assert not rep.qi_coincide

    def test_kite_all_false(self):
        rep = coincidence_report(PreKite(3, 1, (2, 2, 2)).to_sdm())
        assert not (rep.qg_coincide or rep.qi_coincide or rep.ig_coincide)

    def test_float_cross_check(self):
        for d in (
            SquaredDistanceMatrix.regular(3),
            PreKite(4, 1, (1, 1, 1, 2)).to_sdm(),
            PreKite(3, 1, (2, 2, 2)).to_sdm(),
            PreKite(3, 1, (1, 1, 2)).to_sdm(),
        ):
            rep = coincidence_report(d, with_floats=True)
            s = embed(d)
            _, radius = circumcenter(s)
            tol = 1e-8 * (1.0 + radius)
            assert rep.qg_coincide == (rep.center_distances["qg"] <= tol)
            assert rep.qi_coincide == (rep.center_distances["qi"] <= tol)
            assert rep.ig_coincide == (rep.center_distances["ig"] <= tol)

    def test_json_shape(self):
        rep = coincidence_report(SquaredDistanceMatrix.regular(2), with_floats=True)
        payload = rep.to_json()
        assert payload["fermat_note"] == "float-based, experimental"
        assert set(payload["fermat_coincidences"]) == {"fg", "fq", "fi"}


class TestRegularityTheorems:
    def test_well_distributed_implies_regular(self):
        rng = random.Random(17)
        for _ in range(120):
            d = random_realizable_prekite(rng, rng.randint(2, 6)).to_sdm()
            if is_well_distributed(d):
                assert d.is_regular()

    def test_equiradial_implies_regular(self):
        rng = random.Random(19)
        for _ in range(120):
            d = random_realizable_prekite(rng, rng.randint(2, 6)).to_sdm()
            if is_equiradial(d):
                assert d.is_regular()


class TestEquiarealSolver:
    def test_dimension_six_candidate(self):
        cand = equiareal_prekite_solve(6, 5, 1)[0]
        assert (cand.x, cand.y) == (1, Fraction(3, 2))
        assert cand.realizable and cand.equiareal_verified and not cand.regular

    def test_dimension_four_candidate(self):
        cand = equiareal_prekite_solve(4, 3, 1)[0]
        assert (cand.x, cand.y) == (1, 2)
        assert cand.realizable and cand.equiareal_verified and not cand.regular
        gram_minors_positive(cand)

    def test_five_three_two_is_degenerate(self):
        cand = equiareal_prekite_solve(5, 3, 2)[0]
        assert (cand.x, cand.y) == (2, 4)
        assert cand.degenerate and not cand.realizable

    def test_equal_split_rejected(self):
        with pytest.raises(ValueError):
            equiareal_prekite_solve(6, 3, 3)

    def test_candidates_verified_by_oracle(self):
        for n in range(3, 9):
            for s in range(1, (n - 1) // 2 + 1):
                for cand in equiareal_prekite_solve(n, n - s, s):
                    if cand.realizable:
                        assert cand.equiareal_verified == is_equiareal(
                            cand.prekite().to_sdm()
                        )

    def test_candidates_satisfy_both_conditions_exactly(self):
        for n in range(3, 10):
            for s in range(1, (n - 1) // 2 + 1):
                t = n - s
                for cand in equiareal_prekite_solve(n, t, s):
                    u, x, y = cand.u, cand.x, cand.y
                    s1 = u + t * x + s * y
                    s2 = u * u + t * x * x + s * y * y
                    assert n * u * u - s1 * s1 + (n - 1) * s2 - n * x * x + 2 * s1 * x == 0
                    assert (t - s) * (y - x) == 2 * u

    def test_scan_shapes(self):
        result = equiareal_scan(6)
        assert result["any_nonregular_equiareal"] and result["claim_agrees"]
        result4 = equiareal_scan(4)
        assert result4["any_nonregular_equiareal"] and not result4["claim_agrees"]
        assert result4["notes"]
        result3 = equiareal_scan(3)
        assert not result3["any_nonregular_equiareal"] and result3["claim_agrees"]


def gram_minors_positive(cand):
    """Leading principal minors of the Gram matrix of the n=4 candidate."""
    from simplexkite import ExactMatrix, exact_determinant, gram_matrix

    g = gram_matrix(cand.prekite().to_sdm())
    minors = [
        exact_determinant(ExactMatrix([row[: k + 1] for row in g.rows[: k + 1]]))
        for k in range(g.order)
    ]
    assert minors == [1, Fraction(3, 4), Fraction(1, 2), Fraction(1, 4)]
