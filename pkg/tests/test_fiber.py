import random
from fractions import Fraction as F

import pytest

from fibercurve import fixtures
from fibercurve.config import validate, violations
from fibercurve.fiber import (
    OrderCapExceeded,
    ProjPoint,
    build_fiber,
    det_form,
    fiber_genus,
    gonality_lower_bound,
    jacobian_matrix,
    on_fiber,
    raw_coefficients,
    smooth_at,
    trivial_points,
)
from fibercurve.linalg import matrix_rank


def random_config(rng, r, s, n):
    while True:
        alphas = [
            F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n + 1)
        ]
        if not violations(r, s, alphas):
            return validate(r, s, alphas)


class TestProjPoint:
    def test_canonical_integer_clearing(self):
        assert ProjPoint([F(1, 2), F(1, 3)]) == ProjPoint([3, 2])

    def test_canonical_sign(self):
        assert ProjPoint([-2, 4]).coords == (F(1), F(-2))
        assert ProjPoint([0, -3, 6]).coords == (F(0), F(1), F(-2))

    def test_scaling_invariance(self):
        rng = random.Random(4)
        for _ in range(50):
            coords = [F(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(4)]
            if all(c == 0 for c in coords):
                continue
            lam = F(rng.choice([-3, -1, 2, 5]), rng.choice([1, 2, 7]))
            assert ProjPoint(coords) == ProjPoint([lam * c for c in coords])

    def test_rejects_zero_vector(self):
        with pytest.raises(ValueError):
            ProjPoint([0, 0, 0])

    def test_hashable(self):
        assert len({ProjPoint([1, 2]), ProjPoint([2, 4])}) == 1


class TestBuildFiber:
    def test_three_point_system(self):
        cfg = validate(2, 2, [F(1), F(2), F(3)])
        system = build_fiber(cfg)
        eq = system.equations[0]
        assert (eq.A, eq.B, eq.C) == (F(5), F(-4), F(1))
        assert eq.scale == 6
        assert eq.raw() == (F(30), F(-24), F(6))

    def test_normalization_c_positive_and_primitive(self):
        rng = random.Random(9)
        for _ in range(40):
            cfg = random_config(rng, rng.randint(1, 3), 2, rng.randint(2, 5))
            for eq in build_fiber(cfg).equations:
                assert eq.C > 0
                ints = [eq.A, eq.B, eq.C]
                assert all(v.denominator == 1 for v in ints)
                from math import gcd

                g = gcd(gcd(abs(ints[0].numerator), abs(ints[1].numerator)),
                        ints[2].numerator)
                assert g == 1

    def test_shared_bottom_cofactor(self):
        cfg = validate(2, 2, [F(1), F(2), F(3), F(5), F(7)])
        system = build_fiber(cfg)
        raw_cs = {eq.raw()[2] for eq in system.equations}
        assert len(raw_cs) == 1

    def test_permutation_covariance(self):
        # swapping alpha_i and alpha_j (i, j >= 2) swaps equations i and j
        cfg = validate(2, 2, [F(1), F(2), F(3), F(5), F(7)])
        alphas = list(cfg.alphas)
        alphas[3], alphas[4] = alphas[4], alphas[3]
        swapped = validate(2, 2, alphas)
        original = build_fiber(cfg).equations
        permuted = build_fiber(swapped).equations
        key = lambda eq: (eq.A, eq.B, eq.C)
        assert key(permuted[3 - 2]) == key(original[4 - 2])
        assert key(permuted[4 - 2]) == key(original[3 - 2])
        assert key(permuted[2 - 2]) == key(original[2 - 2])


class TestDetForm:
    def test_hand_value(self):
        cfg = validate(2, 2, [F(1), F(2), F(3)])
        assert det_form(cfg, 2, ProjPoint([1, 1, 0])) == 6

    def test_equals_trilinear_form_globally(self):
        rng = random.Random(31)
        for r in (1, 2, 3, 4):
            for s in (2, 3, 4):
                for _ in range(50):
                    n = rng.randint(2, 5)
                    cfg = random_config(rng, r, s, n)
                    coords = [rng.randint(-9, 9) for _ in range(n + 1)]
                    if all(c == 0 for c in coords):
                        coords[0] = 1
                    point = ProjPoint(coords)
                    for i in range(2, n + 1):
                        A, B, C = raw_coefficients(cfg, i)
                        trilinear = (
                            A * point[0] ** s
                            + B * point[1] ** s
                            + C * point[i] ** s
                        )
                        assert det_form(cfg, i, point) == trilinear

    def test_lower_row_power_degenerates_at_r_one(self):
        rng = random.Random(33)
        for _ in range(100):
            n = rng.randint(2, 4)
            cfg = random_config(rng, 1, 2, n)
            coords = [rng.randint(-9, 9) for _ in range(n + 1)]
            if all(c == 0 for c in coords):
                coords[-1] = 2
            point = ProjPoint(coords)
            for i in range(2, n + 1):
                assert det_form(cfg, i, point, row_power=cfg.r) == 0

    def test_vanishes_at_reference_point(self):
        fx = fixtures.load("watkins14")
        cfg = validate(2, 2, [p.x for p in fx.cwp.points])
        point = ProjPoint([p.y for p in fx.cwp.points])
        for i in range(2, cfg.n + 1):
            assert det_form(cfg, i, point) == 0

    def test_index_range_enforced(self):
        cfg = validate(2, 2, [F(1), F(2), F(3)])
        with pytest.raises(ValueError):
            det_form(cfg, 1, ProjPoint([1, 1, 1]))


class TestOnFiber:
    def test_membership(self):
        cfg = validate(2, 2, [F(1), F(2), F(3)])
        system = build_fiber(cfg)
        assert on_fiber(system, ProjPoint([0, 1, 2])).ok

    def test_perturbation_reports_residue(self):
        cfg = validate(2, 2, [F(1), F(2), F(3)])
        system = build_fiber(cfg)
        report = on_fiber(system, ProjPoint([0, 1, 3]))
        assert not report.ok
        assert report.residues[0][1] == F(5)  # -4 + 9

    def test_length_mismatch(self):
        cfg = validate(2, 2, [F(1), F(2), F(3)])
        system = build_fiber(cfg)
        with pytest.raises(ValueError):
            on_fiber(system, ProjPoint([1, 1]))


class TestGenusAndGonality:
    @pytest.mark.parametrize(
        "s,n,expected",
        [(2, 13, 20481), (2, 6, 49), (2, 2, 0), (2, 3, 1), (3, 2, 1)],
    )
    def test_genus_values(self, s, n, expected):
        assert fiber_genus(s, n) == expected

    def test_genus_regimes_exhaustive(self):
        low = {(2, 2): 0, (2, 3): 1, (3, 2): 1}
        for s in range(2, 11):
            for n in range(2, 11):
                g = fiber_genus(s, n)
                if (s, n) in low:
                    assert g == low[(s, n)]
                else:
                    assert g >= 2

    @pytest.mark.parametrize("s,n,expected", [(2, 13, 2048), (2, 2, 1), (3, 4, 18)])
    def test_gonality_values(self, s, n, expected):
        assert gonality_lower_bound(s, n) == expected

    def test_tower_ratio(self):
        for s in range(2, 7):
            for n in range(2, 10):
                assert (
                    gonality_lower_bound(s, n + 1)
                    == s * gonality_lower_bound(s, n)
                )


class TestSmoothAt:
    def test_small_case(self):
        cfg = validate(2, 2, [F(1), F(2), F(3)])
        system = build_fiber(cfg)
        point = ProjPoint([0, 1, 2])
        assert jacobian_matrix(system, point)[0] == [F(0), F(-8), F(4)]
        assert smooth_at(system, point)

    def test_requires_membership(self):
        cfg = validate(2, 2, [F(1), F(2), F(3)])
        system = build_fiber(cfg)
        with pytest.raises(ValueError, match="not on the fiber"):
            smooth_at(system, ProjPoint([1, 1, 1]))

    def test_unit_row_structure_off_fiber(self):
        # with Y_0 = Y_1 = 0 each Jacobian row is a scaled unit vector
        cfg = validate(2, 2, [F(1), F(2), F(3), F(5)])
        system = build_fiber(cfg)
        rows = jacobian_matrix(system, ProjPoint([0, 0, 1, 1]))
        assert rows[0][:2] == [0, 0] and rows[1][:2] == [0, 0]
        assert matrix_rank(rows) == 2

    def test_reference_rank(self):
        fx = fixtures.load("rogers7")
        cfg = validate(2, 2, [p.x for p in fx.cwp.points])
        system = build_fiber(cfg)
        point = ProjPoint([p.y for p in fx.cwp.points])
        assert smooth_at(system, point)
        assert matrix_rank(jacobian_matrix(system, point)) == 5


class TestTrivialPoints:
    def test_all_sign_tuples(self):
        cert = trivial_points(2, 2, 2)
        assert cert.order == 2
        assert cert.total_space == 64
        assert len(cert.verified) == 64
        assert not cert.sampled

    def test_mixed_orders(self):
        cert = trivial_points(3, 2, 2)
        assert cert.order == 6
        assert len(cert.verified) == 27 * 8

    def test_r_one_degenerate_x_row(self):
        cert = trivial_points(1, 3, 2)
        assert cert.order == 3
        assert len(cert.verified) == 27

    def test_order_cap_refusal(self):
        with pytest.raises(OrderCapExceeded):
            trivial_points(31, 2, 2)

    def test_tuple_cap_sampling_is_flagged(self):
        cert = trivial_points(2, 2, 4, tuple_cap=10)
        assert cert.sampled
        assert len(cert.verified) == 10
        assert cert.total_space == 2**5 * 2**5
