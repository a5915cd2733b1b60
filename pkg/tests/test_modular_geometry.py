import math
import random
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from solvsplit import (
    IntMatrix2,
    QuadraticIrrational,
    alpha_arc,
    axis,
    axis_order2_points,
    hits_order2_cone,
    in_fundamental_domain,
    is_reversible,
    render_figure,
)
from solvsplit.errors import (
    NotAnosov,
    NotUpperHalfPlane,
    TraceTooSmall,
)

from _helpers import random_anosov


def qi(p, q, r, d):
    return QuadraticIrrational(p, q, r, d)


class TestQuadraticIrrational:
    def test_canonicalization(self):
        z = qi(2, -2, -4, 5)
        assert (z.p, z.q, z.r) == (-1, 1, 2)
        with pytest.raises(ValueError):
            qi(1, 1, 0, 5)
        with pytest.raises(ValueError):
            qi(1, 1, 1, 4)  # square disc

    def test_sign_and_comparison(self):
        golden = qi(1, 1, 2, 5)  # (1 + sqrt 5)/2
        assert golden.sign() == 1
        assert golden > 1 and golden < 2
        assert golden.conjugate() < 0 < golden
        assert qi(-3, 1, 1, 5) < 0  # sqrt5 - 3 < 0

    def test_equality_and_rationals(self):
        assert qi(1, 0, 2, 5) == Fraction(1, 2)
        assert qi(1, 0, 2, 5) == qi(2, 0, 4, 3)  # rational values cross discs
        assert qi(0, 1, 1, 5) != qi(0, 1, 1, 5) + 1

    def test_arithmetic(self):
        golden = qi(1, 1, 2, 5)
        assert golden * golden == golden + 1  # x^2 = x + 1
        assert golden + golden.conjugate() == 1
        assert golden * golden.conjugate() == -1
        assert (golden - Fraction(1, 2)) * 2 == qi(0, 1, 1, 5)
        assert golden / 2 == qi(1, 1, 4, 5)

    def test_mixed_disc_rejected(self):
        with pytest.raises(ValueError):
            qi(0, 1, 1, 5) + qi(0, 1, 1, 3)

    def test_float_approximation(self):
        assert abs(float(qi(1, 1, 2, 5)) - (1 + math.sqrt(5)) / 2) < 1e-12


class TestAxis:
    def test_standard_form_m3(self):
        geo = axis(IntMatrix2(3, -1, 1, 0))
        lo, hi = geo.endpoints
        assert hi == qi(3, 1, 2, 5) and lo == qi(3, -1, 2, 5)
        assert geo.center == Fraction(3, 2)
        assert geo.radius_sq == Fraction(5, 4)
        assert abs(geo.translation_length - 2 * math.acosh(1.5)) < 1e-15
        assert abs(geo.translation_length - 1.9248473002384139) < 1e-12

    def test_standard_form_m4(self):
        geo = axis(IntMatrix2(4, -1, 1, 0))
        lo, hi = geo.endpoints
        # endpoints 2 -+ sqrt(3), carried with disc trace^2 - 4 = 12
        assert lo == qi(4, -1, 2, 12) and hi == qi(4, 1, 2, 12)
        assert float(lo) == float(2 - math.sqrt(3))
        assert geo.center == 2 and geo.radius_sq == 3

    def test_endpoint_product_is_one_for_standard_forms(self):
        for m in range(3, 30):
            lo, hi = axis(IntMatrix2(m, -1, 1, 0)).endpoints
            assert lo * hi == 1

    def test_endpoints_solve_fixed_point_equation(self):
        rng = random.Random(61)
        for _ in range(100):
            A = random_anosov(rng)
            for z in axis(A).endpoints:
                assert A.c * z * z + (A.d - A.a) * z - A.b == 0

    def test_translation_length_close_to_log_eigenvalue(self):
        for t in (3, 4, 17, 1001, 10**6):
            geo = axis(IntMatrix2(t, -1, 1, 0))
            lam = (t + math.sqrt(t * t - 4)) / 2
            assert abs(geo.translation_length - 2 * math.log(lam)) <= 1e-12

    def test_rejects_non_anosov(self):
        with pytest.raises(NotAnosov):
            axis(IntMatrix2(1, 1, 0, 1))


class TestFundamentalDomain:
    def test_examples(self):
        assert in_fundamental_domain((0, 1)) == "boundary"  # i
        assert in_fundamental_domain((1, 1)) == "outside"  # 1 + i
        assert in_fundamental_domain((0, 2)) == "interior"  # 2i

    def test_corner_point(self):
        corner = (Fraction(1, 2), qi(0, 1, 2, 3))  # exp(pi i / 3)
        assert in_fundamental_domain(corner) == "boundary"

    def test_rejects_lower_half_plane(self):
        with pytest.raises(NotUpperHalfPlane):
            in_fundamental_domain((0, -1))
        with pytest.raises(NotUpperHalfPlane):
            in_fundamental_domain((0, 0))

    def test_exact_edge_cases(self):
        assert in_fundamental_domain((Fraction(1, 2), 5)) == "boundary"
        assert in_fundamental_domain((Fraction(501, 1000), 5)) == "outside"
        assert in_fundamental_domain((Fraction(499, 1000), 5)) == "interior"


class TestAlphaArc:
    def test_m4_corner_coincidence(self):
        arc = alpha_arc(4)
        assert arc.endpoint_c0 == (Fraction(1, 2), qi(0, 1, 4, 12))
        assert arc.corner_coincidence
        assert arc.c0_endpoint_position == "corner"

    def test_m5_interior(self):
        arc = alpha_arc(5)
        assert arc.endpoint_c0 == (Fraction(2, 5), qi(0, 1, 5, 21))
        assert not arc.corner_coincidence
        assert arc.c0_endpoint_position == "interior"

    def test_interior_for_m_at_least_5(self):
        for m in (5, 6, 7, 19):
            assert alpha_arc(m).c0_endpoint_position == "interior"
            assert alpha_arc(-m).c0_endpoint_position == "interior"

    def test_m3_outside(self):
        assert alpha_arc(3).c0_endpoint_position == "outside"
        assert alpha_arc(-3).c0_endpoint_position == "outside"

    def test_orthogonality_certificates_exact(self):
        for m in list(range(3, 51)) + list(range(-50, -2)):
            arc = alpha_arc(m)
            for cert in arc.certificates:
                assert cert.holds
                assert cert.lhs == Fraction(m * m, 4)
                assert cert.rhs == 1 + Fraction(m * m - 4, 4)

    def test_rejects_small_m(self):
        with pytest.raises(TraceTooSmall):
            alpha_arc(2)


class TestOrder2ConePoint:
    def test_integer_solutions(self):
        assert axis_order2_points(3) == (1, 2)
        assert axis_order2_points(-3) == (-2, -1)
        assert axis_order2_points(4) == ()

    def test_solvable_iff_trace_three_up_to_1000(self):
        # the |m| <= 10^4 sweep runs in the acceptance suite
        for m in range(3, 1001):
            assert bool(axis_order2_points(m)) == (m == 3)
            assert bool(axis_order2_points(-m)) == (m == 3)

    def test_hits_examples(self):
        assert hits_order2_cone(IntMatrix2(3, -1, 1, 0))
        assert not hits_order2_cone(IntMatrix2(4, -1, 1, 0))
        assert hits_order2_cone(IntMatrix2(2, 1, 1, 1))

    def test_matches_reversibility_on_random_corpus(self):
        rng = random.Random(62)
        for _ in range(80):
            L = random_anosov(rng, max_trace=12)
            assert hits_order2_cone(L) == is_reversible(L).reversible


class TestRenderFigure:
    @pytest.mark.parametrize("m", [3, 4, 7, -3])
    def test_well_formed_svg(self, m):
        svg = render_figure(m)
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")

    def test_deterministic_output(self):
        assert render_figure(4) == render_figure(4)
        assert render_figure(3) == render_figure(3)

    def test_alpha_endpoints_in_path_data(self):
        svg = render_figure(4)
        arc = alpha_arc(4)
        x_px = (float(arc.endpoint_c0[0]) - (-1.0)) * 100.0
        assert f"{x_px:.6f}" in svg

    def test_cone_points_marked_for_m3(self):
        svg = render_figure(3)
        assert ">a</text>" in svg and ">b</text>" in svg
        assert ">a</text>" not in render_figure(4)

    def test_palette_override_changes_output(self):
        assert render_figure(4, {"alpha": "#000000"}) != render_figure(4)

    def test_rejects_small_m(self):
        with pytest.raises(TraceTooSmall):
            render_figure(1)
