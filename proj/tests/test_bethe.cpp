#include <doctest.h>

#include <cmath>
#include <numbers>

#include "circleroots/bethe.hpp"
#include "circleroots/criteria.hpp"
#include "circleroots/error.hpp"
#include "circleroots/inversive.hpp"
#include "circleroots/salem.hpp"

using namespace circleroots;

TEST_CASE("bethe_polynomial") {
    SUBCASE("n = 4, a = 4, delta = 1.5") {
        // exp(2 pi i) carries a rounding-level imaginary part
        const Polynomial p = bethe_polynomial({4, 4, 1.5, std::nullopt});
        const Polynomial want{2.0, -3.0, 0.0, -3.0, 2.0};
        REQUIRE(p.degree() == 4);
        for (int k = 0; k <= 4; ++k)
            CHECK(std::abs(p[k] - want[k]) < 1e-14);
    }
    SUBCASE("n = 6, a = 2 is self-inversive with omega = exp(2 pi i / 3)") {
        const BetheSpec spec{6, 2, 0.7, std::nullopt};
        const auto r = detect(bethe_polynomial(spec));
        REQUIRE(r.is_self_inversive);
        CHECK(std::abs(*r.omega - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) < 1e-14);
    }
    SUBCASE("omega round trip for every admissible a") {
        for (int n = 3; n <= 12; ++n)
            for (int a = 1; a <= n; ++a) {
                if (2 * a == n)
                    continue;
                const BetheSpec spec{n, a, 1.3, std::nullopt};
                const auto r = detect(bethe_polynomial(spec));
                REQUIRE(r.is_self_inversive);
                CHECK(std::abs(*r.omega - spec.omega()) < 1e-12);
            }
    }
    SUBCASE("rejects") {
        CHECK_THROWS_AS(bethe_polynomial({4, 2, 1.0, std::nullopt}), InvalidArgument);
        CHECK_THROWS_AS(bethe_polynomial({2, 1, 1.0, std::nullopt}), InvalidArgument);
        CHECK_THROWS_AS(bethe_polynomial({4, 0, 1.0, std::nullopt}), InvalidArgument);
        CHECK_THROWS_AS(bethe_polynomial({4, 5, 1.0, std::nullopt}), InvalidArgument);
        CHECK_THROWS_AS(bethe_polynomial({4, 4, NAN, std::nullopt}), InvalidArgument);
        CHECK_THROWS_AS(bethe_polynomial({4, 4, 1.0, Coeff{-1.0}}), InvalidArgument);
        CHECK_THROWS_AS(bethe_polynomial({4, 4, 1.0, Coeff{2.0}}), InvalidArgument);
    }
}

TEST_CASE("classify_regime") {
    SUBCASE("n = 4, a = 4") {
        const auto lo = classify_regime({4, 4, 0.5, std::nullopt});
        CHECK(lo.regime == BetheRegime::AllOnCircleSimple);
        CHECK(lo.threshold_lo == doctest::Approx(1.0));
        CHECK(lo.threshold_hi == doctest::Approx(2.0));
        CHECK(lo.classification->counts == RootCounts{0, 4, 0});

        const auto mid = classify_regime({4, 4, 1.5, std::nullopt});
        CHECK(mid.regime == BetheRegime::Indeterminate);
        CHECK_FALSE(mid.off_pair);
        REQUIRE(mid.classification);

        const auto hi = classify_regime({4, 4, 3.0, std::nullopt});
        CHECK(hi.regime == BetheRegime::TwoOffCircle);
        REQUIRE(hi.off_pair);
        // numpy.roots(2, -6, 0, -6, 2)
        CHECK(std::abs(hi.off_pair->first - 3.254264) < 1e-6);
        CHECK(std::abs(hi.off_pair->second - 0.307289) < 1e-6);
        CHECK(hi.pair_product_error < 1e-10);
    }
    SUBCASE("regimes follow the Lakatos and l = 1 criteria") {
        for (int n : {3, 4, 5, 6, 8, 12}) {
            for (int a = 1; a <= n; ++a) {
                if (2 * a == n)
                    continue;
                for (int i = 0; i <= 40; ++i) {
                    const double delta = -4.0 + 0.2 * i + 0.013;  // off the thresholds
                    const BetheSpec spec{n, a, delta, std::nullopt};
                    const Polynomial p = bethe_polynomial(spec);
                    const auto report = classify_regime(spec);
                    CHECK((report.regime == BetheRegime::AllOnCircleSimple) == lakatos_criterion(p).fired());
                    CHECK((report.regime == BetheRegime::TwoOffCircle) == exact_count_criterion(p, 1).fired());
                    const auto& cls = *report.classification;
                    if (report.regime == BetheRegime::AllOnCircleSimple) {
                        CHECK(cls.counts.on == n);
                        CHECK(simplicity_check(p, cls));
                    } else if (report.regime == BetheRegime::TwoOffCircle) {
                        CHECK(cls.counts == RootCounts{1, n - 2, 1});
                        REQUIRE(report.off_pair);
                        CHECK(report.pair_product_error < 1e-8);
                        CHECK(std::abs(report.off_pair->first) > 1.0);
                    }
                }
            }
        }
    }
}

TEST_CASE("sweep") {
    const std::vector<double> grid{0.5, 1.0, 3.0};
    const auto rows = sweep(4, 4, grid);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].ok);
    CHECK(rows[0].regime == BetheRegime::AllOnCircleSimple);
    CHECK(rows[0].simple);
    // delta = 1: 2(z - 1)^2 (z^2 + z + 1), a double root at the threshold
    CHECK(rows[1].regime == BetheRegime::Indeterminate);
    CHECK_FALSE(rows[1].simple);
    CHECK(rows[1].min_root_gap == 0.0);
    CHECK(rows[2].regime == BetheRegime::TwoOffCircle);
    CHECK(rows[2].counts == RootCounts{1, 2, 1});

    Tolerances tol;
    tol.max_iterations = 1;
    const std::vector<double> one{0.9};
    const auto failed = sweep(12, 12, one, tol);
    REQUIRE(failed.size() == 1);
    CHECK_FALSE(failed[0].ok);
    CHECK_FALSE(failed[0].error.empty());
    CHECK(failed[0].regime == BetheRegime::AllOnCircleSimple);
}

TEST_CASE("half-integer delta with a = n gives Salem polynomials") {
    // numpy.roots on 2z^n - 2D z^(n-1) - 2D z + 2
    SUBCASE("n = 4") {
        const auto r15 = is_salem(bethe_polynomial({4, 4, 1.5, std::nullopt}));
        CHECK(r15.is_salem);
        CHECK(*r15.salem_number == doctest::Approx(1.793082).epsilon(1e-6));
        CHECK(r15.leading_coefficient == 2.0);

        const auto r35 = is_salem(bethe_polynomial({4, 4, 3.5, std::nullopt}));
        CHECK(r35.is_salem);
        CHECK(*r35.salem_number == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-10));
    }
    SUBCASE("other degrees") {
        for (int n : {3, 5, 6, 8, 12})
            for (double delta : {1.5, 2.5, 3.5}) {
                const auto r = is_salem(bethe_polynomial({n, n, delta, std::nullopt}));
                CHECK(r.is_salem);
                CHECK(*r.salem_number > 1.0);
            }
        CHECK(*is_salem(bethe_polynomial({3, 3, 1.5, std::nullopt})).salem_number == doctest::Approx(2.0));
    }
    SUBCASE("a != n has non-real coefficients") {
        const auto r = is_salem(bethe_polynomial({6, 1, 2.5, std::nullopt}));
        CHECK_FALSE(r.is_salem);
    }
}
