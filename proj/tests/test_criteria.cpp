#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "circleroots/criteria.hpp"
#include "circleroots/error.hpp"
#include "circleroots/oracle.hpp"
#include "support/corpus.hpp"

using namespace circleroots;
using namespace std::complex_literals;

namespace {

const Polynomial h{1.0 + 1i, -2.0, 0.0, -2i, 1.0 + 1i};
const Polynomial p10{1.0, 10.0, 1.0, 10.0, 1.0};

Polynomial z_pow_minus_one(int n) {
    std::vector<Coeff> c(static_cast<std::size_t>(n + 1), 0.0);
    c.front() = -1.0;
    c.back() = 1.0;
    return Polynomial(c);
}

std::vector<double> on_circle_angles(const Polynomial& p) {
    std::vector<double> out;
    for (const auto& r : find_roots(p).roots)
        if (r.band == Band::OnCircle)
            out.push_back(std::arg(r.value));
    return out;
}

}  // namespace

TEST_CASE("exact_count_criterion") {
    SUBCASE("z^4 + 10z^3 + z^2 + 10z + 1, l = 1") {
        const auto pred = exact_count_criterion(p10, 1);
        CHECK(pred.kind == PredictionKind::ExactOnCircle);
        CHECK(pred.count == 2);
        CHECK(pred.simple);
        CHECK(pred.rhs == doctest::Approx(3.0));
        CHECK(pred.margin == doctest::Approx(7.0));
        // oracle: 2 simple roots on the circle
        const auto cls = find_roots(p10);
        CHECK(cls.counts.on == 2);
        CHECK(simplicity_check(p10, cls));
    }
    SUBCASE("h, l = 1 does not fire") {
        const auto pred = exact_count_criterion(h, 1);
        CHECK(pred.kind == PredictionKind::NoPrediction);
        CHECK(pred.rhs == doctest::Approx(2.0 * std::sqrt(2.0)));
        CHECK(pred.margin == doctest::Approx(2.0 - 2.0 * std::sqrt(2.0)));
    }
    SUBCASE("z^n - 1, l = 0") {
        for (int n = 1; n <= 9; ++n) {
            const auto pred = exact_count_criterion(z_pow_minus_one(n), 0);
            CHECK(pred.kind == PredictionKind::ExactOnCircle);
            CHECK(pred.count == n);
            CHECK(pred.rhs == 0.0);
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(exact_count_criterion(Polynomial{3.0, 2.0, 1.0}, 0), NotSelfInversive);
        CHECK_THROWS_AS(exact_count_criterion(p10, 2), InvalidArgument);
        CHECK_THROWS_AS(exact_count_criterion(p10, -1), InvalidArgument);
    }
}

TEST_CASE("no_roots_criterion") {
    SUBCASE("z^2 + 5z + 1") {
        const auto pred = no_roots_criterion(Polynomial{1.0, 5.0, 1.0});
        CHECK(pred.kind == PredictionKind::NoneOnCircle);
        CHECK(pred.count == 0);
        CHECK(pred.margin == doctest::Approx(3.0));
        // quadratic formula: (-5 +- sqrt 21)/2
        const auto cls = find_roots(Polynomial{1.0, 5.0, 1.0});
        CHECK(cls.counts.on == 0);
        const double r1 = (-5.0 + std::sqrt(21.0)) / 2.0, r2 = (-5.0 - std::sqrt(21.0)) / 2.0;
        for (const auto& r : cls.roots)
            CHECK(std::min(std::abs(r.value - r1), std::abs(r.value - r2)) < 1e-12);
    }
    SUBCASE("z^2 + z + 1 gives no prediction") {
        const auto pred = no_roots_criterion(Polynomial{1.0, 1.0, 1.0});
        CHECK(pred.kind == PredictionKind::NoPrediction);
        CHECK(pred.margin == doctest::Approx(-1.0));
    }
    SUBCASE("equality is not enough") {
        // |a_2| = 2 = sum of the rest
        CHECK_FALSE(no_roots_criterion(Polynomial{1.0, 0.0, 2.0, 0.0, 1.0}).fired());
    }
    CHECK_THROWS_AS(no_roots_criterion(Polynomial{1.0, 2.0, 2.0, 1.0}), InvalidArgument);
}

TEST_CASE("at_least_criterion") {
    SUBCASE("h, l = 1") {
        const auto pred = at_least_criterion(h, 1);
        CHECK(pred.kind == PredictionKind::AtLeastOnCircle);
        CHECK(pred.count == 2);
        CHECK_FALSE(pred.simple);
        CHECK(pred.margin == doctest::Approx(2.0 - std::sqrt(2.0)));
        CHECK(find_roots(h).counts.on == 4);
    }
    SUBCASE("p10, l = 1") {
        const auto pred = at_least_criterion(p10, 1);
        CHECK(pred.kind == PredictionKind::AtLeastOnCircle);
        CHECK(pred.margin == doctest::Approx(8.5));
    }
    SUBCASE("vanishing paired coefficient") {
        // z^4 + z^2 + 1: a_3 = 0
        CHECK_FALSE(at_least_criterion(Polynomial{1.0, 0.0, 1.0, 0.0, 1.0}, 1).fired());
    }
}

TEST_CASE("lakatos_criterion") {
    SUBCASE("3z^2 + z + 3") {
        const Polynomial p{3.0, 1.0, 3.0};
        const auto pred = lakatos_criterion(p);
        CHECK(pred.kind == PredictionKind::AllOnCircle);
        CHECK(pred.count == 2);
        // roots (-1 +- i sqrt 35)/6, both of modulus 1
        const Coeff r{-1.0 / 6.0, std::sqrt(35.0) / 6.0};
        const auto cls = find_roots(p);
        CHECK(cls.counts.on == 2);
        for (const auto& root : cls.roots)
            CHECK(std::min(std::abs(root.value - r), std::abs(root.value - std::conj(r))) < 1e-12);
    }
    CHECK(lakatos_criterion(z_pow_minus_one(5)).kind == PredictionKind::AllOnCircle);
    CHECK_FALSE(lakatos_criterion(Polynomial{1.0, 5.0, 1.0}).fired());
}

TEST_CASE("salem_criterion") {
    SUBCASE("Bethe n=4, a=4, delta=1.5 does not satisfy it") {
        const auto pred = salem_criterion(Polynomial{2.0, -3.0, 0.0, -3.0, 2.0});
        CHECK_FALSE(pred.fired());
        CHECK(pred.rhs == doctest::Approx(4.0));
        CHECK_FALSE(pred.salem_candidate);
    }
    SUBCASE("p10 is a candidate") {
        const auto pred = salem_criterion(p10);
        CHECK(pred.fired());
        CHECK(pred.salem_candidate);
        const auto cls = find_roots(p10);
        CHECK(cls.counts.inside == 1);
        CHECK(cls.counts.outside == 1);
    }
    SUBCASE("non-integer coefficients are never candidates") {
        const Polynomial p{1.0, 10.5, 1.0, 10.5, 1.0};
        CHECK(salem_criterion(p).fired());
        CHECK_FALSE(salem_criterion(p).salem_candidate);
    }
    CHECK_THROWS_AS(salem_criterion(Polynomial{1.0, 5.0, 1.0}), InvalidArgument);
}

TEST_CASE("best_prediction") {
    const auto bh = best_prediction(h);
    CHECK(bh.kind == PredictionKind::AtLeastOnCircle);
    CHECK(bh.l == 1);
    CHECK(bh.count == 2);

    const auto b10 = best_prediction(p10);
    CHECK(b10.kind == PredictionKind::ExactOnCircle);
    CHECK(b10.count == 2);

    CHECK(best_prediction(Polynomial{1.0, 5.0, 1.0}).kind == PredictionKind::NoneOnCircle);
    CHECK(best_prediction(z_pow_minus_one(6)).kind == PredictionKind::AllOnCircle);
    CHECK_THROWS_AS(best_prediction(Polynomial{3.0, 2.0, 1.0}), NotSelfInversive);

    // nothing fires for z^4 + 2z^3 + 3z^2 + 2z + 1 = (z^2 + z + 1)^2
    CHECK(best_prediction(Polynomial{1.0, 2.0, 3.0, 2.0, 1.0}).kind == PredictionKind::NoPrediction);
}

TEST_CASE("criteria properties on random instances") {
    const auto corpus = testing::theorem_corpus(300, 77, 3, 24);
    std::mt19937_64 rng(78);
    std::uniform_real_distribution<double> logmag(-3.0, 3.0);
    for (const auto& e : corpus) {
        const auto rows = all_criteria(e.p);
        const int n = e.p.degree();
        for (int l = 0; 2 * l < n; ++l) {
            // exact => at-least
            if (exact_count_criterion(e.p, l).fired())
                CHECK(at_least_criterion(e.p, l).fired());
        }
        // scaling by a real constant keeps every verdict
        const double c = (rng() % 2 ? 1.0 : -1.0) * std::pow(10.0, logmag(rng));
        const auto scaled = all_criteria(e.p.scaled(c));
        REQUIRE(scaled.size() == rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(scaled[i].kind == rows[i].kind);
            CHECK(scaled[i].count == rows[i].count);
            CHECK(scaled[i].l == rows[i].l);
        }
    }
}

TEST_CASE("trigonometric form") {
    SUBCASE("r(t) is real and the paired term is a cosine") {
        const auto corpus = testing::theorem_corpus(40, 5, 3, 20);
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> tdist(-M_PI, M_PI);
        for (const auto& e : corpus) {
            const auto inv = detect(e.p);
            const Coeff w = *inv.omega;
            const int n = e.p.degree();
            for (int s = 0; s < 5; ++s) {
                const double t = tdist(rng);
                const Coeff r = trig_form(e.p, w, t);
                CHECK(std::abs(r.imag()) <= 1e-12 * e.p.abs_sum());

                const int l = s % ((n + 1) / 2);
                const Coeff z = std::polar(1.0, t);
                const Coeff paired = std::polar(1.0, -0.5 * (std::arg(w) + n * t)) *
                                     (e.p[l] * std::pow(z, l) + e.p[n - l] * std::pow(z, n - l));
                const double expected = 2.0 * std::abs(e.p[n - l]) *
                                        std::cos((0.5 * n - l) * t + std::arg(e.p[n - l]) - 0.5 * std::arg(w));
                CHECK(std::abs(paired - expected) <= 1e-12 * e.p.abs_sum());
            }
        }
    }
}

TEST_CASE("phase_decomposition nodes") {
    const auto dec = phase_decomposition(h, 1);
    CHECK(dec.sigma == doctest::Approx(M_PI / 2));
    REQUIRE(dec.t_nodes.size() == 3);
    for (std::size_t j = 0; j + 1 < dec.t_nodes.size(); ++j)
        CHECK(dec.t_nodes[j + 1] - dec.t_nodes[j] == doctest::Approx(M_PI));
    CHECK(dec.t_nodes.back() - dec.t_nodes.front() == doctest::Approx(2.0 * M_PI));
    // t_0 = (sigma - 2 phi_3)/2 with phi_3 = arg(-2i) = -pi/2
    CHECK(dec.t_nodes.front() == doctest::Approx((M_PI / 2 + M_PI) / 2));
}

TEST_CASE("trig_localize") {
    SUBCASE("h, l = 1") {
        const auto loc = trig_localize(h, 1);
        CHECK(loc.alternating);
        REQUIRE(loc.intervals.size() == 2);
        const auto angles = on_circle_angles(h);
        REQUIRE(angles.size() == 4);
        for (const auto& iv : loc.intervals) {
            int inside = 0;
            for (double a : angles)
                inside += angle_in_interval(a, iv);
            CHECK(inside >= 1);
        }
    }
    SUBCASE("z^n - 1, l = 0: one root of unity per interval") {
        for (int n = 2; n <= 10; ++n) {
            const auto loc = trig_localize(z_pow_minus_one(n), 0);
            REQUIRE(loc.intervals.size() == static_cast<std::size_t>(n));
            // sigma = arg(-1) = +-pi depending on the sign of zero, so t_0 = +-pi/n
            CHECK(std::abs(loc.intervals[0].t_lo) == doctest::Approx(M_PI / n));
            for (const auto& iv : loc.intervals) {
                int inside = 0;
                for (int k = 0; k < n; ++k)
                    inside += angle_in_interval(2.0 * M_PI * k / n, iv);
                CHECK(inside == 1);
            }
        }
    }
    SUBCASE("p10, l = 1: exactly one root per interval") {
        const auto loc = trig_localize(p10, 1);
        REQUIRE(loc.intervals.size() == 2);
        const auto angles = on_circle_angles(p10);
        for (const auto& iv : loc.intervals) {
            int inside = 0;
            for (double a : angles)
                inside += angle_in_interval(a, iv);
            CHECK(inside == 1);
        }
        for (const auto& iv : loc.intervals)
            CHECK(iv.sign_lo == -iv.sign_hi);
    }
    SUBCASE("requires the at-least criterion") {
        CHECK_THROWS_AS(trig_localize(Polynomial{1.0, 0.0, 1.0, 0.0, 1.0}, 1), InvalidArgument);
        CHECK_THROWS_AS(trig_localize(exact_count_criterion(p10, 1).fired() ? Polynomial{3.0, 2.0, 1.0} : p10, 0),
                        NotSelfInversive);
    }
}

TEST_CASE("angle_in_interval wraps modulo 2 pi") {
    const LocalizationInterval iv{5.0, 7.0, 1, -1};
    CHECK(angle_in_interval(6.0, iv));
    CHECK(angle_in_interval(6.0 - 2.0 * M_PI, iv));
    CHECK(angle_in_interval(0.5, iv));  // 0.5 + 2 pi = 6.78
    CHECK_FALSE(angle_in_interval(1.0, iv));
}
