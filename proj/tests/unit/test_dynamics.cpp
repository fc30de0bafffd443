#include "doctest.h"

#include "iterfix/dynamics.hpp"
#include "iterfix/poly.hpp"
#include "iterfix/quadratic.hpp"
#include "iterfix/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

using namespace iterfix;

namespace {

std::vector<Complex> multiplier_multiset(const FixedPointReport& rep) {
    std::vector<Complex> out;
    for (const auto& pt : rep.points) {
        for (int k = 0; k < pt.multiplicity; ++k) out.push_back(pt.multiplier);
    }
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (Complex want : b) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            double dist = std::abs(a[i] - want);
            if (dist < best) {
                best = dist;
                bi = i;
            }
        }
        worst = std::max(worst, best);
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(bi));
    }
    return worst;
}

} // namespace

TEST_SUITE("dynamics") {

TEST_CASE("squaring map at n=2") {
    Polynomial p = Polynomial::monomial(2);
    FixedPointReport rep = fixed_points(p, 2);
    CHECK(rep.d == 2);
    CHECK(rep.n == 2);
    CHECK(rep.total_count_with_multiplicity == 4);
    REQUIRE(rep.points.size() == 4);

    // z^4 = z: the origin, the fixed point 1, and the primitive cube
    // roots of unity forming a 2-cycle.
    std::vector<Complex> mults = multiplier_multiset(rep);
    CHECK(std::abs(mults[0]) < 1e-9);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(mults[static_cast<std::size_t>(k)] - Complex{4.0, 0.0}) < 1e-9);

    int period_one = 0, period_two = 0;
    for (const auto& pt : rep.points) {
        CHECK(2 % pt.exact_period == 0);
        if (pt.exact_period == 1) ++period_one;
        if (pt.exact_period == 2) ++period_two;
    }
    CHECK(period_one == 2);
    CHECK(period_two == 2);

    // the two period-2 points share a cycle id, the fixed points do not
    std::vector<int> cycle_of_period_two;
    for (const auto& pt : rep.points) {
        if (pt.exact_period == 2) cycle_of_period_two.push_back(pt.cycle_id);
    }
    REQUIRE(cycle_of_period_two.size() == 2);
    CHECK(cycle_of_period_two[0] == cycle_of_period_two[1]);

    CHECK(max_multiplier(p, 2) == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("quadratic multipliers match the closed form at n=1") {
    Rng rng = seeded_rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        Complex a = uniform_annulus(rng, 0.5, 2.0);
        Complex b = uniform_disk(rng, 2.0);
        Complex g = uniform_disk(rng, 2.0);
        Polynomial p({g, b, a});
        Complex c = quadratic_normal_form(p);
        auto [m1, m2] = quadratic_fixed_multipliers(c);
        FixedPointReport rep = fixed_points(p, 1);
        double dist = multiset_distance(multiplier_multiset(rep), {m1, m2});
        CHECK(dist < 1e-8 * (1.0 + std::abs(m1) + std::abs(m2)));
    }
}

TEST_CASE("quadratic multipliers match the closed form at n=2") {
    Rng rng = seeded_rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        Complex a = uniform_annulus(rng, 0.5, 2.0);
        Complex b = uniform_disk(rng, 2.0);
        Complex g = uniform_disk(rng, 2.0);
        Polynomial p({g, b, a});
        Complex c = quadratic_normal_form(p);
        std::array<Complex, 4> want = quadratic_n2_spectrum(c);
        FixedPointReport rep = fixed_points(p, 2);
        double scale = 1.0;
        for (Complex m : want) scale += std::abs(m);
        double dist = multiset_distance(multiplier_multiset(rep),
                                        {want[0], want[1], want[2], want[3]});
        CHECK(dist < 1e-8 * scale);
    }
}

TEST_CASE("orbit of each point closes up at its exact period") {
    Polynomial p = Polynomial::parse("-1,0,1"); // z^2 - 1
    for (int n : {1, 2, 3}) {
        FixedPointReport rep = fixed_points(p, n);
        for (const auto& pt : rep.points) {
            CHECK(n % pt.exact_period == 0);
            Complex w = pt.location;
            for (int k = 0; k < pt.exact_period; ++k) w = p(w);
            CHECK(std::abs(w - pt.location) < 1e-6 * (1.0 + std::abs(pt.location)));
        }
    }
}

TEST_CASE("basilica two-cycle") {
    // z^2 - 1 swaps 0 and -1; the cycle multiplier is 0.
    Polynomial p = Polynomial::parse("-1,0,1");
    FixedPointReport rep = fixed_points(p, 2);
    CHECK(rep.total_count_with_multiplicity == 4);
    bool found_zero = false, found_minus_one = false;
    for (const auto& pt : rep.points) {
        if (std::abs(pt.location) < 1e-9) {
            found_zero = true;
            CHECK(pt.exact_period == 2);
            CHECK(std::abs(pt.multiplier) < 1e-9);
        }
        if (std::abs(pt.location - Complex{-1.0, 0.0}) < 1e-9) {
            found_minus_one = true;
            CHECK(pt.exact_period == 2);
        }
    }
    CHECK(found_zero);
    CHECK(found_minus_one);
    // the fixed points carry multiplier (1 +- sqrt(5))^2 = 6 +- 2 sqrt(5)
    CHECK(max_multiplier(p, 2) == doctest::Approx(6.0 + 2.0 * std::sqrt(5.0)).epsilon(1e-9));
}

TEST_CASE("multiplier is the chain-rule product along the orbit") {
    Polynomial p = Polynomial::parse("-1,0,1");
    CHECK(std::abs(multiplier(p, 2, Complex{0.0, 0.0})) == 0.0);
    Complex phi{(1.0 + std::sqrt(5.0)) / 2.0, 0.0};
    CHECK(std::abs(multiplier(p, 2, phi) - Complex{6.0 + 2.0 * std::sqrt(5.0), 0.0}) < 1e-12);

    // against the expanded iterate's derivative at modest degree
    Rng rng = seeded_rng(107);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial q({uniform_disk(rng, 1.0), uniform_disk(rng, 1.0), uniform_annulus(rng, 0.5, 1.5)});
        Complex z = uniform_disk(rng, 1.0);
        Polynomial q3 = q.iterate(3);
        Complex expanded = q3.derivative()(z);
        Complex chained = multiplier(q, 3, z);
        CHECK(std::abs(chained - expanded) < 1e-9 * (1.0 + std::abs(expanded)));
    }

    CHECK_THROWS_AS(multiplier(p, 0, Complex{0.0, 0.0}), Error);
}

TEST_CASE("monomial multipliers") {
    for (int d : {2, 3, 5}) {
        for (int n : {1, 2, 3}) {
            double dn = std::pow(static_cast<double>(d), n);
            if (dn > 200.0) continue;
            double m = max_multiplier(Polynomial::monomial(d), n);
            CHECK(m == doctest::Approx(dn).epsilon(1e-9));
        }
    }
}

TEST_CASE("multiplier multiset is invariant under affine conjugation") {
    Rng rng = seeded_rng(109);
    Polynomial p = Polynomial::parse("0.2-0.1i,0,0.5i,1"); // cubic
    FixedPointReport base = fixed_points(p, 2);
    std::vector<Complex> base_mults = multiplier_multiset(base);
    for (int trial = 0; trial < 5; ++trial) {
        AffineMap map{uniform_annulus(rng, 0.5, 2.0), uniform_disk(rng, 1.0)};
        Polynomial q = affine_conjugate(p, map);
        std::vector<Complex> conj_mults = multiplier_multiset(fixed_points(q, 2));
        CHECK(multiset_distance(conj_mults, base_mults) < 1e-6);
    }
}

TEST_CASE("parabolic double point of z + z^2") {
    Polynomial p = Polynomial::parse("0,1,1");
    FixedPointReport rep = fixed_points(p, 1);
    CHECK(rep.total_count_with_multiplicity == 2);
    REQUIRE(rep.points.size() == 1);
    CHECK(rep.points[0].multiplicity == 2);
    CHECK(std::abs(rep.points[0].location) < 1e-4);
    CHECK(std::abs(rep.points[0].multiplier - Complex{1.0, 0.0}) < 1e-4);
    CHECK(classify(rep.points[0]) == StabilityClass::indifferent);
}

TEST_CASE("parabolic quadratic at the cusp") {
    // z^2 + 1/4 has its double fixed point at 1/2; the second iterate
    // keeps it at multiplicity 2 and picks up the cycle {-1/2 +- i}
    // with multiplier 5.
    Polynomial p = Polynomial::parse("0.25,0,1");

    FixedPointReport rep1 = fixed_points(p, 1);
    REQUIRE(rep1.points.size() == 1);
    CHECK(rep1.points[0].multiplicity == 2);
    CHECK(std::abs(rep1.points[0].location - Complex{0.5, 0.0}) < 1e-4);
    CHECK(std::abs(rep1.points[0].multiplier - Complex{1.0, 0.0}) < 1e-4);

    FixedPointReport rep2 = fixed_points(p, 2);
    CHECK(rep2.total_count_with_multiplicity == 4);
    CHECK(max_multiplier(p, 2) == doctest::Approx(5.0).epsilon(1e-8));
    bool cusp_seen = false;
    for (const auto& pt : rep2.points) {
        if (std::abs(pt.location - Complex{0.5, 0.0}) < 1e-4) {
            cusp_seen = true;
            CHECK(pt.multiplicity == 2);
            CHECK(pt.exact_period == 1);
        }
    }
    CHECK(cusp_seen);
}

TEST_CASE("stability classification") {
    CHECK(classify(Complex{0.0, 0.0}) == StabilityClass::attracting);
    CHECK(classify(Complex{0.5, 0.3}) == StabilityClass::attracting);
    CHECK(classify(Complex{1.0, 0.0}) == StabilityClass::indifferent);
    CHECK(classify(std::polar(1.0, 2.2)) == StabilityClass::indifferent);
    CHECK(classify(Complex{-1.5, 0.0}) == StabilityClass::repelling);
    // dead zone: within tol of the circle counts as indifferent
    CHECK(classify(Complex{1.0 - 1e-12, 0.0}) == StabilityClass::indifferent);
    CHECK(classify(Complex{1.0 - 1e-6, 0.0}) == StabilityClass::attracting);
    CHECK(classify(Complex{1.0 + 1e-6, 0.0}) == StabilityClass::repelling);
    CHECK(classify(Complex{1.0 + 1e-6, 0.0}, 1e-3) == StabilityClass::indifferent);

    CHECK(std::string(to_string(StabilityClass::attracting)) == "attracting");
    CHECK(std::string(to_string(StabilityClass::indifferent)) == "indifferent");
    CHECK(std::string(to_string(StabilityClass::repelling)) == "repelling");
}

TEST_CASE("counts agree with the degree of the iterate") {
    Rng rng = seeded_rng(113);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Complex> c(4);
        for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] = uniform_disk(rng, 1.0);
        c[3] = uniform_annulus(rng, 0.5, 1.5);
        Polynomial p(std::move(c));
        FixedPointReport rep = fixed_points(p, 2);
        CHECK(rep.total_count_with_multiplicity == 9);
        int total = 0;
        for (const auto& pt : rep.points) total += pt.multiplicity;
        CHECK(total == 9);
    }
}

TEST_CASE("input validation") {
    Polynomial linear = Polynomial::parse("1,2");
    CHECK_THROWS_AS(fixed_points(linear, 1), DegreeTooLow);
    Polynomial p = Polynomial::monomial(2);
    CHECK_THROWS_AS(fixed_points(p, 0), Error);
    CHECK_THROWS_AS(fixed_points(p, 13), DegreeOverflow); // 2^13 > 4096
    DynamicsConfig tight;
    tight.max_degree = 256;
    CHECK_THROWS_AS(fixed_points(p, 9, RootFindConfig{}, tight), DegreeOverflow);
}

} // TEST_SUITE
