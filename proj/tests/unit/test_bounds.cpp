#include "doctest.h"

#include "iterfix/bounds.hpp"
#include "iterfix/poly.hpp"
#include "iterfix/rng.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

using namespace iterfix;

TEST_SUITE("bounds") {

TEST_CASE("threshold table") {
    CHECK(bound_threshold(BoundFlavor::theorem3, 2, 2) == 4.0);
    CHECK(bound_threshold(BoundFlavor::theorem3, 7, 2) == 4.0);
    CHECK(bound_threshold(BoundFlavor::conjecture_b, 5, 3) == 8.0);
    CHECK(bound_threshold(BoundFlavor::conjecture_b, 2, 10) == 1024.0);
    CHECK(bound_threshold(BoundFlavor::conjecture_c, 3, 2) == 9.0);
    CHECK(bound_threshold(BoundFlavor::conjecture_c, 5, 3) == 125.0);
}

TEST_CASE("flavor names round-trip") {
    for (BoundFlavor f :
         {BoundFlavor::theorem3, BoundFlavor::conjecture_b, BoundFlavor::conjecture_c}) {
        CHECK(bound_flavor_from_string(to_string(f)) == f);
    }
    CHECK_THROWS_AS(bound_flavor_from_string("conjecture_d"), Error);
}

TEST_CASE("monomials meet the degree bound exactly") {
    for (int d : {2, 3, 4}) {
        for (int n : {2, 3}) {
            double dn = std::pow(static_cast<double>(d), n);
            if (dn > 256.0) continue;
            BoundReport rep = check_conjecture(Polynomial::monomial(d), n, BoundFlavor::conjecture_c);
            CHECK(rep.threshold == dn);
            CHECK(rep.observed_max == doctest::Approx(dn).epsilon(1e-9));
            CHECK(rep.passed);
        }
    }
}

TEST_CASE("squaring map saturates the n=2 bound") {
    BoundReport rep = check_theorem3(Polynomial::monomial(2));
    CHECK(rep.n == 2);
    CHECK(rep.threshold == 4.0);
    CHECK(rep.observed_max == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(std::abs(rep.margin) < 1e-8);
    CHECK(rep.passed);
    CHECK(std::abs(rep.witness.multiplier - Complex{4.0, 0.0}) < 1e-8);
}

TEST_CASE("basilica clears the n=2 bound with room") {
    BoundReport rep = check_theorem3(Polynomial::parse("-1,0,1"));
    double expected = 6.0 + 2.0 * std::sqrt(5.0);
    CHECK(rep.observed_max == doctest::Approx(expected).epsilon(1e-9));
    CHECK(rep.margin == doctest::Approx(expected - 4.0).epsilon(1e-8));
    CHECK(rep.passed);
}

TEST_CASE("theorem3 flavor pins n to 2") {
    BoundReport rep = check_conjecture(Polynomial::monomial(2), 3, BoundFlavor::theorem3);
    CHECK(rep.n == 2);
    CHECK(rep.threshold == 4.0);
    CHECK_THROWS_AS(check_conjecture(Polynomial::monomial(2), 1, BoundFlavor::conjecture_c), Error);
}

TEST_CASE("sampling the monic centered family is deterministic") {
    Polynomial a = sample_monic_centered(4, 77, 2.0);
    Polynomial b = sample_monic_centered(4, 77, 2.0);
    CHECK(a == b);
    CHECK(a.degree() == 4);
    CHECK(a.leading() == Complex{1.0, 0.0});
    CHECK(a.coeff(3) == Complex{0.0, 0.0});
    for (int k = 0; k <= 2; ++k) CHECK(std::abs(a.coeff(k)) <= 2.0);
    Polynomial c = sample_monic_centered(4, 78, 2.0);
    CHECK_FALSE(a == c);
}

TEST_CASE("scan over quadratics finds no violations") {
    ScanSummary sum = scan_family(2, 2, BoundFlavor::theorem3, 40, 5);
    CHECK(sum.sample_count == 40);
    CHECK(sum.violations.empty());
    CHECK(sum.skipped == 0);
    CHECK(sum.min_margin >= -kViolationTol);
    CHECK(sum.min_observed_max >= 4.0 - 1e-6);
    CHECK(sum.has_argmin);
    CHECK(sum.argmin.degree() == 2);
    CHECK_FALSE(sum.family.empty());
}

TEST_CASE("scan results are independent of the thread budget") {
    auto run = [](const char* budget) {
        setenv("ITERFIX_THREADS", budget, 1);
        ScanSummary sum = scan_family(3, 2, BoundFlavor::conjecture_b, 24, 99);
        unsetenv("ITERFIX_THREADS");
        return sum;
    };
    ScanSummary one = run("1");
    ScanSummary four = run("4");
    CHECK(one.min_margin == four.min_margin);
    CHECK(one.min_observed_max == four.min_observed_max);
    CHECK(one.argmin == four.argmin);
    CHECK(one.skipped == four.skipped);
}

TEST_CASE("reverify confirms the closed-form spectrum for quadratics") {
    ReverifyResult rv = reverify_candidate(Polynomial::parse("-1,0,1"), 2, BoundFlavor::theorem3);
    CHECK(rv.oracle_checked);
    CHECK(rv.oracle_agrees);
    CHECK_FALSE(rv.confirmed_violation);
    double expected = 6.0 + 2.0 * std::sqrt(5.0);
    CHECK(rv.oracle_value == doctest::Approx(expected).epsilon(1e-9));
    CHECK(rv.report.observed_max == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("reverify of a cubic skips the quadratic oracle") {
    ReverifyResult rv =
        reverify_candidate(Polynomial::parse("0.1,0.2,0,1"), 2, BoundFlavor::conjecture_c);
    CHECK_FALSE(rv.oracle_checked);
    CHECK(rv.oracle_agrees);
    CHECK_FALSE(rv.confirmed_violation);
}

TEST_CASE("strictness probe separates monomials from the rest") {
    std::vector<StrictnessEntry> mono = strictness_probe(Polynomial::monomial(2), 3);
    REQUIRE(mono.size() == 2); // n = 2, 3
    for (const auto& e : mono) {
        CHECK(e.observed_max == doctest::Approx(e.threshold).epsilon(1e-9));
        CHECK_FALSE(e.strict);
    }

    std::vector<StrictnessEntry> bas = strictness_probe(Polynomial::parse("-1,0,1"), 2);
    REQUIRE(bas.size() == 1);
    CHECK(bas[0].n == 2);
    CHECK(bas[0].threshold == 4.0);
    CHECK(bas[0].strict);

    // conjugates of a monomial keep equality
    AffineMap map{Complex{2.0, 0.0}, Complex{-1.0, 0.5}};
    Polynomial conj = affine_conjugate(Polynomial::monomial(2), map);
    std::vector<StrictnessEntry> cj = strictness_probe(conj, 2);
    REQUIRE(cj.size() == 1);
    CHECK(cj[0].observed_max == doctest::Approx(4.0).epsilon(1e-8));
    CHECK_FALSE(cj[0].strict);
}

} // TEST_SUITE
