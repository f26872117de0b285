#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pisano/theorems.hpp"

using namespace pisano;

TEST_CASE("discriminant") {
    CHECK(discriminant(1, 1) == 5);
    CHECK(discriminant(3, 2) == 17);
    CHECK(discriminant(1, 2) == 9);
    CHECK(discriminant(2, -1) == 0);
}

TEST_CASE("classify") {
    CHECK(classify(1, 1, 11) == Classification::Split);
    CHECK(classify(1, 1, 7) == Classification::Inert);
    CHECK(classify(1, 1, 5) == Classification::Ramified);
    CHECK(classify(1, 2, 3) == Classification::Ramified);
    CHECK(classify(1, 1, 2) == Classification::SmallPrime);
    CHECK(classify(1, 7, 7) == Classification::Degenerate);
    CHECK_THROWS_AS(classify(1, 1, 15), invalid_modulus);
}

TEST_CASE("Fibonacci classification follows p mod 5") {
    for (u64 p : primes_up_to(10000)) {
        if (p < 7) continue;
        Classification c = classify(1, 1, p);
        if (p % 5 == 1 || p % 5 == 4)
            CHECK(c == Classification::Split);
        else
            CHECK(c == Classification::Inert);
    }
}

TEST_CASE("bound_for_prime") {
    SUBCASE("split examples") {
        BoundResult r = bound_for_prime(3, 2, 13);
        CHECK(*r.bound == 12);
        CHECK(r.theorem == Theorem::T6);

        BoundResult fib = bound_for_prime(1, 1, 11);
        CHECK(*fib.bound == 10);
        CHECK(fib.theorem == Theorem::T2);
    }
    SUBCASE("inert examples") {
        BoundResult r7 = bound_for_prime(3, 2, 7);
        CHECK(*r7.bound == 48);  // 2(7+1) * ord(4) = 16 * 3
        CHECK(r7.theorem == Theorem::T9);

        BoundResult r37 = bound_for_prime(3, 2, 37);
        CHECK(*r37.bound == 1368);

        BoundResult b1 = bound_for_prime(3, 1, 11);
        CHECK(*b1.bound == 24);  // B = 1, ord(1) = 1
        CHECK(b1.theorem == Theorem::T9);

        BoundResult fib = bound_for_prime(1, 1, 7);
        CHECK(*fib.bound == 16);
        CHECK(fib.theorem == Theorem::T5);
    }
    SUBCASE("no bound cases") {
        CHECK_FALSE(bound_for_prime(1, 1, 5).bound.has_value());
        CHECK(bound_for_prime(1, 1, 5).theorem == Theorem::None);
        CHECK_FALSE(bound_for_prime(1, 1, 2).bound.has_value());
        CHECK_FALSE(bound_for_prime(1, 7, 7).bound.has_value());
    }
}

TEST_CASE("T9 bound never exceeds p^2 - 1") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 300) {
        u64 p = rng() % 500 + 3;
        if (!is_prime(p)) continue;
        i64 a = static_cast<i64>(rng() % p);
        i64 b = static_cast<i64>(rng() % (p - 1)) + 1;
        BoundResult r = bound_for_prime(a, b, p);
        if (!r.bound) continue;
        ++checked;
        CHECK(*r.bound <= p * p - 1);
    }
}

TEST_CASE("verify_range Fibonacci below 100") {
    auto reports = verify_range(1, 1, 100);
    CHECK(reports.size() == 24);  // odd primes up to 100, incl. the ramified p = 5
    for (const auto& r : reports) {
        CHECK(r.divides_bound);
        CHECK(r.methods.agree());
        if (r.spec.modulus == 5) {
            CHECK(r.classification == Classification::Ramified);
            CHECK_FALSE(r.bound.has_value());
            CHECK(r.period == 20);
        }
    }
}

TEST_CASE("verify_range (1,2): split for every prime except 3") {
    for (const auto& r : verify_range(1, 2, 100)) {
        if (r.spec.modulus == 3) {
            CHECK(r.classification == Classification::Ramified);
        } else {
            CHECK(r.classification == Classification::Split);
            CHECK(*r.bound == r.spec.modulus - 1);
        }
    }
}

TEST_CASE("verify_range single tiny prime") {
    auto reports = verify_range(1, 1, 3);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].spec.modulus == 3);
    CHECK(reports[0].classification == Classification::Inert);
    CHECK(reports[0].period == 8);
    CHECK(*reports[0].bound == 8);
    CHECK(reports[0].tight);
}

TEST_CASE("parallel scan matches the serial reference") {
    for (auto [a, b] : {std::pair<i64, i64>{1, 1}, {3, 2}}) {
        auto par = verify_range(a, b, 600);
        auto ser = verify_range_serial(a, b, 600);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].spec.modulus == ser[i].spec.modulus);
            CHECK(par[i].period == ser[i].period);
            CHECK(par[i].bound == ser[i].bound);
            CHECK(par[i].tight == ser[i].tight);
        }
    }
}

TEST_CASE("tightness survey Fibonacci below 100") {
    TightnessSurvey survey = tightness_survey(1, 1, 100);
    CHECK(survey.non_tight_primes() == std::vector<u64>{29, 47, 89});
    CHECK(survey.rows.size() == 23);  // p = 5 carries no bound and is excluded
    for (const auto& row : survey.rows) {
        if (row.p == 11) {
            CHECK(row.period == 10);
            CHECK(row.bound == 10);
            CHECK(row.tight);
        }
    }
}

TEST_CASE("tightness survey extremal row (3,2) at 37") {
    TightnessSurvey survey = tightness_survey(3, 2, 37);
    bool found = false;
    for (const auto& row : survey.rows) {
        if (row.p != 37) continue;
        found = true;
        CHECK(row.period == 1368);
        CHECK(row.bound == 1368);
        CHECK(row.tight);
    }
    CHECK(found);
}

TEST_CASE("analyze handles composite and degenerate moduli") {
    PeriodReport r = analyze(RecurrenceSpec{1, 1, 10});
    CHECK(r.period == 60);
    CHECK(r.classification == Classification::Composite);
    CHECK_FALSE(r.bound.has_value());

    CHECK_THROWS_AS(analyze(RecurrenceSpec{1, 5, 10}), not_purely_periodic);
    CHECK_THROWS_AS(analyze_prime(1, 7, 7, true), not_purely_periodic);

    PeriodReport two = analyze(RecurrenceSpec{1, 1, 2});
    CHECK(two.period == 3);
    CHECK(two.classification == Classification::SmallPrime);
}
