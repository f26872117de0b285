#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pisano/quadratic_field.hpp"

using namespace pisano;

namespace {

Fp2 random_element(const FieldCtx& ctx, std::mt19937_64& rng) {
    return Fp2{rng() % ctx.p, rng() % ctx.p, ctx};
}

}  // namespace

TEST_CASE("FieldCtx classification") {
    CHECK(FieldCtx::make(11, 5).residue_class == ResidueClass::Split);
    CHECK(FieldCtx::make(7, 5).residue_class == ResidueClass::Inert);
    CHECK(FieldCtx::make(5, 5).residue_class == ResidueClass::Ramified);
    CHECK(FieldCtx::make(5, 10).residue_class == ResidueClass::Ramified);
    CHECK_THROWS_AS(FieldCtx::make(2, 1), invalid_modulus);
}

TEST_CASE("arithmetic examples") {
    FieldCtx ctx = FieldCtx::make(7, 5);
    Fp2 sqrt_delta{0, 1, ctx};
    CHECK(sqrt_delta * sqrt_delta == Fp2{5, 0, ctx});

    Fp2 one{1, 0, ctx};
    CHECK(fp2_inv(one) == one);

    // lambda * conj = -1 for Fibonacci coefficients
    auto [lambda, conj] = eigenvalues(1, 1, 7);
    CHECK(lambda * conj == Fp2{6, 0, ctx});
}

TEST_CASE("fp2_pow") {
    FieldCtx ctx = FieldCtx::make(7, 5);
    Fp2 u{3, 4, ctx};
    CHECK(fp2_pow(u, 0) == Fp2{1, 0, ctx});

    Fp2 sqrt_delta{0, 1, ctx};
    CHECK(fp2_pow(sqrt_delta, 7) == Fp2{0, 6, ctx});  // (sqrt 5)^p = -sqrt 5

    auto [lambda, conj] = eigenvalues(1, 1, 7);
    CHECK(fp2_pow(lambda, 2 * (7 + 1)) == Fp2{1, 0, ctx});
}

TEST_CASE("inverse errors") {
    FieldCtx inert = FieldCtx::make(7, 5);
    CHECK_THROWS_AS(fp2_inv(Fp2{0, 0, inert}), zero_division);

    FieldCtx ramified = FieldCtx::make(5, 0);
    CHECK_THROWS_AS(fp2_inv(Fp2{0, 1, ramified}), norm_zero);  // nilpotent
}

TEST_CASE("frobenius") {
    FieldCtx ctx = FieldCtx::make(7, 5);
    CHECK(frobenius(Fp2{3, 0, ctx}) == Fp2{3, 0, ctx});  // fixes F_p
    CHECK(frobenius(Fp2{0, 1, ctx}) == Fp2{0, 6, ctx});

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Fp2 u = random_element(ctx, rng);
        CHECK(frobenius(frobenius(u)) == u);
        CHECK(frobenius(u) == fp2_pow(u, ctx.p));
    }

    FieldCtx split = FieldCtx::make(11, 5);
    CHECK_THROWS_AS(frobenius(Fp2{1, 2, split}), wrong_context);
}

TEST_CASE("frobenius is a ring homomorphism") {
    std::mt19937_64 rng(8);
    for (u64 p : {7ull, 13ull, 103ull, 499ull}) {
        u64 delta = 0;
        for (u64 d = 2; d < p; ++d)
            if (legendre_symbol(static_cast<i64>(d), p) == -1) {
                delta = d;
                break;
            }
        FieldCtx ctx = FieldCtx::make(p, delta);
        REQUIRE(ctx.residue_class == ResidueClass::Inert);
        for (int i = 0; i < 100; ++i) {
            Fp2 u = random_element(ctx, rng), v = random_element(ctx, rng);
            CHECK(frobenius(u + v) == frobenius(u) + frobenius(v));
            CHECK(frobenius(u * v) == frobenius(u) * frobenius(v));
        }
    }
}

TEST_CASE("field laws on random triples") {
    std::mt19937_64 rng(9);
    for (u64 delta : {3ull, 5ull, 0ull}) {  // inert, split (5 is QR mod 11), ramified
        FieldCtx ctx = FieldCtx::make(11, delta);
        for (int i = 0; i < 3000; ++i) {
            Fp2 u = random_element(ctx, rng);
            Fp2 v = random_element(ctx, rng);
            Fp2 w = random_element(ctx, rng);
            CHECK((u + v) + w == u + (v + w));
            CHECK((u * v) * w == u * (v * w));
            CHECK(u * v == v * u);
            CHECK(u * (v + w) == u * v + u * w);
        }
        // every nonzero element is invertible in Inert contexts
        if (ctx.residue_class == ResidueClass::Inert) {
            for (int i = 0; i < 200; ++i) {
                Fp2 u = random_element(ctx, rng);
                if (u.is_zero()) continue;
                CHECK(u * fp2_inv(u) == Fp2{1, 0, ctx});
            }
        }
    }
}

TEST_CASE("eigenvalue examples") {
    SUBCASE("split, p = 11") {
        auto [lambda, conj] = eigenvalues(1, 1, 11);
        CHECK(lambda.ctx.residue_class == ResidueClass::Split);
        CHECK(embed_split(lambda) == 8);
        CHECK(embed_split(conj) == 4);
        CHECK((embed_split(lambda) + embed_split(conj)) % 11 == 1);
        CHECK(embed_split(lambda) * embed_split(conj) % 11 == 10);  // -1
    }
    SUBCASE("inert, p = 7") {
        auto [lambda, conj] = eigenvalues(1, 1, 7);
        CHECK(lambda == Fp2{4, 4, lambda.ctx});
        // lambda^2 = lambda + 1 in F_49
        CHECK(lambda * lambda == lambda + Fp2{1, 0, lambda.ctx});
    }
    SUBCASE("ramified, p = 5") {
        auto [lambda, conj] = eigenvalues(1, 1, 5);
        CHECK(lambda.ctx.residue_class == ResidueClass::Ramified);
        CHECK(lambda == conj);
        CHECK(lambda == Fp2{3, 0, lambda.ctx});
    }
}

TEST_CASE("Vieta: sum A, product -B") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 500; ++i) {
        u64 p;
        do { p = rng() % 500 + 3; } while (!is_prime(p));
        i64 a = static_cast<i64>(rng() % (2 * p)) - static_cast<i64>(p);
        i64 b = static_cast<i64>(rng() % (2 * p)) - static_cast<i64>(p);
        auto [lambda, conj] = eigenvalues(a, b, p);
        if (lambda.ctx.residue_class == ResidueClass::Ramified) continue;
        i64 ip = static_cast<i64>(p);
        u64 am = static_cast<u64>((a % ip + ip) % ip);
        u64 minus_b = static_cast<u64>(((-b) % ip + ip) % ip);
        CHECK(lambda + conj == Fp2{am, 0, lambda.ctx});
        CHECK(lambda * conj == Fp2{minus_b, 0, lambda.ctx});
    }
}

TEST_CASE("fp2_order") {
    FieldCtx inert7 = FieldCtx::make(7, 5);
    CHECK(fp2_order(Fp2{1, 0, inert7}) == 1);

    auto [l11, c11] = eigenvalues(1, 1, 11);
    CHECK(fp2_order(l11) == 10);

    auto [l7, c7] = eigenvalues(1, 1, 7);
    CHECK(fp2_order(l7) == 16);

    CHECK_THROWS_AS(fp2_order(Fp2{0, 0, inert7}), zero_element);
}

TEST_CASE("conjugate (p+1)-powers coincide in F_p on sampled inert specs") {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 300) {
        u64 p = rng() % 500 + 3;
        if (!is_prime(p)) continue;
        i64 a = static_cast<i64>(rng() % p);
        i64 b = static_cast<i64>(rng() % (p - 1)) + 1;
        auto [lambda, conj] = eigenvalues(a, b, p);
        if (lambda.ctx.residue_class != ResidueClass::Inert) continue;
        ++checked;
        Fp2 lp = fp2_pow(lambda, p + 1);
        Fp2 cp = fp2_pow(conj, p + 1);
        CHECK(lp == cp);
        CHECK(lp.y == 0);  // lies in F_p
        u64 bm = static_cast<u64>(b) % p;
        u64 b2 = bm * bm % p;
        CHECK(fp2_pow(lambda, 2 * (p + 1)) == Fp2{b2, 0, lambda.ctx});
    }
}
