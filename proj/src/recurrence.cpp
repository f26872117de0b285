#include "pisano/recurrence.hpp"

#include <numeric>

namespace pisano {

namespace {

u64 reduce_coeff(i64 a, u64 m) {
    i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

}  // namespace

u64 RecurrenceSpec::a_mod() const { return reduce_coeff(a, modulus); }
u64 RecurrenceSpec::b_mod() const { return reduce_coeff(b, modulus); }

u64 RecurrenceSpec::delta_mod() const {
    u64 am = a_mod(), bm = b_mod();
    return (mul_mod(am, am, modulus) + mul_mod(4 % modulus, bm, modulus)) % modulus;
}

bool RecurrenceSpec::purely_periodic() const { return std::gcd(b_mod(), modulus) == 1; }

Mat2 companion_matrix(const RecurrenceSpec& spec) {
    return Mat2{spec.a_mod(), spec.b_mod(), 1 % spec.modulus, 0};
}

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs, u64 m) {
    return Mat2{
        (mul_mod(lhs.a, rhs.a, m) + mul_mod(lhs.b, rhs.c, m)) % m,
        (mul_mod(lhs.a, rhs.b, m) + mul_mod(lhs.b, rhs.d, m)) % m,
        (mul_mod(lhs.c, rhs.a, m) + mul_mod(lhs.d, rhs.c, m)) % m,
        (mul_mod(lhs.c, rhs.b, m) + mul_mod(lhs.d, rhs.d, m)) % m,
    };
}

Mat2 mat_pow(Mat2 base, u64 e, u64 m) {
    Mat2 result{1 % m, 0, 0, 1 % m};
    while (e > 0) {
        if (e & 1) result = mat_mul(result, base, m);
        base = mat_mul(base, base, m);
        e >>= 1;
    }
    return result;
}

std::vector<u64> sequence_slice(const RecurrenceSpec& spec, u64 count) {
    u64 m = spec.modulus, am = spec.a_mod(), bm = spec.b_mod();
    std::vector<u64> out;
    out.reserve(count);
    u64 prev = 0, cur = 1 % m;
    for (u64 i = 0; i < count; ++i) {
        out.push_back(prev);
        u64 next = (mul_mod(am, cur, m) + mul_mod(bm, prev, m)) % m;
        prev = cur;
        cur = next;
    }
    return out;
}

u64 naive_period(const RecurrenceSpec& spec) {
    if (!spec.purely_periodic())
        throw not_purely_periodic("naive_period: gcd(B, m) != 1");
    u64 m = spec.modulus, am = spec.a_mod(), bm = spec.b_mod();
    u64 prev = 0, cur = 1 % m;
    u64 cap = m * m;
    for (u64 i = 1; i <= cap; ++i) {
        u64 next = (mul_mod(am, cur, m) + mul_mod(bm, prev, m)) % m;
        prev = cur;
        cur = next;
        if (prev == 0 && cur == 1 % m) return i;
    }
    throw cap_exceeded("naive_period: no return to (0, 1) within m^2 steps");
}

namespace {

Mat2 identity(u64 m) { return Mat2{1 % m, 0, 0, 1 % m}; }

// Verified multiple of the matrix order: theorem bound when one applies,
// else p(p^2 - 1).
u64 order_candidate(const RecurrenceSpec& spec) {
    u64 p = spec.modulus;
    if (p == 2) return 6;  // |GL_2(F_2)| = p(p^2-1)
    FieldCtx ctx = FieldCtx::make(p, spec.delta_mod());
    switch (ctx.residue_class) {
        case ResidueClass::Split:
            return p - 1;
        case ResidueClass::Inert: {
            u64 b2 = mul_mod(spec.b_mod(), spec.b_mod(), p);
            return 2 * (p + 1) * mult_order(b2, p);
        }
        case ResidueClass::Ramified:
            return p * (p * p - 1);
    }
    return p * (p * p - 1);
}

}  // namespace

u64 matrix_order_period(const RecurrenceSpec& spec) {
    u64 m = spec.modulus;
    if (!is_prime(m)) throw invalid_modulus("matrix_order_period: modulus must be prime");
    if (!spec.purely_periodic())
        throw not_purely_periodic("matrix_order_period: gcd(B, p) != 1");
    Mat2 u = companion_matrix(spec);
    u64 candidate = order_candidate(spec);
    if (!(mat_pow(u, candidate, m) == identity(m)))
        throw bound_violation("matrix_order_period: U^N != I for the verified multiple N");
    return peel_order(candidate, factorize(candidate),
                      [&](u64 e) { return mat_pow(u, e, m) == identity(m); });
}

u64 eigenvalue_period(const RecurrenceSpec& spec) {
    u64 p = spec.modulus;
    if (p == 2 || !is_prime(p))
        throw invalid_modulus("eigenvalue_period: modulus must be an odd prime");
    if (!spec.purely_periodic())
        throw not_purely_periodic("eigenvalue_period: gcd(B, p) != 1");
    auto [lambda, conjugate] = eigenvalues(spec.a, spec.b, p);
    if (lambda.ctx.residue_class == ResidueClass::Ramified) {
        // repeated root: D is a Jordan block, order = p * ord(lambda)
        u64 root = lambda.x;  // sqrt(delta) vanishes in F_p
        u64 jordan = p * mult_order(root, p);
        if (naive_period(spec) != jordan)
            throw bound_violation("eigenvalue_period: Jordan-block period disagrees with iteration");
        return jordan;
    }
    return std::lcm(fp2_order(lambda), fp2_order(conjugate));
}

u64 period_prime_power(i64 a, i64 b, u64 p, unsigned t) {
    if (!is_prime(p)) throw invalid_modulus("period_prime_power: p must be prime");
    u64 base_period =
        p == 2 ? naive_period(RecurrenceSpec{a, b, 2}) : matrix_order_period(RecurrenceSpec{a, b, p});
    if (t == 1) return base_period;
    u64 m = p;
    for (unsigned i = 1; i < t; ++i) m *= p;
    RecurrenceSpec spec{a, b, m};
    if (!spec.purely_periodic())
        throw not_purely_periodic("period_prime_power: gcd(B, p) != 1");
    u64 candidate = base_period;
    for (unsigned i = 1; i < t; ++i) candidate *= p;
    Mat2 u = companion_matrix(spec);
    if (!(mat_pow(u, candidate, m) == identity(m)))
        throw bound_violation("period_prime_power: U^(p^{t-1} k(p)) != I");
    return peel_order(candidate, factorize(candidate),
                      [&](u64 e) { return mat_pow(u, e, m) == identity(m); });
}

u64 period_composite(const RecurrenceSpec& spec) {
    if (!spec.purely_periodic())
        throw not_purely_periodic("period_composite: gcd(B, m) != 1");
    u64 result = 1;
    for (const auto& [q, e] : factorize(spec.modulus).factors)
        result = std::lcm(result, period_prime_power(spec.a, spec.b, q, static_cast<unsigned>(e)));
    return result;
}

u64 period(const RecurrenceSpec& spec) {
    if (spec.modulus < 2) throw invalid_modulus("period: modulus must be >= 2");
    if (!spec.purely_periodic()) throw not_purely_periodic("period: gcd(B, m) != 1");
    if (spec.modulus == 2) return naive_period(spec);
    if (is_prime(spec.modulus)) return matrix_order_period(spec);
    return period_composite(spec);
}

}  // namespace pisano
