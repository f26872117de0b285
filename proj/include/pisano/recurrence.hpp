#pragma once

#include <vector>

#include "pisano/quadratic_field.hpp"

namespace pisano {

// E_{n+1} = A*E_n + B*E_{n-1} (mod m), E_0 = 0, E_1 = 1.
// Fibonacci is a = b = 1.
struct RecurrenceSpec {
    i64 a = 1;
    i64 b = 1;
    u64 modulus = 0;

    u64 a_mod() const;
    u64 b_mod() const;
    // (A^2 + 4B) mod modulus
    u64 delta_mod() const;
    // purely periodic from index 0 iff the companion matrix is invertible
    bool purely_periodic() const;
};

// 2x2 matrix [[a,b],[c,d]] over Z/mZ (modulus carried by the operations).
struct Mat2 {
    u64 a = 1, b = 0, c = 0, d = 1;
    bool operator==(const Mat2&) const = default;
};

Mat2 companion_matrix(const RecurrenceSpec& spec);
Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs, u64 m);
Mat2 mat_pow(Mat2 base, u64 e, u64 m);

// E_0 .. E_{count-1} mod m.
std::vector<u64> sequence_slice(const RecurrenceSpec& spec, u64 count);

// Smallest i >= 1 with (E_i, E_{i+1}) = (0, 1), by direct iteration.
// Capped at m^2 steps (the pair (0,0) never occurs, so the period is < m^2).
u64 naive_period(const RecurrenceSpec& spec);

// Period as the multiplicative order of the companion matrix; modulus prime.
// Starts from a verified multiple (theorem bound when one applies, else
// p(p^2-1)) and peels prime factors.
u64 matrix_order_period(const RecurrenceSpec& spec);

// Period via eigenvalue orders in the splitting field; modulus an odd prime.
// Split/Inert: lcm of the two eigenvalue orders. Ramified (repeated root):
// p * ord(lambda), the Jordan-block case, cross-checked against naive_period.
u64 eigenvalue_period(const RecurrenceSpec& spec);

// Period mod p^t from the prime-case period: candidate p^{t-1} * k(p),
// verified then peeled.
u64 period_prime_power(i64 a, i64 b, u64 p, unsigned t);

// Period for arbitrary m with gcd(B, m) = 1: lcm over prime-power parts.
u64 period_composite(const RecurrenceSpec& spec);

// Dispatch on the shape of the modulus; works for any m >= 2, gcd(B, m) = 1.
u64 period(const RecurrenceSpec& spec);

}  // namespace pisano
