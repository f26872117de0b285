#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "pisano/errors.hpp"

namespace pisano {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

// base^exp mod m by square-and-multiply; 0^0 = 1 (empty product).
u64 mod_pow(u64 base, u64 exp, u64 m);

// Inverse of a mod m via extended Euclid; throws not_invertible.
u64 mod_inv(u64 a, u64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

struct Factorization {
    // (prime, exponent) pairs, sorted by prime
    std::vector<std::pair<u64, int>> factors;

    u64 value() const;
    bool operator==(const Factorization&) const = default;
};

// Complete prime factorization of n >= 1 (trial division + Brent rho).
Factorization factorize(u64 n);

// Factorization of a.value() * b.value(): exponents of shared primes add.
Factorization merge_factorizations(const Factorization& a, const Factorization& b);

// Euler criterion mapped to {-1, 0, +1}; a may be negative or >= p.
int legendre_symbol(i64 a, u64 p);

// Square root mod an odd prime (Tonelli-Shanks). Returns the canonical
// smaller root min(r, p-r); nullopt when a is a nonresidue; 0 for a = 0.
std::optional<u64> sqrt_mod(u64 a, u64 p);

// Smallest t >= 1 with a^t = 1 mod p, by peeling prime factors of p-1.
u64 mult_order(u64 a, u64 p);
u64 mult_order(u64 a, u64 p, const Factorization& group_order_factors);

// A validated prime carried with the (lazily computed) factorization of p-1.
class PrimeModulus {
public:
    explicit PrimeModulus(u64 p);

    u64 value() const { return p_; }
    const Factorization& factored_group_order() const;

private:
    struct Cache {
        std::once_flag once;
        Factorization factors;
    };
    u64 p_;
    std::shared_ptr<Cache> cache_;
};

// Minimal e >= 1 dividing `candidate` with is_identity(e), given the prime
// factorization of candidate. Precondition: is_identity(candidate).
template <class IsIdentity>
u64 peel_order(u64 candidate, const Factorization& candidate_factors, IsIdentity&& is_identity) {
    u64 order = candidate;
    for (const auto& [q, e] : candidate_factors.factors) {
        for (int i = 0; i < e && order % q == 0; ++i) {
            if (is_identity(order / q)) {
                order /= q;
            } else {
                break;
            }
        }
    }
    return order;
}

}  // namespace pisano
