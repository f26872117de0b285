#include "pisano/modular.hpp"

#include <algorithm>
#include <numeric>

namespace pisano {

u64 mod_pow(u64 base, u64 exp, u64 m) {
    base %= m;
    u64 result = 1 % m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 mod_inv(u64 a, u64 m) {
    // extended Euclid on (a, m); track only the coefficient of a
    i64 t = 0, new_t = 1;
    u64 r = m, new_r = a % m;
    while (new_r != 0) {
        u64 q = r / new_r;
        t = std::exchange(new_t, t - static_cast<i64>(q) * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw not_invertible("mod_inv: gcd(a, m) != 1");
    return t < 0 ? static_cast<u64>(t + static_cast<i64>(m)) : static_cast<u64>(t);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set is deterministic for all 64-bit n
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 Factorization::value() const {
    u64 n = 1;
    for (const auto& [q, e] : factors) {
        for (int i = 0; i < e; ++i) n *= q;
    }
    return n;
}

Factorization merge_factorizations(const Factorization& a, const Factorization& b) {
    Factorization out;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() || ib != b.factors.end()) {
        if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
            out.factors.push_back(*ia++);
        } else if (ia == a.factors.end() || ib->first < ia->first) {
            out.factors.push_back(*ib++);
        } else {
            out.factors.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

namespace {

// Brent's cycle variant of Pollard rho; n must be odd, composite, not a prime power handled upstream.
u64 brent_rho(u64 n, u64 c) {
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 batch = 128;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
        for (u64 k = 0; k < r && g == 1; k += batch) {
            ys = y;
            u64 lim = std::min(batch, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mul_mod(y, y, n) + c) % n;
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (mul_mod(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

u64 find_factor(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 g = brent_rho(n, c);
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = find_factor(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

Factorization factorize(u64 n) {
    Factorization out;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                  41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull, 79ull, 83ull,
                  89ull, 97ull}) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            out.factors.emplace_back(q, e);
        }
    }
    std::vector<u64> rest;
    factor_into(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
        std::size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        out.factors.emplace_back(rest[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

int legendre_symbol(i64 a, u64 p) {
    if (p == 2 || !is_prime(p)) throw invalid_modulus("legendre_symbol: p must be an odd prime");
    i64 r = a % static_cast<i64>(p);
    u64 am = static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
    if (am == 0) return 0;
    u64 e = mod_pow(am, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;

    u64 root;
    if (p % 4 == 3) {
        root = mod_pow(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 m = static_cast<u64>(s);
        u64 c = mod_pow(z, q, p);
        u64 t = mod_pow(a, q, p);
        root = mod_pow(a, (q + 1) / 2, p);
        while (t != 1) {
            u64 i = 0, tt = t;
            while (tt != 1) {
                tt = mul_mod(tt, tt, p);
                ++i;
            }
            u64 b = mod_pow(c, u64{1} << (m - i - 1), p);
            root = mul_mod(root, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
    }
    return std::min(root, p - root);
}

u64 mult_order(u64 a, u64 p, const Factorization& group_order_factors) {
    a %= p;
    if (a == 0) throw not_invertible("mult_order: p divides a");
    return peel_order(p - 1, group_order_factors,
                      [&](u64 e) { return mod_pow(a, e, p) == 1; });
}

u64 mult_order(u64 a, u64 p) { return mult_order(a, p, factorize(p - 1)); }

PrimeModulus::PrimeModulus(u64 p) : p_(p), cache_(std::make_shared<Cache>()) {
    if (!is_prime(p)) throw invalid_modulus("PrimeModulus: not prime");
}

const Factorization& PrimeModulus::factored_group_order() const {
    std::call_once(cache_->once, [this] { cache_->factors = factorize(p_ - 1); });
    return cache_->factors;
}

}  // namespace pisano
