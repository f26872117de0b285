#pragma once

#include <utility>

#include "pisano/modular.hpp"

namespace pisano {

// Splitting behavior of x^2 - delta over F_p.
enum class ResidueClass { Split, Inert, Ramified };

// Ambient ring F_p[x]/(x^2 - delta). A genuine field F_{p^2} when Inert;
// isomorphic to F_p x F_p when Split; has nilpotents when Ramified.
struct FieldCtx {
    u64 p;
    u64 delta;
    ResidueClass residue_class;

    static FieldCtx make(u64 p, u64 delta);
    bool operator==(const FieldCtx&) const = default;
};

// x + y*sqrt(delta), components reduced mod p.
struct Fp2 {
    u64 x = 0;
    u64 y = 0;
    FieldCtx ctx{};

    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(const Fp2& o) const { return x == o.x && y == o.y && ctx == o.ctx; }
};

Fp2 make_fp2(const FieldCtx& ctx, u64 x, u64 y);

Fp2 operator+(const Fp2& u, const Fp2& v);
Fp2 operator-(const Fp2& u, const Fp2& v);
Fp2 operator*(const Fp2& u, const Fp2& v);

// (x - y*sqrt(delta)) / (x^2 - delta*y^2); throws zero_division on 0 and
// norm_zero when the norm vanishes on a nonzero element.
Fp2 fp2_inv(const Fp2& u);

Fp2 fp2_pow(Fp2 u, u64 e);

// Conjugation (x, -y). Only valid as the power map u^p in Inert contexts.
Fp2 frobenius(const Fp2& u);

// Split contexts only: the F_p value x + y*sqrt_mod(delta), using the
// canonical smaller root.
u64 embed_split(const Fp2& u);

// Roots of z^2 - Az - B over F_p(sqrt(delta)), delta = A^2 + 4B:
// lambda = (A + sqrt(delta))/2 first, conjugate second.
std::pair<Fp2, Fp2> eigenvalues(i64 a_coeff, i64 b_coeff, u64 p);

// Smallest t >= 1 with u^t = 1, peeled from the factors of p^2 - 1.
u64 fp2_order(const Fp2& u);

}  // namespace pisano
