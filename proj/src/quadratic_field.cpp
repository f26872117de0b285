#include "pisano/quadratic_field.hpp"

namespace pisano {

namespace {

void require_same_ctx(const Fp2& u, const Fp2& v) {
    if (!(u.ctx == v.ctx)) throw wrong_context("Fp2: mixed field contexts");
}

u64 reduce_coeff(i64 a, u64 m) {
    i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

}  // namespace

FieldCtx FieldCtx::make(u64 p, u64 delta) {
    if (p == 2) throw invalid_modulus("FieldCtx: p must be odd");
    delta %= p;
    ResidueClass cls;
    if (delta == 0) {
        cls = ResidueClass::Ramified;
    } else {
        cls = legendre_symbol(static_cast<i64>(delta), p) == 1 ? ResidueClass::Split
                                                               : ResidueClass::Inert;
    }
    return FieldCtx{p, delta, cls};
}

Fp2 make_fp2(const FieldCtx& ctx, u64 x, u64 y) { return Fp2{x % ctx.p, y % ctx.p, ctx}; }

Fp2 operator+(const Fp2& u, const Fp2& v) {
    require_same_ctx(u, v);
    u64 p = u.ctx.p;
    return Fp2{(u.x + v.x) % p, (u.y + v.y) % p, u.ctx};
}

Fp2 operator-(const Fp2& u, const Fp2& v) {
    require_same_ctx(u, v);
    u64 p = u.ctx.p;
    return Fp2{(u.x + p - v.x) % p, (u.y + p - v.y) % p, u.ctx};
}

Fp2 operator*(const Fp2& u, const Fp2& v) {
    require_same_ctx(u, v);
    u64 p = u.ctx.p;
    u64 x = (mul_mod(u.x, v.x, p) + mul_mod(u.ctx.delta, mul_mod(u.y, v.y, p), p)) % p;
    u64 y = (mul_mod(u.x, v.y, p) + mul_mod(u.y, v.x, p)) % p;
    return Fp2{x, y, u.ctx};
}

Fp2 fp2_inv(const Fp2& u) {
    if (u.is_zero()) throw zero_division("fp2_inv: zero element");
    u64 p = u.ctx.p;
    u64 norm = (mul_mod(u.x, u.x, p) + p - mul_mod(u.ctx.delta, mul_mod(u.y, u.y, p), p) % p) % p;
    if (norm == 0) throw norm_zero("fp2_inv: zero-norm element, ambient ring is not a field");
    u64 ninv = mod_inv(norm, p);
    return Fp2{mul_mod(u.x, ninv, p), mul_mod((p - u.y) % p, ninv, p), u.ctx};
}

Fp2 fp2_pow(Fp2 u, u64 e) {
    Fp2 result{1 % u.ctx.p, 0, u.ctx};
    while (e > 0) {
        if (e & 1) result = result * u;
        u = u * u;
        e >>= 1;
    }
    return result;
}

Fp2 frobenius(const Fp2& u) {
    if (u.ctx.residue_class != ResidueClass::Inert)
        throw wrong_context("frobenius: conjugation equals the p-power map only when Inert");
    u64 p = u.ctx.p;
    return Fp2{u.x, u.y == 0 ? 0 : p - u.y, u.ctx};
}

u64 embed_split(const Fp2& u) {
    if (u.ctx.residue_class != ResidueClass::Split)
        throw wrong_context("embed_split: context is not Split");
    u64 p = u.ctx.p;
    u64 root = *sqrt_mod(u.ctx.delta, p);
    return (u.x + mul_mod(u.y, root, p)) % p;
}

std::pair<Fp2, Fp2> eigenvalues(i64 a_coeff, i64 b_coeff, u64 p) {
    if (p == 2) throw invalid_modulus("eigenvalues: p must be odd");
    u64 am = reduce_coeff(a_coeff, p);
    u64 bm = reduce_coeff(b_coeff, p);
    u64 delta = (mul_mod(am, am, p) + mul_mod(4 % p, bm, p)) % p;
    FieldCtx ctx = FieldCtx::make(p, delta);
    u64 half = mod_inv(2, p);
    u64 x = mul_mod(half, am, p);
    if (ctx.residue_class == ResidueClass::Ramified) {
        // repeated root A/2 in F_p; sqrt(delta) vanishes
        Fp2 lambda{x, 0, ctx};
        return {lambda, lambda};
    }
    Fp2 lambda{x, half, ctx};
    Fp2 conjugate{x, p - half, ctx};
    return {lambda, conjugate};
}

u64 fp2_order(const Fp2& u) {
    if (u.is_zero()) throw zero_element("fp2_order: zero element");
    u64 p = u.ctx.p;
    u64 group = p * p - 1;  // F_p* embeds in F_{p^2}*, so this covers Split too
    Fp2 one{1, 0, u.ctx};
    if (!(fp2_pow(u, group) == one))
        throw bound_violation("fp2_order: element order does not divide p^2 - 1");
    Factorization f = merge_factorizations(factorize(p - 1), factorize(p + 1));
    return peel_order(group, f, [&](u64 e) { return fp2_pow(u, e) == one; });
}

}  // namespace pisano
