#include "pisano/theorems.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

namespace pisano {

namespace {

u64 reduce_coeff(i64 a, u64 m) {
    i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

bool is_fibonacci(i64 a, i64 b, u64 p) {
    return reduce_coeff(a, p) == 1 % p && reduce_coeff(b, p) == 1 % p;
}

}  // namespace

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Split: return "split";
        case Classification::Inert: return "inert";
        case Classification::Ramified: return "ramified";
        case Classification::Degenerate: return "degenerate";
        case Classification::SmallPrime: return "small_prime";
        case Classification::Composite: return "composite";
    }
    return "?";
}

std::string_view to_string(Theorem t) {
    switch (t) {
        case Theorem::None: return "none";
        case Theorem::T2: return "T2";
        case Theorem::T5: return "T5";
        case Theorem::T6: return "T6";
        case Theorem::T9: return "T9";
    }
    return "?";
}

i64 discriminant(i64 a, i64 b) { return a * a + 4 * b; }

Classification classify(i64 a, i64 b, u64 p) {
    if (!is_prime(p)) throw invalid_modulus("classify: p must be prime");
    if (reduce_coeff(b, p) == 0) return Classification::Degenerate;
    if (p == 2) return Classification::SmallPrime;
    u64 am = reduce_coeff(a, p), bm = reduce_coeff(b, p);
    u64 delta = (mul_mod(am, am, p) + mul_mod(4 % p, bm, p)) % p;
    if (delta == 0) return Classification::Ramified;
    return legendre_symbol(static_cast<i64>(delta), p) == 1 ? Classification::Split
                                                            : Classification::Inert;
}

BoundResult bound_for_prime(i64 a, i64 b, u64 p) {
    Classification cls = classify(a, b, p);
    BoundResult out{p, cls, std::nullopt, Theorem::None};
    switch (cls) {
        case Classification::Split:
            out.bound = p - 1;
            out.theorem = is_fibonacci(a, b, p) ? Theorem::T2 : Theorem::T6;
            break;
        case Classification::Inert: {
            u64 bm = reduce_coeff(b, p);
            u64 b2 = mul_mod(bm, bm, p);
            out.bound = 2 * (p + 1) * mult_order(b2, p);
            out.theorem = is_fibonacci(a, b, p) ? Theorem::T5 : Theorem::T9;
            break;
        }
        default:
            break;  // Ramified / Degenerate / SmallPrime: no theorem applies
    }
    return out;
}

bool MethodResults::agree() const {
    std::optional<u64> ref;
    for (const auto& v : {naive, matrix_order, eigenvalue}) {
        if (!v) continue;
        if (!ref) ref = v;
        else if (*ref != *v) return false;
    }
    return true;
}

PeriodReport analyze_prime(i64 a, i64 b, u64 p, bool with_naive) {
    if (!is_prime(p)) throw invalid_modulus("analyze_prime: p must be prime");
    RecurrenceSpec spec{a, b, p};
    if (!spec.purely_periodic())
        throw not_purely_periodic("analyze_prime: gcd(B, p) != 1");

    PeriodReport report;
    report.spec = spec;
    report.classification = classify(a, b, p);

    if (p == 2) {
        report.methods.naive = naive_period(spec);
        report.methods.matrix_order = matrix_order_period(spec);
        report.period = *report.methods.naive;
    } else {
        report.methods.matrix_order = matrix_order_period(spec);
        report.methods.eigenvalue = eigenvalue_period(spec);
        if (with_naive) report.methods.naive = naive_period(spec);
        report.period = *report.methods.matrix_order;
    }
    if (!report.methods.agree())
        throw bound_violation("analyze_prime: period algorithms disagree");

    BoundResult bound = bound_for_prime(a, b, p);
    report.bound = bound.bound;
    report.theorem = bound.theorem;
    report.divides_bound = !report.bound || *report.bound % report.period == 0;
    report.tight = report.bound && *report.bound == report.period;
    return report;
}

PeriodReport analyze(const RecurrenceSpec& spec) {
    if (spec.modulus < 2) throw invalid_modulus("analyze: modulus must be >= 2");
    if (is_prime(spec.modulus))
        return analyze_prime(spec.a, spec.b, spec.modulus, spec.modulus <= 2000);

    if (!spec.purely_periodic())
        throw not_purely_periodic("analyze: gcd(B, m) != 1");
    PeriodReport report;
    report.spec = spec;
    report.classification = Classification::Composite;
    report.period = period_composite(spec);
    if (spec.modulus <= 2000) {
        report.methods.naive = naive_period(spec);
        if (*report.methods.naive != report.period)
            throw bound_violation("analyze: composite period disagrees with iteration");
    }
    return report;
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> primes;
    if (n < 2) return primes;
    std::vector<bool> sieve(n + 1, true);
    for (u64 i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return primes;
}

namespace {

std::vector<PeriodReport> scan_range(i64 a, i64 b, u64 p_max, bool parallel) {
    std::vector<u64> primes = primes_up_to(p_max);
    std::erase_if(primes, [&](u64 p) { return p == 2 || reduce_coeff(b, p) == 0; });

    std::vector<PeriodReport> reports(primes.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(primes.size()); ++i) {
        try {
            reports[i] = analyze_prime(a, b, primes[i], primes[i] <= 300);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return reports;
}

}  // namespace

std::vector<PeriodReport> verify_range(i64 a, i64 b, u64 p_max) {
    return scan_range(a, b, p_max, true);
}

std::vector<PeriodReport> verify_range_serial(i64 a, i64 b, u64 p_max) {
    return scan_range(a, b, p_max, false);
}

std::size_t TightnessSurvey::tight_count() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const SurveyRow& r) { return r.tight; }));
}

std::vector<u64> TightnessSurvey::non_tight_primes() const {
    std::vector<u64> out;
    for (const auto& r : rows)
        if (!r.tight) out.push_back(r.p);
    return out;
}

TightnessSurvey tightness_survey(i64 a, i64 b, u64 p_max) {
    TightnessSurvey survey;
    for (const auto& report : verify_range(a, b, p_max)) {
        if (!report.bound) continue;  // ramified primes have no bound to compare
        survey.rows.push_back(
            SurveyRow{report.spec.modulus, report.period, *report.bound, report.tight});
    }
    return survey;
}

}  // namespace pisano
