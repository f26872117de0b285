#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pisano/recurrence.hpp"

namespace pisano {

enum class Classification { Split, Inert, Ramified, Degenerate, SmallPrime, Composite };
enum class Theorem { None, T2, T5, T6, T9 };

std::string_view to_string(Classification c);
std::string_view to_string(Theorem t);

// A^2 + 4B over the integers.
i64 discriminant(i64 a, i64 b);

// Degenerate if p | B; SmallPrime if p = 2; Ramified if p | delta;
// otherwise Split / Inert by the Legendre symbol of delta.
Classification classify(i64 a, i64 b, u64 p);

struct BoundResult {
    u64 p = 0;
    Classification classification = Classification::SmallPrime;
    std::optional<u64> bound;
    Theorem theorem = Theorem::None;
};

// Split: p-1. Inert: 2(p+1) * ord(B^2 mod p). Ramified / Degenerate /
// SmallPrime: no bound. Fibonacci gets the T2/T5 labels, general
// coefficients T6/T9.
BoundResult bound_for_prime(i64 a, i64 b, u64 p);

struct MethodResults {
    std::optional<u64> naive;
    std::optional<u64> matrix_order;
    std::optional<u64> eigenvalue;

    bool agree() const;
};

struct PeriodReport {
    RecurrenceSpec spec;
    u64 period = 0;
    MethodResults methods;
    Classification classification = Classification::SmallPrime;
    std::optional<u64> bound;
    Theorem theorem = Theorem::None;
    bool divides_bound = true;  // vacuously true when no bound applies
    bool tight = false;
};

// Full report for a prime modulus; with_naive additionally runs the direct
// iteration (cheap only for small p).
PeriodReport analyze_prime(i64 a, i64 b, u64 p, bool with_naive);

// Report for an arbitrary modulus >= 2 (composite moduli get no bound).
PeriodReport analyze(const RecurrenceSpec& spec);

std::vector<u64> primes_up_to(u64 n);

// One report per odd prime p <= p_max with p not dividing B, sorted by p.
// Ramified primes carry no bound; the theorems do not cover them.
std::vector<PeriodReport> verify_range(i64 a, i64 b, u64 p_max);

// Serial reference for the OpenMP scan above; must produce identical output.
std::vector<PeriodReport> verify_range_serial(i64 a, i64 b, u64 p_max);

struct SurveyRow {
    u64 p = 0;
    u64 period = 0;
    u64 bound = 0;
    bool tight = false;
};

struct TightnessSurvey {
    std::vector<SurveyRow> rows;

    std::size_t tight_count() const;
    std::vector<u64> non_tight_primes() const;
};

// Rows for every prime in verify_range that has a theorem bound.
TightnessSurvey tightness_survey(i64 a, i64 b, u64 p_max);

}  // namespace pisano
