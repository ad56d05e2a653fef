#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kahn/bound_algebra.hpp"

namespace kahn {

enum class outcome { strictly_greater, equal, strictly_less, undecided };
enum class certification_method { exact, interval };

std::string_view to_string(outcome o);
std::string_view to_string(certification_method m);

struct certify_options {
    unsigned start_bits = 128;
    unsigned cap_bits = 8192;
    // Keep decimal renderings of the deciding values in the verdict.
    bool record_witness = true;
};

// Outcome of comparing a left-hand side against a right-hand side. Strict
// outcomes carry either an exact comparison or separated intervals; Equal
// is only ever produced by an exact identity.
struct verdict {
    outcome result = outcome::undecided;
    certification_method method = certification_method::interval;
    unsigned precision_bits = 0;
    std::string lhs_low, lhs_high, rhs_low, rhs_high;

    bool holds() const { return result == outcome::strictly_greater || result == outcome::equal; }
    bool strict() const { return result == outcome::strictly_greater; }
};

// Exact ordering of two pure products by clearing exponent denominators.
verdict compare_pure_products(const factor_product& p, const factor_product& q);

// Decides a versus b + c.
//  1. all three are integers: exact integer comparison;
//  2. if equality is expected: b/a and c/a rational gives an exact decision;
//  3. directed-rounding intervals from start_bits, doubling up to cap_bits;
//  4. otherwise Undecided.
verdict certify_sum_inequality(const factor_product& a, const factor_product& b, const factor_product& c,
                               bool equality_expected, const certify_options& opts = {});

// One tuple of the f-monotonicity fact:
// f(a-a', b) f(a, b-b') >= f(a-a', b-b') f(a, b) for 0 < a' < a, 0 < b' < b.
struct f_fact_entry {
    int a, a_shift, b, b_shift;
    verdict v;
};

struct f_fact_report {
    int delta = 0;
    std::vector<f_fact_entry> entries;
    std::size_t failures = 0;
    bool pass() const { return failures == 0 && !entries.empty(); }
};

f_fact_entry check_f_fact_tuple(int a, int a_shift, int b, int b_shift);
// delta in [2, 5].
f_fact_report check_f_fact(int delta);
// Same check beyond the verified range; no guarantee attached.
f_fact_report sweep_f_fact(int delta);

} // namespace kahn
