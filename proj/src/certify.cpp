#include "kahn/certify.hpp"

#include <stdexcept>

namespace kahn {

std::string_view to_string(outcome o) {
    switch (o) {
    case outcome::strictly_greater: return "strictly_greater";
    case outcome::equal: return "equal";
    case outcome::strictly_less: return "strictly_less";
    case outcome::undecided: return "undecided";
    }
    return "undecided";
}

std::string_view to_string(certification_method m) {
    return m == certification_method::exact ? "exact" : "interval";
}

namespace {

outcome from_cmp(int c) {
    return c > 0 ? outcome::strictly_greater : (c < 0 ? outcome::strictly_less : outcome::equal);
}

std::string short_integer(const mpz_class& z) {
    if (mpz_sizeinbase(z.get_mpz_t(), 10) <= 60)
        return z.get_str();
    interval iv = interval::exact(z, 96);
    return "~" + iv.lo_string(20);
}

std::string short_rational(const mpq_class& q) {
    if (mpz_sizeinbase(q.get_num_mpz_t(), 10) + mpz_sizeinbase(q.get_den_mpz_t(), 10) <= 60)
        return q.get_str();
    return "~" + std::to_string(q.get_d());
}

verdict exact_verdict(int cmp) {
    verdict v;
    v.result = from_cmp(cmp);
    v.method = certification_method::exact;
    return v;
}

} // namespace

verdict compare_pure_products(const factor_product& p, const factor_product& q) {
    auto ratio = (p / q).prime_normalized();
    auto [num, den] = ratio.cleared(ratio.denominator_lcm());
    verdict v = exact_verdict(cmp(num, den));
    v.lhs_low = v.lhs_high = short_integer(num);
    v.rhs_low = v.rhs_high = short_integer(den);
    return v;
}

verdict certify_sum_inequality(const factor_product& a, const factor_product& b, const factor_product& c,
                               bool equality_expected, const certify_options& opts) {
    if (opts.start_bits < 2 || opts.start_bits > opts.cap_bits)
        throw std::invalid_argument("precision schedule needs 2 <= start <= cap");

    if (a.is_integer() || a.is_one()) {
        if ((b.is_integer() || b.is_one()) && (c.is_integer() || c.is_one())) {
            mpz_class lhs = a.to_integer();
            mpz_class rhs = b.to_integer() + c.to_integer();
            verdict v = exact_verdict(cmp(lhs, rhs));
            if (opts.record_witness) {
                v.lhs_low = v.lhs_high = short_integer(lhs);
                v.rhs_low = v.rhs_high = short_integer(rhs);
            }
            return v;
        }
    }

    if (equality_expected) {
        auto rb = (b / a).to_rational();
        auto rc = (c / a).to_rational();
        if (rb && rc) {
            mpq_class rhs = *rb + *rc;
            verdict v = exact_verdict(cmp(mpq_class(1), rhs));
            if (opts.record_witness) {
                v.lhs_low = v.lhs_high = "1";
                v.rhs_low = v.rhs_high = short_rational(rhs);
            }
            return v;
        }
    }

    verdict v;
    for (unsigned bits = opts.start_bits;; bits = std::min(bits * 2, opts.cap_bits)) {
        interval ia = a.evaluate(bits);
        interval isum = b.evaluate(bits) + c.evaluate(bits);
        v.precision_bits = bits;
        v.method = certification_method::interval;
        bool greater = certainly_greater(ia, isum);
        bool less = certainly_greater(isum, ia);
        if (greater || less || bits >= opts.cap_bits) {
            v.result = greater ? outcome::strictly_greater : (less ? outcome::strictly_less : outcome::undecided);
            if (opts.record_witness) {
                v.lhs_low = ia.lo_string();
                v.lhs_high = ia.hi_string();
                v.rhs_low = isum.lo_string();
                v.rhs_high = isum.hi_string();
            }
            return v;
        }
    }
}

f_fact_entry check_f_fact_tuple(int a, int a_shift, int b, int b_shift) {
    if (!(0 < a_shift && a_shift < a && 0 < b_shift && b_shift < b))
        throw std::invalid_argument("need 0 < a' < a and 0 < b' < b");
    auto lhs = factor_product::of_factor(a - a_shift, b) * factor_product::of_factor(a, b - b_shift);
    auto rhs = factor_product::of_factor(a - a_shift, b - b_shift) * factor_product::of_factor(a, b);
    return {a, a_shift, b, b_shift, compare_pure_products(lhs, rhs)};
}

f_fact_report sweep_f_fact(int delta) {
    if (delta < 2)
        throw std::invalid_argument("f-fact sweep needs delta >= 2");
    f_fact_report r;
    r.delta = delta;
    for (int a = 2; a <= delta; ++a)
        for (int as = 1; as < a; ++as)
            for (int b = 2; b <= delta; ++b)
                for (int bs = 1; bs < b; ++bs) {
                    r.entries.push_back(check_f_fact_tuple(a, as, b, bs));
                    if (!r.entries.back().v.holds())
                        ++r.failures;
                }
    return r;
}

f_fact_report check_f_fact(int delta) {
    if (delta < 2 || delta > 5)
        throw std::invalid_argument("f-fact check covers delta in [2, 5]");
    return sweep_f_fact(delta);
}

} // namespace kahn
