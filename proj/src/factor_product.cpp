#include "kahn/bound_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace kahn {

// ---------------------------------------------------------------- interval

interval::interval(unsigned precision_bits) {
    mpfr_init2(lo_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_init2(hi_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_ui(lo_, 0, MPFR_RNDD);
    mpfr_set_ui(hi_, 0, MPFR_RNDU);
    live_ = true;
}

interval::interval(const interval& o) : interval(o.precision()) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

interval::interval(interval&& o) noexcept : interval(o) {}

interval& interval::operator=(const interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

interval& interval::operator=(interval&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

interval::~interval() { release(); }

void interval::release() {
    if (live_) {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
        live_ = false;
    }
}

interval interval::exact(const mpz_class& value, unsigned precision_bits) {
    interval r(precision_bits);
    mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
    return r;
}

interval operator+(const interval& a, const interval& b) {
    interval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

// Positive intervals only; every product of factors is positive.
interval operator*(const interval& a, const interval& b) {
    interval r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

bool interval::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

double interval::relative_width() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(hi_));
    mpfr_div(t, hi_, lo_, MPFR_RNDU);
    mpfr_sub_ui(t, t, 1, MPFR_RNDU);
    double w = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return w;
}

namespace {

std::string render(mpfr_srcptr x, int digits, bool up) {
    char* buf = nullptr;
    if (up)
        mpfr_asprintf(&buf, "%.*RUg", digits, x);
    else
        mpfr_asprintf(&buf, "%.*RDg", digits, x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

} // namespace

std::string interval::lo_string(int digits) const { return render(lo_, digits, false); }
std::string interval::hi_string(int digits) const { return render(hi_, digits, true); }

bool certainly_greater(const interval& a, const interval& b) { return mpfr_greater_p(a.lo(), b.hi()) != 0; }

// ---------------------------------------------------------- factor_product

std::uint64_t factor_base(int a, int b) {
    if (a < 0 || b < 0 || a > 62 || b > 62)
        throw std::domain_error("factor degrees must lie in [0, 62]");
    return (std::uint64_t{1} << a) + (std::uint64_t{1} << b) - 1;
}

factor_product factor_product::power(std::uint64_t base, rational e) {
    factor_product p;
    p.multiply(base, e);
    return p;
}

factor_product factor_product::of_factor(int a, int b, std::int64_t count) {
    factor_product p;
    p.multiply_factor(a, b, count);
    return p;
}

void factor_product::multiply(std::uint64_t base, rational e) {
    if (base == 0)
        throw std::domain_error("factor base must be positive");
    if (base == 1 || e.is_zero())
        return;
    auto [it, inserted] = exps_.try_emplace(base, e);
    if (!inserted) {
        it->second += e;
        if (it->second.is_zero())
            exps_.erase(it);
    }
}

void factor_product::multiply_factor(int a, int b, std::int64_t count) {
    if (a < 1 || b < 1)
        throw std::domain_error("f(a, b) needs positive degrees");
    multiply(factor_base(a, b), rational(count, static_cast<std::int64_t>(a) * b));
}

factor_product& factor_product::operator*=(const factor_product& o) {
    for (const auto& [base, e] : o.exps_)
        multiply(base, e);
    return *this;
}

factor_product factor_product::inverse() const {
    factor_product r;
    for (const auto& [base, e] : exps_)
        r.exps_.emplace(base, -e);
    return r;
}

bool factor_product::has_integral_exponents() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const auto& kv) { return kv.second.is_integer(); });
}

bool factor_product::is_integer() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](const auto& kv) { return kv.second.is_integer() && kv.second.sign() > 0; });
}

namespace {

mpz_class pow_big(std::uint64_t base, std::int64_t e) {
    mpz_class b, r;
    mpz_set_ui(b.get_mpz_t(), static_cast<unsigned long>(base));
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k > 0)
            out.emplace_back(p, k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

// Thread-local cache of enclosures of log(n) at a given precision.
const interval& log_enclosure(std::uint64_t n, unsigned prec) {
    thread_local std::unordered_map<std::uint64_t, std::unordered_map<unsigned, interval>> cache;
    auto& per_base = cache[n];
    auto it = per_base.find(prec);
    if (it == per_base.end()) {
        interval r(prec);
        mpfr_set_ui(r.lo(), static_cast<unsigned long>(n), MPFR_RNDD);
        mpfr_set_ui(r.hi(), static_cast<unsigned long>(n), MPFR_RNDU);
        mpfr_log(r.lo(), r.lo(), MPFR_RNDD);
        mpfr_log(r.hi(), r.hi(), MPFR_RNDU);
        it = per_base.emplace(prec, std::move(r)).first;
    }
    return it->second;
}

} // namespace

mpz_class factor_product::to_integer() const {
    if (!is_integer())
        throw std::domain_error("product is not an integer: " + to_string());
    mpz_class r = 1;
    for (const auto& [base, e] : exps_)
        r *= pow_big(base, e.num());
    return r;
}

std::int64_t factor_product::denominator_lcm() const {
    std::int64_t L = 1;
    for (const auto& [base, e] : exps_)
        L = checked_lcm(L, e.den());
    return L;
}

std::pair<mpz_class, mpz_class> factor_product::cleared(std::int64_t L) const {
    mpz_class num = 1, den = 1;
    for (const auto& [base, e] : exps_) {
        rational k = e * rational(L);
        if (!k.is_integer())
            throw std::domain_error("clearing multiple leaves a fractional exponent");
        if (k.sign() > 0)
            num *= pow_big(base, k.num());
        else
            den *= pow_big(base, -k.num());
    }
    return {num, den};
}

factor_product factor_product::prime_normalized() const {
    factor_product r;
    for (const auto& [base, e] : exps_)
        for (auto [p, k] : factorize(base))
            r.multiply(p, e * rational(k));
    return r;
}

std::optional<mpq_class> factor_product::to_rational() const {
    auto norm = prime_normalized();
    if (!norm.has_integral_exponents())
        return std::nullopt;
    auto [num, den] = norm.cleared(1);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

interval factor_product::evaluate(unsigned precision_bits) const {
    interval log_sum(precision_bits);
    mpfr_t term;
    mpfr_init2(term, static_cast<mpfr_prec_t>(precision_bits));
    for (const auto& [base, e] : exps_) {
        const interval& lg = log_enclosure(base, precision_bits);
        const long p = static_cast<long>(e.num());
        const unsigned long q = static_cast<unsigned long>(e.den());
        // Lower end: e > 0 uses log's lower bound, e < 0 its upper bound.
        mpfr_mul_si(term, p > 0 ? lg.lo() : lg.hi(), p, MPFR_RNDD);
        mpfr_div_ui(term, term, q, MPFR_RNDD);
        mpfr_add(log_sum.lo(), log_sum.lo(), term, MPFR_RNDD);
        mpfr_mul_si(term, p > 0 ? lg.hi() : lg.lo(), p, MPFR_RNDU);
        mpfr_div_ui(term, term, q, MPFR_RNDU);
        mpfr_add(log_sum.hi(), log_sum.hi(), term, MPFR_RNDU);
    }
    mpfr_clear(term);
    interval r(precision_bits);
    mpfr_exp(r.lo(), log_sum.lo(), MPFR_RNDD);
    mpfr_exp(r.hi(), log_sum.hi(), MPFR_RNDU);
    return r;
}

std::string factor_product::to_string() const {
    if (exps_.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [base, e] : exps_) {
        if (!first)
            out << " * ";
        first = false;
        out << base;
        if (e != rational(1))
            out << "^(" << e.to_string() << ")";
    }
    return out.str();
}

factor_product pi_product(const graph& g, std::size_t max_degree) {
    if (g.max_degree() > max_degree)
        throw degree_bound_error("maximum degree " + std::to_string(g.max_degree()) + " exceeds bound " +
                                 std::to_string(max_degree));
    factor_product p = factor_product::power_of_two(static_cast<std::int64_t>(g.isolated_count()));
    for (auto [u, v] : g.edges())
        p.multiply_factor(static_cast<int>(g.degree(u)), static_cast<int>(g.degree(v)));
    return p;
}

} // namespace kahn
