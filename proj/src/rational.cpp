#include "kahn/rational.hpp"

#include <numeric>

namespace kahn {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("rational overflow");
    return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("rational overflow");
    return r;
}

} // namespace

rational::rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = mul(num, -1);
        den = mul(den, -1);
    }
    auto g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

rational rational::operator-() const {
    rational r;
    r.num_ = mul(num_, -1);
    r.den_ = den_;
    return r;
}

rational& rational::operator+=(const rational& o) {
    auto g = std::gcd(den_, o.den_);
    auto lhs = mul(num_, o.den_ / g);
    auto rhs = mul(o.num_, den_ / g);
    *this = rational(add(lhs, rhs), mul(den_ / g, o.den_));
    return *this;
}

rational& rational::operator*=(const rational& o) {
    auto g1 = std::gcd(num_, o.den_);
    auto g2 = std::gcd(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    *this = rational(mul(num_ / g1, o.num_ / g2), mul(den_ / g2, o.den_ / g1));
    return *this;
}

std::strong_ordering operator<=>(const rational& a, const rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
}

std::string rational::to_string() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    return mul(a / std::gcd(a, b), b);
}

} // namespace kahn
