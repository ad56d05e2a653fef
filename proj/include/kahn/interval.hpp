#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace kahn {

// Closed interval [lo, hi] of MPFR numbers. Every operation rounds the lower
// end down and the upper end up, so the exact result is always enclosed.
class interval {
  public:
    explicit interval(unsigned precision_bits);
    interval(const interval& o);
    interval(interval&& o) noexcept;
    interval& operator=(const interval& o);
    interval& operator=(interval&& o) noexcept;
    ~interval();

    static interval exact(const mpz_class& value, unsigned precision_bits);

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(lo_)); }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

    friend interval operator+(const interval& a, const interval& b);
    friend interval operator*(const interval& a, const interval& b);

    bool contains(const mpq_class& q) const;
    // hi / lo - 1 for positive intervals.
    double relative_width() const;

    // Outward-rounded decimal renderings.
    std::string lo_string(int digits = 20) const;
    std::string hi_string(int digits = 20) const;

  private:
    void release();
    mpfr_t lo_;
    mpfr_t hi_;
    bool live_ = false;
};

// a > b for every point of both intervals.
bool certainly_greater(const interval& a, const interval& b);

} // namespace kahn
