#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kahn {

// Exact rational with 64-bit parts, always in lowest terms with a positive
// denominator. Arithmetic throws std::overflow_error instead of wrapping.
class rational {
  public:
    constexpr rational() = default;
    rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    rational operator-() const;
    rational& operator+=(const rational& o);
    rational& operator-=(const rational& o) { return *this += -o; }
    rational& operator*=(const rational& o);

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }

    friend bool operator==(const rational&, const rational&) = default;
    friend std::strong_ordering operator<=>(const rational& a, const rational& b);

    std::string to_string() const;

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

} // namespace kahn
