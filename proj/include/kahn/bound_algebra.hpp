#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kahn/graph.hpp"
#include "kahn/interval.hpp"
#include "kahn/rational.hpp"

namespace kahn {

// Base of f(a, b) = (2^a + 2^b - 1)^(1/ab), i.e. ind(K_{a,b}).
std::uint64_t factor_base(int a, int b);

// Formal product of integer powers n^e(n) with exact rational exponents.
// Bases are kept as given (3 from f(1,1) and 3 from anything else simply
// merge); prime_normalized() gives the unique prime-power form.
class factor_product {
  public:
    factor_product() = default;

    static factor_product power(std::uint64_t base, rational e);
    static factor_product power_of_two(std::int64_t k) { return power(2, rational(k)); }
    // f(a, b)^count.
    static factor_product of_factor(int a, int b, std::int64_t count = 1);

    void multiply(std::uint64_t base, rational e);
    void multiply_factor(int a, int b, std::int64_t count = 1);

    factor_product& operator*=(const factor_product& o);
    friend factor_product operator*(factor_product a, const factor_product& b) { return a *= b; }
    factor_product inverse() const;
    friend factor_product operator/(const factor_product& a, const factor_product& b) {
        return a * b.inverse();
    }

    const std::map<std::uint64_t, rational>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    bool has_integral_exponents() const;
    // Integral exponents, none negative.
    bool is_integer() const;
    mpz_class to_integer() const;

    std::int64_t denominator_lcm() const;
    // (prod over e>0 of n^(L e), prod over e<0 of n^(-L e)); L * e must be integral.
    std::pair<mpz_class, mpz_class> cleared(std::int64_t L) const;

    factor_product prime_normalized() const;
    // Exact value when the product is a rational number.
    std::optional<mpq_class> to_rational() const;

    interval evaluate(unsigned precision_bits) const;

    // "5^(1/2) * 7^(1/4)"; "1" for the empty product.
    std::string to_string() const;

    friend bool operator==(const factor_product&, const factor_product&) = default;

  private:
    std::map<std::uint64_t, rational> exps_;
};

class degree_bound_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Pi(G) = 2^iso(G) * prod over edges uv of f(d(u), d(v)).
factor_product pi_product(const graph& g, std::size_t max_degree = 5);

} // namespace kahn
