#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

#include "kahn/graph.hpp"

namespace kahn {

// Thrown when exact counting would exceed its recursion-node budget. The
// counter never returns an approximate value.
class budget_exceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct count_options {
    std::uint64_t node_budget = 10'000'000;
};

// ind(G): number of independent sets, including the empty set.
//
// Splits into connected components and multiplies; inside a component it
// branches on a maximum-degree vertex (lowest index on ties) using
// ind(C) = ind(C - x) + ind(C - x - N(x)). Component counts are memoized
// per call by vertex set.
mpz_class count_independent_sets(const graph& g, count_options opts = {});

// Enumerates all 2^n vertex subsets. Test oracle; refuses n > 30.
mpz_class count_bruteforce(const graph& g);

} // namespace kahn
