#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kahn/certify.hpp"
#include "kahn/local_config.hpp"

namespace kahn {

// Level-2 profile around a vertex of a d-regular bipartite graph: k level-2
// vertices, the i-th with xs[i] level-3 neighbours.
struct regular_profile {
    int d = 0;
    int k = 0;
    std::vector<int> xs; // non-increasing, parts in [0, d-1], sum k*d - d*(d-1)

    friend bool operator==(const regular_profile&, const regular_profile&) = default;
};

// All profiles for d in [1, 5], ordered by k, then xs lexicographically
// decreasing.
std::vector<regular_profile> enumerate_profiles(int d);

// g(x) = 2^d + 2^x - 1.
mpz_class g_value(int d, int x);

// (2^(d+1) - 1)^(k-d+1) * 2^(d(d-1)) versus prod g(x_i), exactly.
verdict check_profile(const regular_profile& p);

// A local configuration realizing the profile (level-3 padding d).
local_config profile_config(const regular_profile& p);

struct regular_report {
    int d = 0;
    std::uint64_t profiles = 0;
    std::uint64_t strict = 0;
    std::uint64_t equalities = 0;
    std::uint64_t failing = 0;
    std::vector<regular_profile> equality_profiles;
    std::vector<std::string> problems;
    bool pass = false;
    double seconds = 0;
};

// Passes iff every profile is strict except the single equality at
// k = d-1 with all x_i = 0.
regular_report verify_regular(int d);

// g(x+2) g(x) > g(x+1)^2 for 0 <= x <= d-2.
bool check_g_ratio_monotone(int d);

} // namespace kahn
