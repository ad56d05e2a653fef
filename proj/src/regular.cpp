#include "kahn/regular.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace kahn {

namespace {

void check_d(int d) {
    if (d < 1 || d > 5)
        throw std::invalid_argument("regular case covers d in [1, 5]");
}

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

} // namespace

std::vector<regular_profile> enumerate_profiles(int d) {
    check_d(d);
    std::vector<regular_profile> out;
    for (int k = d - 1; k <= d * (d - 1); ++k) {
        const int sum = k * d - d * (d - 1);
        std::vector<int> xs;
        auto rec = [&](auto&& self, int left, int cap) -> void {
            if (static_cast<int>(xs.size()) == k) {
                if (left == 0)
                    out.push_back({d, k, xs});
                return;
            }
            int slots = k - static_cast<int>(xs.size());
            for (int x = std::min(cap, left); x >= 0; --x) {
                if (x * slots < left)
                    break;
                xs.push_back(x);
                self(self, left - x, x);
                xs.pop_back();
            }
        };
        rec(rec, sum, d - 1);
    }
    return out;
}

mpz_class g_value(int d, int x) {
    return pow2(static_cast<unsigned long>(d)) + pow2(static_cast<unsigned long>(x)) - 1;
}

verdict check_profile(const regular_profile& p) {
    const int d = p.d;
    if (static_cast<int>(p.xs.size()) != p.k || p.k < d - 1 || p.k > d * (d - 1))
        throw std::invalid_argument("malformed regular profile");
    mpz_class lhs;
    mpz_class base = pow2(static_cast<unsigned long>(d + 1)) - 1;
    mpz_pow_ui(lhs.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(p.k - d + 1));
    lhs *= pow2(static_cast<unsigned long>(d * (d - 1)));
    mpz_class rhs = 1;
    for (int x : p.xs)
        rhs *= g_value(d, x);
    verdict v;
    v.method = certification_method::exact;
    int c = cmp(lhs, rhs);
    v.result = c > 0 ? outcome::strictly_greater : (c < 0 ? outcome::strictly_less : outcome::equal);
    v.lhs_low = v.lhs_high = lhs.get_str();
    v.rhs_low = v.rhs_high = rhs.get_str();
    return v;
}

local_config profile_config(const regular_profile& p) {
    const int d = p.d;
    local_config cfg;
    cfg.delta_eff = d;
    cfg.root_degree = d;
    cfg.level1_degrees.assign(static_cast<std::size_t>(d), static_cast<std::uint8_t>(d));
    // Each level-2 vertex takes its d - x_i level-1 neighbours among those
    // with the most spare capacity; with equal capacities this always
    // succeeds.
    std::vector<int> spare(static_cast<std::size_t>(d), d - 1);
    for (int x : p.xs) {
        std::vector<int> idx(static_cast<std::size_t>(d));
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return spare[static_cast<std::size_t>(a)] > spare[static_cast<std::size_t>(b)];
        });
        level2_record r;
        r.degree = static_cast<std::uint8_t>(d);
        for (int j = 0; j < d - x; ++j) {
            auto u = static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]);
            if (spare[u] == 0)
                throw config_error("profile has no bipartite realization");
            --spare[u];
            r.neighbors = static_cast<std::uint8_t>(r.neighbors | (1u << u));
        }
        cfg.level2.push_back(r);
    }
    validate_config(cfg);
    return cfg;
}

regular_report verify_regular(int d) {
    auto start = std::chrono::steady_clock::now();
    regular_report rep;
    rep.d = d;
    for (const auto& p : enumerate_profiles(d)) {
        ++rep.profiles;
        verdict v = check_profile(p);
        const bool extremal =
            p.k == d - 1 && std::all_of(p.xs.begin(), p.xs.end(), [](int x) { return x == 0; });
        switch (v.result) {
        case outcome::strictly_greater: ++rep.strict; break;
        case outcome::equal:
            ++rep.equalities;
            rep.equality_profiles.push_back(p);
            if (!extremal)
                rep.problems.push_back("unexpected equality at k=" + std::to_string(p.k));
            break;
        default:
            ++rep.failing;
            rep.problems.push_back("profile fails at k=" + std::to_string(p.k));
            break;
        }
        if (extremal && v.result != outcome::equal)
            rep.problems.push_back("extremal profile is not an equality");
    }
    if (rep.equalities != 1)
        rep.problems.push_back("expected exactly one equality profile, found " + std::to_string(rep.equalities));
    rep.pass = rep.problems.empty();
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

bool check_g_ratio_monotone(int d) {
    check_d(d);
    for (int x = 0; x + 2 <= d; ++x)
        if (!(g_value(d, x + 2) * g_value(d, x) > g_value(d, x + 1) * g_value(d, x + 1)))
            return false;
    return true;
}

} // namespace kahn
