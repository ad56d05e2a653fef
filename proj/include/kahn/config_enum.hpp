#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "kahn/local_config.hpp"

namespace kahn {

// max_degree_root: every level-1/level-2 degree is at most the root degree.
// min_degree_root: every level-1/level-2 degree is at least the root degree.
enum class root_rule { max_degree_root, min_degree_root };
std::string_view to_string(root_rule r);

// All configurations with one root degree under one rule. Level-1 and
// level-2 degrees range over [degree_low, degree_high].
struct config_space {
    int delta_eff = 0;
    root_rule rule = root_rule::max_degree_root;
    int root_degree = 0;
    int degree_low = 1;
    int degree_high = 1;
};

// delta_eff = d0, degrees in [1, d0].
config_space max_degree_space(int d0);
// delta_eff = delta, degrees in [max(1, d0), delta].
config_space min_degree_space(int d0, int delta = 5);

// Independent unit of work: one non-increasing level-1 degree vector.
struct config_shard {
    config_space space;
    std::vector<std::uint8_t> level1_degrees;
};

std::vector<config_shard> make_shards(const config_space& space);

struct enumeration_stats {
    std::uint64_t leaves = 0;   // complete structures reached
    std::uint64_t accepted = 0; // canonical representatives emitted

    enumeration_stats& operator+=(const enumeration_stats& o) {
        leaves += o.leaves;
        accepted += o.accepted;
        return *this;
    }
};

using config_visitor = std::function<void(const local_config&)>;

// Orderly generation: emits each isomorphism class exactly once, already in
// canonical form (canonical(cfg) encodes cfg as emitted).
enumeration_stats enumerate_shard(const config_shard& shard, const config_visitor& visit);
enumeration_stats enumerate_configs(const config_space& space, const config_visitor& visit);
std::vector<local_config> collect_configs(const config_space& space);

} // namespace kahn
