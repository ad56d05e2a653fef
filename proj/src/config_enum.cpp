#include "kahn/config_enum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kahn {

std::string_view to_string(root_rule r) {
    return r == root_rule::max_degree_root ? "max_degree_root" : "min_degree_root";
}

config_space max_degree_space(int d0) {
    if (d0 < 0 || d0 > max_config_root_degree)
        throw std::invalid_argument("root degree out of range");
    return {d0, root_rule::max_degree_root, d0, 1, std::max(d0, 1)};
}

config_space min_degree_space(int d0, int delta) {
    if (d0 < 0 || d0 > delta || delta > max_config_root_degree)
        throw std::invalid_argument("root degree out of range");
    return {delta, root_rule::min_degree_root, d0, std::max(d0, 1), delta};
}

std::vector<config_shard> make_shards(const config_space& space) {
    std::vector<config_shard> out;
    const int d0 = space.root_degree;
    std::vector<std::uint8_t> degs(static_cast<std::size_t>(d0), static_cast<std::uint8_t>(space.degree_high));
    // Non-increasing vectors in lexicographically decreasing order.
    for (;;) {
        out.push_back({space, degs});
        int i = d0 - 1;
        while (i >= 0 && degs[static_cast<std::size_t>(i)] == space.degree_low)
            --i;
        if (i < 0)
            break;
        auto v = static_cast<std::uint8_t>(degs[static_cast<std::size_t>(i)] - 1);
        for (int j = i; j < d0; ++j)
            degs[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

namespace {

struct shard_search {
    const config_shard& shard;
    const config_visitor& visit;
    int d0 = 0;
    std::vector<level2_record> types;
    std::vector<std::size_t> block_end;    // block_end[i]: end of the popcount block containing i
    std::vector<bool> last_of_singleton;   // last type of a singleton mask
    std::vector<std::vector<std::size_t>> pre; // pre[p][s]: type sent to s by permutation p
    std::vector<int> counts;
    std::vector<int> remaining;
    enumeration_stats stats;

    shard_search(const config_shard& s, const config_visitor& v) : shard(s), visit(v) {
        d0 = s.space.root_degree;
        build_types();
        build_permutations();
        counts.assign(types.size(), 0);
        for (auto d : s.level1_degrees)
            remaining.push_back(d - 1);
    }

    void build_types() {
        std::vector<std::uint8_t> masks;
        for (unsigned m = 1; m < (1u << d0); ++m)
            masks.push_back(static_cast<std::uint8_t>(m));
        std::stable_sort(masks.begin(), masks.end(),
                         [](auto a, auto b) { return std::popcount(a) > std::popcount(b); });
        for (auto m : masks) {
            int lo = std::max(shard.space.degree_low, std::popcount(m));
            for (int b = lo; b <= shard.space.degree_high; ++b)
                types.push_back({m, static_cast<std::uint8_t>(b)});
        }
        block_end.resize(types.size());
        last_of_singleton.assign(types.size(), false);
        for (std::size_t i = types.size(); i-- > 0;) {
            bool same_block = i + 1 < types.size() && types[i + 1].multiplicity() == types[i].multiplicity();
            block_end[i] = same_block ? block_end[i + 1] : i + 1;
            bool same_mask = i + 1 < types.size() && types[i + 1].neighbors == types[i].neighbors;
            last_of_singleton[i] = types[i].multiplicity() == 1 && !same_mask;
        }
    }

    std::size_t type_index(level2_record r) const {
        for (std::size_t i = 0; i < types.size(); ++i)
            if (types[i] == r)
                return i;
        throw std::logic_error("type missing from shard table");
    }

    void build_permutations() {
        const auto& degs = shard.level1_degrees;
        std::vector<int> p(static_cast<std::size_t>(d0));
        std::iota(p.begin(), p.end(), 0);
        while (std::next_permutation(p.begin(), p.end())) {
            bool ok = true;
            for (int i = 0; i < d0 && ok; ++i)
                ok = degs[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] == degs[static_cast<std::size_t>(i)];
            if (!ok)
                continue;
            std::vector<std::size_t> inv(types.size());
            for (std::size_t t = 0; t < types.size(); ++t) {
                level2_record r = types[t];
                std::uint8_t m = 0;
                for (int u = 0; u < d0; ++u)
                    if ((r.neighbors >> u) & 1)
                        m = static_cast<std::uint8_t>(m | (1u << p[static_cast<std::size_t>(u)]));
                inv[type_index({m, r.degree})] = t;
            }
            pre.push_back(std::move(inv));
        }
    }

    // Compares the permuted count vector with the current one over
    // [from, to). Returns +1 if the permuted one is larger.
    int compare_block(std::size_t p, std::size_t from, std::size_t to) const {
        for (std::size_t s = from; s < to; ++s) {
            int a = counts[pre[p][s]], b = counts[s];
            if (a != b)
                return a > b ? 1 : -1;
        }
        return 0;
    }

    void emit() {
        local_config cfg;
        cfg.delta_eff = shard.space.delta_eff;
        cfg.root_degree = d0;
        cfg.level1_degrees = shard.level1_degrees;
        for (std::size_t t = 0; t < types.size(); ++t)
            for (int c = 0; c < counts[t]; ++c)
                cfg.level2.push_back(types[t]);
        ++stats.accepted;
        visit(cfg);
    }

    void run(std::size_t i, std::size_t block_start, const std::vector<std::size_t>& live) {
        if (i == types.size() || (i > 0 && block_end[i - 1] == i)) {
            // Finished a block: drop permutations that already lose, prune
            // if one wins.
            std::vector<std::size_t> next;
            for (auto p : live) {
                int c = compare_block(p, block_start, i);
                if (c > 0)
                    return;
                if (c == 0)
                    next.push_back(p);
            }
            if (i == types.size()) {
                ++stats.leaves;
                if (std::all_of(remaining.begin(), remaining.end(), [](int r) { return r == 0; }))
                    emit();
                return;
            }
            descend(i, i, next);
            return;
        }
        descend(i, block_start, live);
    }

    void descend(std::size_t i, std::size_t block_start, const std::vector<std::size_t>& live) {
        const auto mask = types[i].neighbors;
        int cap = 1 << 20;
        for (int u = 0; u < d0; ++u)
            if ((mask >> u) & 1)
                cap = std::min(cap, remaining[static_cast<std::size_t>(u)]);
        int lo = last_of_singleton[i] ? cap : 0;
        for (int c = cap; c >= lo; --c) {
            counts[i] = c;
            for (int u = 0; u < d0; ++u)
                if ((mask >> u) & 1)
                    remaining[static_cast<std::size_t>(u)] -= c;
            run(i + 1, block_start, live);
            for (int u = 0; u < d0; ++u)
                if ((mask >> u) & 1)
                    remaining[static_cast<std::size_t>(u)] += c;
        }
        counts[i] = 0;
    }
};

} // namespace

enumeration_stats enumerate_shard(const config_shard& shard, const config_visitor& visit) {
    if (static_cast<int>(shard.level1_degrees.size()) != shard.space.root_degree)
        throw std::invalid_argument("shard degree vector does not match root degree");
    if (shard.space.root_degree == 0) {
        local_config cfg;
        cfg.delta_eff = shard.space.delta_eff;
        visit(cfg);
        return {1, 1};
    }
    shard_search s(shard, visit);
    std::vector<std::size_t> all(s.pre.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    s.run(0, 0, all);
    return s.stats;
}

enumeration_stats enumerate_configs(const config_space& space, const config_visitor& visit) {
    enumeration_stats total;
    for (const auto& shard : make_shards(space))
        total += enumerate_shard(shard, visit);
    return total;
}

std::vector<local_config> collect_configs(const config_space& space) {
    std::vector<local_config> out;
    enumerate_configs(space, [&](const local_config& c) { out.push_back(c); });
    return out;
}

} // namespace kahn
