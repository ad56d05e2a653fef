#include "kahn/indset.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace kahn {

namespace {

class counter {
  public:
    counter(const graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    mpz_class count(const vertex_set& alive) {
        mpz_class total = 1;
        vertex_set rest = alive;
        for (vertex s = rest.first(); s != no_vertex; s = rest.first()) {
            vertex_set comp = grow(s, alive);
            for (vertex v : comp.members())
                rest.erase(v);
            total *= count_component(comp);
        }
        return total;
    }

  private:
    vertex_set grow(vertex s, const vertex_set& alive) const {
        vertex_set comp(g_.order());
        std::vector<vertex> stack{s};
        comp.insert(s);
        while (!stack.empty()) {
            vertex v = stack.back();
            stack.pop_back();
            for (vertex w : g_.neighbors(v)) {
                if (alive.contains(w) && !comp.contains(w)) {
                    comp.insert(w);
                    stack.push_back(w);
                }
            }
        }
        return comp;
    }

    mpz_class count_component(const vertex_set& comp) {
        if (++nodes_ > budget_)
            throw budget_exceeded("independent-set counting exceeded its node budget");
        auto members = comp.members();
        if (members.size() == 1)
            return 2;
        std::string key(reinterpret_cast<const char*>(members.data()), members.size() * sizeof(vertex));
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        vertex pivot = no_vertex;
        std::size_t best = 0;
        for (vertex v : members) {
            std::size_t d = 0;
            for (vertex w : g_.neighbors(v))
                d += comp.contains(w) ? 1 : 0;
            if (pivot == no_vertex || d > best) {
                pivot = v;
                best = d;
            }
        }

        vertex_set without = comp;
        without.erase(pivot);
        mpz_class result = count(without);
        for (vertex w : g_.neighbors(pivot))
            if (without.contains(w))
                without.erase(w);
        result += count(without);
        if (memo_.size() < memo_limit)
            memo_.emplace(std::move(key), result);
        return result;
    }

    const graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    // Same vertex set, same count: keyed on the member list.
    static constexpr std::size_t memo_limit = 1u << 20;
    std::unordered_map<std::string, mpz_class> memo_;
};

} // namespace

mpz_class count_independent_sets(const graph& g, count_options opts) {
    counter c(g, opts.node_budget);
    return c.count(vertex_set(g.order(), true));
}

mpz_class count_bruteforce(const graph& g) {
    const std::size_t n = g.order();
    if (n > 30)
        throw std::invalid_argument("brute-force counting is limited to 30 vertices");
    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= std::uint32_t{1} << v;
        nbr[v] |= std::uint32_t{1} << u;
    }
    std::uint64_t total = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        bool independent = true;
        for (std::size_t v = 0; v < n && independent; ++v)
            if (((s >> v) & 1) && (nbr[v] & s))
                independent = false;
        total += independent ? 1 : 0;
    }
    mpz_class out;
    mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(total));
    return out;
}

} // namespace kahn
