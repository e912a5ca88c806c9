#include "fullhom/subgraph.hpp"

#include <array>
#include <bit>

namespace fullhom {

namespace {

struct EmbedSearch {
    const Graph& pattern;
    const Graph& host;
    std::array<int, kMaxOrder> assign{};
    std::array<int, kMaxOrder> host_deg{};
    std::uint32_t used = 0;

    bool dfs(int p) {
        const int k = pattern.order();
        if (p == k) return true;
        const int pdeg = pattern.degree(p);
        // images of p's pattern-neighbours / non-neighbours among assigned
        std::uint32_t needed = 0, assigned = 0;
        const std::uint32_t prow = pattern.neighbourhood(p);
        for (int q = 0; q < p; ++q) {
            const std::uint32_t img = std::uint32_t{1} << assign[q];
            assigned |= img;
            if ((prow >> q) & 1u) needed |= img;
        }
        for (int w = 0; w < host.order(); ++w) {
            if ((used >> w) & 1u) continue;
            if (host_deg[w] < pdeg) continue;
            if ((host.neighbourhood(w) & assigned) != needed) continue;
            assign[p] = w;
            used |= std::uint32_t{1} << w;
            if (dfs(p + 1)) return true;
            used &= ~(std::uint32_t{1} << w);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern,
                                                       const Graph& host) {
    if (pattern.order() > host.order()) return std::nullopt;
    EmbedSearch s{pattern, host};
    const int host_max = host.max_degree();
    if (pattern.max_degree() > host_max) return std::nullopt;
    for (int w = 0; w < host.order(); ++w) s.host_deg[w] = host.degree(w);
    if (!s.dfs(0)) return std::nullopt;
    return std::vector<int>(s.assign.begin(), s.assign.begin() + pattern.order());
}

bool contains_induced(const Graph& g, const Graph& pattern) {
    return find_induced_embedding(pattern, g).has_value();
}

}  // namespace fullhom
