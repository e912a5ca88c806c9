#include "fullhom/canonical.hpp"

#include <algorithm>
#include <bit>

namespace fullhom {

namespace {

// Branch-and-bound search for the lexicographically least adjacency
// bit-string.  Positions are filled one vertex at a time; placing a vertex
// at position d determines the d new bits of the string (its adjacency to
// the prefix), so subtrees whose next column exceeds the best known column
// can be cut.  Ties are cut with orbits of the automorphisms discovered at
// leaf level, which also leaves behind a generating set of the full group.
struct Canonizer {
    int n;
    const std::uint32_t* adj;
    std::uint32_t all;

    std::array<std::uint32_t, kMaxOrder> best_cols{};
    int best_len = 0;
    bool best_complete = false;
    std::array<std::uint8_t, kMaxOrder> best_order{};
    std::array<std::uint8_t, kMaxOrder> cur_order{};
    // acc[d][v] = column vertex v would contribute at position d
    std::array<std::array<std::uint32_t, kMaxOrder>, kMaxOrder + 1> acc{};
    std::uint32_t used = 0;
    std::vector<std::array<std::uint8_t, kMaxOrder>> gens;

    explicit Canonizer(const Graph& g) : n(g.order()), adj(g.rows()), all(g.vertex_mask()) {}

    void record_leaf() {
        if (!best_complete) {
            best_order = cur_order;
            best_complete = true;
            return;
        }
        std::array<std::uint8_t, kMaxOrder> p{};
        bool identity = true;
        for (int i = 0; i < n; ++i) {
            p[cur_order[i]] = best_order[i];
            if (cur_order[i] != best_order[i]) identity = false;
        }
        if (!identity) gens.push_back(p);
    }

    // alpha(sub) <= |sub| - (size of any maximal matching of sub)
    int matching_bound(std::uint32_t sub) const {
        int matched = 0;
        std::uint32_t rem = sub;
        while (rem) {
            const int v = std::countr_zero(rem);
            rem &= rem - 1;
            const std::uint32_t nbrs = adj[v] & rem;
            if (nbrs) {
                rem &= ~(std::uint32_t{1} << std::countr_zero(nbrs));
                ++matched;
            }
        }
        return std::popcount(sub) - matched;
    }

    // Orbit of v under the generators that fix cur_order[0..d-1] pointwise.
    std::uint32_t stabilizer_orbit(int v, int d) const {
        std::uint32_t orb = std::uint32_t{1} << v;
        if (gens.empty()) return orb;
        std::uint32_t frontier = orb;
        while (frontier) {
            const int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            for (const auto& p : gens) {
                bool fixes = true;
                for (int i = 0; i < d; ++i)
                    if (p[cur_order[i]] != cur_order[i]) {
                        fixes = false;
                        break;
                    }
                if (!fixes) continue;
                const int y = p[x];
                if (!((orb >> y) & 1u)) {
                    orb |= std::uint32_t{1} << y;
                    frontier |= std::uint32_t{1} << y;
                }
            }
        }
        return orb;
    }

    void dfs(int d) {
        if (d == n) {
            record_leaf();
            return;
        }
        const std::uint32_t unused = all & ~used;
        const auto& cols = acc[d];

        std::uint32_t min_col = ~std::uint32_t{0};
        for (std::uint32_t m = unused; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            min_col = std::min(min_col, cols[v]);
        }

        if (d < best_len) {
            if (min_col > best_cols[d]) return;
            if (min_col < best_cols[d]) {
                best_len = d;
                best_complete = false;
            }
        }
        if (d >= best_len) {
            best_cols[d] = min_col;
            best_len = d + 1;
        } else if (min_col == 0) {
            // Tying through a zero run means placing one independent vertex
            // (also nonadjacent to the whole prefix) per zero column; prune
            // when the eligible vertices cannot supply that many.
            int needed = 0;
            while (d + needed < best_len && best_cols[d + needed] == 0) ++needed;
            if (needed > 1) {
                std::uint32_t eligible = 0;
                for (std::uint32_t m = unused; m;) {
                    const int v = std::countr_zero(m);
                    m &= m - 1;
                    if (cols[v] == 0) eligible |= std::uint32_t{1} << v;
                }
                if (matching_bound(eligible) < needed) return;
            }
        }

        std::uint32_t covered = 0;
        for (std::uint32_t m = unused; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if (cols[v] != min_col || ((covered >> v) & 1u)) continue;

            cur_order[d] = static_cast<std::uint8_t>(v);
            used |= std::uint32_t{1} << v;
            const std::uint32_t row = adj[v];
            auto& next = acc[d + 1];
            for (std::uint32_t w_mask = unused & ~(std::uint32_t{1} << v); w_mask;) {
                const int w = std::countr_zero(w_mask);
                w_mask &= w_mask - 1;
                next[w] = (cols[w] << 1) | ((row >> w) & 1u);
            }
            dfs(d + 1);
            used &= ~(std::uint32_t{1} << v);

            covered |= stabilizer_orbit(v, d);
        }
    }

    CanonicalData result() const {
        CanonicalData out;
        out.order = n;
        out.labeling = best_order;
        // position of each original vertex
        std::array<int, kMaxOrder> pos{};
        for (int i = 0; i < n; ++i) pos[best_order[i]] = i;
        for (int i = 0; i < n; ++i) {
            std::uint32_t row = adj[best_order[i]];
            std::uint32_t canon_row = 0;
            while (row) {
                const int w = std::countr_zero(row);
                row &= row - 1;
                canon_row |= std::uint32_t{1} << pos[w];
            }
            out.canon_rows[i] = canon_row;
        }
        // orbits: union-find over the collected generators
        std::array<std::uint8_t, kMaxOrder> parent{};
        for (int v = 0; v < n; ++v) parent[v] = static_cast<std::uint8_t>(v);
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        for (const auto& p : gens)
            for (int v = 0; v < n; ++v) {
                const int a = find(v), b = find(p[v]);
                if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
            }
        for (int v = 0; v < n; ++v) out.orbit[v] = static_cast<std::uint8_t>(find(v));
        out.generators = gens;
        return out;
    }
};

}  // namespace

CanonicalData canonicalize(const Graph& g) {
    Canonizer c(g);
    if (g.order() == 1) {
        CanonicalData out;
        out.order = 1;
        return out;
    }
    c.dfs(0);
    return c.result();
}

CanonicalForm CanonicalData::form() const {
    CanonicalForm f;
    f.key[0] = static_cast<std::uint8_t>(order);
    int bit = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i) {
            if ((canon_rows[j] >> i) & 1u)
                f.key[1 + bit / 8] |= std::uint8_t(0x80u >> (bit % 8));
            ++bit;
        }
    return f;
}

std::string CanonicalForm::hex() const {
    static const char digits[] = "0123456789abcdef";
    const int n = key[0];
    const int nbytes = 1 + (n * (n - 1) / 2 + 7) / 8;
    std::string out;
    out.reserve(static_cast<std::size_t>(2 * nbytes));
    for (int i = 0; i < nbytes; ++i) {
        out.push_back(digits[key[i] >> 4]);
        out.push_back(digits[key[i] & 0xf]);
    }
    return out;
}

Graph CanonicalData::canonical_graph() const {
    Graph g(order);
    for (int u = 0; u < order; ++u) {
        std::uint32_t row = canon_rows[u];
        while (row) {
            const int v = std::countr_zero(row);
            row &= row - 1;
            if (v > u) g.add_edge(u, v);
        }
    }
    return g;
}

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form(); }

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::array<int, kMaxOrder> dg{}, dh{};
    for (int v = 0; v < g.order(); ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    std::sort(dg.begin(), dg.begin() + g.order());
    std::sort(dh.begin(), dh.begin() + h.order());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

std::vector<std::uint32_t> automorphism_orbits(const Graph& g) {
    const CanonicalData data = canonicalize(g);
    std::vector<std::uint32_t> orbits;
    for (int rep = 0; rep < g.order(); ++rep) {
        if (data.orbit[rep] != rep) continue;
        std::uint32_t mask = 0;
        for (int v = 0; v < g.order(); ++v)
            if (data.orbit[v] == rep) mask |= std::uint32_t{1} << v;
        orbits.push_back(mask);
    }
    return orbits;
}

bool is_vertex_transitive(const Graph& g) {
    return automorphism_orbits(g).size() == 1;
}

}  // namespace fullhom
