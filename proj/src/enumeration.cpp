#include "fullhom/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "fullhom/canonical.hpp"
#include "fullhom/graph6.hpp"
#include "fullhom/pd_core.hpp"

namespace fullhom {

bool passes_filter(const Graph& g, GraphFilter filter) {
    switch (filter) {
        case GraphFilter::all: return true;
        case GraphFilter::point_determining: return is_point_determining(g);
        case GraphFilter::connected: return is_connected(g);
        case GraphFilter::connected_regular: return is_connected(g) && is_regular(g);
    }
    return false;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct VertexInv {
    int deg;
    std::uint64_t h1, h2;
    auto operator<=>(const VertexInv&) const = default;
};

// Two rounds of neighbourhood refinement hashed per vertex; purely
// structural, so equal-invariant vertices in isomorphic copies correspond.
void vertex_invariants(const std::uint32_t* rows, int n,
                       std::array<VertexInv, kMaxOrder>& inv) {
    std::array<std::uint64_t, kMaxOrder> h{};
    for (int v = 0; v < n; ++v) {
        inv[v].deg = std::popcount(rows[v]);
        h[v] = mix64(static_cast<std::uint64_t>(inv[v].deg) + 1);
    }
    for (int round = 0; round < 2; ++round) {
        std::array<std::uint64_t, kMaxOrder> nh{};
        for (int v = 0; v < n; ++v) {
            std::uint64_t s = h[v] * 0x100000001b3ULL;
            std::uint32_t m = rows[v];
            while (m) {
                const int u = std::countr_zero(m);
                m &= m - 1;
                s += mix64(h[u]);
            }
            nh[v] = mix64(s);
            if (round == 0)
                inv[v].h1 = nh[v];
            else
                inv[v].h2 = nh[v];
        }
        h = nh;
    }
}

// Canonical-deletion acceptance: the new vertex (index order-1) must lie in
// the orbit of the canonically chosen deletion vertex.  The choice is made
// among the vertices maximizing the invariant; when that vertex is unique
// no labeling search is needed at all.
struct AcceptOutcome {
    bool ok = false;
    std::optional<CanonicalData> cdata;
};

AcceptOutcome canonical_accept(const Graph& child) {
    AcceptOutcome out;
    const int m = child.order();
    const int vnew = m - 1;

    std::array<VertexInv, kMaxOrder> inv;
    vertex_invariants(child.rows(), m, inv);
    VertexInv best = inv[0];
    for (int v = 1; v < m; ++v) best = std::max(best, inv[v]);
    if (inv[vnew] != best) return out;

    std::uint32_t argmax = 0;
    for (int v = 0; v < m; ++v)
        if (inv[v] == best) argmax |= std::uint32_t{1} << v;
    if (std::popcount(argmax) == 1) {
        out.ok = true;
        return out;
    }

    CanonicalData cd = canonicalize(child);
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < m; ++i) pos[cd.labeling[i]] = i;
    int target = -1, target_pos = -1;
    for (std::uint32_t s = argmax; s;) {
        const int v = std::countr_zero(s);
        s &= s - 1;
        if (pos[v] > target_pos) {
            target_pos = pos[v];
            target = v;
        }
    }
    out.ok = cd.orbit[vnew] == cd.orbit[target];
    out.cdata = std::move(cd);
    return out;
}

std::uint32_t apply_perm_to_set(const std::array<std::uint8_t, kMaxOrder>& p,
                                std::uint32_t s) {
    std::uint32_t out = 0;
    while (s) {
        const int v = std::countr_zero(s);
        s &= s - 1;
        out |= std::uint32_t{1} << p[v];
    }
    return out;
}

struct Task {
    Graph graph;
    CanonicalData cdata;
};

struct Enumerator {
    int max_order;
    GraphFilter filter;
    const std::function<void(const Graph&)>& visit;

    void emit(const Graph& g) const {
        if (passes_filter(g, filter)) visit(g);
    }

    // Expands one node: children are one-vertex extensions, one per orbit
    // of neighbourhood subsets under Aut(parent).
    template <typename OnChild>
    void expand(const Graph& parent, const CanonicalData& pdata,
                const OnChild& on_child) const {
        const int n = parent.order();
        const std::uint32_t nsubsets = std::uint32_t{1} << n;
        const int min_pop = parent.max_degree();
        const bool trivial_group = pdata.generators.empty();

        std::array<std::uint64_t, (std::uint32_t{1} << 10) / 64> seen{};
        std::vector<std::uint32_t> stack;

        for (std::uint32_t s = 0; s < nsubsets; ++s) {
            if (std::popcount(s) < min_pop) continue;
            if (!trivial_group) {
                if ((seen[s >> 6] >> (s & 63)) & 1u) continue;
                // mark the whole orbit of s
                stack.assign(1, s);
                seen[s >> 6] |= std::uint64_t{1} << (s & 63);
                while (!stack.empty()) {
                    const std::uint32_t t = stack.back();
                    stack.pop_back();
                    for (const auto& p : pdata.generators) {
                        const std::uint32_t u = apply_perm_to_set(p, t);
                        if (!((seen[u >> 6] >> (u & 63)) & 1u)) {
                            seen[u >> 6] |= std::uint64_t{1} << (u & 63);
                            stack.push_back(u);
                        }
                    }
                }
            }
            Graph child = parent.with_vertex(s);
            AcceptOutcome acc = canonical_accept(child);
            if (!acc.ok) continue;
            on_child(child, std::move(acc.cdata));
        }
    }

    void expand_subtree(const Graph& node, const CanonicalData& ndata) const {
        expand(node, ndata, [&](const Graph& child, std::optional<CanonicalData> cdata) {
            emit(child);
            if (child.order() == max_order) return;
            if (!cdata) cdata = canonicalize(child);
            expand_subtree(child, *cdata);
        });
    }

    // Serial expansion down to split_order; nodes at split_order become tasks.
    void expand_serial(const Graph& node, const CanonicalData& ndata, int split_order,
                       std::vector<Task>& tasks) const {
        expand(node, ndata, [&](const Graph& child, std::optional<CanonicalData> cdata) {
            emit(child);
            if (child.order() == max_order) return;
            if (!cdata) cdata = canonicalize(child);
            if (child.order() < split_order)
                expand_serial(child, *cdata, split_order, tasks);
            else
                tasks.push_back(Task{child, std::move(*cdata)});
        });
    }
};

}  // namespace

void enumerate_visit(const EnumerationRequest& req,
                     const std::function<void(const Graph&)>& visit) {
    if (req.max_order < 1 || req.max_order > 11)
        throw std::domain_error("unsupported enumeration order");
    if (req.max_order == 11 && !req.allow_best_effort)
        throw std::domain_error("order 11 is best-effort; request it explicitly");

    Enumerator e{req.max_order, req.filter, visit};
    const Graph root(1);
    e.emit(root);
    if (req.max_order == 1) return;

    const CanonicalData root_data = canonicalize(root);
    const int split_order = std::clamp(req.max_order - 3, 1, 7);

    std::vector<Task> tasks;
    e.expand_serial(root, root_data, split_order, tasks);

    unsigned hw = std::thread::hardware_concurrency();
    int workers = req.workers > 0 ? req.workers : static_cast<int>(hw ? hw : 1);
    workers = std::min<int>(workers, static_cast<int>(tasks.size()));

    if (workers <= 1) {
        for (const Task& t : tasks) e.expand_subtree(t.graph, t.cdata);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                e.expand_subtree(tasks[i].graph, tasks[i].cdata);
            }
        });
    for (auto& t : pool) t.join();
}

std::vector<Graph> enumerate_collect(const EnumerationRequest& req) {
    struct Entry {
        CanonicalForm key;
        Graph graph;
    };
    std::vector<Entry> entries;
    std::mutex m;
    enumerate_visit(req, [&](const Graph& g) {
        const CanonicalData cd = canonicalize(g);
        Entry e{cd.form(), cd.canonical_graph()};
        std::lock_guard<std::mutex> lock(m);
        entries.push_back(std::move(e));
    });
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key; });
    std::vector<Graph> out;
    out.reserve(entries.size());
    for (Entry& e : entries) out.push_back(std::move(e.graph));
    return out;
}

std::vector<std::string> enumerate_graph6(const EnumerationRequest& req) {
    std::vector<std::string> lines;
    std::mutex m;
    enumerate_visit(req, [&](const Graph& g) {
        std::string line = graph6_encode(canonicalize(g).canonical_graph());
        std::lock_guard<std::mutex> lock(m);
        lines.push_back(std::move(line));
    });
    std::sort(lines.begin(), lines.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return lines;
}

std::vector<Graph> enumerate_regular_connected(int max_order, int workers) {
    if (max_order < 1 || max_order > 10)
        throw std::domain_error("unsupported enumeration order");
    EnumerationRequest req;
    req.max_order = max_order;
    req.filter = GraphFilter::connected_regular;
    req.workers = workers;
    return enumerate_collect(req);
}

}  // namespace fullhom
