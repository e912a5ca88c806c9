#include "fullhom/obstructions.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fullhom/enumeration.hpp"
#include "fullhom/fullhom.hpp"
#include "fullhom/pd_core.hpp"

namespace fullhom {

bool ObstructionSet::contains(const Graph& g) const {
    const CanonicalForm key = canonical_form(g);
    auto it = std::lower_bound(members.begin(), members.end(), key,
                               [](const auto& m, const CanonicalForm& k) { return m.first < k; });
    return it != members.end() && it->first == key;
}

std::vector<CanonicalForm> ObstructionSet::keys() const {
    std::vector<CanonicalForm> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.first);
    return out;
}

std::vector<Graph> ObstructionSet::graphs() const {
    std::vector<Graph> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.second);
    return out;
}

bool ObstructionSet::same_members(const ObstructionSet& other) const {
    return keys() == other.keys();
}

bool is_minimal_obstruction(const Graph& g, const Graph& host) {
    if (full_hom_exists(g, host)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!full_hom_exists(delete_vertex(g, v), host)) return false;
    return true;
}

namespace {

void sort_and_dedupe(std::vector<std::pair<CanonicalForm, Graph>>& members) {
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    members.erase(std::unique(members.begin(), members.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  members.end());
}

ObstructionSet oracle_scan(const Graph& host, const OracleOptions& opt, int min_order) {
    const int max_order = host.order() + 1;
    if (max_order > 10)
        throw std::domain_error("oracle supports hosts with at most 9 vertices");

    ObstructionSet out{host, {}};
    std::mutex m;
    const auto consider = [&](const Graph& g) {
        if (g.order() < min_order || g.order() > max_order) return;
        if (!is_point_determining(g)) return;
        if (!is_minimal_obstruction(g, host)) return;
        const CanonicalData cd = canonicalize(g);
        std::lock_guard<std::mutex> lock(m);
        out.members.emplace_back(cd.form(), cd.canonical_graph());
    };

    if (!opt.catalog.empty()) {
        std::atomic<std::size_t> next{0};
        unsigned hw = std::thread::hardware_concurrency();
        int workers = opt.workers > 0 ? opt.workers : static_cast<int>(hw ? hw : 1);
        workers = std::min<std::size_t>(workers, opt.catalog.size());
        auto run = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= opt.catalog.size()) return;
                consider(opt.catalog[i]);
            }
        };
        if (workers <= 1) {
            run();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(run);
            for (auto& t : pool) t.join();
        }
    } else {
        EnumerationRequest req;
        req.max_order = max_order;
        req.filter = GraphFilter::all;
        req.workers = opt.workers;
        enumerate_visit(req, consider);
    }
    sort_and_dedupe(out.members);
    return out;
}

}  // namespace

ObstructionSet obs_oracle(const Graph& host, const OracleOptions& opt) {
    return oracle_scan(host, opt, 1);
}

ObstructionSet obs_star_oracle(const Graph& host, const OracleOptions& opt) {
    return oracle_scan(host, opt, host.order() + 1);
}

TransferReport check_obs_transfer(const Graph& h, const Graph& g, const OracleOptions& opt) {
    if (g.order() != h.order() + 1)
        throw std::domain_error("check_obs_transfer: |V(g)| must be |V(h)|+1");
    const ObstructionSet star_h = obs_star_oracle(h, opt);
    if (!star_h.contains(g))
        throw std::domain_error("check_obs_transfer: g is not in obs*(h)");

    const CanonicalForm g_key = canonical_form(g);
    const ObstructionSet obs_g = obs_oracle(g, opt);
    const ObstructionSet obs_h = obs_oracle(h, opt);
    const ObstructionSet star_g = obs_star_oracle(g, opt);

    TransferReport report{h, g, obs_g.keys(), {}, false};
    for (const CanonicalForm& k : obs_h.keys())
        if (k != g_key) report.rhs.push_back(k);
    for (const CanonicalForm& k : star_g.keys()) report.rhs.push_back(k);
    std::sort(report.rhs.begin(), report.rhs.end());
    report.rhs.erase(std::unique(report.rhs.begin(), report.rhs.end()), report.rhs.end());
    report.holds = report.lhs == report.rhs;
    return report;
}

Graph construct_witness_host(const Graph& g) {
    if (!is_connected(g) || !is_point_determining(g))
        throw std::domain_error(
            "construct_witness_host requires a connected point-determining graph");
    std::vector<Graph> parts;
    parts.reserve(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x)
        parts.push_back(full_core(delete_vertex(g, x)).core);
    Graph host = disjoint_union(parts);
    if (!is_minimal_obstruction(g, host))
        throw std::logic_error("constructed host failed the minimal-obstruction check");
    return host;
}

bool obs_star_existence_regular(const Graph& g) {
    if (!is_point_determining(g) || !is_regular(g))
        throw std::domain_error(
            "obs_star_existence_regular requires a point-determining regular graph");
    if (g.order() < 2) return false;
    for (int x = 0; x < g.order(); ++x)
        if (is_minimal_obstruction(g, delete_vertex(g, x))) return true;
    return false;
}

}  // namespace fullhom
