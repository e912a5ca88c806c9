#include "fullhom/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace fullhom {

namespace {

void solve_rec(const std::vector<int>& coeffs, std::size_t i, int target,
               std::vector<int>& partial, std::vector<std::vector<int>>& out) {
    if (i + 1 == coeffs.size()) {
        if (target % coeffs[i] == 0) {
            partial.push_back(target / coeffs[i]);
            out.push_back(partial);
            partial.pop_back();
        }
        return;
    }
    for (int x = 0; x * coeffs[i] <= target; ++x) {
        partial.push_back(x);
        solve_rec(coeffs, i + 1, target - x * coeffs[i], partial, out);
        partial.pop_back();
    }
}

ObsMember cycle_member(int m) {
    ObsMember member;
    member.kind = ObsMember::Kind::cycle;
    member.cycle_length = m;
    return member;
}

ObsMember named_member(NamedGraph which) {
    ObsMember member;
    member.kind = ObsMember::Kind::named;
    member.named = which;
    return member;
}

ObsMember forest_member(int m1, int m2, int m4, int m6) {
    ObsMember member;
    member.kind = ObsMember::Kind::linear_forest;
    if (m1) member.forest.multiplicities[1] = m1;
    if (m2) member.forest.multiplicities[2] = m2;
    if (m4) member.forest.multiplicities[4] = m4;
    if (m6) member.forest.multiplicities[6] = m6;
    return member;
}

void require_path_domain(int n) {
    if (n < 2)
        throw std::domain_error("closed forms for path hosts need n >= 2");
}

std::vector<Graph> materialize_sorted(const std::vector<ObsMember>& members) {
    std::vector<std::pair<CanonicalForm, Graph>> entries;
    entries.reserve(members.size());
    for (const ObsMember& m : members) {
        const CanonicalData cd = canonicalize(m.materialize());
        entries.emplace_back(cd.form(), cd.canonical_graph());
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    entries.erase(std::unique(entries.begin(), entries.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  entries.end());
    std::vector<Graph> out;
    out.reserve(entries.size());
    for (auto& e : entries) out.push_back(std::move(e.second));
    return out;
}

ObstructionSet materialize_set(const Graph& host, const std::vector<ObsMember>& members) {
    ObstructionSet out{host, {}};
    for (const ObsMember& m : members) {
        const CanonicalData cd = canonicalize(m.materialize());
        out.members.emplace_back(cd.form(), cd.canonical_graph());
    }
    std::sort(out.members.begin(), out.members.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.members.erase(
        std::unique(out.members.begin(), out.members.end(),
                    [](const auto& a, const auto& b) { return a.first == b.first; }),
        out.members.end());
    return out;
}

}  // namespace

std::vector<std::vector<int>> solve_linear(const std::vector<int>& coeffs, int target) {
    if (coeffs.empty()) throw std::invalid_argument("solve_linear needs coefficients");
    for (int c : coeffs)
        if (c < 1) throw std::invalid_argument("solve_linear coefficients must be positive");
    std::vector<std::vector<int>> out;
    if (target < 0) return out;
    std::vector<int> partial;
    solve_rec(coeffs, 0, target, partial, out);
    std::sort(out.begin(), out.end());
    return out;
}

int ObsMember::order() const {
    switch (kind) {
        case Kind::cycle: return cycle_length;
        case Kind::named: return 6;
        case Kind::linear_forest: return forest.total_order();
    }
    return 0;
}

Graph ObsMember::materialize() const {
    switch (kind) {
        case Kind::cycle: return cycle_graph(cycle_length);
        case Kind::named: return make_named(named);
        case Kind::linear_forest: return realize(forest);
    }
    throw std::logic_error("unknown member kind");
}

std::vector<ObsMember> set_C_members(int n) {
    require_path_domain(n);
    std::vector<ObsMember> out;
    out.push_back(cycle_member(3));
    for (int m = 5; m <= n + 1; ++m) out.push_back(cycle_member(m));
    return out;
}

std::vector<ObsMember> set_O_members(int n) {
    require_path_domain(n);
    std::vector<ObsMember> out;
    if (n >= 6) out.push_back(named_member(NamedGraph::A));
    if (n >= 5) out.push_back(named_member(NamedGraph::B));
    if (n >= 7) out.push_back(named_member(NamedGraph::E));
    return out;
}

std::vector<ObsMember> set_LF_members(int n) {
    require_path_domain(n);
    std::vector<ObsMember> out;
    for (const auto& s : solve_linear({3}, n + 2))
        if (s[0] > 0) out.push_back(forest_member(0, s[0], 0, 0));
    for (const auto& s : solve_linear({3, 5}, n + 1))
        out.push_back(forest_member(1, s[0], s[1], 0));
    for (const auto& s : solve_linear({3, 5, 7}, n))
        out.push_back(forest_member(1, s[0], s[1], s[2]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ObsMember> obs_paths_members(int n) {
    require_path_domain(n);
    std::vector<ObsMember> out = set_C_members(n);
    const std::vector<ObsMember> lf = set_LF_members(n);
    const std::vector<ObsMember> o = set_O_members(n);
    out.insert(out.end(), lf.begin(), lf.end());
    out.insert(out.end(), o.begin(), o.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ObsMember> obs_cycles_members(int n) {
    if (n < 5)
        throw std::domain_error("closed forms for cycle hosts need n >= 5");
    std::vector<ObsMember> out = set_C_members(n - 2);
    const std::vector<ObsMember> lf = set_LF_members(n - 1);
    const std::vector<ObsMember> o = set_O_members(n - 1);
    out.insert(out.end(), lf.begin(), lf.end());
    out.insert(out.end(), o.begin(), o.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Graph> set_C(int n) { return materialize_sorted(set_C_members(n)); }
std::vector<Graph> set_O(int n) { return materialize_sorted(set_O_members(n)); }
std::vector<Graph> set_LF(int n) { return materialize_sorted(set_LF_members(n)); }

ObstructionSet obs_paths_closed(int n) {
    return materialize_set(path_graph(n), obs_paths_members(n));
}

ObstructionSet obs_cycles_closed(int n) {
    if (n < 5)
        throw std::domain_error("closed forms for cycle hosts need n >= 5");
    return materialize_set(cycle_graph(n), obs_cycles_members(n));
}

namespace {

long long count_solutions_2(int a, int b, int target) {
    long long count = 0;
    for (int x = 0; x * a <= target; ++x)
        if ((target - x * a) % b == 0) ++count;
    return count;
}

long long count_LF(int n) {
    long long count = (n + 2) % 3 == 0 ? 1 : 0;
    count += count_solutions_2(3, 5, n + 1);
    for (int z = 0; 7 * z <= n; ++z) count += count_solutions_2(3, 5, n - 7 * z);
    return count;
}

long long count_C(int n) { return 1 + std::max(0, n - 3); }

long long count_O(int n) {
    if (n <= 4) return 0;
    if (n == 5) return 1;
    if (n == 6) return 2;
    return 3;
}

}  // namespace

long long count_obs_paths(int n) {
    require_path_domain(n);
    return count_C(n) + count_O(n) + count_LF(n);
}

long long count_obs_cycles(int n) {
    if (n < 5)
        throw std::domain_error("closed forms for cycle hosts need n >= 5");
    return count_C(n - 2) + count_O(n - 1) + count_LF(n - 1);
}

}  // namespace fullhom
