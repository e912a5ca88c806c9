// Acceptance suite: runs every criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit code 0 iff all pass.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "fullhom/canonical.hpp"
#include "fullhom/closed_form.hpp"
#include "fullhom/enumeration.hpp"
#include "fullhom/fullhom.hpp"
#include "fullhom/graph6.hpp"
#include "fullhom/obstructions.hpp"
#include "fullhom/pd_core.hpp"
#include "fullhom/subgraph.hpp"
#include "fullhom/validate.hpp"

using namespace fullhom;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    const int workers = static_cast<int>(std::min<std::size_t>(hw ? hw : 1, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

std::string g6_list(const ObstructionSet& set) {
    std::string out;
    for (const auto& [key, g] : set.members) out += (out.empty() ? "" : " ") + graph6_encode(g);
    return out;
}

// ---- criterion 1: reference-table reproduction + n=9 adjudication ----
void criterion_1() {
    Timer timer;
    bool pass = true;
    std::string detail;

    for (int n : {5, 6, 7, 8, 10}) {
        if (obs_cycles_members(n) != reference_table_row(n)) {
            pass = false;
            detail += "closed form deviates from the table at n=" + std::to_string(n) + "; ";
        }
    }
    // row 9: closed form = printed row plus C_7
    {
        std::vector<ObsMember> row9 = reference_table_row(9);
        ObsMember c7;
        c7.kind = ObsMember::Kind::cycle;
        c7.cycle_length = 7;
        const bool row_omits_c7 = !std::binary_search(row9.begin(), row9.end(), c7);
        row9.push_back(c7);
        std::sort(row9.begin(), row9.end());
        if (!row_omits_c7 || obs_cycles_members(9) != row9) {
            pass = false;
            detail += "closed form at n=9 is not the printed row plus C_7; ";
        }
    }
    // extended oracle run: order-10 stream adjudicates the n=9 row
    const ObstructionSet closed9 = obs_cycles_closed(9);
    const ObstructionSet oracle9 = obs_oracle(cycle_graph(9));
    if (!closed9.same_members(oracle9)) {
        pass = false;
        detail += "oracle(C_9) = {" + g6_list(oracle9) + "} differs from the closed form; ";
    }
    if (!oracle9.contains(cycle_graph(7))) {
        pass = false;
        detail += "oracle(C_9) misses C_7, siding with the printed row; ";
    }
    if (pass)
        detail = "rows 5-8 and 10 exact; oracle confirms row 9 needs C_7 (" +
                 std::to_string(oracle9.members.size()) + " members)";
    report(1, "reference-table reproduction for cycle hosts", pass, detail, timer.seconds());
}

// ---- criterion 2/3: closed forms equal the oracle ----
void criterion_2_3(const std::vector<Graph>& catalog9) {
    OracleOptions opt;
    opt.catalog = catalog9;

    Timer t2;
    bool pass2 = true;
    std::string detail2;
    for (int n = 2; n <= 8; ++n) {
        const ObstructionSet closed = obs_paths_closed(n);
        const ObstructionSet oracle = obs_oracle(path_graph(n), opt);
        if (!closed.same_members(oracle)) {
            pass2 = false;
            detail2 += "P_" + std::to_string(n) + ": closed {" + g6_list(closed) +
                       "} vs oracle {" + g6_list(oracle) + "}; ";
        }
    }
    report(2, "path obstructions: closed form equals oracle for n=2..8", pass2, detail2,
           t2.seconds());

    Timer t3;
    bool pass3 = true;
    std::string detail3;
    for (int n = 5; n <= 8; ++n) {
        const ObstructionSet closed = obs_cycles_closed(n);
        const ObstructionSet oracle = obs_oracle(cycle_graph(n), opt);
        if (!closed.same_members(oracle)) {
            pass3 = false;
            detail3 += "C_" + std::to_string(n) + ": closed {" + g6_list(closed) +
                       "} vs oracle {" + g6_list(oracle) + "}; ";
        }
    }
    report(3, "cycle obstructions: closed form equals oracle for n=5..8", pass3, detail3,
           t3.seconds());
}

// ---- criterion 4: minimality matrix for the named graphs and cycles ----
void criterion_4() {
    Timer timer;
    bool pass = true;
    std::string detail;

    struct Candidate {
        std::string name;
        Graph graph;
        std::function<bool(int)> predicate;
    };
    std::vector<Candidate> candidates;
    candidates.push_back({"A", make_named(NamedGraph::A), [](int n) { return n >= 6; }});
    // the statement side of the A/B/E classification says B qualifies from
    // n = 5 on; the matrix below adjudicates it against the decision
    // procedure itself
    candidates.push_back({"B", make_named(NamedGraph::B), [](int n) { return n >= 5; }});
    candidates.push_back({"E", make_named(NamedGraph::E), [](int n) { return n >= 7; }});
    for (int m = 3; m <= 9; ++m)
        candidates.push_back({"C_" + std::to_string(m), cycle_graph(m),
                              [m](int n) { return m == 3 || (5 <= m && m <= n + 1); }});

    for (const Candidate& c : candidates)
        for (int n = 3; n <= 10; ++n) {
            const bool got = is_minimal_obstruction(c.graph, path_graph(n));
            if (got != c.predicate(n)) {
                pass = false;
                detail += c.name + " vs P_" + std::to_string(n) + ": got " +
                          (got ? "true" : "false") + "; ";
            }
        }
    if (pass)
        detail = "80 (graph, host) pairs exact; adjudicated: B qualifies from n=5 on "
                 "(the stricter n>=6 reading fails at n=5)";
    report(4, "minimality matrix for A, B, E and C_3..C_9 against P_3..P_10", pass, detail,
           timer.seconds());
}

// ---- criterion 5: mu formula against brute force ----
void criterion_5() {
    Timer timer;
    ValidateOptions opt;
    opt.max_n = 9;
    const ValidationReport report5 = run_suite(Suite::mu, opt);
    std::string detail;
    for (const CheckRecord& r : report5.records)
        if (!r.pass) detail += r.id + ": " + r.witness + "; ";
    if (report5.all_passed()) detail = "all linear forests on up to 9 vertices";
    report(5, "mu equals the brute-force least path host", report5.all_passed(), detail,
           timer.seconds());
}

// ---- criterion 6: obs* of connected regular hosts ----
void criterion_6(const std::vector<Graph>& catalog9) {
    Timer timer;
    OracleOptions opt;
    opt.catalog = catalog9;
    bool pass = true;
    std::string detail;
    int hosts_checked = 0;

    for (const Graph& h : enumerate_regular_connected(8)) {
        const int k = h.order();
        const bool complete = h.edge_count() == k * (k - 1) / 2;
        if (k < 2 || (k < 3 && !complete)) continue;
        const ObstructionSet star = obs_star_oracle(h, opt);
        ++hosts_checked;
        if (complete) {
            std::vector<CanonicalForm> expected;
            if (k == 2) {
                expected.push_back(
                    canonical_form(disjoint_union({Graph(1), complete_graph(2)})));
                expected.push_back(canonical_form(complete_graph(3)));
            } else {
                expected.push_back(canonical_form(complete_graph(k + 1)));
            }
            std::sort(expected.begin(), expected.end());
            if (star.keys() != expected) {
                pass = false;
                detail += "obs*(K_" + std::to_string(k) + ") = {" + g6_list(star) + "}; ";
            }
        } else if (!star.members.empty()) {
            pass = false;
            detail += "obs*(" + graph6_encode(h) + ") = {" + g6_list(star) + "} not empty; ";
        }
    }
    if (pass)
        detail = std::to_string(hosts_checked) +
                 " connected regular hosts: empty for non-complete, displayed sets for K_n";
    report(6, "obs* of connected regular hosts on 3..8 vertices", pass, detail,
           timer.seconds());
}

// ---- criterion 7: |obs*(h)| <= 2 for every host on <= 7 vertices ----
void criterion_7(const std::vector<Graph>& catalog9) {
    Timer timer;
    std::vector<Graph> hosts;
    for (const Graph& g : catalog9)
        if (g.order() <= 7) hosts.push_back(g);

    std::mutex m;
    bool pass = true;
    std::string detail;
    parallel_for(hosts.size(), [&](std::size_t i) {
        OracleOptions opt;
        opt.workers = 1;
        opt.catalog = catalog9;
        const ObstructionSet star = obs_star_oracle(hosts[i], opt);
        if (star.members.size() > 2) {
            std::lock_guard<std::mutex> lock(m);
            pass = false;
            detail += "host " + graph6_encode(hosts[i]) + " has " +
                      std::to_string(star.members.size()) + " members; ";
        }
    });
    if (pass) detail = std::to_string(hosts.size()) + " hosts, all within the bound";
    report(7, "at most two obs* members for every host on <= 7 vertices", pass, detail,
           timer.seconds());
}

// ---- criterion 8: blow-up recognizer equivalence up to order 8 ----
void criterion_8(const std::vector<Graph>& catalog9) {
    Timer timer;
    std::vector<Graph> classes;
    for (const Graph& g : catalog9)
        if (g.order() <= 8) classes.push_back(g);

    std::mutex m;
    bool pass = true;
    std::string detail;
    parallel_for(classes.size(), [&](std::size_t i) {
        const Graph& g = classes[i];
        const bool via_core = is_blowup_of_linear_forest(g).is_blowup;
        bool forbidden_free = !contains_induced(g, cycle_graph(3));
        for (int c = 5; c <= g.order() && forbidden_free; ++c)
            forbidden_free = !contains_induced(g, cycle_graph(c));
        if (g.order() >= 6 && forbidden_free)
            forbidden_free = !contains_induced(g, make_named(NamedGraph::A)) &&
                             !contains_induced(g, make_named(NamedGraph::B)) &&
                             !contains_induced(g, make_named(NamedGraph::E));
        if (via_core != forbidden_free) {
            std::lock_guard<std::mutex> lock(m);
            pass = false;
            detail += graph6_encode(g) + "; ";
        }
    });
    if (pass) detail = std::to_string(classes.size()) + " classes, recognizers agree";
    report(8, "blow-up of a linear forest: core route equals forbidden-subgraph route",
           pass, detail, timer.seconds());
}

// ---- criterion 9: decision procedure equals exhaustive assignment ----
void criterion_9() {
    Timer timer;
    EnumerationRequest gr;
    gr.max_order = 6;
    const std::vector<Graph> gs = enumerate_collect(gr);
    EnumerationRequest hr;
    hr.max_order = 5;
    const std::vector<Graph> hs = enumerate_collect(hr);

    std::mutex m;
    bool pass = true;
    std::string detail;
    parallel_for(gs.size(), [&](std::size_t i) {
        for (const Graph& h : hs) {
            if (full_hom_exists(gs[i], h) != full_hom_brute(gs[i], h)) {
                std::lock_guard<std::mutex> lock(m);
                pass = false;
                detail += graph6_encode(gs[i]) + " -> " + graph6_encode(h) + "; ";
            }
        }
    });
    if (pass)
        detail = std::to_string(gs.size() * hs.size()) + " pairs, decisions identical";
    report(9, "core-route decision equals exhaustive assignment on |g|<=6 x |h|<=5", pass,
           detail, timer.seconds());
}

// ---- criterion 10: counting formulas ----
void criterion_10() {
    Timer timer;
    bool pass = true;
    std::string detail;
    // member lists carry the full n <= 50 range (graphs above 32 vertices
    // exceed the adjacency-word capacity); graph-level materialization is
    // cross-checked on the cheap range
    for (int n = 2; n <= 50 && pass; ++n) {
        const long long bound = 3 + n + (n + 8) * (n + 8) / 15 + 10;
        if (count_obs_paths(n) != static_cast<long long>(obs_paths_members(n).size()) ||
            count_obs_paths(n) > bound) {
            pass = false;
            detail = "paths mismatch at n=" + std::to_string(n);
        }
        if (n <= 14 && count_obs_paths(n) !=
                           static_cast<long long>(obs_paths_closed(n).members.size())) {
            pass = false;
            detail = "paths materialization mismatch at n=" + std::to_string(n);
        }
        if (n >= 5) {
            if (count_obs_cycles(n) != static_cast<long long>(obs_cycles_members(n).size()) ||
                count_obs_cycles(n) > bound) {
                pass = false;
                detail = "cycles mismatch at n=" + std::to_string(n);
            }
            if (n <= 15 && count_obs_cycles(n) !=
                               static_cast<long long>(obs_cycles_closed(n).members.size())) {
                pass = false;
                detail = "cycles materialization mismatch at n=" + std::to_string(n);
            }
        }
    }
    if (pass)
        detail = "counts equal materialized sizes for n<=50 and stay under the quadratic "
                 "envelope";
    report(10, "obstruction counting formulas", pass, detail, timer.seconds());
}

}  // namespace

int main() {
    Timer total;

    std::printf("building the order-9 candidate catalog...\n");
    std::fflush(stdout);
    EnumerationRequest cat_req;
    cat_req.max_order = 9;
    const std::vector<Graph> catalog9 = enumerate_collect(cat_req);
    std::printf("catalog ready: %zu classes up to order 9 (%.1fs)\n", catalog9.size(),
                total.seconds());
    std::fflush(stdout);

    criterion_1();
    criterion_2_3(catalog9);
    criterion_4();
    criterion_5();
    criterion_6(catalog9);
    criterion_7(catalog9);
    criterion_8(catalog9);
    criterion_9();
    criterion_10();

    std::printf("%s: %d criterion(s) failed, total %.1fs\n", failures ? "FAIL" : "OK",
                failures, total.seconds());
    return failures ? 1 : 0;
}
