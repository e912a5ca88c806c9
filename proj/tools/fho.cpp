// Command-line front end: full-homomorphism checks, point-determining
// cores, isomorph-free enumeration, obstruction sets by oracle or closed
// form, and the validation suites.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fullhom/canonical.hpp"
#include "fullhom/closed_form.hpp"
#include "fullhom/enumeration.hpp"
#include "fullhom/fullhom.hpp"
#include "fullhom/graph.hpp"
#include "fullhom/graph6.hpp"
#include "fullhom/obstructions.hpp"
#include "fullhom/pd_core.hpp"
#include "fullhom/subgraph.hpp"
#include "fullhom/validate.hpp"

namespace {

using namespace fullhom;

// Edge-list convenience syntax "<n>:<u>-<v>,<u>-<v>,..."; anything else is
// graph6.  The forms cannot collide: graph6 bytes start at '?' (63).
Graph parse_graph(const std::string& text, bool force_g6) {
    if (!force_g6 && !text.empty() && std::isdigit(static_cast<unsigned char>(text[0]))) {
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("edge-list form is <n>:<u>-<v>,<u>-<v>,...");
        Graph g(std::stoi(text.substr(0, colon)));
        std::stringstream edges(text.substr(colon + 1));
        std::string item;
        while (std::getline(edges, item, ',')) {
            if (item.empty()) continue;
            const auto dash = item.find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument("bad edge '" + item + "'");
            g.add_edge(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        }
        return g;
    }
    return graph6_decode(text);
}

struct HostSpec {
    char family = 0;  // 'P', 'C', 'K', or 0 for a literal graph
    int n = 0;
    std::optional<Graph> literal;

    Graph graph() const {
        if (literal) return *literal;
        switch (family) {
            case 'P': return path_graph(n);
            case 'C': return cycle_graph(n);
            case 'K': return complete_graph(n);
        }
        throw std::logic_error("empty host spec");
    }
};

HostSpec parse_host(const std::string& text, bool force_g6) {
    HostSpec spec;
    if (!force_g6 && text.size() >= 2 &&
        (text[0] == 'P' || text[0] == 'C' || text[0] == 'K')) {
        bool digits = true;
        for (std::size_t i = 1; i < text.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(text[i]));
        if (digits) {
            spec.family = text[0];
            spec.n = std::stoi(text.substr(1));
            return spec;
        }
    }
    spec.literal = parse_graph(text, force_g6);
    return spec;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        graphs.push_back(graph6_decode(line));
    }
    return graphs;
}

void write_lines(const std::vector<std::string>& lines, const std::string& out_path) {
    if (out_path.empty()) {
        for (const auto& l : lines) std::cout << l << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    for (const auto& l : lines) out << l << "\n";
}

std::vector<std::string> member_lines(const ObstructionSet& set) {
    std::vector<std::string> lines;
    lines.reserve(set.members.size());
    for (const auto& [key, g] : set.members) lines.push_back(graph6_encode(g));
    return lines;
}

GraphFilter filter_from_name(const std::string& name) {
    if (name == "all") return GraphFilter::all;
    if (name == "point-determining") return GraphFilter::point_determining;
    if (name == "connected") return GraphFilter::connected;
    if (name == "connected-regular") return GraphFilter::connected_regular;
    throw std::invalid_argument("unknown filter: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"full-homomorphism colourability, point-determining cores, and "
                 "minimal obstruction sets of small graphs"};
    app.require_subcommand(1);
    int workers = 0;
    app.add_option("--workers", workers, "worker threads (0 = all hardware threads)");
    bool force_g6 = false;
    app.add_flag("--g6", force_g6, "treat graph arguments as literal graph6 text");

    // fullhom <G> <H>
    auto* cmd_fullhom = app.add_subcommand("fullhom", "decide full H-colourability of G");
    std::string fh_g, fh_h;
    cmd_fullhom->add_option("G", fh_g)->required();
    cmd_fullhom->add_option("H", fh_h)->required();

    // core <G>
    auto* cmd_core = app.add_subcommand("core", "full-core and collapse map");
    std::string core_g;
    cmd_core->add_option("G", core_g)->required();

    // mu <G>
    auto* cmd_mu = app.add_subcommand("mu", "least injective path host order of a linear forest");
    std::string mu_g;
    cmd_mu->add_option("G", mu_g)->required();

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "isomorph-free graph stream, graph6 lines");
    int enum_max = 0;
    std::string enum_filter = "all", enum_out, enum_in;
    bool enum_11 = false;
    cmd_enum->add_option("--max-n", enum_max, "largest order")->required();
    cmd_enum->add_option("--filter", enum_filter,
                         "all|point-determining|connected|connected-regular");
    cmd_enum->add_option("--graph6-out", enum_out, "write lines to a file");
    cmd_enum->add_option("--graph6-in", enum_in,
                         "filter/sort an external graph6 catalog instead of enumerating");
    cmd_enum->add_flag("--best-effort-11", enum_11, "allow order 11 (slow)");

    // obs / obs-star
    std::string obs_host, obs_method = "oracle", obs_out, obs_in;
    auto* cmd_obs = app.add_subcommand("obs", "minimal obstruction set of a host");
    cmd_obs->add_option("--host", obs_host, "graph6 or P<n>/C<n>/K<n>")->required();
    cmd_obs->add_option("--method", obs_method, "oracle|closed-form");
    cmd_obs->add_option("--graph6-out", obs_out, "write lines to a file");
    cmd_obs->add_option("--graph6-in", obs_in, "candidate catalog for the oracle");

    std::string star_host, star_method = "oracle", star_out, star_in;
    auto* cmd_star = app.add_subcommand("obs-star", "obstructions on |V(host)|+1 vertices");
    cmd_star->add_option("--host", star_host, "graph6 or P<n>/C<n>/K<n>")->required();
    cmd_star->add_option("--method", star_method, "oracle|closed-form");
    cmd_star->add_option("--graph6-out", star_out, "write lines to a file");
    cmd_star->add_option("--graph6-in", star_in, "candidate catalog for the oracle");

    // witness-host <G>
    auto* cmd_wh = app.add_subcommand("witness-host",
                                      "host admitting G as a minimal obstruction");
    std::string wh_g;
    cmd_wh->add_option("G", wh_g)->required();

    // count --host P<n>|C<n>
    auto* cmd_count = app.add_subcommand("count", "closed-form obstruction count");
    std::string count_host;
    cmd_count->add_option("--host", count_host, "P<n> or C<n>")->required();

    // validate <suite>
    auto* cmd_val = app.add_subcommand("validate", "run a validation suite");
    std::string val_suite;
    int val_max_n = -1;
    std::string val_rows;
    bool val_extended = false, val_tsv = false;
    cmd_val->add_option("suite", val_suite, "paths|cycles|table1|regular|mu|blowup|all")
        ->required();
    cmd_val->add_option("--max-n", val_max_n, "bound for the suite");
    cmd_val->add_option("--rows", val_rows, "table rows, e.g. 5-8");
    cmd_val->add_flag("--extended", val_extended, "include the order-10 oracle run for C_9");
    cmd_val->add_flag("--tsv", val_tsv, "machine-readable rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_fullhom->parsed()) {
        const Graph g = parse_graph(fh_g, force_g6);
        const Graph h = parse_graph(fh_h, force_g6);
        const auto witness = full_hom_witness(g, h);
        if (!witness) {
            std::cout << "NO\n";
            return 1;
        }
        std::cout << "YES\n";
        for (std::size_t i = 0; i < witness->assignment.size(); ++i)
            std::cout << (i ? " " : "") << witness->assignment[i];
        std::cout << "\n";
        return 0;
    }

    if (cmd_core->parsed()) {
        const CoreResult result = full_core(parse_graph(core_g, force_g6));
        std::cout << graph6_encode(result.core) << "\n";
        for (std::size_t i = 0; i < result.map.assignment.size(); ++i)
            std::cout << (i ? " " : "") << result.map.assignment[i];
        std::cout << "\n";
        return 0;
    }

    if (cmd_mu->parsed()) {
        const Graph g = parse_graph(mu_g, force_g6);
        const auto spec = linear_forest_spec(g);
        if (!spec) {
            const auto comp = find_non_path_component(g);
            std::cout << "not a linear forest: component "
                      << graph6_encode(induced_subgraph(g, *comp)) << "\n";
            return 1;
        }
        std::cout << mu(*spec) << "\n";
        return 0;
    }

    if (cmd_enum->parsed()) {
        const GraphFilter filter = filter_from_name(enum_filter);
        std::vector<std::string> lines;
        if (!enum_in.empty()) {
            for (const Graph& g : read_graph6_file(enum_in)) {
                if (g.order() > enum_max || !passes_filter(g, filter)) continue;
                lines.push_back(graph6_encode(canonicalize(g).canonical_graph()));
            }
            std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
            lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
        } else {
            EnumerationRequest req;
            req.max_order = enum_max;
            req.filter = filter;
            req.allow_best_effort = enum_11;
            req.workers = workers;
            lines = enumerate_graph6(req);
        }
        write_lines(lines, enum_out);
        return 0;
    }

    auto run_obs = [&](const std::string& host_text, const std::string& method,
                       const std::string& in_path, const std::string& out_path,
                       bool star) -> int {
        if (method != "oracle" && method != "closed-form")
            throw std::invalid_argument("method must be oracle or closed-form");
        const HostSpec host = parse_host(host_text, force_g6);
        std::vector<std::string> lines;
        if (method == "closed-form") {
            if (host.family != 'P' && host.family != 'C')
                throw std::invalid_argument("closed form covers P<n> and C<n> hosts only");
            // hosts outside the closed form's domain go through the oracle:
            // obs(C_3) = obs(K_3), obs(C_4) = obs(K_2), and obs(P_1) = {K_2}
            const bool redirect = (host.family == 'C' && host.n < 5) ||
                                  (host.family == 'P' && host.n < 2);
            if (!redirect) {
                std::vector<ObsMember> members = host.family == 'P'
                                                     ? obs_paths_members(host.n)
                                                     : obs_cycles_members(host.n);
                for (const ObsMember& m : members) {
                    if (star && m.order() != host.n + 1) continue;
                    lines.push_back(graph6_encode(canonicalize(m.materialize()).canonical_graph()));
                }
                std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
                    return a.size() != b.size() ? a.size() < b.size() : a < b;
                });
                write_lines(lines, out_path);
                return 0;
            }
        }
        OracleOptions opt;
        opt.workers = workers;
        std::vector<Graph> catalog;
        if (!in_path.empty()) {
            catalog = read_graph6_file(in_path);
            opt.catalog = catalog;
        }
        const Graph h = host.graph();
        const ObstructionSet set = star ? obs_star_oracle(h, opt) : obs_oracle(h, opt);
        write_lines(member_lines(set), out_path);
        return 0;
    };

    if (cmd_obs->parsed()) return run_obs(obs_host, obs_method, obs_in, obs_out, false);
    if (cmd_star->parsed()) return run_obs(star_host, star_method, star_in, star_out, true);

    if (cmd_wh->parsed()) {
        const Graph g = parse_graph(wh_g, force_g6);
        try {
            const Graph host = construct_witness_host(g);
            std::cout << graph6_encode(host) << "\n";
            std::cout << "verified: minimal obstruction of the constructed host\n";
            return 0;
        } catch (const std::logic_error& e) {
            std::cout << "verification failed: " << e.what() << "\n";
            return 1;
        }
    }

    if (cmd_count->parsed()) {
        if (count_host.size() < 2 || (count_host[0] != 'P' && count_host[0] != 'C'))
            throw std::invalid_argument("count needs a P<n> or C<n> host");
        const int n = std::stoi(count_host.substr(1));
        std::cout << (count_host[0] == 'P' ? count_obs_paths(n) : count_obs_cycles(n)) << "\n";
        return 0;
    }

    if (cmd_val->parsed()) {
        ValidateOptions opt;
        opt.max_n = val_max_n;
        opt.extended = val_extended;
        opt.workers = workers;
        if (!val_rows.empty()) {
            const auto dash = val_rows.find('-');
            if (dash == std::string::npos)
                opt.rows = {std::stoi(val_rows), std::stoi(val_rows)};
            else
                opt.rows = {std::stoi(val_rows.substr(0, dash)),
                            std::stoi(val_rows.substr(dash + 1))};
        }
        const ValidationReport report = run_suite(suite_from_name(val_suite), opt);
        std::cout << (val_tsv ? to_tsv(report) : to_text(report));
        return report.all_passed() ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
