#ifndef FULLHOM_VALIDATE_HPP
#define FULLHOM_VALIDATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "fullhom/closed_form.hpp"
#include "fullhom/graph.hpp"

namespace fullhom {

enum class Suite { paths, cycles, table1, regular, mu, blowup, all };

Suite suite_from_name(const std::string& name);
std::string suite_name(Suite s);

struct CheckRecord {
    std::string id;
    std::string description;
    bool pass = false;
    std::string witness;  // counterexample graph6 / set difference on failure
};

struct ValidationReport {
    std::string suite;
    std::vector<CheckRecord> records;
    double wall_seconds = 0.0;

    int passed() const;
    int failed() const;
    bool all_passed() const { return failed() == 0; }
};

struct ValidateOptions {
    int max_n = -1;        // -1 = per-suite default
    bool extended = false; // adds the n=9 cycle oracle run (order-10 stream)
    int workers = 0;
    std::pair<int, int> rows = {5, 10};  // table rows to check
};

ValidationReport run_suite(Suite suite, const ValidateOptions& opt = {});

std::string to_text(const ValidationReport& report);
std::string to_tsv(const ValidationReport& report);

// Least path order admitting an injective adjacency- and non-adjacency-
// preserving map from the forest, found by a self-contained assignment
// search (test oracle for the mu formula).
int brute_min_injective_path_host(const Graph& forest);

// obs(C_n) for n = 5..10 as printed in the reference table, sorted.  The
// n = 9 row omits C_7; the validation suites flag that row.
std::vector<ObsMember> reference_table_row(int n);

}  // namespace fullhom

#endif
