#ifndef FULLHOM_CLOSED_FORM_HPP
#define FULLHOM_CLOSED_FORM_HPP

#include <vector>

#include "fullhom/graph.hpp"
#include "fullhom/obstructions.hpp"
#include "fullhom/pd_core.hpp"

namespace fullhom {

// All non-negative integer solutions of coeffs . x = target, duplicate-free
// and lexicographically sorted; empty when target < 0.
std::vector<std::vector<int>> solve_linear(const std::vector<int>& coeffs, int target);

// Symbolic member of a closed-form obstruction set; kept symbolic so sets
// can be sized and compared beyond the 32-vertex materialization limit.
struct ObsMember {
    enum class Kind { cycle, named, linear_forest };
    Kind kind = Kind::cycle;
    int cycle_length = 0;
    NamedGraph named = NamedGraph::A;
    LinearForestSpec forest;

    int order() const;
    Graph materialize() const;
    auto tie() const { return std::tuple(kind, cycle_length, named, forest.multiplicities); }
    bool operator==(const ObsMember& o) const { return tie() == o.tie(); }
    bool operator<(const ObsMember& o) const { return tie() < o.tie(); }
};

// The three building blocks: cycles C_3 and C_5..C_{n+1}; the named
// exceptional graphs (none for n <= 4, B at 5, A and B at 6, A, B, E from
// 7 on); and the linear forests cut out by the three diophantine families
//   3*m2 = n+2            ->  m2 K_2
//   3*m2 + 5*m4 = n+1     ->  K_1 + m2 K_2 + m4 P_4
//   3*m2 + 5*m4 + 7*m6 = n -> K_1 + m2 K_2 + m4 P_4 + m6 P_6.
std::vector<ObsMember> set_C_members(int n);
std::vector<ObsMember> set_O_members(int n);
std::vector<ObsMember> set_LF_members(int n);
std::vector<ObsMember> obs_paths_members(int n);   // n >= 2
std::vector<ObsMember> obs_cycles_members(int n);  // n >= 5

// Materialized variants, canonical-key sorted.
std::vector<Graph> set_C(int n);
std::vector<Graph> set_O(int n);
std::vector<Graph> set_LF(int n);
ObstructionSet obs_paths_closed(int n);
ObstructionSet obs_cycles_closed(int n);

// Sizes from solution counts alone, no graphs involved.
long long count_obs_paths(int n);
long long count_obs_cycles(int n);

}  // namespace fullhom

#endif
