#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symbreak/groups.hpp"
#include "symbreak/perm.hpp"

namespace symbreak {

// CNF predicate over core variables 1..core_vars plus auxiliary
// variables core_vars+1..core_vars+aux_vars. Auxiliary variables are
// functionally determined by the core assignment through their defining
// clauses, so acceptance of a core assignment is decided by unit
// propagation.
struct CnfPredicate {
  int core_vars = 0;
  int aux_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::map<int, std::string> var_names;

  int var_count() const { return core_vars + aux_vars; }
  // Checks the syntactic invariants: literal range, no empty clause, no
  // clause with complementary literals.
  void validate() const;
};

// x_1 <= x_2 <= ... <= x_n as n-1 binary clauses; accepts exactly the
// nondecreasing words, the lex-min of each weight orbit.
CnfPredicate sbp_symmetric(int n);

struct LexLeqClauses {
  std::vector<std::vector<int>> clauses;
  int aux_count = 0;
};

// word_a lex<= word_b via prefix-equality chain variables numbered from
// aux_base. Positions where both words hold the same variable are
// constant-folded away.
LexLeqClauses lex_leq_clauses(const std::vector<int>& word_a, const std::vector<int>& word_b,
                              int aux_base);

// Adjacent rows of the rows x cols matrix lex-ordered, the matrix
// flattened row-major (i-1)*cols + j.
CnfPredicate sbp_row_interchange(int rows, int cols);

// Per-element lex-leader breaking: theta lex<= theta^g for every
// non-identity g, so exactly the lex-min of each orbit is accepted.
CnfPredicate sbp_small_group(const GeneratedGroup& g, std::uint64_t cap = kDefaultGroupCap);

// Conjunction of part predicates renamed onto disjoint supports; points
// not covered by any part are unconstrained.
CnfPredicate sbp_disjoint(int domain_size,
                          const std::vector<std::pair<CnfPredicate, std::vector<int>>>& parts);

// m renamed copies of gamma on contiguous parts (j-1)*n + i, plus the
// lex chain ordering the part words; complete for G wr Sym(m) whenever
// gamma is complete for G.
CnfPredicate sbp_wreath_sym(const CnfPredicate& gamma, int m);

// Linear-size predicate for Aut(T), assembled over tree_aut_decompose.
CnfPredicate sbp_tree(const Tree& t);

// Structural dispatch over the spec kinds; families without a structural
// generator fall back to per-element breaking when the realized group
// fits the cap and throw IntractableError otherwise.
CnfPredicate sbp_from_spec(const GroupSpec& spec, std::uint64_t cap = kDefaultGroupCap);

// DIMACS with "c core-vars", "c aux-vars" and "c map" comment lines;
// byte-stable.
std::string to_dimacs(const CnfPredicate& p);
CnfPredicate predicate_from_dimacs(std::string_view text);

}  // namespace symbreak
