#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/circuit.hpp"
#include "symbreak/cnf.hpp"
#include "symbreak/perm.hpp"

namespace symbreak {

// Ground-truth completeness check of an evaluator against the orbit
// partition of the full assignment space.
struct CompletenessReport {
  std::uint64_t orbit_count = 0;
  std::uint64_t accepted_count = 0;
  std::vector<Assignment> orbits_zero_accepted;  // lex-min representatives
  std::vector<std::pair<Assignment, std::vector<Assignment>>> orbits_multiple_accepted;

  bool complete() const {
    return orbits_zero_accepted.empty() && orbits_multiple_accepted.empty() &&
           accepted_count == orbit_count;
  }
  std::string to_json() const;
};

// Sweeps all 2^n assignments in lex order, grouping them into orbits of
// g and counting accepts per orbit. Requires n <= cap_bits.
CompletenessReport check_complete(const PredicateEvaluator& eval, const GeneratedGroup& g,
                                  int cap_bits = kDefaultBitCap);

// First assignment (lex order) where the evaluators disagree, or nullopt
// when they agree everywhere.
std::optional<Assignment> equiv_check(const PredicateEvaluator& a, const PredicateEvaluator& b,
                                      int cap_bits = kDefaultBitCap);

struct SizeReport {
  int core_vars = 0;
  int aux_vars = 0;
  std::uint64_t clause_count = 0;
  std::uint64_t literal_count = 0;
};

SizeReport predicate_size_report(const CnfPredicate& p);

}  // namespace symbreak
