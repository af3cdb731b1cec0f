#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/cnf.hpp"
#include "symbreak/perm.hpp"

namespace symbreak {

// Single-output {AND, OR, NOT} gate DAG. Operand references are encoded
// as ints: -i names input i, +k names gate k; a gate may only reference
// inputs and earlier gates.
struct GateCircuit {
  enum class Op { And, Or, Not };
  struct Gate {
    Op op;
    int a = 0;
    int b = 0;  // unused for Not
  };

  int input_count = 0;
  std::vector<Gate> gates;
  int output = 0;  // gate index, 1-based

  void validate() const;
};

int eval_gate_circuit(const GateCircuit& c, const Assignment& theta);

// Line-oriented text form: "inputs <n>", then "g<k> = AND g<i> g<j>" /
// "OR" / "NOT g<i>" with inputs written as "x<i>", final line
// "output g<k>". Byte-stable.
std::string to_text(const GateCircuit& c);
GateCircuit gate_circuit_from_text(std::string_view text);

// A total accept/reject decision over complete assignments of a fixed
// domain.
struct PredicateEvaluator {
  int domain_size = 0;
  std::function<bool(const Assignment&)> accept;
};

// Decides acceptance of a core assignment by fixing the auxiliary
// variables with unit propagation and checking every clause. Throws
// PropagationStuckError when some auxiliary variable stays undetermined.
PredicateEvaluator cnf_to_evaluator(const CnfPredicate& p);

// Clause-by-clause OR trees joined by an AND tree over all core and
// auxiliary inputs; auxiliary variables stay circuit inputs.
GateCircuit cnf_to_gates(const CnfPredicate& p);

// Accepts theta iff theta is the lex-minimum of its orbit. A complete
// symmetry breaking predicate for any group, used as the ground-truth
// oracle for every other construction.
PredicateEvaluator lexmin_canon_eval(const GeneratedGroup& g,
                                     std::uint64_t cap = kDefaultGroupCap);

// Supplies a complete symmetry breaking evaluator for the stabilizer of
// a partition in the given top group.
using StabilizerSbp = std::function<PredicateEvaluator(const GeneratedGroup&, const Partition&)>;

// Cell-wise sorted words for full symmetric tops, lex-min canonization
// of the enumerated stabilizer otherwise.
StabilizerSbp default_stab_sbp(std::uint64_t cap = kDefaultGroupCap);

// Evaluator for the imprimitive wreath action of base x top on parts
// flattened (j-1)*n + i: every part must satisfy psi_g and every row
// word must satisfy the predicate of the previous rows' partition
// stabilizer in the top group.
PredicateEvaluator wreath_eval(const PredicateEvaluator& psi_g, const GeneratedGroup& top,
                               StabilizerSbp stab_sbp = {});

// Lifts a complete predicate for H <= G to one for G: theta is accepted
// iff psi_h accepts it and theta is lex-least among the H-canonical
// forms of its coset images theta^r.
PredicateEvaluator index_lift_eval(const PredicateEvaluator& psi_h, const GeneratedGroup& g,
                                   const GeneratedGroup& h,
                                   std::uint64_t cap = kDefaultGroupCap);

// Searches theta's orbit for an element mapping it to a canon-accepted
// assignment; nullopt only if the evaluator accepts nothing there.
std::optional<Permutation> gni_cert_search(const PredicateEvaluator& canon_eval,
                                           const GeneratedGroup& orbit_group,
                                           const Assignment& theta,
                                           std::uint64_t cap = kDefaultGroupCap);

}  // namespace symbreak
