#include "symbreak/circuit.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace symbreak {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace

void GateCircuit::validate() const {
  require(input_count >= 1, "circuit needs at least one input");
  for (size_t k = 0; k < gates.size(); ++k) {
    const Gate& g = gates[k];
    auto check_ref = [&](int ref) {
      require(ref != 0, "zero operand reference");
      if (ref < 0)
        require(-ref <= input_count, "input reference out of range");
      else
        require(ref <= static_cast<int>(k), "gate must reference an earlier gate");
    };
    check_ref(g.a);
    if (g.op != Op::Not) check_ref(g.b);
  }
  require(output >= 1 && output <= static_cast<int>(gates.size()),
          "output must name a gate");
}

int eval_gate_circuit(const GateCircuit& c, const Assignment& theta) {
  if (theta.length() != c.input_count)
    throw DegreeMismatchError("eval_gate_circuit: input count mismatch");
  std::vector<char> val(c.gates.size());
  auto ref_val = [&](int ref) -> int {
    return ref < 0 ? theta.bit(-ref) : val[ref - 1];
  };
  for (size_t k = 0; k < c.gates.size(); ++k) {
    const auto& g = c.gates[k];
    switch (g.op) {
      case GateCircuit::Op::And: val[k] = static_cast<char>(ref_val(g.a) & ref_val(g.b)); break;
      case GateCircuit::Op::Or: val[k] = static_cast<char>(ref_val(g.a) | ref_val(g.b)); break;
      case GateCircuit::Op::Not: val[k] = static_cast<char>(1 - ref_val(g.a)); break;
    }
  }
  return val[c.output - 1];
}

std::string to_text(const GateCircuit& c) {
  std::ostringstream out;
  out << "inputs " << c.input_count << "\n";
  auto ref_str = [](int ref) {
    return ref < 0 ? "x" + std::to_string(-ref) : "g" + std::to_string(ref);
  };
  for (size_t k = 0; k < c.gates.size(); ++k) {
    const auto& g = c.gates[k];
    out << 'g' << (k + 1) << " = ";
    switch (g.op) {
      case GateCircuit::Op::And: out << "AND " << ref_str(g.a) << ' ' << ref_str(g.b); break;
      case GateCircuit::Op::Or: out << "OR " << ref_str(g.a) << ' ' << ref_str(g.b); break;
      case GateCircuit::Op::Not: out << "NOT " << ref_str(g.a); break;
    }
    out << "\n";
  }
  out << "output g" << c.output << "\n";
  return out.str();
}

namespace {

int parse_ref(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'g'))
    throw ParseError("bad operand reference: " + tok);
  int idx = 0;
  for (size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError("bad operand reference: " + tok);
    idx = idx * 10 + (tok[i] - '0');
  }
  if (idx < 1) throw ParseError("bad operand reference: " + tok);
  return tok[0] == 'x' ? -idx : idx;
}

}  // namespace

GateCircuit gate_circuit_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  GateCircuit c;
  bool saw_inputs = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "inputs") {
      if (!(ls >> c.input_count)) throw ParseError("malformed inputs line");
      saw_inputs = true;
      continue;
    }
    if (tok == "output") {
      std::string ref;
      if (!(ls >> ref)) throw ParseError("malformed output line");
      int r = parse_ref(ref);
      if (r < 0) throw ParseError("output must name a gate");
      c.output = r;
      continue;
    }
    if (!saw_inputs) throw ParseError("gate before inputs line");
    if (tok != "g" + std::to_string(c.gates.size() + 1))
      throw ParseError("gates must be numbered consecutively: " + tok);
    std::string eq, op;
    if (!(ls >> eq >> op) || eq != "=") throw ParseError("malformed gate line");
    GateCircuit::Gate g;
    std::string a, b;
    if (op == "AND" || op == "OR") {
      g.op = op == "AND" ? GateCircuit::Op::And : GateCircuit::Op::Or;
      if (!(ls >> a >> b)) throw ParseError("binary gate needs two operands");
      g.a = parse_ref(a);
      g.b = parse_ref(b);
    } else if (op == "NOT") {
      g.op = GateCircuit::Op::Not;
      if (!(ls >> a)) throw ParseError("NOT gate needs one operand");
      g.a = parse_ref(a);
    } else {
      throw ParseError("unknown gate op: " + op);
    }
    c.gates.push_back(g);
  }
  c.validate();
  return c;
}

PredicateEvaluator cnf_to_evaluator(const CnfPredicate& p) {
  p.validate();
  auto pred = std::make_shared<const CnfPredicate>(p);
  auto accept = [pred](const Assignment& theta) -> bool {
    if (theta.length() != pred->core_vars)
      throw DegreeMismatchError("cnf evaluator: core size mismatch");
    std::vector<signed char> val(pred->var_count(), -1);
    for (int i = 1; i <= pred->core_vars; ++i) val[i - 1] = static_cast<signed char>(theta.bit(i));
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : pred->clauses) {
        int unassigned_lit = 0;
        int unassigned_count = 0;
        bool satisfied = false;
        for (int lit : clause) {
          signed char v = val[std::abs(lit) - 1];
          if (v < 0) {
            ++unassigned_count;
            unassigned_lit = lit;
          } else if ((lit > 0) == (v == 1)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (unassigned_count == 0) return false;  // conflicting clause
        if (unassigned_count == 1) {
          val[std::abs(unassigned_lit) - 1] = unassigned_lit > 0 ? 1 : 0;
          changed = true;
        }
      }
    }
    for (signed char v : val)
      if (v < 0)
        throw PropagationStuckError(
            "auxiliary variables are not functionally determined by the core assignment");
    for (const auto& clause : pred->clauses) {
      bool satisfied = false;
      for (int lit : clause)
        if ((lit > 0) == (val[std::abs(lit) - 1] == 1)) {
          satisfied = true;
          break;
        }
      if (!satisfied) return false;
    }
    return true;
  };
  return {p.core_vars, std::move(accept)};
}

GateCircuit cnf_to_gates(const CnfPredicate& p) {
  p.validate();
  GateCircuit c;
  c.input_count = p.var_count();
  std::map<int, int> not_gate;  // variable -> NOT gate ref
  auto literal_ref = [&](int lit) -> int {
    if (lit > 0) return -lit;  // plain input
    auto it = not_gate.find(-lit);
    if (it != not_gate.end()) return it->second;
    c.gates.push_back({GateCircuit::Op::Not, lit, 0});
    int ref = static_cast<int>(c.gates.size());
    not_gate[-lit] = ref;
    return ref;
  };

  int conj = 0;
  if (p.clauses.empty()) {
    // constant true
    c.gates.push_back({GateCircuit::Op::Not, -1, 0});
    c.gates.push_back({GateCircuit::Op::Or, -1, static_cast<int>(c.gates.size())});
    conj = static_cast<int>(c.gates.size());
  } else {
    for (const auto& clause : p.clauses) {
      int disj = literal_ref(clause[0]);
      for (size_t i = 1; i < clause.size(); ++i) {
        int next = literal_ref(clause[i]);
        c.gates.push_back({GateCircuit::Op::Or, disj, next});
        disj = static_cast<int>(c.gates.size());
      }
      if (conj == 0) {
        conj = disj;
      } else {
        c.gates.push_back({GateCircuit::Op::And, conj, disj});
        conj = static_cast<int>(c.gates.size());
      }
    }
  }
  if (conj < 0) {  // single positive unit clause: wire through a gate
    c.gates.push_back({GateCircuit::Op::Or, conj, conj});
    conj = static_cast<int>(c.gates.size());
  }
  c.output = conj;
  c.validate();
  return c;
}

PredicateEvaluator lexmin_canon_eval(const GeneratedGroup& g, std::uint64_t cap) {
  auto group = std::make_shared<const GeneratedGroup>(g);
  auto accept = [group, cap](const Assignment& theta) -> bool {
    if (theta.length() != group->degree())
      throw DegreeMismatchError("lexmin_canon_eval: length/degree mismatch");
    std::set<Assignment> seen{theta};
    std::vector<Assignment> frontier{theta};
    while (!frontier.empty()) {
      std::vector<Assignment> next;
      for (const auto& a : frontier) {
        for (const auto& gen : group->generators()) {
          Assignment image = act_assignment(a, gen);
          if (image < theta) return false;
          if (seen.insert(image).second) {
            if (seen.size() > cap)
              throw CapExceededError("orbit exceeds enumeration cap");
            next.push_back(std::move(image));
          }
        }
      }
      frontier = std::move(next);
    }
    return true;
  };
  return {g.degree(), std::move(accept)};
}

StabilizerSbp default_stab_sbp(std::uint64_t cap) {
  return [cap](const GeneratedGroup& top, const Partition& p) -> PredicateEvaluator {
    if (top.is_full_symmetric()) {
      // stabilizer is Sym(cell_1) x ... x Sym(cell_r); its lex-min orbit
      // representatives are the words sorted within every cell
      auto cells = std::make_shared<const std::vector<std::vector<int>>>(p.cells());
      auto accept = [cells](const Assignment& w) -> bool {
        for (const auto& cell : *cells)
          for (size_t k = 0; k + 1 < cell.size(); ++k)
            if (w.bit(cell[k]) > w.bit(cell[k + 1])) return false;
        return true;
      };
      return {p.domain_size(), std::move(accept)};
    }
    return lexmin_canon_eval(partition_stabilizer(top, p, cap), cap);
  };
}

PredicateEvaluator wreath_eval(const PredicateEvaluator& psi_g, const GeneratedGroup& top,
                               StabilizerSbp stab_sbp) {
  if (!stab_sbp) stab_sbp = default_stab_sbp();
  const int n = psi_g.domain_size;
  const int m = top.degree();
  auto top_group = std::make_shared<const GeneratedGroup>(top);
  auto base_accept = psi_g.accept;
  auto accept = [base_accept, top_group, stab_sbp, n, m](const Assignment& theta) -> bool {
    if (theta.length() != n * m)
      throw DegreeMismatchError("wreath_eval: length mismatch");
    for (int j = 1; j <= m; ++j) {
      std::vector<std::uint8_t> part(n);
      for (int i = 1; i <= n; ++i) part[i - 1] = static_cast<std::uint8_t>(theta.bit((j - 1) * n + i));
      if (!base_accept(Assignment(std::move(part)))) return false;
    }
    Partition p = Partition::single_cell(m);
    for (int i = 1; i <= n; ++i) {
      std::vector<std::uint8_t> row(m);
      for (int j = 1; j <= m; ++j) row[j - 1] = static_cast<std::uint8_t>(theta.bit((j - 1) * n + i));
      Assignment row_word(std::move(row));
      PredicateEvaluator stab_eval = stab_sbp(*top_group, p);
      if (!stab_eval.accept(row_word)) return false;
      p = refine_by_word(p, row_word);
    }
    return true;
  };
  return {n * m, std::move(accept)};
}

namespace {

// The unique psi-accepted element of theta's H-orbit (lex-least if the
// predicate wrongly accepts several).
Assignment canonical_in_orbit(const Assignment& theta, const GeneratedGroup& h,
                              const PredicateEvaluator& psi, std::uint64_t cap) {
  std::set<Assignment> seen{theta};
  std::vector<Assignment> frontier{theta};
  std::optional<Assignment> best;
  auto consider = [&](const Assignment& a) {
    if (psi.accept(a) && (!best || a < *best)) best = a;
  };
  consider(theta);
  while (!frontier.empty()) {
    std::vector<Assignment> next;
    for (const auto& a : frontier) {
      for (const auto& gen : h.generators()) {
        Assignment image = act_assignment(a, gen);
        if (seen.insert(image).second) {
          if (seen.size() > cap) throw CapExceededError("orbit exceeds enumeration cap");
          consider(image);
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }
  if (!best)
    throw OracleIncompleteError("no accepted assignment in an orbit of the subgroup predicate");
  return *best;
}

}  // namespace

PredicateEvaluator index_lift_eval(const PredicateEvaluator& psi_h, const GeneratedGroup& g,
                                   const GeneratedGroup& h, std::uint64_t cap) {
  if (psi_h.domain_size != h.degree() || g.degree() != h.degree())
    throw DegreeMismatchError("index_lift_eval: degree mismatch");
  auto reps = std::make_shared<const std::vector<Permutation>>(right_coset_reps(g, h, cap));
  auto sub = std::make_shared<const GeneratedGroup>(h);
  auto base = psi_h;
  auto accept = [base, reps, sub, cap](const Assignment& theta) -> bool {
    if (!base.accept(theta)) return false;
    for (const auto& r : *reps) {
      Assignment image = act_assignment(theta, r);
      Assignment canon = canonical_in_orbit(image, *sub, base, cap);
      if (canon < theta) return false;
    }
    return true;
  };
  return {g.degree(), std::move(accept)};
}

std::optional<Permutation> gni_cert_search(const PredicateEvaluator& canon_eval,
                                           const GeneratedGroup& orbit_group,
                                           const Assignment& theta, std::uint64_t cap) {
  if (theta.length() != orbit_group.degree())
    throw DegreeMismatchError("gni_cert_search: length/degree mismatch");
  const Permutation id = Permutation::identity(orbit_group.degree());
  if (canon_eval.accept(theta)) return id;
  std::map<Assignment, Permutation> witness{{theta, id}};
  std::queue<Assignment> frontier;
  frontier.push(theta);
  while (!frontier.empty()) {
    Assignment cur = frontier.front();
    frontier.pop();
    const Permutation& reached_by = witness.at(cur);
    for (const auto& gen : orbit_group.generators()) {
      Assignment image = act_assignment(cur, gen);
      if (witness.count(image)) continue;
      Permutation via = compose(reached_by, gen);
      if (canon_eval.accept(image)) return via;
      if (witness.size() + 1 > cap) throw CapExceededError("orbit exceeds enumeration cap");
      frontier.push(image);
      witness.emplace(std::move(image), std::move(via));
    }
  }
  return std::nullopt;
}

}  // namespace symbreak
