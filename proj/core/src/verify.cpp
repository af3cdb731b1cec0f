#include "symbreak/verify.hpp"

#include <algorithm>

#include "json.hpp"

namespace symbreak {

std::string CompletenessReport::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = complete() ? "complete" : "incomplete";
  j["orbitCount"] = orbit_count;
  j["acceptedCount"] = accepted_count;
  j["orbitsWithZeroAccepted"] = nlohmann::ordered_json::array();
  for (const auto& rep : orbits_zero_accepted)
    j["orbitsWithZeroAccepted"].push_back(rep.to_string());
  j["orbitsWithMultipleAccepted"] = nlohmann::ordered_json::array();
  for (const auto& [rep, accepted] : orbits_multiple_accepted) {
    nlohmann::ordered_json entry;
    entry["representative"] = rep.to_string();
    entry["accepted"] = nlohmann::ordered_json::array();
    for (const auto& a : accepted) entry["accepted"].push_back(a.to_string());
    j["orbitsWithMultipleAccepted"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

CompletenessReport check_complete(const PredicateEvaluator& eval, const GeneratedGroup& g,
                                  int cap_bits) {
  if (eval.domain_size != g.degree())
    throw DegreeMismatchError("check_complete: evaluator domain must match group degree");
  const int n = g.degree();
  if (n > cap_bits) throw CapExceededError("assignment space exceeds bit cap");

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> visited(total, 0);
  CompletenessReport report;
  std::vector<std::uint64_t> stack, members;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start]) continue;
    members.clear();
    stack.push_back(start);
    visited[start] = 1;
    while (!stack.empty()) {
      std::uint64_t cur = stack.back();
      stack.pop_back();
      members.push_back(cur);
      for (const auto& gen : g.generators()) {
        std::uint64_t img = act_index(cur, gen, n);
        if (!visited[img]) {
          visited[img] = 1;
          stack.push_back(img);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ++report.orbit_count;
    std::vector<Assignment> accepted;
    for (std::uint64_t idx : members) {
      Assignment a = Assignment::from_index(n, idx);
      if (eval.accept(a)) accepted.push_back(std::move(a));
    }
    report.accepted_count += accepted.size();
    if (accepted.empty())
      report.orbits_zero_accepted.push_back(Assignment::from_index(n, members.front()));
    else if (accepted.size() > 1)
      report.orbits_multiple_accepted.emplace_back(Assignment::from_index(n, members.front()),
                                                   std::move(accepted));
  }
  return report;
}

std::optional<Assignment> equiv_check(const PredicateEvaluator& a, const PredicateEvaluator& b,
                                      int cap_bits) {
  if (a.domain_size != b.domain_size)
    throw DegreeMismatchError("equiv_check: domain size mismatch");
  const int n = a.domain_size;
  if (n > cap_bits) throw CapExceededError("assignment space exceeds bit cap");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Assignment theta = Assignment::from_index(n, idx);
    if (a.accept(theta) != b.accept(theta)) return theta;
  }
  return std::nullopt;
}

SizeReport predicate_size_report(const CnfPredicate& p) {
  SizeReport r;
  r.core_vars = p.core_vars;
  r.aux_vars = p.aux_vars;
  r.clause_count = p.clauses.size();
  for (const auto& clause : p.clauses) r.literal_count += clause.size();
  return r;
}

}  // namespace symbreak
