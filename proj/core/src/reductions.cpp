#include "symbreak/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace symbreak {

std::optional<Permutation> graph_iso_bruteforce(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  const int n = g1.vertex_count();
  if (n > 8) throw CapExceededError("graph_iso_bruteforce: more than 8 vertices");

  std::vector<int> deg1(n), deg2(n);
  for (int v = 1; v <= n; ++v) {
    deg1[v - 1] = g1.degree_of(v);
    deg2[v - 1] = g2.degree_of(v);
  }
  {
    auto s1 = deg1, s2 = deg2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 1);
  do {
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v)
      if (deg1[v - 1] != deg2[map[v - 1] - 1]) ok = false;
    for (const auto& [u, v] : g1.edges()) {
      if (!ok) break;
      if (!g2.has_edge(map[u - 1], map[v - 1])) ok = false;
    }
    if (ok) return Permutation(map);
  } while (std::next_permutation(map.begin(), map.end()));
  return std::nullopt;
}

bool rc_gni_verify(const Graph& g1, const Graph& g2, const GniCertificate& cert,
                   const PredicateEvaluator& sbp) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return false;  // distinct shapes are outside the verifier's domain
  if (g1.edge_count() < 1) return false;
  Assignment m1 = act_assignment(graph_to_bipartite_matrix(g1), cert.sigma);
  Assignment m2 = act_assignment(graph_to_bipartite_matrix(g2), cert.pi);
  if (!sbp.accept(m1) || !sbp.accept(m2)) return false;
  return m1 != m2;
}

std::optional<GniCertificate> rc_gni_prove(const Graph& g1, const Graph& g2,
                                           const PredicateEvaluator& sbp, std::uint64_t cap) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    throw InvariantError("rc_gni_prove: graphs must share the matrix shape");
  GeneratedGroup rc = realize(GroupSpec::row_column(g1.vertex_count(), g1.edge_count()));
  Assignment m1 = graph_to_bipartite_matrix(g1);
  Assignment m2 = graph_to_bipartite_matrix(g2);
  auto sigma = gni_cert_search(sbp, rc, m1, cap);
  auto pi = gni_cert_search(sbp, rc, m2, cap);
  if (!sigma || !pi)
    throw OracleIncompleteError("rc_gni_prove: predicate accepts nothing in some orbit");
  if (act_assignment(m1, *sigma) == act_assignment(m2, *pi)) return std::nullopt;
  return GniCertificate{*sigma, *pi};
}

Assignment johnson_canonical(const Graph& g) {
  const int k = g.vertex_count();
  if (k > 7) throw CapExceededError("johnson_canonical: more than 7 vertices");
  GeneratedGroup johnson = realize(GroupSpec::johnson(k, 2));
  Assignment word = graph_to_johnson_assignment(g, k);
  const auto orbit = orbit_of_assignment(word, johnson);
  return *orbit.begin();
}

}  // namespace symbreak
