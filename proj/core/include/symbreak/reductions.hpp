#pragma once

#include <cstdint>
#include <optional>

#include "symbreak/circuit.hpp"
#include "symbreak/groups.hpp"
#include "symbreak/perm.hpp"

namespace symbreak {

// Non-isomorphism certificate for the incidence-matrix encoding: one
// row-column group element per graph, mapping its matrix to the
// predicate-accepted canonical form.
struct GniCertificate {
  Permutation sigma;
  Permutation pi;
};

// Exhaustive isomorphism search with a degree-sequence prefilter;
// nullopt means definitively non-isomorphic. Requires |V| <= 8.
std::optional<Permutation> graph_iso_bruteforce(const Graph& g1, const Graph& g2);

// The verifier of the non-isomorphism reduction: apply the certificate
// to both incidence matrices, require the predicate to accept both
// images and the images to differ. Graphs of different shape are
// rejected outright.
bool rc_gni_verify(const Graph& g1, const Graph& g2, const GniCertificate& cert,
                   const PredicateEvaluator& sbp);

// The honest prover: canonize both incidence matrices under the
// row-column group; a certificate exists exactly when the canonical
// forms differ.
std::optional<GniCertificate> rc_gni_prove(const Graph& g1, const Graph& g2,
                                           const PredicateEvaluator& sbp,
                                           std::uint64_t cap = kDefaultGroupCap);

// Lex-min of the graph's Johnson-domain word under the induced action of
// Sym(k) on 2-subsets; a canonical form of the graph. Requires |V| <= 7.
Assignment johnson_canonical(const Graph& g);

}  // namespace symbreak
