#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/errors.hpp"

namespace symbreak {

// Enumeration caps used when a caller does not override them.
inline constexpr std::uint64_t kDefaultGroupCap = 2'000'000;
inline constexpr int kDefaultBitCap = 22;

// A permutation of the points 1..n, stored as the image sequence
// images[i-1] = i^g. Products are applied left to right: i^(pq) = (i^p)^q.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  // Parses disjoint-cycle notation, e.g. "(1 2 3)(4 5)". The identity is
  // "()". Fixed points are omitted, so the target degree must be given.
  static Permutation from_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// i -> (i^p)^q
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// A binary word theta : [n] -> {0,1}. Ordering is lexicographic with
// position 1 most significant and 0 < 1, matching the string reading.
class Assignment {
 public:
  explicit Assignment(std::vector<std::uint8_t> bits);
  static Assignment zeros(int length);
  static Assignment from_string(std::string_view s);  // e.g. "0110"
  // Packed form: ascending index order equals ascending lex order,
  // i.e. position i sits at bit (length - i). Requires length <= 63.
  static Assignment from_index(int length, std::uint64_t index);

  int length() const { return static_cast<int>(bits_.size()); }
  int bit(int pos) const { return bits_[pos - 1]; }
  void set_bit(int pos, int value) { bits_[pos - 1] = static_cast<std::uint8_t>(value); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::uint64_t to_index() const;
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

// Right action on assignments: (theta^g)(i^g) = theta(i), so that
// act(act(theta, g), h) == act(theta, compose(g, h)).
Assignment act_assignment(const Assignment& theta, const Permutation& g);

// Same action on the packed index form.
std::uint64_t act_index(std::uint64_t index, const Permutation& g, int length);

// An ordered partition of [m] in canonical form: every cell sorted,
// cells ordered by their minimum element.
class Partition {
 public:
  Partition(int domain_size, std::vector<std::vector<int>> cells);
  static Partition single_cell(int domain_size);
  static Partition discrete(int domain_size);

  int domain_size() const { return domain_size_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int domain_size_;
  std::vector<std::vector<int>> cells_;
};

// Splits every cell by the word's bit values, keeping canonical order.
Partition refine_by_word(const Partition& p, const Assignment& word);

// A finitely generated permutation group on the points 1..degree. The
// full element list is computed on demand and cached; fill the cache
// before sharing an instance across threads.
class GeneratedGroup {
 public:
  GeneratedGroup(int degree, std::vector<Permutation> generators);

  // Sym(n) given by (1 2) and (1 2 ... n), tagged so that structural
  // shortcuts (partition stabilizers, stabilizer predicates) apply.
  static GeneratedGroup full_symmetric(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool is_full_symmetric() const { return full_symmetric_; }

  // Breadth-first closure of the generators, sorted by image sequence.
  // Throws CapExceededError when the group has more than cap elements.
  const std::vector<Permutation>& elements(std::uint64_t cap = kDefaultGroupCap) const;
  std::uint64_t order(std::uint64_t cap = kDefaultGroupCap) const;
  bool contains(const Permutation& p, std::uint64_t cap = kDefaultGroupCap) const;

 private:
  int degree_;
  std::vector<Permutation> generators_;
  bool full_symmetric_ = false;
  mutable std::shared_ptr<const std::vector<Permutation>> elements_;
};

// Full element list in deterministic order (identity included).
std::vector<Permutation> enumerate_group(const GeneratedGroup& g, std::uint64_t cap);

// The orbit theta^G, computed by closure under the generators.
std::set<Assignment> orbit_of_assignment(const Assignment& theta, const GeneratedGroup& g);

struct AssignmentOrbit {
  Assignment representative;  // lex-min element
  std::uint64_t size = 0;
};

// All orbits of {0,1}^n under G, ordered by representative. Requires
// n <= cap_bits.
std::vector<AssignmentOrbit> all_orbits(const GeneratedGroup& g, int cap_bits = kDefaultBitCap);

// Exact orbit count of {0,1}^n via the cycle-counting average
// sum_g 2^{cycles(g)} / |G|; independent of the sweep in all_orbits.
std::uint64_t burnside_count(const GeneratedGroup& g, std::uint64_t cap = kDefaultGroupCap);

// Points moved by some generator, sorted.
std::vector<int> support(const GeneratedGroup& g);

// Subgroup of elements fixing every cell of p setwise. For a group
// tagged full-symmetric this is Sym(cell_1) x ... x Sym(cell_r), built
// from adjacent transpositions without enumeration.
GeneratedGroup partition_stabilizer(const GeneratedGroup& h, const Partition& p,
                                    std::uint64_t cap = kDefaultGroupCap);

// One representative per right coset Hg, the lex-least image sequence in
// each coset (so H itself is represented by the identity), sorted.
std::vector<Permutation> right_coset_reps(const GeneratedGroup& g, const GeneratedGroup& h,
                                          std::uint64_t cap = kDefaultGroupCap);

}  // namespace symbreak
