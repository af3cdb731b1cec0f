#include "symbreak/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace symbreak {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  require(!images_.empty(), "permutation degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    require(v >= 1 && v <= degree(), "permutation image out of range");
    require(!seen[v - 1], "permutation image sequence is not a bijection");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  require(degree >= 1, "permutation degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) return false;
  return true;
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
  require(degree >= 1, "permutation degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<char> moved(degree, 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    any_cycle = true;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number in cycle notation");
      int p = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        p = p * 10 + (text[i] - '0');
        ++i;
      }
      if (p < 1 || p > degree) throw ParseError("cycle point out of range");
      if (moved[p - 1]) throw ParseError("point repeated across cycles");
      moved[p - 1] = 1;
      cycle.push_back(p);
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  if (!any_cycle) throw ParseError("empty permutation text");
  return Permutation(std::move(images));
}

std::string Permutation::to_cycles() const {
  std::vector<char> done(degree(), 0);
  std::ostringstream out;
  bool any = false;
  for (int start = 1; start <= degree(); ++start) {
    if (done[start - 1] || apply(start) == start) continue;
    any = true;
    out << '(';
    int p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << p;
      done[p - 1] = 1;
      p = apply(p);
      first = false;
    } while (p != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatchError("compose: degree mismatch");
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[i - 1] = q.apply(p.apply(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[p.apply(i) - 1] = i;
  return Permutation(std::move(images));
}

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  require(!bits_.empty(), "assignment length must be positive");
  for (auto b : bits_) require(b <= 1, "assignment entries must be 0 or 1");
}

Assignment Assignment::zeros(int length) {
  require(length >= 1, "assignment length must be positive");
  return Assignment(std::vector<std::uint8_t>(length, 0));
}

Assignment Assignment::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError("assignment string must be over {0,1}");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Assignment(std::move(bits));
}

Assignment Assignment::from_index(int length, std::uint64_t index) {
  require(length >= 1 && length <= 63, "packed assignments require 1 <= length <= 63");
  std::vector<std::uint8_t> bits(length);
  for (int pos = 1; pos <= length; ++pos)
    bits[pos - 1] = static_cast<std::uint8_t>((index >> (length - pos)) & 1);
  return Assignment(std::move(bits));
}

std::uint64_t Assignment::to_index() const {
  require(length() <= 63, "packed assignments require length <= 63");
  std::uint64_t idx = 0;
  for (int pos = 1; pos <= length(); ++pos)
    if (bits_[pos - 1]) idx |= std::uint64_t{1} << (length() - pos);
  return idx;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

Assignment act_assignment(const Assignment& theta, const Permutation& g) {
  if (theta.length() != g.degree())
    throw DegreeMismatchError("act_assignment: length/degree mismatch");
  std::vector<std::uint8_t> bits(theta.length());
  for (int i = 1; i <= theta.length(); ++i)
    bits[g.apply(i) - 1] = static_cast<std::uint8_t>(theta.bit(i));
  return Assignment(std::move(bits));
}

std::uint64_t act_index(std::uint64_t index, const Permutation& g, int length) {
  std::uint64_t out = 0;
  for (int i = 1; i <= length; ++i)
    if ((index >> (length - i)) & 1) out |= std::uint64_t{1} << (length - g.apply(i));
  return out;
}

Partition::Partition(int domain_size, std::vector<std::vector<int>> cells)
    : domain_size_(domain_size), cells_(std::move(cells)) {
  require(domain_size_ >= 1, "partition domain must be positive");
  std::vector<char> seen(domain_size_, 0);
  for (auto& cell : cells_) {
    require(!cell.empty(), "partition cells must be nonempty");
    std::sort(cell.begin(), cell.end());
    for (int p : cell) {
      require(p >= 1 && p <= domain_size_, "partition point out of range");
      require(!seen[p - 1], "partition cells must be disjoint");
      seen[p - 1] = 1;
    }
  }
  for (char s : seen) require(s, "partition cells must cover the domain");
  std::sort(cells_.begin(), cells_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Partition Partition::single_cell(int domain_size) {
  std::vector<int> cell(domain_size);
  std::iota(cell.begin(), cell.end(), 1);
  return Partition(domain_size, {std::move(cell)});
}

Partition Partition::discrete(int domain_size) {
  std::vector<std::vector<int>> cells;
  for (int p = 1; p <= domain_size; ++p) cells.push_back({p});
  return Partition(domain_size, std::move(cells));
}

Partition refine_by_word(const Partition& p, const Assignment& word) {
  if (word.length() != p.domain_size())
    throw DegreeMismatchError("refine_by_word: length mismatch");
  std::vector<std::vector<int>> cells;
  for (const auto& cell : p.cells()) {
    std::vector<int> zeros, ones;
    for (int pt : cell) (word.bit(pt) ? ones : zeros).push_back(pt);
    if (!zeros.empty()) cells.push_back(std::move(zeros));
    if (!ones.empty()) cells.push_back(std::move(ones));
  }
  return Partition(p.domain_size(), std::move(cells));
}

GeneratedGroup::GeneratedGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  require(degree_ >= 1, "group degree must be positive");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw DegreeMismatchError("generator degree mismatch");
}

GeneratedGroup GeneratedGroup::full_symmetric(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<int> swap_img(degree);
    std::iota(swap_img.begin(), swap_img.end(), 1);
    swap_img[0] = 2;
    swap_img[1] = 1;
    gens.emplace_back(std::move(swap_img));
    if (degree >= 3) {
      std::vector<int> cyc(degree);
      for (int i = 1; i < degree; ++i) cyc[i - 1] = i + 1;
      cyc[degree - 1] = 1;
      gens.emplace_back(std::move(cyc));
    }
  }
  GeneratedGroup g(degree, std::move(gens));
  g.full_symmetric_ = true;
  return g;
}

const std::vector<Permutation>& GeneratedGroup::elements(std::uint64_t cap) const {
  if (!elements_) {
    auto elems = enumerate_group(*this, cap);
    elements_ = std::make_shared<const std::vector<Permutation>>(std::move(elems));
  }
  return *elements_;
}

std::uint64_t GeneratedGroup::order(std::uint64_t cap) const {
  return elements(cap).size();
}

bool GeneratedGroup::contains(const Permutation& p, std::uint64_t cap) const {
  const auto& elems = elements(cap);
  return std::binary_search(elems.begin(), elems.end(), p);
}

std::vector<Permutation> enumerate_group(const GeneratedGroup& g, std::uint64_t cap) {
  if (cap < 1) throw InvariantError("enumeration cap must be positive");
  std::set<std::vector<int>> seen;
  std::vector<Permutation> frontier;
  frontier.push_back(Permutation::identity(g.degree()));
  seen.insert(frontier.front().images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& gen : g.generators()) {
        Permutation prod = compose(e, gen);
        if (seen.insert(prod.images()).second) {
          if (seen.size() > cap)
            throw CapExceededError("group order exceeds enumeration cap");
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(seen.size());
  for (const auto& images : seen) out.emplace_back(images);
  return out;  // std::set iteration is already sorted by image sequence
}

std::set<Assignment> orbit_of_assignment(const Assignment& theta, const GeneratedGroup& g) {
  if (theta.length() != g.degree())
    throw DegreeMismatchError("orbit_of_assignment: length/degree mismatch");
  std::set<Assignment> orbit;
  std::vector<Assignment> frontier{theta};
  orbit.insert(theta);
  while (!frontier.empty()) {
    std::vector<Assignment> next;
    for (const auto& a : frontier) {
      for (const auto& gen : g.generators()) {
        Assignment image = act_assignment(a, gen);
        if (orbit.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return orbit;
}

std::vector<AssignmentOrbit> all_orbits(const GeneratedGroup& g, int cap_bits) {
  const int n = g.degree();
  if (n > cap_bits) throw CapExceededError("assignment space exceeds bit cap");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> visited(total, 0);
  std::vector<AssignmentOrbit> orbits;
  std::vector<std::uint64_t> stack;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start]) continue;
    std::uint64_t size = 0;
    stack.push_back(start);
    visited[start] = 1;
    while (!stack.empty()) {
      std::uint64_t cur = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& gen : g.generators()) {
        std::uint64_t img = act_index(cur, gen, n);
        if (!visited[img]) {
          visited[img] = 1;
          stack.push_back(img);
        }
      }
    }
    orbits.push_back({Assignment::from_index(n, start), size});
  }
  return orbits;
}

std::uint64_t burnside_count(const GeneratedGroup& g, std::uint64_t cap) {
  const auto& elems = g.elements(cap);
  const int n = g.degree();
  unsigned __int128 total = 0;
  std::vector<char> done(n);
  for (const auto& e : elems) {
    std::fill(done.begin(), done.end(), 0);
    int cycles = 0;
    for (int start = 1; start <= n; ++start) {
      if (done[start - 1]) continue;
      ++cycles;
      int p = start;
      do {
        done[p - 1] = 1;
        p = e.apply(p);
      } while (p != start);
    }
    total += static_cast<unsigned __int128>(1) << cycles;
  }
  unsigned __int128 count = total / elems.size();
  if (count > static_cast<unsigned __int128>(~std::uint64_t{0}))
    throw CapExceededError("orbit count overflows 64 bits");
  return static_cast<std::uint64_t>(count);
}

std::vector<int> support(const GeneratedGroup& g) {
  std::set<int> moved;
  for (const auto& gen : g.generators())
    for (int i = 1; i <= g.degree(); ++i)
      if (gen.apply(i) != i) moved.insert(i);
  return {moved.begin(), moved.end()};
}

namespace {

// Adjacent transpositions inside each cell; realizes Sym(cell_1) x ... x Sym(cell_r).
std::vector<Permutation> cellwise_symmetric_generators(int degree, const Partition& p) {
  std::vector<Permutation> gens;
  for (const auto& cell : p.cells()) {
    for (size_t k = 0; k + 1 < cell.size(); ++k) {
      std::vector<int> images(degree);
      std::iota(images.begin(), images.end(), 1);
      images[cell[k] - 1] = cell[k + 1];
      images[cell[k + 1] - 1] = cell[k];
      gens.emplace_back(std::move(images));
    }
  }
  return gens;
}

bool fixes_all_cells(const Permutation& e, const Partition& p) {
  for (const auto& cell : p.cells()) {
    for (int pt : cell) {
      int img = e.apply(pt);
      if (!std::binary_search(cell.begin(), cell.end(), img)) return false;
    }
  }
  return true;
}

}  // namespace

GeneratedGroup partition_stabilizer(const GeneratedGroup& h, const Partition& p,
                                    std::uint64_t cap) {
  if (h.degree() != p.domain_size())
    throw DegreeMismatchError("partition_stabilizer: degree mismatch");
  if (h.is_full_symmetric())
    return GeneratedGroup(h.degree(), cellwise_symmetric_generators(h.degree(), p));
  std::vector<Permutation> kept;
  for (const auto& e : h.elements(cap))
    if (!e.is_identity() && fixes_all_cells(e, p)) kept.push_back(e);
  return GeneratedGroup(h.degree(), std::move(kept));
}

std::vector<Permutation> right_coset_reps(const GeneratedGroup& g, const GeneratedGroup& h,
                                          std::uint64_t cap) {
  if (g.degree() != h.degree())
    throw DegreeMismatchError("right_coset_reps: degree mismatch");
  const auto& big = g.elements(cap);
  const auto& sub = h.elements(cap);
  for (const auto& gen : h.generators())
    if (!std::binary_search(big.begin(), big.end(), gen))
      throw NotSubgroupError("right_coset_reps: H is not contained in G");

  std::set<std::vector<int>> remaining;
  for (const auto& e : big) remaining.insert(e.images());
  std::vector<Permutation> reps;
  // Sweeping the sorted element list and erasing whole cosets keeps the
  // lex-least member of each coset as its representative.
  for (const auto& e : big) {
    if (!remaining.count(e.images())) continue;
    reps.push_back(e);
    for (const auto& s : sub) remaining.erase(compose(s, e).images());
  }
  if (reps.size() * sub.size() != big.size())
    throw NotSubgroupError("right_coset_reps: |H| does not divide |G| evenly");
  return reps;
}

}  // namespace symbreak
