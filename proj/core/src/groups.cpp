#include "symbreak/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace symbreak {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

std::pair<int, int> normalized_edge(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  require(vertex_count_ >= 1, "graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    require(u >= 1 && u <= vertex_count_ && v >= 1 && v <= vertex_count_,
            "edge endpoint out of range");
    require(u != v, "graphs may not contain loops");
    std::tie(u, v) = normalized_edge(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
          "duplicate edge");
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), normalized_edge(u, v));
}

int Graph::degree_of(int u) const {
  int d = 0;
  for (const auto& [a, b] : edges_)
    if (a == u || b == u) ++d;
  return d;
}

Graph Graph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  bool dimacs = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "edge")
        throw ParseError("malformed DIMACS problem line");
      dimacs = true;
      continue;
    }
    if (tok == "e") {
      int u, v;
      if (!dimacs || !(ls >> u >> v)) throw ParseError("malformed DIMACS edge line");
      edges.emplace_back(u, v);
      continue;
    }
    // plain edge-list: header "n m", then "u v" pairs
    if (n < 0) {
      std::istringstream hs(line);
      if (!(hs >> n >> m)) throw ParseError("malformed edge-list header");
      continue;
    }
    int u, v;
    std::istringstream es(line);
    if (!(es >> u >> v)) throw ParseError("malformed edge-list line");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("missing graph header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("edge count does not match header");
  return Graph(n, std::move(edges));
}

Tree::Tree(int vertex_count, std::vector<std::pair<int, int>> edges)
    : graph_(vertex_count, std::move(edges)) {
  require(graph_.edge_count() == graph_.vertex_count() - 1,
          "a tree has exactly |V|-1 edges");
  // connectivity
  std::vector<char> seen(graph_.vertex_count(), 0);
  std::queue<int> q;
  q.push(1);
  seen[0] = 1;
  int reached = 1;
  auto adj = adjacency();
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u - 1]) {
      if (!seen[w - 1]) {
        seen[w - 1] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  require(reached == graph_.vertex_count(), "tree must be connected");
}

std::vector<std::vector<int>> Tree::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count());
  for (const auto& [u, v] : edges()) {
    adj[u - 1].push_back(v);
    adj[v - 1].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

Tree Tree::parse(std::string_view text) {
  Graph g = Graph::parse(text);
  return Tree(g.vertex_count(), g.edges());
}

RelationalStructure::RelationalStructure(int universe_size_, int arity_,
                                         std::set<std::vector<int>> hyperedges_)
    : universe_size(universe_size_), arity(arity_), hyperedges(std::move(hyperedges_)) {
  require(universe_size >= 1 && arity >= 1, "structure dimensions must be positive");
  for (const auto& h : hyperedges) {
    require(static_cast<int>(h.size()) == arity, "hyperedge arity mismatch");
    require(std::is_sorted(h.begin(), h.end()), "hyperedges must be sorted");
    require(std::adjacent_find(h.begin(), h.end()) == h.end(),
            "hyperedge points must be distinct");
    require(h.front() >= 1 && h.back() <= universe_size, "hyperedge point out of range");
  }
}

int RelationalStructure::degree_of(int point) const {
  int d = 0;
  for (const auto& h : hyperedges)
    if (std::binary_search(h.begin(), h.end(), point)) ++d;
  return d;
}

std::vector<std::vector<int>> subsets_lex(int k, int t) {
  require(k >= 1 && t >= 1 && t <= k, "subset parameters out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(t);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = t - 1;
    while (i >= 0 && cur[i] == k - (t - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < t; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// ---- GroupSpec -------------------------------------------------------

GroupSpec GroupSpec::natural(int n) {
  require(n >= 1, "natural: n must be positive");
  return GroupSpec(Variant{Natural{n}});
}

GroupSpec GroupSpec::row_interchange(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "row_interchange: dimensions must be positive");
  return GroupSpec(Variant{RowInterchange{rows, cols}});
}

GroupSpec GroupSpec::row_column(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "row_column: dimensions must be positive");
  return GroupSpec(Variant{RowColumn{rows, cols}});
}

GroupSpec GroupSpec::johnson(int k, int t) {
  require(k >= 2 && t >= 1 && t <= k - 1, "johnson: requires 1 <= t <= k-1");
  return GroupSpec(Variant{Johnson{k, t}});
}

GroupSpec GroupSpec::wreath(GroupSpec base, GroupSpec top) {
  return GroupSpec(Variant{Wreath{std::make_shared<const GroupSpec>(std::move(base)),
                                  std::make_shared<const GroupSpec>(std::move(top))}});
}

GroupSpec GroupSpec::disjoint_product(int degree, std::vector<DisjointPart> parts) {
  require(degree >= 1, "disjoint: degree must be positive");
  std::vector<char> used(degree, 0);
  for (const auto& part : parts) {
    require(part.spec != nullptr, "disjoint: missing part spec");
    require(static_cast<int>(part.points.size()) == part.spec->domain_size(),
            "disjoint: embedding size must match part domain");
    for (int p : part.points) {
      require(p >= 1 && p <= degree, "disjoint: embedded point out of range");
      require(!used[p - 1], "disjoint: part supports must be pairwise disjoint");
      used[p - 1] = 1;
    }
  }
  return GroupSpec(Variant{DisjointProduct{degree, std::move(parts)}});
}

GroupSpec GroupSpec::tree_aut(Tree tree) { return GroupSpec(Variant{TreeAut{std::move(tree)}}); }

GroupSpec GroupSpec::explicit_group(int degree, std::vector<Permutation> generators) {
  require(degree >= 1, "explicit: degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) throw DegreeMismatchError("explicit: generator degree mismatch");
  return GroupSpec(Variant{Explicit{degree, std::move(generators)}});
}

namespace {

std::uint64_t binomial(int k, int t) {
  std::uint64_t r = 1;
  for (int i = 1; i <= t; ++i) r = r * (k - t + i) / i;
  return r;
}

}  // namespace

int GroupSpec::domain_size() const {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Natural>) return s.n;
        if constexpr (std::is_same_v<T, RowInterchange> || std::is_same_v<T, RowColumn>)
          return s.rows * s.cols;
        if constexpr (std::is_same_v<T, Johnson>)
          return static_cast<int>(binomial(s.k, s.t));
        if constexpr (std::is_same_v<T, Wreath>)
          return s.base->domain_size() * s.top->domain_size();
        if constexpr (std::is_same_v<T, DisjointProduct>) return s.degree;
        if constexpr (std::is_same_v<T, TreeAut>) return s.tree.vertex_count();
        if constexpr (std::is_same_v<T, Explicit>) return s.degree;
      },
      variant_);
}

// ---- realize ---------------------------------------------------------

namespace {

Permutation embedded(const Permutation& local, const std::vector<int>& points, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  for (int i = 1; i <= local.degree(); ++i) images[points[i - 1] - 1] = points[local.apply(i) - 1];
  return Permutation(std::move(images));
}

std::vector<Permutation> matrix_row_generators(int rows, int cols) {
  std::vector<Permutation> gens;
  auto flat = [cols](int i, int j) { return (i - 1) * cols + j; };
  if (rows >= 2) {
    std::vector<int> img(rows * cols);
    std::iota(img.begin(), img.end(), 1);
    for (int j = 1; j <= cols; ++j) {
      img[flat(1, j) - 1] = flat(2, j);
      img[flat(2, j) - 1] = flat(1, j);
    }
    gens.emplace_back(std::move(img));
  }
  if (rows >= 3) {
    std::vector<int> img(rows * cols);
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= cols; ++j) img[flat(i, j) - 1] = flat(i % rows + 1, j);
    gens.emplace_back(std::move(img));
  }
  return gens;
}

std::vector<Permutation> matrix_col_generators(int rows, int cols) {
  std::vector<Permutation> gens;
  auto flat = [cols](int i, int j) { return (i - 1) * cols + j; };
  if (cols >= 2) {
    std::vector<int> img(rows * cols);
    std::iota(img.begin(), img.end(), 1);
    for (int i = 1; i <= rows; ++i) {
      img[flat(i, 1) - 1] = flat(i, 2);
      img[flat(i, 2) - 1] = flat(i, 1);
    }
    gens.emplace_back(std::move(img));
  }
  if (cols >= 3) {
    std::vector<int> img(rows * cols);
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= cols; ++j) img[flat(i, j) - 1] = flat(i, j % cols + 1);
    gens.emplace_back(std::move(img));
  }
  return gens;
}

// Action of pi in Sym(k) on the t-subsets of [k], indexed in subsets_lex order.
Permutation induced_on_subsets(const Permutation& pi, const std::vector<std::vector<int>>& domain) {
  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < domain.size(); ++i) index_of[domain[i]] = static_cast<int>(i) + 1;
  std::vector<int> images(domain.size());
  for (size_t i = 0; i < domain.size(); ++i) {
    std::vector<int> img;
    img.reserve(domain[i].size());
    for (int a : domain[i]) img.push_back(pi.apply(a));
    std::sort(img.begin(), img.end());
    images[i] = index_of.at(img);
  }
  return Permutation(std::move(images));
}

}  // namespace

GeneratedGroup realize(const GroupSpec& spec) {
  if (const auto* s = spec.get_if<GroupSpec::Natural>())
    return GeneratedGroup::full_symmetric(s->n);

  if (const auto* s = spec.get_if<GroupSpec::RowInterchange>())
    return GeneratedGroup(s->rows * s->cols, matrix_row_generators(s->rows, s->cols));

  if (const auto* s = spec.get_if<GroupSpec::RowColumn>()) {
    auto gens = matrix_row_generators(s->rows, s->cols);
    auto cols = matrix_col_generators(s->rows, s->cols);
    gens.insert(gens.end(), cols.begin(), cols.end());
    return GeneratedGroup(s->rows * s->cols, std::move(gens));
  }

  if (const auto* s = spec.get_if<GroupSpec::Johnson>()) {
    auto domain = subsets_lex(s->k, s->t);
    auto sym = GeneratedGroup::full_symmetric(s->k);
    std::vector<Permutation> gens;
    for (const auto& pi : sym.generators()) gens.push_back(induced_on_subsets(pi, domain));
    return GeneratedGroup(static_cast<int>(domain.size()), std::move(gens));
  }

  if (const auto* s = spec.get_if<GroupSpec::Wreath>()) {
    GeneratedGroup base = realize(*s->base);
    GeneratedGroup top = realize(*s->top);
    const int n = base.degree(), m = top.degree();
    std::vector<Permutation> gens;
    // base generators inside part 1; the top action conjugates them into
    // the other parts
    for (const auto& g : base.generators()) {
      std::vector<int> img(n * m);
      std::iota(img.begin(), img.end(), 1);
      for (int i = 1; i <= n; ++i) img[i - 1] = g.apply(i);
      gens.emplace_back(std::move(img));
    }
    for (const auto& h : top.generators()) {
      std::vector<int> img(n * m);
      for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= n; ++i) img[(j - 1) * n + i - 1] = (h.apply(j) - 1) * n + i;
      gens.emplace_back(std::move(img));
    }
    return GeneratedGroup(n * m, std::move(gens));
  }

  if (const auto* s = spec.get_if<GroupSpec::DisjointProduct>()) {
    std::vector<Permutation> gens;
    for (const auto& part : s->parts) {
      GeneratedGroup sub = realize(*part.spec);
      for (const auto& g : sub.generators()) gens.push_back(embedded(g, part.points, s->degree));
    }
    return GeneratedGroup(s->degree, std::move(gens));
  }

  if (const auto* s = spec.get_if<GroupSpec::TreeAut>())
    return realize(tree_aut_decompose(s->tree));

  const auto* s = spec.get_if<GroupSpec::Explicit>();
  return GeneratedGroup(s->degree, s->generators);
}

// ---- tree automorphism decomposition ---------------------------------

namespace {

bool is_trivial_spec(const GroupSpec& spec) {
  if (const auto* n = spec.get_if<GroupSpec::Natural>()) return n->n == 1;
  if (const auto* d = spec.get_if<GroupSpec::DisjointProduct>()) return d->parts.empty();
  return false;
}

struct RootedDecomp {
  std::string code;          // AHU canonical code of the rooted subtree
  GroupSpec spec;            // group on the local flat domain [order.size()]
  std::vector<int> order;    // order[i-1] = tree vertex carried by flat point i
};

RootedDecomp rooted_decompose(int v, int parent, const std::vector<std::vector<int>>& adj) {
  std::vector<RootedDecomp> children;
  for (int w : adj[v - 1])
    if (w != parent) children.push_back(rooted_decompose(w, v, adj));

  if (children.empty())
    return {"()", GroupSpec::natural(1), {v}};

  // classes of isomorphic child subtrees, ordered by code; members by root vertex
  std::stable_sort(children.begin(), children.end(), [](const auto& a, const auto& b) {
    if (a.code != b.code) return a.code < b.code;
    return a.order.front() < b.order.front();
  });

  std::vector<int> order{v};
  std::vector<GroupSpec::DisjointPart> parts;
  std::string code = "(";
  size_t i = 0;
  while (i < children.size()) {
    size_t j = i;
    while (j < children.size() && children[j].code == children[i].code) ++j;
    const int mult = static_cast<int>(j - i);
    const int start = static_cast<int>(order.size()) + 1;
    for (size_t c = i; c < j; ++c) {
      order.insert(order.end(), children[c].order.begin(), children[c].order.end());
      code += children[c].code;
    }
    GroupSpec part_spec = mult == 1
                              ? std::move(children[i].spec)
                              : GroupSpec::wreath(std::move(children[i].spec),
                                                  GroupSpec::natural(mult));
    if (!is_trivial_spec(part_spec)) {
      std::vector<int> points(order.size() + 1 - start);
      std::iota(points.begin(), points.end(), start);
      parts.push_back({std::make_shared<const GroupSpec>(std::move(part_spec)),
                       std::move(points)});
    }
    i = j;
  }
  code += ")";
  GroupSpec spec = GroupSpec::disjoint_product(static_cast<int>(order.size()), std::move(parts));
  return {std::move(code), std::move(spec), std::move(order)};
}

std::vector<int> tree_centers(const Tree& t) {
  const int n = t.vertex_count();
  if (n == 1) return {1};
  auto adj = t.adjacency();
  std::vector<int> deg(n);
  for (int v = 1; v <= n; ++v) deg[v - 1] = static_cast<int>(adj[v - 1].size());
  std::vector<int> layer;
  std::vector<char> removed(n, 0);
  for (int v = 1; v <= n; ++v)
    if (deg[v - 1] == 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v - 1] = 1;
      --remaining;
      for (int w : adj[v - 1]) {
        if (removed[w - 1]) continue;
        if (--deg[w - 1] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 1; v <= n; ++v)
    if (!removed[v - 1]) centers.push_back(v);
  return centers;
}

// Re-expresses parts of a local decomposition through an absolute embedding,
// dissolving nested disjoint products along the way.
void flatten_into(const GroupSpec& spec, const std::vector<int>& embedding,
                  std::vector<GroupSpec::DisjointPart>& out) {
  if (is_trivial_spec(spec)) return;
  if (const auto* d = spec.get_if<GroupSpec::DisjointProduct>()) {
    for (const auto& part : d->parts) {
      std::vector<int> abs_points;
      abs_points.reserve(part.points.size());
      for (int p : part.points) abs_points.push_back(embedding[p - 1]);
      flatten_into(*part.spec, abs_points, out);
    }
    return;
  }
  out.push_back({std::make_shared<const GroupSpec>(spec), embedding});
}

}  // namespace

GroupSpec tree_aut_decompose(const Tree& t) {
  const int n = t.vertex_count();
  auto adj = t.adjacency();
  auto centers = tree_centers(t);

  std::vector<GroupSpec::DisjointPart> parts;
  if (centers.size() == 1) {
    RootedDecomp root = rooted_decompose(centers[0], 0, adj);
    flatten_into(root.spec, root.order, parts);
  } else {
    RootedDecomp a = rooted_decompose(centers[0], centers[1], adj);
    RootedDecomp b = rooted_decompose(centers[1], centers[0], adj);
    if (a.code == b.code) {
      std::vector<int> embedding = a.order;
      embedding.insert(embedding.end(), b.order.begin(), b.order.end());
      GroupSpec half = std::move(a.spec);
      GroupSpec w = GroupSpec::wreath(std::move(half), GroupSpec::natural(2));
      parts.push_back({std::make_shared<const GroupSpec>(std::move(w)), std::move(embedding)});
    } else {
      flatten_into(a.spec, a.order, parts);
      flatten_into(b.spec, b.order, parts);
    }
  }

  // unwrap a single identity-embedded part
  if (parts.size() == 1 && parts[0].spec->domain_size() == n) {
    bool identity = true;
    for (int i = 0; i < n; ++i)
      if (parts[0].points[i] != i + 1) identity = false;
    if (identity) return *parts[0].spec;
  }
  return GroupSpec::disjoint_product(n, std::move(parts));
}

// ---- graph/structure encodings ---------------------------------------

Assignment graph_to_bipartite_matrix(const Graph& g) {
  require(g.edge_count() >= 1, "incidence matrix needs at least one edge");
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<std::uint8_t> bits(n * m, 0);
  for (int j = 1; j <= m; ++j) {
    const auto& [u, v] = g.edges()[j - 1];
    bits[(u - 1) * m + j - 1] = 1;
    bits[(v - 1) * m + j - 1] = 1;
  }
  return Assignment(std::move(bits));
}

Assignment graph_to_johnson_assignment(const Graph& g, int k) {
  if (g.vertex_count() != k)
    throw DegreeMismatchError("graph_to_johnson_assignment: vertex count must equal k");
  auto domain = subsets_lex(k, 2);
  std::vector<std::uint8_t> bits(domain.size(), 0);
  for (size_t i = 0; i < domain.size(); ++i)
    if (g.has_edge(domain[i][0], domain[i][1])) bits[i] = 1;
  return Assignment(std::move(bits));
}

RelationalStructure graph_to_relational(const Graph& g, int t) {
  require(t >= 2, "graph_to_relational: arity must be at least 2");
  require(g.edge_count() >= 1, "graph_to_relational: graph needs at least one edge");
  const int n = g.vertex_count();
  // universe order: r_1..r_n, then v_1..v_{t-2}, a, b
  std::vector<int> pad;
  for (int i = 1; i <= t - 2; ++i) pad.push_back(n + i);
  const int a = n + t - 1, b = n + t;

  std::set<std::vector<int>> hyperedges;
  for (const auto& [u, w] : g.edges()) {
    std::vector<int> h{u, w};
    h.insert(h.end(), pad.begin(), pad.end());
    std::sort(h.begin(), h.end());
    hyperedges.insert(std::move(h));
  }
  for (int u = 1; u <= n; ++u) {
    if (g.degree_of(u) == 0) continue;
    std::vector<int> h{u};
    h.insert(h.end(), pad.begin(), pad.end());
    h.push_back(a);
    std::sort(h.begin(), h.end());
    hyperedges.insert(std::move(h));
  }
  std::vector<int> last = pad;
  last.push_back(a);
  last.push_back(b);
  hyperedges.insert(std::move(last));
  return RelationalStructure(n + t, t, std::move(hyperedges));
}

Assignment relational_to_assignment(const RelationalStructure& r) {
  auto domain = subsets_lex(r.universe_size, r.arity);
  std::vector<std::uint8_t> bits(domain.size(), 0);
  for (size_t i = 0; i < domain.size(); ++i)
    if (r.hyperedges.count(domain[i])) bits[i] = 1;
  return Assignment(std::move(bits));
}

RelationalStructure assignment_to_relational(const Assignment& a, int universe_size, int arity) {
  auto domain = subsets_lex(universe_size, arity);
  if (static_cast<int>(domain.size()) != a.length())
    throw DegreeMismatchError("assignment_to_relational: length mismatch");
  std::set<std::vector<int>> hyperedges;
  for (size_t i = 0; i < domain.size(); ++i)
    if (a.bit(static_cast<int>(i) + 1)) hyperedges.insert(domain[i]);
  return RelationalStructure(universe_size, arity, std::move(hyperedges));
}

// ---- JSON ------------------------------------------------------------

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson spec_to_json_value(const GroupSpec& spec) {
  OrderedJson j;
  if (const auto* s = spec.get_if<GroupSpec::Natural>()) {
    j["kind"] = "natural";
    j["n"] = s->n;
  } else if (const auto* s = spec.get_if<GroupSpec::RowInterchange>()) {
    j["kind"] = "row_interchange";
    j["rows"] = s->rows;
    j["cols"] = s->cols;
  } else if (const auto* s = spec.get_if<GroupSpec::RowColumn>()) {
    j["kind"] = "row_column";
    j["rows"] = s->rows;
    j["cols"] = s->cols;
  } else if (const auto* s = spec.get_if<GroupSpec::Johnson>()) {
    j["kind"] = "johnson";
    j["k"] = s->k;
    j["t"] = s->t;
  } else if (const auto* s = spec.get_if<GroupSpec::Wreath>()) {
    j["kind"] = "wreath";
    j["base"] = spec_to_json_value(*s->base);
    j["top"] = spec_to_json_value(*s->top);
  } else if (const auto* s = spec.get_if<GroupSpec::DisjointProduct>()) {
    j["kind"] = "disjoint";
    j["degree"] = s->degree;
    j["parts"] = OrderedJson::array();
    for (const auto& part : s->parts) {
      OrderedJson pj;
      bool contiguous = true;
      for (size_t i = 1; i < part.points.size(); ++i)
        if (part.points[i] != part.points[i - 1] + 1) contiguous = false;
      if (contiguous)
        pj["offset"] = part.points.front() - 1;
      else
        pj["points"] = part.points;
      pj["spec"] = spec_to_json_value(*part.spec);
      j["parts"].push_back(std::move(pj));
    }
  } else if (const auto* s = spec.get_if<GroupSpec::TreeAut>()) {
    j["kind"] = "tree";
    j["n"] = s->tree.vertex_count();
    j["edges"] = OrderedJson::array();
    for (const auto& [u, v] : s->tree.edges()) j["edges"].push_back({u, v});
  } else if (const auto* s = spec.get_if<GroupSpec::Explicit>()) {
    j["kind"] = "explicit";
    j["degree"] = s->degree;
    j["generators"] = OrderedJson::array();
    for (const auto& g : s->generators) j["generators"].push_back(g.to_cycles());
  }
  return j;
}

GroupSpec spec_from_json_value(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("group spec JSON needs a \"kind\" string");
  const std::string kind = j["kind"];
  try {
    if (kind == "natural") return GroupSpec::natural(j.at("n").get<int>());
    if (kind == "row_interchange")
      return GroupSpec::row_interchange(j.at("rows").get<int>(), j.at("cols").get<int>());
    if (kind == "row_column")
      return GroupSpec::row_column(j.at("rows").get<int>(), j.at("cols").get<int>());
    if (kind == "johnson")
      return GroupSpec::johnson(j.at("k").get<int>(), j.at("t").get<int>());
    if (kind == "wreath")
      return GroupSpec::wreath(spec_from_json_value(j.at("base")),
                               spec_from_json_value(j.at("top")));
    if (kind == "disjoint") {
      std::vector<GroupSpec::DisjointPart> parts;
      int max_point = 1;
      for (const auto& pj : j.at("parts")) {
        GroupSpec sub = spec_from_json_value(pj.at("spec"));
        std::vector<int> points;
        if (pj.contains("points")) {
          points = pj.at("points").get<std::vector<int>>();
        } else {
          int offset = pj.at("offset").get<int>();
          points.resize(sub.domain_size());
          std::iota(points.begin(), points.end(), offset + 1);
        }
        for (int p : points) max_point = std::max(max_point, p);
        parts.push_back({std::make_shared<const GroupSpec>(std::move(sub)), std::move(points)});
      }
      int degree = j.contains("degree") ? j.at("degree").get<int>() : max_point;
      return GroupSpec::disjoint_product(degree, std::move(parts));
    }
    if (kind == "tree") {
      std::vector<std::pair<int, int>> edges;
      int max_vertex = 1;
      for (const auto& ej : j.at("edges")) {
        int u = ej.at(0).get<int>(), v = ej.at(1).get<int>();
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
      }
      int n = j.contains("n") ? j.at("n").get<int>() : max_vertex;
      return GroupSpec::tree_aut(Tree(n, std::move(edges)));
    }
    if (kind == "explicit") {
      int degree = j.at("degree").get<int>();
      std::vector<Permutation> gens;
      for (const auto& gj : j.at("generators"))
        gens.push_back(Permutation::from_cycles(gj.get<std::string>(), degree));
      return GroupSpec::explicit_group(degree, std::move(gens));
    }
  } catch (const OrderedJson::exception& e) {
    throw ParseError(std::string("group spec JSON: ") + e.what());
  }
  throw ParseError("unknown group spec kind: " + kind);
}

}  // namespace

GroupSpec GroupSpec::from_json(std::string_view text) {
  OrderedJson j = OrderedJson::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return spec_from_json_value(j);
}

std::string GroupSpec::to_json() const { return spec_to_json_value(*this).dump(2) + "\n"; }

}  // namespace symbreak
