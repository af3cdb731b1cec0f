#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "symbreak/perm.hpp"

namespace symbreak {

// Finite undirected graph on vertices 1..vertex_count, no loops or
// duplicate edges. Edges are kept as sorted pairs in lexicographic order.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  // Accepts either plain edge-list text ("n m" header, then "u v" lines)
  // or DIMACS graph format ("p edge n m", then "e u v" lines).
  static Graph parse(std::string_view text);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  int degree_of(int u) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

// A connected graph with |E| = |V| - 1.
class Tree {
 public:
  Tree(int vertex_count, std::vector<std::pair<int, int>> edges);
  static Tree parse(std::string_view text);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  const std::vector<std::pair<int, int>>& edges() const { return graph_.edges(); }
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Graph graph_;
};

// Symmetric t-ary relational structure in set form: hyperedges are
// t-subsets of the universe 1..universe_size.
struct RelationalStructure {
  int universe_size = 0;
  int arity = 0;
  std::set<std::vector<int>> hyperedges;  // each sorted, exactly arity distinct points

  RelationalStructure(int universe_size, int arity, std::set<std::vector<int>> hyperedges);
  int degree_of(int point) const;
  friend bool operator==(const RelationalStructure&, const RelationalStructure&) = default;
};

// All t-subsets of [k] as sorted tuples, lexicographically ordered. This
// fixed order is the Johnson domain used across the library.
std::vector<std::vector<int>> subsets_lex(int k, int t);

// Algebraic description of a structured permutation group.
class GroupSpec {
 public:
  struct Natural {
    int n;
  };
  struct RowInterchange {
    int rows, cols;
  };
  struct RowColumn {
    int rows, cols;
  };
  struct Johnson {
    int k, t;
  };
  struct Wreath {
    std::shared_ptr<const GroupSpec> base;
    std::shared_ptr<const GroupSpec> top;
  };
  // points[i-1] is the global point carrying the part's local point i.
  // A contiguous ascending embedding is the "offset" shorthand in JSON.
  struct DisjointPart {
    std::shared_ptr<const GroupSpec> spec;
    std::vector<int> points;
  };
  struct DisjointProduct {
    int degree;
    std::vector<DisjointPart> parts;
  };
  struct TreeAut {
    Tree tree;
  };
  struct Explicit {
    int degree;
    std::vector<Permutation> generators;
  };

  using Variant = std::variant<Natural, RowInterchange, RowColumn, Johnson, Wreath,
                               DisjointProduct, TreeAut, Explicit>;

  static GroupSpec natural(int n);
  static GroupSpec row_interchange(int rows, int cols);
  static GroupSpec row_column(int rows, int cols);
  static GroupSpec johnson(int k, int t);
  static GroupSpec wreath(GroupSpec base, GroupSpec top);
  static GroupSpec disjoint_product(int degree, std::vector<DisjointPart> parts);
  static GroupSpec tree_aut(Tree tree);
  static GroupSpec explicit_group(int degree, std::vector<Permutation> generators);

  static GroupSpec from_json(std::string_view text);
  std::string to_json() const;  // two-space indent, trailing newline

  const Variant& variant() const { return variant_; }
  int domain_size() const;

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&variant_);
  }

 private:
  explicit GroupSpec(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

// Generators realizing the spec on its domain, with the conventions:
// matrices flatten row-major (i-1)*cols + j, wreath parts are contiguous
// blocks (j-1)*n + i, the Johnson domain is subsets_lex order.
GeneratedGroup realize(const GroupSpec& spec);

// Decomposes Aut(T) into disjoint products and wreath products over
// symmetric tops, grouping isomorphic child subtrees by canonical code.
// The realization of the result acts on V(T) itself.
GroupSpec tree_aut_decompose(const Tree& t);

// Vertex-edge incidence matrix of g, flattened row-major over
// n = |V| rows and m = |E| columns (edges in sorted order).
Assignment graph_to_bipartite_matrix(const Graph& g);

// Indicator word of E(g) over the 2-subsets of [k] in Johnson order.
Assignment graph_to_johnson_assignment(const Graph& g, int k);

// Embeds g into a symmetric t-ary structure on n + t points by adding
// auxiliary universe points v_1..v_{t-2}, a, b after the vertices.
RelationalStructure graph_to_relational(const Graph& g, int t);

// Indicator word of the hyperedge set over the t-subsets of the universe.
Assignment relational_to_assignment(const RelationalStructure& r);

// Inverse of relational_to_assignment for the given domain parameters.
RelationalStructure assignment_to_relational(const Assignment& a, int universe_size, int arity);

}  // namespace symbreak
