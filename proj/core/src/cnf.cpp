#include "symbreak/cnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symbreak {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace

void CnfPredicate::validate() const {
  require(core_vars >= 1, "predicate needs at least one core variable");
  require(aux_vars >= 0, "negative aux count");
  for (const auto& clause : clauses) {
    require(!clause.empty(), "empty clause");
    std::set<int> vars;
    for (int lit : clause) {
      require(lit != 0, "zero literal");
      int v = std::abs(lit);
      require(v <= var_count(), "literal out of variable range");
      require(vars.insert(v).second, "clause mentions a variable twice");
    }
  }
}

CnfPredicate sbp_symmetric(int n) {
  require(n >= 1, "sbp_symmetric: n must be positive");
  CnfPredicate p;
  p.core_vars = n;
  for (int i = 1; i < n; ++i) p.clauses.push_back({-i, i + 1});
  for (int i = 1; i <= n; ++i) p.var_names[i] = "x_" + std::to_string(i);
  return p;
}

LexLeqClauses lex_leq_clauses(const std::vector<int>& word_a, const std::vector<int>& word_b,
                              int aux_base) {
  if (word_a.size() != word_b.size())
    throw DegreeMismatchError("lex_leq_clauses: word length mismatch");
  require(!word_a.empty(), "lex_leq_clauses: empty words");

  // positions where the words hold distinct variables; shared variables
  // are equal under every assignment and fold away
  std::vector<int> relevant;
  for (size_t i = 0; i < word_a.size(); ++i)
    if (word_a[i] != word_b[i]) relevant.push_back(static_cast<int>(i));

  LexLeqClauses out;
  int prev_eq = 0;  // 0 means the folded constant true
  for (size_t r = 0; r < relevant.size(); ++r) {
    const int a = word_a[relevant[r]];
    const int b = word_b[relevant[r]];
    if (prev_eq == 0)
      out.clauses.push_back({-a, b});
    else
      out.clauses.push_back({-prev_eq, -a, b});
    if (r + 1 < relevant.size()) {
      const int e = aux_base + out.aux_count;
      ++out.aux_count;
      // e <-> prev_eq and (a <-> b)
      out.clauses.push_back({-e, -a, b});
      out.clauses.push_back({-e, a, -b});
      if (prev_eq == 0) {
        out.clauses.push_back({e, a, b});
        out.clauses.push_back({e, -a, -b});
      } else {
        out.clauses.push_back({-e, prev_eq});
        out.clauses.push_back({e, -prev_eq, a, b});
        out.clauses.push_back({e, -prev_eq, -a, -b});
      }
      prev_eq = e;
    }
  }
  return out;
}

CnfPredicate sbp_row_interchange(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "sbp_row_interchange: dimensions must be positive");
  CnfPredicate p;
  p.core_vars = rows * cols;
  auto flat = [cols](int i, int j) { return (i - 1) * cols + j; };
  int aux_next = p.core_vars + 1;
  for (int i = 1; i < rows; ++i) {
    std::vector<int> a, b;
    for (int j = 1; j <= cols; ++j) {
      a.push_back(flat(i, j));
      b.push_back(flat(i + 1, j));
    }
    auto lex = lex_leq_clauses(a, b, aux_next);
    aux_next += lex.aux_count;
    p.aux_vars += lex.aux_count;
    p.clauses.insert(p.clauses.end(), lex.clauses.begin(), lex.clauses.end());
  }
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      p.var_names[flat(i, j)] = "x_" + std::to_string(i) + "_" + std::to_string(j);
  return p;
}

CnfPredicate sbp_small_group(const GeneratedGroup& g, std::uint64_t cap) {
  const auto& elems = g.elements(cap);
  const int n = g.degree();
  CnfPredicate p;
  p.core_vars = n;
  std::vector<int> word_a(n);
  for (int i = 1; i <= n; ++i) word_a[i - 1] = i;
  int aux_next = n + 1;
  for (const auto& e : elems) {
    if (e.is_identity()) continue;
    // position j of theta^g reads theta at j^(g^-1)
    const Permutation inv = inverse(e);
    std::vector<int> word_b(n);
    for (int j = 1; j <= n; ++j) word_b[j - 1] = inv.apply(j);
    auto lex = lex_leq_clauses(word_a, word_b, aux_next);
    aux_next += lex.aux_count;
    p.aux_vars += lex.aux_count;
    p.clauses.insert(p.clauses.end(), lex.clauses.begin(), lex.clauses.end());
  }
  for (int i = 1; i <= n; ++i) p.var_names[i] = "x_" + std::to_string(i);
  return p;
}

namespace {

// Renames pred's core variables through core_map and shifts its aux
// variables to start at aux_next (which is advanced past them).
void append_renamed(const CnfPredicate& pred, const std::vector<int>& core_map, int& aux_next,
                    std::vector<std::vector<int>>& clauses) {
  const int aux_base = aux_next;
  for (const auto& clause : pred.clauses) {
    std::vector<int> mapped;
    mapped.reserve(clause.size());
    for (int lit : clause) {
      const int v = std::abs(lit);
      const int global =
          v <= pred.core_vars ? core_map[v - 1] : aux_base + (v - pred.core_vars - 1);
      mapped.push_back(lit > 0 ? global : -global);
    }
    clauses.push_back(std::move(mapped));
  }
  aux_next += pred.aux_vars;
}

}  // namespace

CnfPredicate sbp_disjoint(int domain_size,
                          const std::vector<std::pair<CnfPredicate, std::vector<int>>>& parts) {
  require(domain_size >= 1, "sbp_disjoint: domain must be positive");
  std::vector<char> used(domain_size, 0);
  for (const auto& [pred, points] : parts) {
    require(static_cast<int>(points.size()) == pred.core_vars,
            "sbp_disjoint: support size must match part core size");
    for (int p : points) {
      require(p >= 1 && p <= domain_size, "sbp_disjoint: support point out of range");
      require(!used[p - 1], "sbp_disjoint: overlapping supports");
      used[p - 1] = 1;
    }
  }
  CnfPredicate out;
  out.core_vars = domain_size;
  int aux_next = domain_size + 1;
  for (const auto& [pred, points] : parts) {
    append_renamed(pred, points, aux_next, out.clauses);
    out.aux_vars += pred.aux_vars;
  }
  for (int i = 1; i <= domain_size; ++i) out.var_names[i] = "x_" + std::to_string(i);
  return out;
}

CnfPredicate sbp_wreath_sym(const CnfPredicate& gamma, int m) {
  require(m >= 1, "sbp_wreath_sym: m must be positive");
  const int n = gamma.core_vars;
  CnfPredicate out;
  out.core_vars = n * m;
  int aux_next = out.core_vars + 1;
  auto flat = [n](int i, int j) { return (j - 1) * n + i; };

  for (int j = 1; j <= m; ++j) {
    std::vector<int> core_map(n);
    for (int i = 1; i <= n; ++i) core_map[i - 1] = flat(i, j);
    append_renamed(gamma, core_map, aux_next, out.clauses);
    out.aux_vars += gamma.aux_vars;
  }
  for (int j = 1; j < m; ++j) {
    std::vector<int> a, b;
    for (int i = 1; i <= n; ++i) {
      a.push_back(flat(i, j));
      b.push_back(flat(i, j + 1));
    }
    auto lex = lex_leq_clauses(a, b, aux_next);
    aux_next += lex.aux_count;
    out.aux_vars += lex.aux_count;
    out.clauses.insert(out.clauses.end(), lex.clauses.begin(), lex.clauses.end());
  }
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= n; ++i)
      out.var_names[flat(i, j)] = "x_" + std::to_string(i) + "_" + std::to_string(j);
  return out;
}

CnfPredicate sbp_tree(const Tree& t) {
  CnfPredicate p = sbp_from_spec(tree_aut_decompose(t));
  p.var_names.clear();
  for (int v = 1; v <= t.vertex_count(); ++v) p.var_names[v] = "v_" + std::to_string(v);
  return p;
}

CnfPredicate sbp_from_spec(const GroupSpec& spec, std::uint64_t cap) {
  if (const auto* s = spec.get_if<GroupSpec::Natural>()) return sbp_symmetric(s->n);
  if (const auto* s = spec.get_if<GroupSpec::RowInterchange>())
    return sbp_row_interchange(s->rows, s->cols);
  if (const auto* s = spec.get_if<GroupSpec::DisjointProduct>()) {
    std::vector<std::pair<CnfPredicate, std::vector<int>>> parts;
    for (const auto& part : s->parts)
      parts.emplace_back(sbp_from_spec(*part.spec, cap), part.points);
    return sbp_disjoint(s->degree, parts);
  }
  if (const auto* s = spec.get_if<GroupSpec::Wreath>()) {
    if (const auto* top = s->top->get_if<GroupSpec::Natural>())
      return sbp_wreath_sym(sbp_from_spec(*s->base, cap), top->n);
  }
  if (const auto* s = spec.get_if<GroupSpec::TreeAut>()) return sbp_tree(s->tree);

  // Johnson, row-column, general wreath tops, explicit generator sets:
  // no structural generator; break each element while the group is small.
  try {
    return sbp_small_group(realize(spec), cap);
  } catch (const CapExceededError&) {
    throw IntractableError(
        "group exceeds the enumeration cap and no polynomial-size construction "
        "is available for this family");
  }
}

std::string to_dimacs(const CnfPredicate& p) {
  std::ostringstream out;
  out << "c core-vars " << p.core_vars << "\n";
  out << "c aux-vars " << p.aux_vars << "\n";
  for (const auto& [v, name] : p.var_names) out << "c map " << v << ' ' << name << "\n";
  out << "p cnf " << p.var_count() << ' ' << p.clauses.size() << "\n";
  for (const auto& clause : p.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfPredicate predicate_from_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfPredicate p;
  int declared_vars = -1;
  long declared_clauses = -1;
  int core = -1, aux = -1;
  std::vector<int> current;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") {
      std::string key;
      if (ls >> key) {
        if (key == "core-vars") ls >> core;
        else if (key == "aux-vars") ls >> aux;
        else if (key == "map") {
          int v;
          std::string name;
          if (ls >> v >> name) p.var_names[v] = name;
        }
      }
      continue;
    }
    if (tok == "p") {
      std::string kind;
      if (!(ls >> kind >> declared_vars >> declared_clauses) || kind != "cnf")
        throw ParseError("malformed DIMACS problem line");
      continue;
    }
    if (declared_vars < 0) throw ParseError("clause before DIMACS problem line");
    std::istringstream cs(line);
    int lit;
    while (cs >> lit) {
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause in DIMACS input");
        p.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) throw ParseError("unterminated clause in DIMACS input");
  if (declared_vars < 0) throw ParseError("missing DIMACS problem line");
  if (declared_clauses != static_cast<long>(p.clauses.size()))
    throw ParseError("clause count does not match DIMACS header");
  if (core >= 0 || aux >= 0) {
    if (core < 0 || aux < 0 || core + aux != declared_vars)
      throw ParseError("core-vars/aux-vars comments inconsistent with variable count");
    p.core_vars = core;
    p.aux_vars = aux;
  } else {
    p.core_vars = declared_vars;
    p.aux_vars = 0;
  }
  p.validate();
  return p;
}

}  // namespace symbreak
