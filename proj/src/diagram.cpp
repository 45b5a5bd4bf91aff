#include "quartic/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace quartic {

int SplitDiagram::column_of(int vertex) const {
  if (vertex == 0) return -1;
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (std::find(columns[k].vertices.begin(), columns[k].vertices.end(), vertex) != columns[k].vertices.end())
      return static_cast<int>(k);
  throw std::invalid_argument("vertex " + std::to_string(vertex) + " is not in the diagram");
}

std::vector<int> SplitDiagram::children(int vertex) const {
  const int k = column_of(vertex) + 1;
  std::vector<int> out;
  if (k >= static_cast<int>(columns.size())) return out;
  for (int v : columns[static_cast<std::size_t>(k)].vertices)
    if (parent.at(v) == vertex) out.push_back(v);
  return out;
}

int SplitDiagram::vertex_count() const {
  int n = 1;
  for (const auto& c : columns) n += static_cast<int>(c.vertices.size());
  return n;
}

void SplitDiagram::validate() const {
  std::set<int> seen{0};
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (k > 0 && !(columns[k - 1].exponent < columns[k].exponent))
      throw std::invalid_argument("column exponents must increase strictly");
    if (sgn(columns[k].exponent) <= 0) throw std::invalid_argument("column exponents must be positive");
    if (columns[k].vertices.empty()) throw std::invalid_argument("empty column");
    for (int v : columns[k].vertices) {
      if (!seen.insert(v).second) throw std::invalid_argument("vertex listed twice");
      auto it = parent.find(v);
      if (it == parent.end()) throw std::invalid_argument("vertex without parent");
      if (column_of(it->second) != static_cast<int>(k) - 1)
        throw std::invalid_argument("parent is not in the previous column");
    }
    if (k > 0 && columns[k].vertices.size() <= columns[k - 1].vertices.size())
      throw std::invalid_argument("column without a split");
    if (k == 0 && columns[k].vertices.size() < 2) throw std::invalid_argument("column without a split");
  }
  if (parent.size() + 1 != seen.size()) throw std::invalid_argument("edge for an unknown vertex");
  for (std::size_t k = 0; k + 1 < columns.size(); ++k)
    for (int v : columns[k].vertices)
      if (children(v).empty()) throw std::invalid_argument("vertex without continuation");
  for (const auto& [a, b] : braces) {
    if (a >= b) throw std::invalid_argument("brace pairs must be ordered");
    if (a == 0 || column_of(a) != column_of(b)) throw std::invalid_argument("brace across columns");
  }
}

SplitDiagram build_diagram(const std::vector<PuiseuxBranch>& branches,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  SplitDiagram d;
  const std::size_t n = branches.size();
  if (n < 2) return d;
  std::vector<std::vector<Rational>> contact(n, std::vector<Rational>(n));
  std::set<Rational> exps;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto c = contact_exponent(branches[a], branches[b]);
      if (!c) throw std::invalid_argument("branches are not separated");
      contact[a][b] = contact[b][a] = *c;
      exps.insert(*c);
    }

  int next_id = 1;
  std::vector<int> prev(n, 0);
  // vertex_of[k][b]: vertex holding branch b in column k.
  std::vector<std::vector<int>> vertex_of;
  for (const auto& e : exps) {
    SplitDiagram::Column col{e, {}};
    std::vector<int> cur(n, -1);
    for (std::size_t b = 0; b < n; ++b) {
      if (cur[b] != -1) continue;
      const int id = next_id++;
      col.vertices.push_back(id);
      d.parent[id] = prev[b];
      for (std::size_t a = b; a < n; ++a)
        if (cur[a] == -1 && (a == b || contact[a][b] > e)) cur[a] = id;
    }
    vertex_of.push_back(cur);
    prev = cur;
    d.columns.push_back(std::move(col));
  }
  for (const auto& [a, b] : pairs) {
    const auto k = static_cast<std::size_t>(std::distance(exps.begin(), exps.find(contact[a][b])));
    int va = vertex_of[k][a], vb = vertex_of[k][b];
    if (va > vb) std::swap(va, vb);
    d.braces.emplace_back(va, vb);
  }
  std::sort(d.braces.begin(), d.braces.end());
  d.braces.erase(std::unique(d.braces.begin(), d.braces.end()), d.braces.end());
  d.validate();
  return d;
}

namespace {

int brace_partner(const SplitDiagram& d, int v) {
  for (const auto& [a, b] : d.braces) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return -1;
}

struct Unit {
  std::string signature;
  std::vector<int> members;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const SplitDiagram& d) : d_(d) {}

  std::string signature(int v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    std::string s;
    const auto units = child_units(v);
    if (units.empty()) {
      s = "o";
    } else {
      s = "(";
      for (std::size_t i = 0; i < units.size(); ++i) s += (i ? "," : "") + units[i].signature;
      s += ")";
    }
    memo_[v] = s;
    return s;
  }

  // Children grouped into sibling brace pairs and singles, sorted.
  std::vector<Unit> child_units(int v) {
    std::vector<Unit> units;
    std::set<int> done;
    for (int c : d_.children(v)) {
      if (done.count(c)) continue;
      const int p = brace_partner(d_, c);
      if (p != -1 && d_.parent.at(p) == v) {
        std::string a = signature(c), b = signature(p);
        std::vector<int> m{c, p};
        if (b < a) {
          std::swap(a, b);
          std::swap(m[0], m[1]);
        }
        units.push_back({"{" + a + "," + b + "}", m});
        done.insert(p);
      } else {
        units.push_back({signature(c) + (p != -1 ? "*" : ""), {c}});
      }
      done.insert(c);
    }
    std::stable_sort(units.begin(), units.end(),
                     [](const Unit& x, const Unit& y) { return x.signature < y.signature; });
    return units;
  }

 private:
  const SplitDiagram& d_;
  std::map<int, std::string> memo_;
};

std::string exponents_key(const SplitDiagram& d) {
  std::string s;
  for (std::size_t k = 0; k < d.columns.size(); ++k) s += (k ? "," : "") + to_string(d.columns[k].exponent);
  return s;
}

}  // namespace

SplitDiagram canonicalize(const SplitDiagram& d) {
  d.validate();
  Canonicalizer canon(d);
  SplitDiagram out;
  std::map<int, int> renumber{{0, 0}};
  std::vector<int> frontier{0};
  int next_id = 1;
  for (const auto& col : d.columns) {
    SplitDiagram::Column c{col.exponent, {}};
    std::vector<int> next;
    for (int v : frontier)
      for (const auto& unit : canon.child_units(v))
        for (int m : unit.members) {
          renumber[m] = next_id;
          out.parent[next_id] = renumber.at(v);
          c.vertices.push_back(next_id++);
          next.push_back(m);
        }
    out.columns.push_back(std::move(c));
    frontier = std::move(next);
  }
  for (const auto& [a, b] : d.braces) {
    int x = renumber.at(a), y = renumber.at(b);
    if (x > y) std::swap(x, y);
    out.braces.emplace_back(x, y);
  }
  std::sort(out.braces.begin(), out.braces.end());
  return out;
}

std::string canonical_key(const SplitDiagram& d) {
  d.validate();
  Canonicalizer canon(d);
  std::string key = exponents_key(d) + ":" + canon.signature(0);
  // Braces between non-siblings are recorded by column and signature.
  std::vector<std::string> loose;
  for (const auto& [a, b] : d.braces) {
    if (d.parent.at(a) == d.parent.at(b)) continue;
    std::string sa = canon.signature(a), sb = canon.signature(b);
    if (sb < sa) std::swap(sa, sb);
    loose.push_back(std::to_string(d.column_of(a)) + "{" + sa + "," + sb + "}");
  }
  std::sort(loose.begin(), loose.end());
  for (const auto& l : loose) key += ";" + l;
  return key;
}

bool diagrams_equal(const SplitDiagram& a, const SplitDiagram& b) {
  return canonical_key(a) == canonical_key(b);
}

DiagramFormat parse_format(const std::string& name) {
  if (name == "json") return DiagramFormat::json;
  if (name == "dot") return DiagramFormat::dot;
  if (name == "ascii") return DiagramFormat::ascii;
  throw std::invalid_argument("unknown diagram format '" + name + "'");
}

namespace {

std::string to_json(const SplitDiagram& d) {
  nlohmann::ordered_json j;
  j["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : d.columns)
    j["columns"].push_back({{"exponent", to_string(c.exponent)}, {"vertices", c.vertices}});
  j["edges"] = nlohmann::ordered_json::object();
  for (const auto& c : d.columns)
    for (int v : c.vertices) j["edges"][std::to_string(v)] = d.parent.at(v);
  if (!d.braces.empty()) {
    j["braces"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : d.braces) j["braces"].push_back({a, b});
  }
  return j.dump(2);
}

std::string to_dot(const SplitDiagram& d) {
  std::ostringstream os;
  os << "digraph splitting {\n  rankdir=LR;\n  node [shape=circle, label=\"\", width=0.15];\n";
  os << "  subgraph exponents {\n    node [shape=plaintext, width=0];\n    e0 [label=\"0\"];\n";
  for (std::size_t k = 0; k < d.columns.size(); ++k)
    os << "    e" << k + 1 << " [label=\"" << to_string(d.columns[k].exponent) << "\"];\n";
  for (std::size_t k = 0; k < d.columns.size(); ++k) os << "    e" << k << " -> e" << k + 1 << " [style=invis];\n";
  os << "  }\n  { rank=same; e0; v0; }\n";
  for (std::size_t k = 0; k < d.columns.size(); ++k) {
    os << "  { rank=same; e" << k + 1 << ";";
    for (int v : d.columns[k].vertices) os << " v" << v << ";";
    os << " }\n";
  }
  for (const auto& c : d.columns)
    for (int v : c.vertices) os << "  v" << d.parent.at(v) << " -> v" << v << " [arrowhead=none];\n";
  for (const auto& [a, b] : d.braces)
    os << "  v" << a << " -> v" << b << " [style=dashed, arrowhead=none, constraint=false];\n";
  os << "}\n";
  return os.str();
}

// Rows are the leaves in traversal order; a vertex sits on the row of its
// first leaf. Brace pairs are marked by ',' and '`' just left of the vertex
// glyphs with '|' between.
std::string to_ascii(const SplitDiagram& d) {
  std::vector<std::string> labels{"0"};
  for (const auto& c : d.columns) labels.push_back(to_string(c.exponent));
  std::size_t width = 6;
  for (const auto& l : labels) width = std::max(width, l.size() + 3);
  auto xpos = [&](int col) { return static_cast<std::size_t>(col + 1) * width; };

  std::map<int, int> row;
  int rows = 0;
  std::function<void(int)> place = [&](int v) {
    const auto kids = d.children(v);
    if (kids.empty()) {
      row[v] = rows++;
      return;
    }
    for (int c : kids) place(c);
    row[v] = row.at(kids.front());
  };
  place(0);

  const std::size_t line_len = xpos(static_cast<int>(d.columns.size())) + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(line_len, ' '));
  auto put = [&](int r, std::size_t x, char ch) { grid[static_cast<std::size_t>(r)][x] = ch; };

  std::function<void(int)> draw = [&](int v) {
    const int col = d.column_of(v) + 1;
    put(row.at(v), xpos(col - 1), 'o');
    const auto kids = d.children(v);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const int r = row.at(kids[i]);
      if (r != row.at(v)) {
        for (int between = row.at(v) + 1; between < r; ++between)
          if (grid[static_cast<std::size_t>(between)][xpos(col - 1)] == ' ') put(between, xpos(col - 1), '|');
        put(r, xpos(col - 1), i + 1 == kids.size() ? '`' : '+');
      }
      for (std::size_t x = xpos(col - 1) + 1; x < xpos(col); ++x) put(r, x, '-');
      draw(kids[i]);
    }
  };
  draw(0);
  for (const auto& [a, b] : d.braces) {
    const int top = std::min(row.at(a), row.at(b)), bottom = std::max(row.at(a), row.at(b));
    const std::size_t x = xpos(d.column_of(a)) - 1;
    put(top, x, ',');
    put(bottom, x, '`');
    for (int r = top + 1; r < bottom; ++r) put(r, x, '|');
  }

  std::ostringstream os;
  std::string header(line_len, ' ');
  for (std::size_t k = 0; k < labels.size(); ++k)
    header.replace(xpos(static_cast<int>(k) - 1), labels[k].size(), labels[k]);
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  os << rstrip(header) << "\n";
  for (const auto& line : grid) os << rstrip(line) << "\n";
  return os.str();
}

}  // namespace

std::string serialize(const SplitDiagram& d, DiagramFormat format) {
  switch (format) {
    case DiagramFormat::json: return to_json(d);
    case DiagramFormat::dot: return to_dot(d);
    case DiagramFormat::ascii: return to_ascii(d);
  }
  throw std::invalid_argument("unknown diagram format");
}

SplitDiagram parse_diagram_json(const std::string& text) {
  SplitDiagram d;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& c : j.at("columns"))
      d.columns.push_back({parse_rational(c.at("exponent").get<std::string>()), c.at("vertices").get<std::vector<int>>()});
    for (const auto& [k, v] : j.at("edges").items()) d.parent[std::stoi(k)] = v.get<int>();
    if (j.contains("braces"))
      for (const auto& b : j.at("braces")) d.braces.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed diagram JSON: ") + e.what());
  }
  d.validate();
  return d;
}

}  // namespace quartic
