#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quartic/puiseux.hpp"

namespace quartic {

/// Splitting tree of the pro-branches at a point. Vertex 0 is the root at
/// exponent zero and is not listed in any column. Every other vertex lies
/// in exactly one column and its parent lies in the previous column (the
/// root for the first column).
struct SplitDiagram {
  struct Column {
    Rational exponent;
    std::vector<int> vertices;
    friend bool operator==(const Column&, const Column&) = default;
  };
  std::vector<Column> columns;
  std::map<int, int> parent;
  /// Pairs (a, b) with a < b inside one column, sorted.
  std::vector<std::pair<int, int>> braces;

  /// Column index of a vertex, -1 for the root.
  int column_of(int vertex) const;
  std::vector<int> children(int vertex) const;
  int vertex_count() const;

  /// Throws std::invalid_argument when a structural invariant fails.
  void validate() const;

  friend bool operator==(const SplitDiagram&, const SplitDiagram&) = default;
};

/// Columns at the pairwise contact exponents; a vertex groups the branches
/// agreeing up to and including the column exponent; each conjugate pair is
/// braced in the column where the pair separates. Throws
/// std::invalid_argument for branches that were not separated.
SplitDiagram build_diagram(const std::vector<PuiseuxBranch>& branches,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Vertices renumbered in a traversal that orders siblings by subtree
/// signature, brace partners adjacent.
SplitDiagram canonicalize(const SplitDiagram& d);

/// Exponents and root signature, e.g. "1,3/2:((o),(o,o))"; a brace pair of
/// siblings shows as "{a,b}".
std::string canonical_key(const SplitDiagram& d);

bool diagrams_equal(const SplitDiagram& a, const SplitDiagram& b);

enum class DiagramFormat { json, dot, ascii };

/// Throws std::invalid_argument on an unknown name.
DiagramFormat parse_format(const std::string& name);

std::string serialize(const SplitDiagram& d, DiagramFormat format);

/// Inverse of serialize(d, json); validates the result.
SplitDiagram parse_diagram_json(const std::string& text);

}  // namespace quartic
