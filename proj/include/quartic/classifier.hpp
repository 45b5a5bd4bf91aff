#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quartic/diagram.hpp"
#include "quartic/newton_polygon.hpp"

namespace quartic {

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// "x,y" with rational literals; throws std::invalid_argument.
RationalPoint parse_point(const std::string& text);

enum class TableComponent { irreducible, reducible };

std::string to_string(TableComponent c);

struct DiagramType {
  TableComponent component = TableComponent::irreducible;
  /// Row of the summary table, from 1.
  int index = 0;
  friend bool operator==(const DiagramType&, const DiagramType&) = default;
};

struct SingularityRecord {
  BivarPoly curve;
  RationalPoint point;
  int multiplicity = 0;
  /// Of the curve translated to the origin, before any rotation.
  TangentCone tangent_cone;
  /// x -> x + rotation * y applied before expanding; 0 when none was needed.
  Rational rotation;
  std::vector<PuiseuxBranch> branches;
  /// Canonical form.
  SplitDiagram diagram;
  std::string diagram_key;
  std::optional<DiagramType> diagram_type;
  std::optional<std::string> arnold_name;
  std::vector<std::string> notes;
};

/// f(x + p.x, y + p.y).
BivarPoly translate_to_origin(const BivarPoly& f, const RationalPoint& p);

struct Rotation {
  BivarPoly curve;
  /// The substitution was x -> x + t * y.
  Rational t;
};

/// First t of 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ... for which no tangent
/// line at the origin is vertical.
Rotation rotate_away_vertical(const BivarPoly& f);

/// k-th entry of the rotation trial sequence, k >= 0.
Rational rotation_trial(int k);

struct SingularPoints {
  /// Sorted by x, then y.
  std::vector<RationalPoint> rational;
  /// Complex singular points with an irrational coordinate.
  int non_rational = 0;
};

/// All singular points of a square-free f (MultipleComponentError
/// otherwise) by elimination: rational ones exactly, the others counted.
SingularPoints find_rational_singular_points(const BivarPoly& f);

/// Throws NotSingularError, MultipleComponentError.
SingularityRecord classify(const BivarPoly& f, const RationalPoint& p = {});

/// Name of a diagram from the quartic tables, matched on the canonical key.
std::optional<std::string> name_from_diagram(const SplitDiagram& d);

struct TableEntry {
  std::string key;
  std::string name;
  std::optional<DiagramType> irreducible_row;
  std::optional<DiagramType> reducible_row;
  /// Curve whose classification produced the key.
  std::string source;
};

/// The 20 frozen diagram keys of the quartic tables.
const std::vector<TableEntry>& quartic_name_table();

struct GoldenExample {
  DiagramType row;
  std::string name;
  std::string curve;
};

/// The example curve of every summary-table row, 13 irreducible then 17
/// reducible.
const std::vector<GoldenExample>& golden_examples();

/// Names use ASCII: "A1*", "X9**".
std::string record_to_json(const SingularityRecord& r);
std::string record_to_text(const SingularityRecord& r, DiagramFormat diagram_format);

}  // namespace quartic
