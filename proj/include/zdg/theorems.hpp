#pragma once

// Topological predictions for graph quantities, evaluated from h / h^c sets
// on Min(R) only. Nothing here looks at the graph.

#include <cstdint>
#include <string>

#include "zdg/graph.hpp"
#include "zdg/spectrum.hpp"

namespace zdg {

struct Prediction {
  enum class Kind { Value, NotValue, Range, Flag, GreaterThan, AtLeast, AtMost };

  Kind kind = Kind::Value;
  std::uint32_t lo = 0;  ///< Value, NotValue, Range low end, GreaterThan bound
  std::uint32_t hi = 0;  ///< Range high end
  bool flag = false;
  bool applicable = true;
  std::string clause;  ///< e.g. "b"
  std::string reason;  ///< violated hypothesis when not applicable

  static Prediction value(std::uint32_t v, std::string clause = {});
  static Prediction not_value(std::uint32_t v, std::string clause = {});
  static Prediction range(std::uint32_t lo, std::uint32_t hi, std::string clause = {});
  static Prediction truth(bool f, std::string clause = {});
  static Prediction greater_than(std::uint32_t v, std::string clause = {});
  static Prediction at_least(std::uint32_t v, std::string clause = {});
  static Prediction at_most(std::uint32_t v, std::string clause = {});
  static Prediction not_applicable(std::string reason);

  bool admits(const Length& oracle) const;
  bool admits(bool oracle) const;
  /// "3", "!=3", "4..5", "true", ">1", ">=3", "<=3", "n/a".
  std::string to_string() const;
};

std::string length_string(const Length& l);

/// The topological data of a vertex pair, through h^c of both vertices.
struct PairShape {
  TopSet a;  ///< h^c(x)
  TopSet b;  ///< h^c(y)
  bool disjoint = false;
  bool union_dense = false;
  bool closures_equal = false;
  TopSet outside;  ///< Y minus the closure of a ∪ b
};

PairShape pair_shape(const MinSpectrum& Y, TopSet a, TopSet b);

Prediction predict_adjacent(const PairShape& s);
/// Distance clauses; clause (b) for elements is read with h^c on both sides.
Prediction predict_distance(const PairShape& s);
/// The element distance clause (b) exactly as printed: h^c(a) ∩ h(b) ≠ ∅.
Prediction predict_distance_printed(const MinSpectrum& Y, const PairShape& s);
Prediction predict_orthogonal(const MinSpectrum& Y, const PairShape& s);

/// 2 when h^c(x) is a singleton, else 3.
Prediction predict_ecc(TopSet hc);
Prediction predict_ecc_gt1();

/// Elements: h(a) not a singleton. Ideals: interior of h(I) not a singleton.
Prediction predict_triangle(const MinSpectrum& Y, GraphKind kind, TopSet h);

/// Girth through two elements. two_is_zero_divisor: 2 ∈ Z(R).
Prediction predict_gi_elements(const PairShape& s, bool pendant_x, bool pendant_y,
                               bool two_is_zero_divisor);

enum class ClauseDReading { Proof, Printed };

/// Girth through two ideals, clauses (a)-(e). Under the proof reading,
/// clause (d) needs two points outside the closed union; the printed reading
/// accepts any count other than one.
Prediction predict_gi_ideals(const PairShape& s, bool pendant_x, bool pendant_y,
                             ClauseDReading reading = ClauseDReading::Proof);

/// Clause (f): the conditions that gi = 5 forces.
bool gi5_conditions(const PairShape& s);

/// Radius for a ring whose Min(R) has an isolated point: 2, else 3.
Prediction predict_radius(const MinSpectrum& Y);
/// Triangulated iff Min(R) has no isolated point.
Prediction predict_triangulated(const MinSpectrum& Y);

}  // namespace zdg
