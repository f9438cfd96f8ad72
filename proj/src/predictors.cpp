#include "zdg/theorems.hpp"

namespace zdg {

Prediction Prediction::value(std::uint32_t v, std::string clause) {
  Prediction p;
  p.kind = Kind::Value;
  p.lo = p.hi = v;
  p.clause = std::move(clause);
  return p;
}

Prediction Prediction::not_value(std::uint32_t v, std::string clause) {
  Prediction p = value(v, std::move(clause));
  p.kind = Kind::NotValue;
  return p;
}

Prediction Prediction::range(std::uint32_t lo, std::uint32_t hi, std::string clause) {
  Prediction p;
  p.kind = Kind::Range;
  p.lo = lo;
  p.hi = hi;
  p.clause = std::move(clause);
  return p;
}

Prediction Prediction::truth(bool f, std::string clause) {
  Prediction p;
  p.kind = Kind::Flag;
  p.flag = f;
  p.clause = std::move(clause);
  return p;
}

Prediction Prediction::greater_than(std::uint32_t v, std::string clause) {
  Prediction p = value(v, std::move(clause));
  p.kind = Kind::GreaterThan;
  return p;
}

Prediction Prediction::at_least(std::uint32_t v, std::string clause) {
  Prediction p = value(v, std::move(clause));
  p.kind = Kind::AtLeast;
  return p;
}

Prediction Prediction::at_most(std::uint32_t v, std::string clause) {
  Prediction p = value(v, std::move(clause));
  p.kind = Kind::AtMost;
  return p;
}

Prediction Prediction::not_applicable(std::string reason) {
  Prediction p;
  p.applicable = false;
  p.reason = std::move(reason);
  return p;
}

bool Prediction::admits(const Length& oracle) const {
  switch (kind) {
    case Kind::Value: return oracle && *oracle == lo;
    case Kind::NotValue: return !oracle || *oracle != lo;
    case Kind::Range: return oracle && *oracle >= lo && *oracle <= hi;
    case Kind::GreaterThan: return !oracle || *oracle > lo;
    case Kind::AtLeast: return !oracle || *oracle >= lo;
    case Kind::AtMost: return oracle && *oracle <= lo;
    case Kind::Flag: return false;
  }
  return false;
}

bool Prediction::admits(bool oracle) const { return kind == Kind::Flag && flag == oracle; }

std::string Prediction::to_string() const {
  if (!applicable) return "n/a";
  switch (kind) {
    case Kind::Value: return std::to_string(lo);
    case Kind::NotValue: return "!=" + std::to_string(lo);
    case Kind::Range: return std::to_string(lo) + ".." + std::to_string(hi);
    case Kind::GreaterThan: return ">" + std::to_string(lo);
    case Kind::AtLeast: return ">=" + std::to_string(lo);
    case Kind::AtMost: return "<=" + std::to_string(lo);
    case Kind::Flag: return flag ? "true" : "false";
  }
  return "?";
}

std::string length_string(const Length& l) { return l ? std::to_string(*l) : "inf"; }

PairShape pair_shape(const MinSpectrum& Y, TopSet a, TopSet b) {
  PairShape s;
  s.a = a;
  s.b = b;
  s.disjoint = (a & b).empty();
  s.union_dense = Y.is_dense(a | b);
  s.closures_equal = Y.closure(a) == Y.closure(b);
  s.outside = Y.complement(Y.closure(a | b));
  return s;
}

Prediction predict_adjacent(const PairShape& s) { return Prediction::truth(s.disjoint); }

Prediction predict_distance(const PairShape& s) {
  if (s.disjoint) return Prediction::value(1, "a");
  if (!s.union_dense) return Prediction::value(2, "b");
  return Prediction::value(3, "c");
}

Prediction predict_distance_printed(const MinSpectrum& Y, const PairShape& s) {
  const TopSet h_b = Y.complement(s.b);
  if (!(s.a & h_b).empty() && !s.union_dense) return Prediction::value(2, "b");
  if (s.disjoint) return Prediction::value(1, "a");
  if (s.union_dense) return Prediction::value(3, "c");
  return Prediction::not_value(2, "b");
}

Prediction predict_orthogonal(const MinSpectrum& Y, const PairShape& s) {
  return Prediction::truth(s.disjoint && Y.closure(s.a | s.b) == Y.whole());
}

Prediction predict_ecc(TopSet hc) { return Prediction::value(hc.is_singleton() ? 2 : 3); }

Prediction predict_ecc_gt1() { return Prediction::greater_than(1); }

Prediction predict_triangle(const MinSpectrum& Y, GraphKind kind, TopSet h) {
  if (kind == GraphKind::Gamma) return Prediction::truth(!h.is_singleton(), "a");
  return Prediction::truth(!Y.interior(h).is_singleton(), "b");
}

Prediction predict_gi_elements(const PairShape& s, bool pendant_x, bool pendant_y,
                               bool two_is_zero_divisor) {
  if (pendant_x || pendant_y) return Prediction::not_applicable("pendant vertex");
  if (s.disjoint) {
    if (!s.union_dense) return Prediction::value(3, "a");
    if (two_is_zero_divisor) return Prediction::not_value(3, "a");
    return Prediction::value(4, "b");
  }
  if (!s.union_dense) return Prediction::value(4, "c");
  if (two_is_zero_divisor) return Prediction::not_value(4, "c");
  return Prediction::value(6, "d");
}

Prediction predict_gi_ideals(const PairShape& s, bool pendant_x, bool pendant_y,
                             ClauseDReading reading) {
  if (pendant_x || pendant_y) return Prediction::not_applicable("pendant vertex");
  if (s.disjoint) {
    if (!s.union_dense) return Prediction::value(3, "a");
    return Prediction::value(4, "b");
  }
  if (s.closures_equal) return Prediction::value(4, "c");
  const int outside = s.outside.size();
  if (outside == 1) return Prediction::range(4, 5, "e");
  if (outside >= 2 || reading == ClauseDReading::Printed) return Prediction::value(4, "d");
  return Prediction::not_value(3, "a");
}

bool gi5_conditions(const PairShape& s) {
  return !s.disjoint && !s.closures_equal && s.outside.is_singleton();
}

Prediction predict_radius(const MinSpectrum& Y) {
  for (int i = 0; i < Y.size(); ++i)
    if (Y.is_isolated(i)) return Prediction::value(2);
  return Prediction::value(3);
}

Prediction predict_triangulated(const MinSpectrum& Y) {
  for (int i = 0; i < Y.size(); ++i)
    if (Y.is_isolated(i)) return Prediction::truth(false);
  return Prediction::truth(true);
}

}  // namespace zdg
