#include "zdg/spectrum.hpp"

#include <algorithm>
#include <set>

#include "zdg/error.hpp"

namespace zdg {

std::vector<MinPrime> min_primes(const Ring& R) {
  std::vector<MinPrime> out;
  for (int i = 0; i < R.k(); ++i)
    out.push_back({i, Ideal{Support::single(i).complement(R.k())}});
  return out;
}

MinSpectrum::MinSpectrum(const Ring& R) : k_(R.k()) {
  // Base sets h^c(a) over every realized support class of elements.
  std::set<std::uint32_t> seen;
  const std::uint32_t count = 1u << k_;
  for (std::uint32_t m = 0; m < count; ++m) {
    const Support s(m);
    if (R.class_weight(s) == 0) continue;
    const TopSet open = hull_complement(R, R.class_element(s, 0));
    if (seen.insert(open.members.bits()).second) base_.push_back(open);
  }
  nbhd_.assign(k_, whole());
  for (int i = 0; i < k_; ++i)
    for (const auto& b : base_)
      if (b.members.contains(i)) nbhd_[i] = nbhd_[i] & b;
}

TopSet MinSpectrum::closure(TopSet A) const {
  Support out;
  for (int i = 0; i < k_; ++i)
    if (nbhd_[i].members.intersects(A.members)) out = out.with(i);
  return {out};
}

TopSet MinSpectrum::interior(TopSet A) const {
  Support out;
  for (int i = 0; i < k_; ++i)
    if (A.members.contains(i) && nbhd_[i].members.subset_of(A.members)) out = out.with(i);
  return {out};
}

bool MinSpectrum::is_discrete() const {
  for (int i = 0; i < k_; ++i)
    if (!is_isolated(i)) return false;
  return true;
}

TopSet hull(const Ring& R, const Element& a) {
  Support out;
  for (const auto& P : min_primes(R))
    if (contains(R, P.ideal, a)) out = out.with(P.index);
  return {out};
}

TopSet hull_complement(const Ring& R, const Element& a) {
  return {hull(R, a).members.complement(R.k())};
}

TopSet hull(const Ring& R, const Ideal& I) {
  Support out;
  for (const auto& P : min_primes(R))
    if (I.support.subset_of(P.ideal.support)) out = out.with(P.index);
  return {out};
}

TopSet hull_complement(const Ring& R, const Ideal& I) {
  return {hull(R, I).members.complement(R.k())};
}

TopSet hull_of_support(const Ring& R, Support s) {
  // a in P_i iff a_i = 0, i.e. i outside the support.
  return {s.complement(R.k())};
}

TopSet hull_complement_of_support(const Ring&, Support s) { return {s}; }

TopologyOps topology_ops(const MinSpectrum& Y, TopSet A) {
  return {Y.closure(A), Y.interior(A), Y.is_dense(A), A.is_singleton()};
}

Ideal kernel(const Ring& R, TopSet A) {
  Support s = R.full();
  for (const auto& P : min_primes(R))
    if (A.members.contains(P.index)) s = s & P.ideal.support;
  return Ideal{s};
}

std::vector<BourbakiPrime> bourbaki(const Ring& R) {
  const auto primes = min_primes(R);
  std::vector<std::optional<Element>> witness(primes.size());
  const std::uint32_t count = 1u << R.k();
  for (std::uint32_t m = 1; m < count; ++m) {
    const Support s(m);
    if (R.class_weight(s) == 0) continue;
    const Element x = R.class_element(s, 0);
    const Ideal ann = annihilator(R, x);
    for (const auto& P : primes)
      if (ann == P.ideal && !witness[P.index]) witness[P.index] = x;
  }
  std::vector<BourbakiPrime> out;
  for (const auto& P : primes)
    if (witness[P.index]) out.push_back({P, *witness[P.index]});
  return out;
}

FixedPlaceResult fixed_place_status(const Ring& R) {
  TopSet B;
  const auto bp = bourbaki(R);
  for (const auto& p : bp) B.members = B.members.with(p.prime.index);
  const Ideal ker = kernel(R, B);
  if (ker.support.empty()) return {FixedPlaceStatus::FixedPlace, ker};
  if (bp.empty()) return {FixedPlaceStatus::AntiFixedPlace, ker};
  return {FixedPlaceStatus::Neither, ker};
}

Ideal sz_closure(const Ring& R, const Ideal& I) { return kernel(R, hull(R, I)); }

bool is_sz_ideal(const Ring& R, const Ideal& I) {
  // P_F grows with F, so the largest finite F ⊆ I (all of I) decides.
  return kernel(R, hull(R, I)).support.subset_of(I.support);
}

bool is_prime_ideal(const Ring& R, const Ideal& I) {
  if (I.support == R.full()) return false;
  const std::uint32_t count = 1u << R.k();
  for (std::uint32_t a = 1; a < count; ++a) {
    const Support sa(a);
    if (sa.subset_of(I.support)) continue;
    for (std::uint32_t b = a; b < count; ++b) {
      const Support sb(b);
      if (sb.subset_of(I.support)) continue;
      const Element prod = R.mul(R.class_element(sa, 0), R.class_element(sb, 0));
      if (contains(R, I, prod)) return false;
    }
  }
  return true;
}

std::vector<Ideal> maximal_annihilating(const Ring& R) {
  std::vector<Ideal> ann;
  for (const auto& e : enumerate_ideals(R, kMaxFactors))
    if (e.kind == IdealKind::Annihilating) ann.push_back(e.ideal);
  if (ann.empty())
    throw Error(ErrorKind::NoAnnihilatingIdeals, R.describe() + " has no annihilating ideals");
  std::vector<Ideal> out;
  for (const auto& I : ann) {
    const bool dominated = std::any_of(ann.begin(), ann.end(), [&](const Ideal& J) {
      return J != I && I.support.subset_of(J.support);
    });
    if (!dominated) out.push_back(I);
  }
  return out;
}

std::string to_string(FixedPlaceStatus s) {
  switch (s) {
    case FixedPlaceStatus::FixedPlace: return "FixedPlace";
    case FixedPlaceStatus::AntiFixedPlace: return "AntiFixedPlace";
    case FixedPlaceStatus::Neither: return "Neither";
  }
  return "?";
}

}  // namespace zdg
