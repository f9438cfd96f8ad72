#pragma once

// Min(R) with its Zariski topology, the hull/kernel operators and the
// Bourbaki associated primes of the zero ideal.
//
// For a product of k fields the minimal primes are P_i = I_{{1..k} \ {i}}.
// A TopSet is a set of such primes, stored by index.

#include <optional>
#include <vector>

#include "zdg/ring.hpp"
#include "zdg/support.hpp"

namespace zdg {

struct MinPrime {
  int index = 0;  ///< 0-based factor index i
  Ideal ideal;    ///< P_i
};

/// A subset of Min(R), bit i standing for P_i.
struct TopSet {
  Support members;
  bool operator==(const TopSet&) const = default;
  bool empty() const { return members.empty(); }
  int size() const { return members.size(); }
  bool is_singleton() const { return members.size() == 1; }
  TopSet operator&(TopSet o) const { return {members & o.members}; }
  TopSet operator|(TopSet o) const { return {members | o.members}; }
};

std::vector<MinPrime> min_primes(const Ring& R);

/// The space Y = Min(R) with the topology generated by the open base
/// { h^c(a) : a in R }. Closure and interior go through minimal open
/// neighbourhoods, which exist in every finite space; nothing here assumes
/// the topology is discrete.
class MinSpectrum {
 public:
  explicit MinSpectrum(const Ring& R);

  int size() const { return k_; }
  TopSet whole() const { return {Support::full(k_)}; }
  TopSet complement(TopSet A) const { return {A.members.complement(k_)}; }

  /// The open base the topology was generated from, one set per realized support.
  const std::vector<TopSet>& base() const { return base_; }
  /// Smallest open set containing P_i.
  TopSet neighbourhood(int i) const { return nbhd_[i]; }

  TopSet closure(TopSet A) const;
  TopSet interior(TopSet A) const;
  bool is_dense(TopSet A) const { return closure(A) == whole(); }
  bool is_open(TopSet A) const { return interior(A) == A; }
  bool is_isolated(int i) const { return is_open(TopSet{Support::single(i)}); }
  bool is_discrete() const;

 private:
  int k_;
  std::vector<TopSet> base_;
  std::vector<TopSet> nbhd_;
};

/// h_Y(a) = { P in Y : a in P } and its complement h_Y^c(a), Y = Min(R).
TopSet hull(const Ring& R, const Element& a);
TopSet hull_complement(const Ring& R, const Element& a);
TopSet hull(const Ring& R, const Ideal& I);
TopSet hull_complement(const Ring& R, const Ideal& I);
/// Same operators on the class of elements whose support is s.
TopSet hull_of_support(const Ring& R, Support s);
TopSet hull_complement_of_support(const Ring& R, Support s);

struct TopologyOps {
  TopSet closure;
  TopSet interior;
  bool is_dense = false;
  bool is_singleton = false;
};

TopologyOps topology_ops(const MinSpectrum& Y, TopSet A);

/// Intersection of the primes in A; kernel(empty) = R.
Ideal kernel(const Ring& R, TopSet A);

struct BourbakiPrime {
  MinPrime prime;
  Element witness;  ///< Ann(witness) == prime
};

/// Primes of the form Ann(x). Every class of elements is scanned, so the
/// result is computed rather than assumed to be all of Min(R).
std::vector<BourbakiPrime> bourbaki(const Ring& R);

enum class FixedPlaceStatus { FixedPlace, AntiFixedPlace, Neither };

struct FixedPlaceResult {
  FixedPlaceStatus status;
  Ideal kernel_of_bourbaki;
};

FixedPlaceResult fixed_place_status(const Ring& R);

/// Smallest strong z°-ideal containing I, computed as kernel(h_m(I)).
Ideal sz_closure(const Ring& R, const Ideal& I);
/// P_F ⊆ I for every finite F ⊆ I.
bool is_sz_ideal(const Ring& R, const Ideal& I);

/// Prime ideal test by scanning pairs of element classes.
bool is_prime_ideal(const Ring& R, const Ideal& I);

/// Maximal elements of the annihilating ideals under inclusion.
/// Throws NoAnnihilatingIdeals when R has none.
std::vector<Ideal> maximal_annihilating(const Ring& R);

std::string to_string(FixedPlaceStatus s);

}  // namespace zdg
