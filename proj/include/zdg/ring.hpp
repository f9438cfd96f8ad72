#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zdg/support.hpp"

namespace zdg {

struct SquarefreeModulus {
  std::uint64_t n = 0;
};

struct PrimeFactors {
  std::vector<std::uint32_t> primes;
};

/// A finite ring given by its operation tables. Elements are indices
/// 0..size-1; both tables are row-major size*size.
struct TableRing {
  std::size_t size = 0;
  std::size_t one = 0;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;

  std::uint32_t sum(std::size_t a, std::size_t b) const { return add[a * size + b]; }
  std::uint32_t product(std::size_t a, std::size_t b) const { return mul[a * size + b]; }
};

using RingSpec = std::variant<SquarefreeModulus, PrimeFactors, TableRing>;

/// An element in canonical form: one residue per factor field.
struct Element {
  std::vector<std::uint32_t> coords;
  bool operator==(const Element&) const = default;
};

/// The ideal I_S = { a : support(a) ⊆ S }. Every ideal of a product of
/// fields has this form, so the support is the whole representation.
struct Ideal {
  Support support;
  bool operator==(const Ideal&) const = default;
  auto operator<=>(const Ideal&) const = default;
};

/// Witness of the coordinate isomorphism for table input.
struct TableIsomorphism {
  std::vector<std::vector<std::uint32_t>> coords;  ///< table index -> residues
  std::vector<std::size_t> table_index;            ///< canonical index -> table index
  std::vector<std::size_t> primitive_idempotents;  ///< table index of e_i, factor order
  std::size_t zero = 0;
};

/// Canonical finite reduced commutative ring: F_{q_1} x ... x F_{q_k}, each
/// q_i prime. Immutable after construction.
class Ring {
 public:
  enum class Origin { Modulus, Fields, Table };

  int k() const { return static_cast<int>(qs_.size()); }
  std::span<const std::uint32_t> factors() const { return qs_; }
  Origin origin() const { return origin_; }
  Support full() const { return Support::full(k()); }

  /// n for Z_n input.
  std::optional<std::uint64_t> modulus() const;
  const TableIsomorphism* table_iso() const { return iso_ ? &*iso_ : nullptr; }

  /// Element count; nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const { return order_; }
  std::string describe() const;

  Element zero() const;
  Element one() const;
  /// The image of the integer a under Z -> R.
  Element from_integer(std::uint64_t a) const;
  /// The idempotent equal to 1 on s and 0 elsewhere.
  Element idempotent(Support s) const;

  /// Number of elements with support exactly s: prod_{i in s} (q_i - 1),
  /// saturating at UINT64_MAX.
  std::uint64_t class_weight(Support s) const;
  /// The copy-th element (0-based) with support exactly s.
  Element class_element(Support s, std::uint64_t copy) const;

  /// Canonical enumeration: residue order for Z_n, lexicographic tuples for
  /// field products, table index for table input.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& a) const;
  /// All elements in canonical order. Throws ResourceCap above element_cap.
  std::vector<Element> elements(std::uint64_t element_cap = 1'000'000) const;

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Support support(const Element& a) const;
  bool is_zero(const Element& a) const { return support(a).empty(); }

  /// Human label: residue for Z_n, index for table rings, tuple otherwise.
  std::string label(const Element& a) const;
  /// Generator notation for Z_n and table rings, I{..} otherwise.
  std::string ideal_label(const Ideal& I) const;

 private:
  friend Ring build_ring(const RingSpec&);
  friend Ring decompose_table_ring(const TableRing&);

  Ring(Origin origin, std::vector<std::uint32_t> qs);

  Origin origin_;
  std::vector<std::uint32_t> qs_;
  std::optional<std::uint64_t> order_;
  std::uint64_t modulus_ = 0;
  std::vector<std::uint64_t> crt_basis_;  // Z_n only
  std::optional<TableIsomorphism> iso_;
};

bool is_prime(std::uint64_t n);
/// Ascending prime factors of a squarefree n >= 2 by trial division.
/// Throws NotSquarefree with the repeated prime.
std::vector<std::uint64_t> factor_squarefree(std::uint64_t n);

Ring build_ring(const RingSpec& spec);
/// Validates the tables and splits the ring along its primitive idempotents.
Ring decompose_table_ring(const TableRing& t);

Ideal annihilator(const Ring& R, const Element& a);
Ideal annihilator(const Ring& R, const Ideal& I);
bool contains(const Ring& R, const Ideal& I, const Element& a);

enum class IdealKind { Zero, Annihilating, Improper };

struct IdealEntry {
  Ideal ideal;
  IdealKind kind;
};

/// All 2^k ideals ordered by support mask. Throws TooManyFactors above the cap.
std::vector<IdealEntry> enumerate_ideals(const Ring& R, int max_factors = 20);

struct IdealAlgebra {
  Ideal product;
  Ideal sum;
  bool contains = false;  ///< J ⊆ I
  bool equal = false;
};

IdealAlgebra ideal_algebra(const Ring& R, const Ideal& I, const Ideal& J);

bool is_annihilating(const Ring& R, const Ideal& I);
bool is_zero_divisor(const Ring& R, const Element& a);

}  // namespace zdg
