#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace zdg {

/// Hard upper bound on the number of factor fields; supports are 32-bit masks.
inline constexpr int kMaxFactors = 31;

/// A subset of the factor coordinates {0..k-1}. Bit i stands for factor i.
///
/// Supports of elements, supports of ideals and sets of minimal primes are all
/// subsets of the same index set, so this one type carries the set algebra.
/// Printed 1-based, e.g. `{1,3}`.
class Support {
 public:
  constexpr Support() = default;
  constexpr explicit Support(std::uint32_t bits) : bits_(bits) {}

  static constexpr Support full(int k) {
    return Support(k >= 32 ? ~0u : ((1u << k) - 1u));
  }
  static constexpr Support single(int i) { return Support(1u << i); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }

  constexpr bool intersects(Support o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(Support o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr Support complement(int k) const { return Support(full(k).bits_ & ~bits_); }
  constexpr Support minus(Support o) const { return Support(bits_ & ~o.bits_); }

  constexpr Support operator&(Support o) const { return Support(bits_ & o.bits_); }
  constexpr Support operator|(Support o) const { return Support(bits_ | o.bits_); }
  constexpr Support with(int i) const { return Support(bits_ | (1u << i)); }

  constexpr bool operator==(const Support&) const = default;
  constexpr auto operator<=>(const Support&) const = default;

  /// Member indices, ascending, 0-based.
  std::vector<int> indices() const;
  /// 1-based set notation: `{}` , `{2}`, `{1,3}`.
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

/// Calls f(Support) for every nonempty subset of s, in decreasing mask order.
template <class F>
void for_each_nonempty_subset(Support s, F&& f) {
  const std::uint32_t m = s.bits();
  for (std::uint32_t sub = m; sub != 0; sub = (sub - 1) & m) f(Support(sub));
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return (b > std::numeric_limits<std::uint64_t>::max() - a)
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

}  // namespace zdg
