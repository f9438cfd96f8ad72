#pragma once

// Brute-force reference computations for the tests. Graphs here are built
// from raw operation tables and searched vertex by vertex; nothing goes
// through supports, classes or the topology.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace oracle {

/// A ring as operation tables plus, for each table index, the same element
/// in the library's canonical form.
struct Finite {
  zdg::TableRing t;
  std::vector<zdg::Element> element;
  std::size_t zero = 0;
};

/// Z_n with integer arithmetic; element i is the residue i.
Finite zn(std::uint64_t n, const zdg::Ring& R);
/// F_q1 x ... x F_qk on tuples, first coordinate most significant.
Finite fields(const std::vector<std::uint32_t>& qs);

struct Graph {
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<char>> m;
  /// Γ: the vertex element. 𝔸𝔾: a generator of the ideal.
  std::vector<std::size_t> index;
  /// 𝔸𝔾: the ideal as an indicator over table indices.
  std::vector<std::vector<char>> ideal;

  int size() const { return static_cast<int>(adj.size()); }
  std::size_t edges() const;
};

Graph gamma(const Finite& F);
Graph ag(const Finite& F);

/// Every ideal of the table ring, as indicator vectors.
std::vector<std::vector<char>> all_ideals(const zdg::TableRing& t);

/// All-pairs BFS, -1 for unreachable.
std::vector<std::vector<int>> distances(const Graph& G);
/// -1 when some vertex is unreachable.
int eccentricity(const std::vector<std::vector<int>>& d, int v);
bool on_triangle(const Graph& G, int v);
bool orthogonal(const Graph& G, int u, int v);

/// Shortest cycle through u and v, exact up to 2 * max_side + 1; nullopt
/// if there is none that short.
std::optional<int> girth_through(const Graph& G, int u, int v, int max_side = 3);

/// Minimum (total) dominating set size by exhaustive search over subsets.
/// Requires size() <= 64; returns -1 when max_size is exceeded.
int domination(const Graph& G, bool total, int max_size = 8);

/// Squarefree n in [lo, hi).
std::vector<std::uint64_t> squarefree_range(std::uint64_t lo, std::uint64_t hi);
/// Prime factors of n, ascending, with multiplicity, by trial division.
std::vector<std::uint32_t> prime_factors(std::uint64_t n);

/// Hand-rolled generators for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  std::uint32_t prime(std::uint32_t max = 13);
  /// k primes, each at most max.
  std::vector<std::uint32_t> primes(int k, std::uint32_t max = 13);
  zdg::Element element(const zdg::Ring& R);
  zdg::Support support(int k);

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
