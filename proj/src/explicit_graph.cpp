#include "zdg/explicit_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "zdg/error.hpp"

namespace zdg {

namespace {

constexpr std::uint64_t kNone = ~std::uint64_t{0};
constexpr std::uint64_t kMaxIdealRingOrder = 20000;

// Products of canonical element indices, computed from the ring's own
// arithmetic: residues mod n, coordinate digits, or the element operations.
class Multiplier {
 public:
  explicit Multiplier(const Ring& R) : R_(R), n_(*R.order()) {
    if (R.origin() == Ring::Origin::Fields) {
      const auto qs = R.factors();
      digits_.resize(n_ * qs.size());
      for (std::uint64_t x = 0; x < n_; ++x) {
        std::uint64_t rest = x;
        for (std::size_t i = qs.size(); i-- > 0;) {
          digits_[x * qs.size() + i] = static_cast<std::uint32_t>(rest % qs[i]);
          rest /= qs[i];
        }
      }
    }
  }

  std::uint64_t order() const { return n_; }

  std::uint64_t product(std::uint64_t a, std::uint64_t b) const {
    switch (R_.origin()) {
      case Ring::Origin::Modulus:
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n_);
      case Ring::Origin::Fields: {
        const auto qs = R_.factors();
        const std::size_t k = qs.size();
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < k; ++i)
          idx = idx * qs[i] + std::uint64_t{digits_[a * k + i]} * digits_[b * k + i] % qs[i];
        return idx;
      }
      case Ring::Origin::Table:
        break;
    }
    return R_.index_of(R_.mul(R_.element_at(a), R_.element_at(b)));
  }

  bool product_is_zero(std::uint64_t a, std::uint64_t b) const {
    if (R_.origin() == Ring::Origin::Fields) {
      const auto qs = R_.factors();
      const std::size_t k = qs.size();
      for (std::size_t i = 0; i < k; ++i)
        if (std::uint64_t{digits_[a * k + i]} * digits_[b * k + i] % qs[i] != 0) return false;
      return true;
    }
    return product(a, b) == zero_;
  }

  void set_zero(std::uint64_t z) { zero_ = z; }

 private:
  const Ring& R_;
  std::uint64_t n_;
  std::uint64_t zero_ = 0;
  std::vector<std::uint32_t> digits_;
};

std::uint64_t ring_order_or_throw(const Ring& R, std::uint64_t cap) {
  if (!R.order() || *R.order() > cap)
    throw Error(ErrorKind::ResourceCap,
                R.describe() + " is too large to enumerate (cap " + std::to_string(cap) + ")");
  return *R.order();
}

}  // namespace

std::uint64_t default_explicit_vertex_cap() {
  if (const char* env = std::getenv("ZDG_EXPLICIT_VERTEX_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100000;
}

std::size_t ExplicitGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj) twice += row.size();
  return twice / 2;
}

bool ExplicitGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::optional<std::uint32_t> ExplicitGraph::index_of(const Graph& G, const Ring& R,
                                                     VertexRef v) const {
  const std::uint64_t e = R.index_of(vertex_element(G, R, v));
  if (e >= index_by_element.size() || index_by_element[e] == kNone) return std::nullopt;
  return static_cast<std::uint32_t>(index_by_element[e]);
}

ExplicitGraph build_explicit(GraphKind kind, const Ring& R, std::uint64_t vertex_cap) {
  const Graph G(kind, R);
  if (G.vertex_count() > vertex_cap)
    throw Error(ErrorKind::ResourceCap, to_string(kind) + " of " + R.describe() + " has " +
                                            std::to_string(G.vertex_count()) +
                                            " vertices, above the explicit cap " +
                                            std::to_string(vertex_cap));
  const std::uint64_t n = ring_order_or_throw(
      R, kind == GraphKind::Gamma ? std::max<std::uint64_t>(vertex_cap * 4, 1'000'000)
                                  : kMaxIdealRingOrder);
  Multiplier mul(R);
  const std::uint64_t zero = R.index_of(R.zero());
  mul.set_zero(zero);

  ExplicitGraph X;
  X.kind = kind;
  X.index_by_element.assign(n, kNone);

  if (kind == GraphKind::Gamma) {
    std::vector<std::vector<std::uint64_t>> nbrs(n);
    std::vector<std::uint64_t> order;
    for (std::uint64_t a = 0; a < n; ++a) {
      if (a == zero) continue;
      bool zero_divisor = false;
      for (std::uint64_t b = 0; b < n; ++b) {
        if (b == zero || !mul.product_is_zero(a, b)) continue;
        zero_divisor = true;
        if (b != a) nbrs[a].push_back(b);
      }
      if (!zero_divisor) continue;
      X.index_by_element[a] = order.size();
      order.push_back(a);
    }
    X.adj.resize(order.size());
    for (std::size_t v = 0; v < order.size(); ++v) {
      const Element e = R.element_at(order[v]);
      X.elements.push_back(e);
      X.supports.push_back(R.support(e));
      X.labels.push_back("S=" + R.support(e).to_string() + " " + R.label(e));
      for (std::uint64_t b : nbrs[order[v]])
        X.adj[v].push_back(static_cast<std::uint32_t>(X.index_by_element[b]));
      std::sort(X.adj[v].begin(), X.adj[v].end());
    }
    return X;
  }

  // Principal ideals Ra as membership bitsets, first generator wins.
  const std::size_t words = (n + 63) / 64;
  std::map<std::vector<std::uint64_t>, std::uint64_t> seen;
  std::vector<std::uint64_t> ideal_of(n);
  std::vector<std::uint64_t> gens;
  for (std::uint64_t a = 0; a < n; ++a) {
    std::vector<std::uint64_t> bits(words, 0);
    for (std::uint64_t r = 0; r < n; ++r) {
      const std::uint64_t p = mul.product(a, r);
      bits[p / 64] |= std::uint64_t{1} << (p % 64);
    }
    auto [it, inserted] = seen.emplace(std::move(bits), gens.size());
    if (inserted) gens.push_back(a);
    ideal_of[a] = it->second;
  }
  const std::uint64_t zero_ideal = ideal_of[zero];
  std::vector<std::uint64_t> vertex_of(gens.size(), kNone);
  std::vector<std::uint64_t> order;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::uint64_t a = gens[i];
    if (i == zero_ideal) continue;
    // Proper: the ideal misses 1. Annihilating: some nonzero b kills a.
    const std::uint64_t one = R.index_of(R.one());
    if (ideal_of[one] == i) continue;
    bool annihilating = false;
    for (std::uint64_t b = 0; b < n && !annihilating; ++b)
      annihilating = b != zero && mul.product_is_zero(a, b);
    if (!annihilating) continue;
    vertex_of[i] = order.size();
    order.push_back(a);
  }
  for (std::uint64_t a = 0; a < n; ++a) X.index_by_element[a] = vertex_of[ideal_of[a]];
  X.adj.resize(order.size());
  for (std::size_t v = 0; v < order.size(); ++v) {
    const Element e = R.element_at(order[v]);
    X.elements.push_back(e);
    X.supports.push_back(R.support(e));
    X.labels.push_back("S=" + R.support(e).to_string() + " " + R.ideal_label(Ideal{R.support(e)}));
    for (std::size_t w = 0; w < order.size(); ++w)
      if (w != v && mul.product_is_zero(order[v], order[w]))
        X.adj[v].push_back(static_cast<std::uint32_t>(w));
  }
  return X;
}

}  // namespace zdg
