#include "zdg/ring.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <sstream>

#include "zdg/error.hpp"

namespace zdg {

namespace {

constexpr std::uint64_t kMaxModulus = 1'000'000'000'000ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> product_of(const std::vector<std::uint32_t>& qs) {
  std::uint64_t p = 1;
  for (auto q : qs) {
    if (p > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    p *= q;
  }
  return p;
}

void check_factor_count(std::size_t k) {
  if (k > static_cast<std::size_t>(kMaxFactors))
    throw Error(ErrorKind::TooManyFactors,
                std::to_string(k) + " factors, at most " + std::to_string(kMaxFactors) +
                    " supported");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> factor_squarefree(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2, got " + std::to_string(n));
  if (n > kMaxModulus)
    throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(n) + " exceeds 10^12");
  std::vector<std::uint64_t> ps;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d <= m / d; d += (d == 2 ? 1 : 2)) {
    if (m % d != 0) continue;
    m /= d;
    if (m % d == 0)
      throw Error(ErrorKind::NotSquarefree,
                  "n=" + std::to_string(n) + " is divisible by " + std::to_string(d) + "^2");
    ps.push_back(d);
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

Ring::Ring(Origin origin, std::vector<std::uint32_t> qs)
    : origin_(origin), qs_(std::move(qs)), order_(product_of(qs_)) {}

std::optional<std::uint64_t> Ring::modulus() const {
  if (origin_ != Origin::Modulus) return std::nullopt;
  return modulus_;
}

std::string Ring::describe() const {
  switch (origin_) {
    case Origin::Modulus:
      return "Z_" + std::to_string(modulus_);
    case Origin::Fields: {
      std::string s;
      for (std::size_t i = 0; i < qs_.size(); ++i) {
        if (i) s += " x ";
        s += "F_" + std::to_string(qs_[i]);
      }
      return s;
    }
    case Origin::Table: {
      std::string s = "table(" + std::to_string(iso_->coords.size()) + ") ~ ";
      if (qs_.empty()) return s + "0";
      for (std::size_t i = 0; i < qs_.size(); ++i) {
        if (i) s += " x ";
        s += "F_" + std::to_string(qs_[i]);
      }
      return s;
    }
  }
  return "?";
}

Element Ring::zero() const { return Element{std::vector<std::uint32_t>(qs_.size(), 0)}; }

Element Ring::one() const { return from_integer(1); }

Element Ring::from_integer(std::uint64_t a) const {
  Element e{std::vector<std::uint32_t>(qs_.size())};
  for (std::size_t i = 0; i < qs_.size(); ++i) e.coords[i] = static_cast<std::uint32_t>(a % qs_[i]);
  return e;
}

Element Ring::idempotent(Support s) const {
  Element e = zero();
  for (int i : s.indices()) e.coords[i] = 1;
  return e;
}

std::uint64_t Ring::class_weight(Support s) const {
  std::uint64_t w = 1;
  for (int i : s.indices()) w = saturating_mul(w, qs_[i] - 1);
  return w;
}

Element Ring::class_element(Support s, std::uint64_t copy) const {
  Element e = zero();
  auto idx = s.indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    const std::uint64_t base = qs_[*it] - 1;
    e.coords[*it] = static_cast<std::uint32_t>(1 + copy % base);
    copy /= base;
  }
  return e;
}

Element Ring::element_at(std::uint64_t index) const {
  switch (origin_) {
    case Origin::Modulus:
      return from_integer(index);
    case Origin::Table:
      return Element{iso_->coords.at(index)};
    case Origin::Fields:
      break;
  }
  Element e = zero();
  for (std::size_t i = qs_.size(); i-- > 0;) {
    e.coords[i] = static_cast<std::uint32_t>(index % qs_[i]);
    index /= qs_[i];
  }
  return e;
}

std::uint64_t Ring::index_of(const Element& a) const {
  if (origin_ == Origin::Modulus) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < qs_.size(); ++i)
      x = (x + mulmod(a.coords[i], crt_basis_[i], modulus_)) % modulus_;
    return x;
  }
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < qs_.size(); ++i) idx = idx * qs_[i] + a.coords[i];
  if (origin_ == Origin::Table) return iso_->table_index[idx];
  return idx;
}

std::vector<Element> Ring::elements(std::uint64_t element_cap) const {
  if (!order_ || *order_ > element_cap)
    throw Error(ErrorKind::ResourceCap, describe() + " has more than " +
                                            std::to_string(element_cap) + " elements");
  std::vector<Element> out;
  out.reserve(*order_);
  for (std::uint64_t i = 0; i < *order_; ++i) out.push_back(element_at(i));
  return out;
}

Element Ring::add(const Element& a, const Element& b) const {
  Element c{std::vector<std::uint32_t>(qs_.size())};
  for (std::size_t i = 0; i < qs_.size(); ++i) c.coords[i] = (a.coords[i] + b.coords[i]) % qs_[i];
  return c;
}

Element Ring::mul(const Element& a, const Element& b) const {
  Element c{std::vector<std::uint32_t>(qs_.size())};
  for (std::size_t i = 0; i < qs_.size(); ++i)
    c.coords[i] = static_cast<std::uint32_t>(std::uint64_t{a.coords[i]} * b.coords[i] % qs_[i]);
  return c;
}

Support Ring::support(const Element& a) const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < qs_.size(); ++i)
    if (a.coords[i] != 0) bits |= 1u << i;
  return Support(bits);
}

std::string Ring::label(const Element& a) const {
  if (origin_ != Origin::Fields) return std::to_string(index_of(a));
  std::string s = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a.coords[i]);
  }
  return s + ")";
}

std::string Ring::ideal_label(const Ideal& I) const {
  switch (origin_) {
    case Origin::Modulus: {
      std::uint64_t d = modulus_;
      for (int i : I.support.indices()) d /= qs_[i];
      return "(" + std::to_string(d % modulus_) + ")";
    }
    case Origin::Table:
      return "(" + std::to_string(index_of(idempotent(I.support))) + ")";
    case Origin::Fields:
      break;
  }
  return "I" + I.support.to_string();
}

Ring build_ring(const RingSpec& spec) {
  if (const auto* m = std::get_if<SquarefreeModulus>(&spec)) {
    auto ps = factor_squarefree(m->n);
    check_factor_count(ps.size());
    Ring R(Ring::Origin::Modulus, std::vector<std::uint32_t>(ps.begin(), ps.end()));
    R.modulus_ = m->n;
    for (auto p : ps) {
      // e_i = (n/p) * ((n/p)^{-1} mod p), congruent to 1 mod p and 0 mod the rest.
      const std::uint64_t cofactor = m->n / p;
      const std::uint64_t inv = powmod(cofactor % p, p - 2, p);
      R.crt_basis_.push_back(mulmod(cofactor, inv, m->n));
    }
    return R;
  }
  if (const auto* f = std::get_if<PrimeFactors>(&spec)) {
    if (f->primes.empty()) throw Error(ErrorKind::InvalidArgument, "empty factor list");
    check_factor_count(f->primes.size());
    for (auto p : f->primes)
      if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    return Ring(Ring::Origin::Fields, f->primes);
  }
  return decompose_table_ring(std::get<TableRing>(spec));
}

Ring decompose_table_ring(const TableRing& t) {
  const std::size_t n = t.size;
  if (n == 0) throw Error(ErrorKind::MalformedTable, "size must be positive");
  if (t.add.size() != n * n || t.mul.size() != n * n)
    throw Error(ErrorKind::MalformedTable, "tables must have size*size entries");
  if (t.one >= n) throw Error(ErrorKind::MalformedTable, "one out of range");
  for (std::size_t i = 0; i < n * n; ++i)
    if (t.add[i] >= n || t.mul[i] >= n)
      throw Error(ErrorKind::MalformedTable, "table entry out of range at " + std::to_string(i));

  std::optional<std::size_t> zero;
  for (std::size_t z = 0; z < n && !zero; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t.sum(z, x) == x && t.sum(x, z) == x;
    if (ok) zero = z;
  }
  if (!zero) throw Error(ErrorKind::MalformedTable, "no additive identity");
  const std::size_t z = *zero;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (t.product(a, b) != t.product(b, a))
        throw Error(ErrorKind::NotCommutative,
                    "x=" + std::to_string(a) + " y=" + std::to_string(b) + ": xy != yx");
      if (t.sum(a, b) != t.sum(b, a))
        throw Error(ErrorKind::MalformedTable, "addition is not commutative at (" +
                                                   std::to_string(a) + "," + std::to_string(b) + ")");
    }
  for (std::size_t x = 0; x < n; ++x)
    if (t.product(t.one, x) != x)
      throw Error(ErrorKind::NotUnital,
                  std::to_string(t.one) + " * " + std::to_string(x) + " != " + std::to_string(x));
  for (std::size_t x = 0; x < n; ++x)
    if (x != z && t.product(x, x) == z)
      throw Error(ErrorKind::NotReduced, "x=" + std::to_string(x) + " is nonzero with x^2 = 0");

  std::vector<std::size_t> neg(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (t.sum(x, y) == z) {
        neg[x] = y;
        break;
      }
  if (std::find(neg.begin(), neg.end(), n) != neg.end())
    throw Error(ErrorKind::MalformedTable, "some element has no additive inverse");

  TableIsomorphism iso;
  iso.zero = z;
  if (n == 1) {
    iso.coords.assign(1, {});
    iso.table_index = {0};
    Ring R(Ring::Origin::Table, {});
    R.iso_ = std::move(iso);
    return R;
  }

  std::vector<std::size_t> idempotents;
  for (std::size_t e = 0; e < n; ++e)
    if (e != z && t.product(e, e) == e) idempotents.push_back(e);

  // Refine {1} until every part is primitive: p splits as pf + (p - pf)
  // whenever some idempotent f cuts it properly.
  std::vector<std::size_t> parts{t.one};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t pi = 0; pi < parts.size() && !changed; ++pi) {
      const std::size_t p = parts[pi];
      for (std::size_t f : idempotents) {
        const std::size_t g = t.product(p, f);
        if (g == z || g == p) continue;
        const std::size_t h = t.sum(p, neg[g]);
        if (t.product(g, g) != g || t.product(h, h) != h || h == z)
          throw Error(ErrorKind::MalformedTable, "idempotent split of " + std::to_string(p) +
                                                     " by " + std::to_string(f) + " failed");
        parts[pi] = g;
        parts.push_back(h);
        changed = true;
        break;
      }
    }
  }

  struct Factor {
    std::size_t e;
    std::uint32_t q;
    std::vector<std::uint32_t> coord_of;  // table element of eR -> residue
  };
  std::vector<Factor> factors;
  for (std::size_t e : parts) {
    // Additive order of e is the characteristic of eR; a prime field is
    // exactly {0, e, 2e, ...}.
    std::vector<std::uint32_t> coord_of(n, ~0u);
    std::size_t acc = z;
    std::uint32_t j = 0;
    do {
      coord_of[acc] = j++;
      acc = t.sum(acc, e);
    } while (acc != z && j <= n);
    std::size_t size_eR = 0;
    std::vector<char> seen(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t y = t.product(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++size_eR;
      }
    }
    if (!is_prime(j) || size_eR != j)
      throw Error(ErrorKind::FactorNotField,
                  "factor at idempotent " + std::to_string(e) + " has " + std::to_string(size_eR) +
                      " elements and characteristic " + std::to_string(j) +
                      "; only prime fields are supported");
    factors.push_back({e, j, std::move(coord_of)});
  }
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return std::tie(a.q, a.e) < std::tie(b.q, b.e); });
  check_factor_count(factors.size());

  std::vector<std::uint32_t> qs;
  for (const auto& f : factors) qs.push_back(f.q);
  Ring R(Ring::Origin::Table, qs);
  if (!R.order_ || *R.order_ != n)
    throw Error(ErrorKind::FactorNotField, "factor sizes do not multiply to the ring size");

  iso.coords.assign(n, std::vector<std::uint32_t>(factors.size()));
  iso.table_index.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::uint32_t c = factors[i].coord_of[t.product(factors[i].e, x)];
      if (c == ~0u)
        throw Error(ErrorKind::FactorNotField, "element " + std::to_string(x) +
                                                   " has no coordinate in factor " + std::to_string(i));
      iso.coords[x][i] = c;
      idx = idx * qs[i] + c;
    }
    if (iso.table_index[idx] != n)
      throw Error(ErrorKind::MalformedTable, "coordinate map is not injective at " + std::to_string(x));
    iso.table_index[idx] = x;
  }
  for (const auto& f : factors) iso.primitive_idempotents.push_back(f.e);
  R.iso_ = std::move(iso);

  // Round trip: both tables must agree with coordinatewise arithmetic. This
  // also certifies associativity and distributivity of the input.
  const auto& co = R.iso_->coords;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element ex{co[x]}, ey{co[y]};
      if (R.add(ex, ey).coords != co[t.sum(x, y)] || R.mul(ex, ey).coords != co[t.product(x, y)])
        throw Error(ErrorKind::MalformedTable, "tables are not a ring: operations disagree with the "
                                               "decomposition at (" +
                                                   std::to_string(x) + "," + std::to_string(y) + ")");
    }
  return R;
}

Ideal annihilator(const Ring& R, const Element& a) {
  return Ideal{R.support(a).complement(R.k())};
}

Ideal annihilator(const Ring& R, const Ideal& I) { return Ideal{I.support.complement(R.k())}; }

bool contains(const Ring& R, const Ideal& I, const Element& a) {
  return R.support(a).subset_of(I.support);
}

bool is_annihilating(const Ring& R, const Ideal& I) {
  return !I.support.empty() && !annihilator(R, I).support.empty();
}

bool is_zero_divisor(const Ring& R, const Element& a) {
  return !annihilator(R, a).support.empty();
}

std::vector<IdealEntry> enumerate_ideals(const Ring& R, int max_factors) {
  if (R.k() > max_factors)
    throw Error(ErrorKind::TooManyFactors, std::to_string(R.k()) + " factors exceed the ideal "
                                           "enumeration cap of " + std::to_string(max_factors));
  std::vector<IdealEntry> out;
  const std::uint32_t count = 1u << R.k();
  out.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    const Ideal I{Support(m)};
    IdealKind kind = IdealKind::Annihilating;
    if (I.support.empty())
      kind = IdealKind::Zero;
    else if (I.support == R.full())
      kind = IdealKind::Improper;
    out.push_back({I, kind});
  }
  return out;
}

IdealAlgebra ideal_algebra(const Ring&, const Ideal& I, const Ideal& J) {
  return IdealAlgebra{Ideal{I.support & J.support}, Ideal{I.support | J.support},
                      J.support.subset_of(I.support), I == J};
}

}  // namespace zdg
