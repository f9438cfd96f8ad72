#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace oracle {

Finite zn(std::uint64_t n, const zdg::Ring& R) {
  Finite F;
  F.t.size = n;
  F.t.one = 1 % n;
  F.t.add.resize(n * n);
  F.t.mul.resize(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      F.t.add[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
      F.t.mul[a * n + b] = static_cast<std::uint32_t>((a * b) % n);
    }
  for (std::uint64_t a = 0; a < n; ++a) F.element.push_back(R.from_integer(a));
  return F;
}

Finite fields(const std::vector<std::uint32_t>& qs) {
  Finite F;
  std::size_t n = 1;
  for (auto q : qs) n *= q;
  std::vector<std::vector<std::uint32_t>> tuples(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = i;
    tuples[i].resize(qs.size());
    for (std::size_t j = qs.size(); j-- > 0;) {
      tuples[i][j] = static_cast<std::uint32_t>(r % qs[j]);
      r /= qs[j];
    }
  }
  auto encode = [&](const std::vector<std::uint32_t>& t) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < qs.size(); ++j) i = i * qs[j] + t[j];
    return static_cast<std::uint32_t>(i);
  };
  F.t.size = n;
  F.t.add.resize(n * n);
  F.t.mul.resize(n * n);
  std::vector<std::uint32_t> ones(qs.size(), 1);
  F.t.one = encode(ones);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::uint32_t> s(qs.size()), p(qs.size());
      for (std::size_t j = 0; j < qs.size(); ++j) {
        s[j] = (tuples[a][j] + tuples[b][j]) % qs[j];
        p[j] = (tuples[a][j] * tuples[b][j]) % qs[j];
      }
      F.t.add[a * n + b] = encode(s);
      F.t.mul[a * n + b] = encode(p);
    }
  for (auto& t : tuples) F.element.push_back(zdg::Element{t});
  return F;
}

std::size_t Graph::edges() const {
  std::size_t e = 0;
  for (const auto& a : adj) e += a.size();
  return e / 2;
}

namespace {

void finish(Graph& G) {
  const int n = static_cast<int>(G.m.size());
  G.adj.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.m[a][b]) G.adj[a].push_back(b);
}

}  // namespace

Graph gamma(const Finite& F) {
  const auto& t = F.t;
  std::size_t zero = 0;
  while (t.sum(zero, zero) != zero) ++zero;
  std::vector<std::size_t> verts;
  for (std::size_t a = 0; a < t.size; ++a) {
    if (a == zero) continue;
    for (std::size_t b = 0; b < t.size; ++b)
      if (b != zero && t.product(a, b) == zero) {
        verts.push_back(a);
        break;
      }
  }
  Graph G;
  G.index = verts;
  G.m.assign(verts.size(), std::vector<char>(verts.size(), 0));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      G.m[i][j] = i != j && t.product(verts[i], verts[j]) == zero;
  finish(G);
  return G;
}

std::vector<std::vector<char>> all_ideals(const zdg::TableRing& t) {
  std::set<std::vector<char>> found;
  std::deque<std::vector<char>> work;
  for (std::size_t a = 0; a < t.size; ++a) {
    std::vector<char> I(t.size, 0);
    for (std::size_t r = 0; r < t.size; ++r) I[t.product(r, a)] = 1;
    if (found.insert(I).second) work.push_back(I);
  }
  const std::vector<std::vector<char>> principal(found.begin(), found.end());
  while (!work.empty()) {
    const auto I = work.front();
    work.pop_front();
    for (const auto& J : principal) {
      std::vector<char> S(t.size, 0);
      for (std::size_t a = 0; a < t.size; ++a)
        if (I[a])
          for (std::size_t b = 0; b < t.size; ++b)
            if (J[b]) S[t.sum(a, b)] = 1;
      if (found.insert(S).second) work.push_back(S);
    }
  }
  return {found.begin(), found.end()};
}

Graph ag(const Finite& F) {
  const auto& t = F.t;
  std::size_t zero = 0;
  while (t.sum(zero, zero) != zero) ++zero;
  auto product_zero = [&](const std::vector<char>& I, const std::vector<char>& J) {
    for (std::size_t a = 0; a < t.size; ++a)
      if (I[a])
        for (std::size_t b = 0; b < t.size; ++b)
          if (J[b] && t.product(a, b) != zero) return false;
    return true;
  };
  std::vector<std::vector<char>> nonzero;
  for (const auto& I : all_ideals(t)) {
    const auto count = std::count(I.begin(), I.end(), 1);
    if (count > 1 && static_cast<std::size_t>(count) < t.size) nonzero.push_back(I);
  }
  Graph G;
  for (const auto& I : nonzero) {
    const bool annihilating = std::any_of(nonzero.begin(), nonzero.end(),
                                          [&](const auto& J) { return product_zero(I, J); });
    if (!annihilating) continue;
    G.ideal.push_back(I);
    std::size_t gen = 0;
    for (std::size_t a = 0; a < t.size; ++a) {
      if (!I[a]) continue;
      std::vector<char> Ra(t.size, 0);
      for (std::size_t r = 0; r < t.size; ++r) Ra[t.product(r, a)] = 1;
      if (Ra == I) {
        gen = a;
        break;
      }
    }
    G.index.push_back(gen);
  }
  const std::size_t n = G.ideal.size();
  G.m.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G.m[i][j] = i != j && product_zero(G.ideal[i], G.ideal[j]);
  finish(G);
  return G;
}

std::vector<std::vector<int>> distances(const Graph& G) {
  const int n = G.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q{s};
    d[s][s] = 0;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : G.adj[x])
        if (d[s][y] < 0) {
          d[s][y] = d[s][x] + 1;
          q.push_back(y);
        }
    }
  }
  return d;
}

int eccentricity(const std::vector<std::vector<int>>& d, int v) {
  int e = 0;
  for (int x : d[v]) {
    if (x < 0) return -1;
    e = std::max(e, x);
  }
  return e;
}

bool on_triangle(const Graph& G, int v) {
  for (int a : G.adj[v])
    for (int b : G.adj[v])
      if (a < b && G.m[a][b]) return true;
  return false;
}

bool orthogonal(const Graph& G, int u, int v) {
  if (!G.m[u][v]) return false;
  for (int x = 0; x < G.size(); ++x)
    if (G.m[u][x] && G.m[v][x]) return false;
  return true;
}

std::optional<int> girth_through(const Graph& G, int u, int v, int max_side) {
  const int n = G.size();
  std::optional<int> best;
  std::vector<char> blocked(n, 0);
  std::vector<int> dist(n);
  auto other_side = [&](int p) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> q{u};
    dist[u] = 0;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : G.adj[x]) {
        if (blocked[y] || dist[y] >= 0) continue;
        if (p == 1 && x == u && y == v) continue;
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
    if (dist[v] > 0 && (!best || p + dist[v] < *best)) best = p + dist[v];
  };
  std::vector<int> path{u};
  std::function<void(int)> walk = [&](int x) {
    const int len = static_cast<int>(path.size()) - 1;
    if (x == v) {
      other_side(len);
      return;
    }
    if (len == max_side) return;
    for (int y : G.adj[x]) {
      if (y == u || blocked[y]) continue;
      if (y != v) blocked[y] = 1;
      path.push_back(y);
      walk(y);
      path.pop_back();
      if (y != v) blocked[y] = 0;
    }
  };
  walk(u);
  if (best && *best <= 2 * max_side + 1) return best;
  return std::nullopt;
}

int domination(const Graph& G, bool total, int max_size) {
  const int n = G.size();
  std::vector<std::uint64_t> nb(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : G.adj[v]) nb[v] |= std::uint64_t{1} << w;
    if (!total) nb[v] |= std::uint64_t{1} << v;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<int> pick;
  std::function<bool(int, int, std::uint64_t)> choose = [&](int from, int left, std::uint64_t cov) {
    if (left == 0) return cov == all;
    for (int v = from; v < n; ++v)
      if (choose(v + 1, left - 1, cov | nb[v])) return true;
    return false;
  };
  for (int s = 1; s <= std::min(n, max_size); ++s)
    if (choose(0, s, 0)) return s;
  return -1;
}

std::vector<std::uint64_t> squarefree_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n < hi; ++n) {
    bool ok = true;
    for (std::uint64_t p = 2; p * p <= n && ok; ++p) ok = n % (p * p) != 0;
    if (ok) out.push_back(n);
  }
  return out;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(static_cast<std::uint32_t>(p));
      n /= p;
    }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

std::uint32_t Gen::prime(std::uint32_t max) {
  static const std::uint32_t ps[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::size_t n = 0;
  while (n < std::size(ps) && ps[n] <= max) ++n;
  return ps[below(n)];
}

std::vector<std::uint32_t> Gen::primes(int k, std::uint32_t max) {
  std::vector<std::uint32_t> out;
  for (int i = 0; i < k; ++i) out.push_back(prime(max));
  return out;
}

zdg::Element Gen::element(const zdg::Ring& R) {
  zdg::Element e;
  for (auto q : R.factors()) e.coords.push_back(static_cast<std::uint32_t>(below(q)));
  return e;
}

zdg::Support Gen::support(int k) { return zdg::Support(static_cast<std::uint32_t>(below(1ull << k))); }

}  // namespace oracle
