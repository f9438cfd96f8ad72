#include "zdg/girth.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "zdg/error.hpp"

namespace zdg {

namespace {

struct Arc {
  std::uint32_t to;
  std::int32_t cap;
  std::int32_t cost;
};

class FlowNet {
 public:
  explicit FlowNet(std::size_t n) : out_(n) {}

  void add(std::uint32_t a, std::uint32_t b, std::int32_t cost) {
    out_[a].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({b, 1, cost});
    out_[b].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({a, 0, -cost});
  }

  // One augmentation along a cheapest residual path; returns its cost.
  std::optional<std::int64_t> augment(std::uint32_t s, std::uint32_t t) {
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(out_.size(), inf);
    std::vector<std::int32_t> via(out_.size(), -1);
    std::vector<char> queued(out_.size(), 0);
    std::deque<std::uint32_t> queue{s};
    dist[s] = 0;
    queued[s] = 1;
    while (!queue.empty()) {
      const std::uint32_t x = queue.front();
      queue.pop_front();
      queued[x] = 0;
      for (std::uint32_t id : out_[x]) {
        const Arc& a = arcs_[id];
        if (a.cap <= 0 || dist[x] + a.cost >= dist[a.to]) continue;
        dist[a.to] = dist[x] + a.cost;
        via[a.to] = static_cast<std::int32_t>(id);
        if (!queued[a.to]) {
          queued[a.to] = 1;
          queue.push_back(a.to);
        }
      }
    }
    if (dist[t] == inf) return std::nullopt;
    for (std::uint32_t x = t; x != s;) {
      const auto id = static_cast<std::uint32_t>(via[x]);
      arcs_[id].cap -= 1;
      arcs_[id ^ 1].cap += 1;
      x = arcs_[id ^ 1].to;
    }
    return dist[t];
  }

  // Forward arcs from x that carry flow.
  std::vector<std::uint32_t> used_from(std::uint32_t x) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t id : out_[x])
      if ((id & 1) == 0 && arcs_[id].cap == 0) out.push_back(arcs_[id].to);
    return out;
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::uint32_t>> out_;
};

struct Expanded {
  std::vector<std::uint64_t> copies;  // per class
  std::vector<std::uint32_t> first;   // first expanded id per class
  std::uint64_t total = 0;
};

Expanded expand(const Graph& G, std::uint64_t bound) {
  Expanded E;
  E.copies.resize(G.class_count());
  E.first.resize(G.class_count());
  for (std::uint32_t c = 0; c < G.class_count(); ++c) {
    E.copies[c] = std::min(G.cls(c).weight, bound);
    E.first[c] = static_cast<std::uint32_t>(E.total);
    E.total += E.copies[c];
  }
  return E;
}

struct Attempt {
  Length length;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> cycle;  // (class, expanded copy)
};

Attempt solve(const Graph& G, const Expanded& E, std::uint32_t cu, std::uint32_t cv) {
  const std::uint32_t xu = E.first[cu];
  const std::uint32_t xv = E.first[cv] + (cu == cv ? 1 : 0);
  const auto n = static_cast<std::uint32_t>(E.total);
  FlowNet net(2 * std::size_t{n});
  auto in = [](std::uint32_t x) { return 2 * x; };
  auto out = [](std::uint32_t x) { return 2 * x + 1; };
  for (std::uint32_t x = 0; x < n; ++x)
    if (x != xu && x != xv) net.add(in(x), out(x), 0);
  for (std::uint32_t c = 0; c < G.class_count(); ++c) {
    G.for_each_neighbor_class(c, [&](std::uint32_t t) {
      for (std::uint64_t i = 0; i < E.copies[c]; ++i)
        for (std::uint64_t j = 0; j < E.copies[t]; ++j)
          net.add(out(E.first[c] + static_cast<std::uint32_t>(i)),
                  in(E.first[t] + static_cast<std::uint32_t>(j)), 1);
    });
  }
  Attempt result;
  const auto first = net.augment(out(xu), in(xv));
  if (!first) return result;
  const auto second = net.augment(out(xu), in(xv));
  if (!second) return result;
  result.length = static_cast<std::uint32_t>(*first + *second);

  std::vector<std::uint32_t> cls_of(n);
  for (std::uint32_t c = 0; c < G.class_count(); ++c)
    for (std::uint64_t i = 0; i < E.copies[c]; ++i) cls_of[E.first[c] + i] = c;
  auto walk = [&](std::uint32_t start_in) {
    std::vector<std::uint32_t> path;
    std::uint32_t x = start_in / 2;
    while (x != xv) {
      path.push_back(x);
      const auto next = net.used_from(out(x));
      x = next.front() / 2;
    }
    return path;
  };
  const auto heads = net.used_from(out(xu));
  std::vector<std::uint32_t> p1 = heads[0] / 2 == xv ? std::vector<std::uint32_t>{} : walk(heads[0]);
  std::vector<std::uint32_t> p2 = heads[1] / 2 == xv ? std::vector<std::uint32_t>{} : walk(heads[1]);
  std::vector<std::uint32_t> seq{xu};
  seq.insert(seq.end(), p1.begin(), p1.end());
  seq.push_back(xv);
  seq.insert(seq.end(), p2.rbegin(), p2.rend());
  for (std::uint32_t x : seq) result.cycle.push_back({cls_of[x], x - E.first[cls_of[x]]});
  return result;
}

bool certified(const Graph& G, const Expanded& E, std::uint32_t cu, std::uint32_t cv,
               const Length& r) {
  for (std::uint32_t c = 0; c < G.class_count(); ++c) {
    const std::uint64_t w = G.cls(c).weight;
    const std::uint64_t m = E.copies[c];
    if (m == w) continue;
    const std::uint64_t pinned = (c == cu ? 1 : 0) + (c == cv ? 1 : 0);
    if (m >= 2 + pinned) continue;
    if (r && m >= *r / 2) continue;
    return false;
  }
  return true;
}

}  // namespace

GirthResult girth_through(const Graph& G, VertexRef u, VertexRef v, GirthOptions opts) {
  if (!G.contains(u) || !G.contains(v))
    throw Error(ErrorKind::InvalidArgument, "girth_through: vertex outside the graph");
  if (u == v) throw Error(ErrorKind::InvalidArgument, "girth_through needs two distinct vertices");
  std::uint64_t bound = std::max<std::uint64_t>(opts.initial_copies, 2);
  GirthResult out;
  while (true) {
    const Expanded E = expand(G, bound);
    const Attempt a = solve(G, E, u.cls, v.cls);
    const bool ok = certified(G, E, u.cls, v.cls, a.length);
    bool saturated = true;
    for (std::uint32_t c = 0; c < G.class_count(); ++c)
      saturated = saturated && E.copies[c] == G.cls(c).weight;
    const bool over = !ok && !saturated && expand(G, bound * 2).total > opts.max_expanded_vertices;
    if (ok || over || saturated) {
      out.length = a.length;
      out.certified = ok || saturated;
      out.copies_used = bound;
      // Expanded copy j of a class maps to a real copy; u and v keep theirs.
      for (const auto& [c, j] : a.cycle) {
        std::vector<std::uint64_t> pinned;
        if (c == u.cls) pinned.push_back(u.copy);
        if (c == v.cls) pinned.push_back(v.copy);
        std::uint64_t copy;
        if (j < pinned.size()) {
          copy = pinned[j];
        } else {
          std::uint64_t skip = j - pinned.size();
          copy = 0;
          while (true) {
            if (std::find(pinned.begin(), pinned.end(), copy) == pinned.end()) {
              if (skip == 0) break;
              --skip;
            }
            ++copy;
          }
        }
        out.cycle.push_back({c, copy});
      }
      return out;
    }
    bound *= 2;
  }
}

Length girth(const Graph& G, GirthOptions opts) {
  Length best;
  for (std::uint32_t c = 0; c < G.class_count(); ++c) {
    G.for_each_neighbor_class(c, [&](std::uint32_t t) {
      if (t < c || (best && *best == 3)) return;
      const auto r = girth_through(G, {c, 0}, {t, 0}, opts).length;
      if (r && (!best || *r < *best)) best = r;
    });
  }
  return best;
}

bool is_cycle(const Graph& G, const std::vector<VertexRef>& cycle) {
  if (cycle.size() < 3) return false;
  std::set<VertexRef> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexRef a = cycle[i];
    const VertexRef b = cycle[(i + 1) % cycle.size()];
    if (!G.contains(a) || !G.contains(b) || !G.adjacent(a, b)) return false;
  }
  return true;
}

}  // namespace zdg
