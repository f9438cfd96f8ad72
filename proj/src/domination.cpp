#include "zdg/domination.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_set>

#include "zdg/error.hpp"

namespace zdg {

namespace {

enum : std::uint8_t { kNone = 0, kOne = 1, kAll = 2 };

class Solver {
 public:
  Solver(const Graph& G, bool total, DominationOptions opts)
      : G_(G), total_(total), opts_(opts), n_(static_cast<std::uint32_t>(G.class_count())),
        state_(n_, kNone), cnt_(n_, 0), mark_(n_, 0) {
    nbrs_.resize(n_);
    for (std::uint32_t c = 0; c < n_; ++c)
      G.for_each_neighbor_class(c, [&](std::uint32_t t) { nbrs_[c].push_back(t); });
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
      return nbrs_[a].size() < nbrs_[b].size();
    });
  }

  DominationResult run() {
    greedy();
    root_lb_ = cost_ + packing_bound();
    if (root_lb_ < best_cost_) search();
    DominationResult r;
    r.size = best_cost_;
    r.certified = !aborted_;
    r.nodes = nodes_;
    r.lower_bound = aborted_ ? root_lb_ : best_cost_;
    for (std::uint32_t c = 0; c < n_; ++c)
      if (best_[c] != kNone) r.witness.push_back({c, best_[c] == kAll ? G_.cls(c).weight : 1});
    return r;
  }

 private:
  bool self_covered(std::uint32_t c) const {
    if (total_) return false;
    return state_[c] == kAll || (state_[c] == kOne && G_.cls(c).weight == 1);
  }
  bool covered(std::uint32_t c) const { return cnt_[c] > 0 || self_covered(c); }

  std::uint64_t step_cost(std::uint32_t c, std::uint8_t to) const {
    const std::uint64_t w = G_.cls(c).weight;
    const std::uint64_t have = state_[c] == kNone ? 0 : state_[c] == kOne ? 1 : w;
    return (to == kAll ? w : 1) - have;
  }

  void set(std::uint32_t c, std::uint8_t to) {
    const bool was_chosen = state_[c] != kNone;
    cost_ = saturating_add(cost_, step_cost(c, to));
    state_[c] = to;
    if (!was_chosen)
      for (std::uint32_t t : nbrs_[c]) ++cnt_[t];
  }

  void unset(std::uint32_t c, std::uint8_t back, std::uint64_t cost_before) {
    if (back == kNone)
      for (std::uint32_t t : nbrs_[c]) --cnt_[t];
    state_[c] = back;
    cost_ = cost_before;
  }

  std::uint32_t uncovered_gain(std::uint32_t t) const {
    std::uint32_t gain = 0;
    for (std::uint32_t x : nbrs_[t])
      if (!covered(x)) ++gain;
    if (!total_ && G_.cls(t).weight == 1 && !covered(t)) ++gain;
    return gain;
  }

  void greedy() {
    while (true) {
      bool any = false;
      double best_ratio = -1;
      std::uint32_t pick = 0;
      std::uint8_t pick_to = kNone;
      for (std::uint32_t c : order_) {
        if (covered(c)) continue;
        any = true;
        for (std::uint32_t t : nbrs_[c]) {
          const double ratio = uncovered_gain(t);
          if (ratio > best_ratio) {
            best_ratio = ratio;
            pick = t;
            pick_to = kOne;
          }
        }
        if (!total_) {
          const double ratio = 1.0 / static_cast<double>(step_cost(c, kAll));
          if (ratio > best_ratio) {
            best_ratio = ratio;
            pick = c;
            pick_to = kAll;
          }
        }
      }
      if (!any) break;
      set(pick, pick_to);
    }
    best_cost_ = cost_;
    best_ = state_;
    std::fill(state_.begin(), state_.end(), kNone);
    std::fill(cnt_.begin(), cnt_.end(), 0u);
    cost_ = 0;
  }

  // Uncovered classes whose remaining options are pairwise disjoint each
  // need at least one more unit of cost.
  std::uint64_t packing_bound() {
    ++epoch_;
    std::uint64_t lb = 0;
    for (std::uint32_t c : order_) {
      if (covered(c)) continue;
      bool clash = !total_ && mark_[c] == epoch_;
      for (std::size_t i = 0; i < nbrs_[c].size() && !clash; ++i) clash = mark_[nbrs_[c][i]] == epoch_;
      if (clash) continue;
      ++lb;
      if (!total_) mark_[c] = epoch_;
      for (std::uint32_t t : nbrs_[c]) mark_[t] = epoch_;
    }
    return lb;
  }

  std::string state_key() const {
    std::string key;
    for (std::uint32_t c = 0; c < n_; ++c)
      if (state_[c] != kNone) {
        key.append(reinterpret_cast<const char*>(&c), sizeof c);
        key.push_back(static_cast<char>(state_[c]));
      }
    return key;
  }

  // Options equal up to a coordinate permutation that fixes the uncovered
  // class and every chosen class are interchangeable.
  std::vector<std::uint32_t> distinct_options(std::uint32_t c) const {
    const int k = G_.k();
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t x = 0; x < n_; ++x)
      if (state_[x] != kNone) chosen.push_back(x);
    std::map<std::vector<std::uint32_t>, std::uint32_t> cell_ids;
    std::vector<std::uint32_t> cell(k);
    for (int i = 0; i < k; ++i) {
      std::vector<std::uint32_t> key{G_.factors()[i], G_.cls(c).support.contains(i) ? 1u : 0u};
      for (std::uint32_t x : chosen) key.push_back(G_.cls(x).support.contains(i) ? 1u : 0u);
      cell[i] = cell_ids.emplace(std::move(key), static_cast<std::uint32_t>(cell_ids.size()))
                    .first->second;
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
    std::vector<std::uint32_t> out;
    for (std::uint32_t t : nbrs_[c]) {
      if (state_[t] != kNone) continue;
      std::vector<std::uint32_t> sig(cell_ids.size(), 0);
      for (int i : G_.cls(t).support.indices()) ++sig[cell[i]];
      if (seen.emplace(std::move(sig), t).second) out.push_back(t);
    }
    return out;
  }

  void search() {
    if (aborted_) return;
    if (++nodes_ > opts_.node_limit) {
      aborted_ = true;
      return;
    }
    std::uint32_t target = n_;
    for (std::uint32_t c : order_)
      if (!covered(c)) {
        target = c;
        break;
      }
    if (target == n_) {
      if (cost_ < best_cost_) {
        best_cost_ = cost_;
        best_ = state_;
      }
      return;
    }
    if (saturating_add(cost_, packing_bound()) >= best_cost_) return;
    if (!memo_.insert(state_key()).second) return;

    struct Option {
      std::uint32_t cls;
      std::uint8_t to;
      std::uint32_t gain;
    };
    std::vector<Option> options;
    for (std::uint32_t t : distinct_options(target)) options.push_back({t, kOne, uncovered_gain(t)});
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& a, const Option& b) { return a.gain > b.gain; });
    if (!total_) options.push_back({target, kAll, 0});
    for (const Option& o : options) {
      const std::uint8_t back = state_[o.cls];
      const std::uint64_t before = cost_;
      set(o.cls, o.to);
      if (cost_ < best_cost_) search();
      unset(o.cls, back, before);
      if (aborted_) return;
    }
  }

  const Graph& G_;
  bool total_;
  DominationOptions opts_;
  std::uint32_t n_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> cnt_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t epoch_ = 0;
  std::vector<std::vector<std::uint32_t>> nbrs_;
  std::vector<std::uint32_t> order_;
  std::uint64_t cost_ = 0;
  std::uint64_t best_cost_ = 0;
  std::vector<std::uint8_t> best_;
  std::uint64_t root_lb_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::unordered_set<std::string> memo_;
};

}  // namespace

int default_domination_k_cap() {
  if (const char* env = std::getenv("ZDG_DOMINATION_K_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 16;
}

DominationResult domination(const Graph& G, bool total, DominationOptions opts) {
  const int cap = default_domination_k_cap();
  if (G.k() > cap)
    throw Error(ErrorKind::ResourceCap, "domination search is capped at k = " + std::to_string(cap) +
                                            " factors, got " + std::to_string(G.k()));
  if (total)
    for (std::uint32_t c = 0; c < G.class_count(); ++c)
      if (G.class_degree(c) == 0)
        throw Error(ErrorKind::IsolatedVertex,
                    "vertex " + G.cls(c).support.to_string() + " has no neighbour");
  return Solver(G, total, opts).run();
}

DominationResult domination_number(const Graph& G, DominationOptions opts) {
  return domination(G, false, opts);
}

DominationResult total_domination_number(const Graph& G, DominationOptions opts) {
  return domination(G, true, opts);
}

bool dominates(const Graph& G, const std::vector<ClassChoice>& set, bool total) {
  std::vector<std::uint64_t> taken(G.class_count(), 0);
  for (const auto& ch : set) {
    if (ch.cls >= G.class_count() || ch.copies > G.cls(ch.cls).weight) return false;
    taken[ch.cls] = std::max(taken[ch.cls], ch.copies);
  }
  for (std::uint32_t c = 0; c < G.class_count(); ++c) {
    bool ok = !total && taken[c] == G.cls(c).weight;
    G.for_each_neighbor_class(c, [&](std::uint32_t t) { ok = ok || taken[t] > 0; });
    if (!ok) return false;
  }
  return true;
}

std::vector<VertexRef> expand_witness(const std::vector<ClassChoice>& set) {
  std::vector<VertexRef> out;
  for (const auto& ch : set)
    for (std::uint64_t i = 0; i < ch.copies; ++i) out.push_back({ch.cls, i});
  return out;
}

}  // namespace zdg
