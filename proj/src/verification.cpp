#include "zdg/verification.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "zdg/error.hpp"
#include "zdg/graph.hpp"
#include "zdg/registry.hpp"
#include "zdg/spectrum.hpp"
#include "zdg/theorems.hpp"

namespace zdg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "Confirmed";
    case Verdict::Violated: return "Violated";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Distance: return "distance";
    case Suite::Radius: return "radius";
    case Suite::Girth: return "girth";
    case Suite::Domination: return "domination";
    case Suite::Spectrum: return "spectrum";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::All, Suite::Distance, Suite::Radius, Suite::Girth, Suite::Domination,
                  Suite::Spectrum})
    if (to_string(s) == name) return s;
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

std::uint64_t VerificationReport::count(Verdict v) const {
  return static_cast<std::uint64_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.verdict == v; }));
}

std::uint64_t VerificationReport::registered_violations() const {
  return static_cast<std::uint64_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) {
    return c.verdict == Verdict::Violated && c.registered;
  }));
}

std::uint64_t VerificationReport::unregistered_violations() const {
  return count(Verdict::Violated) - registered_violations();
}

const CheckRecord* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

struct Witness {
  std::string text;
  std::string canonical;
};

class Check {
 public:
  Check(std::string id, std::string source) {
    rec_.id = std::move(id);
    rec_.source = std::move(source);
  }

  void record(const Prediction& p, const std::string& oracle, bool ok, const Witness& w) {
    if (!p.applicable) {
      ++rec_.not_applicable;
      if (rec_.reason.empty()) rec_.reason = p.reason;
      return;
    }
    if (ok) {
      ++rec_.confirmed;
      if (!has_example_) set_example(p, oracle, w);
    } else {
      if (rec_.violated++ == 0) set_example(p, oracle, w);
    }
  }

  void skip(const std::string& reason) {
    ++rec_.not_applicable;
    if (rec_.reason.empty()) rec_.reason = reason;
  }

  CheckRecord finish(const Ring& R) {
    rec_.verdict = rec_.violated ? Verdict::Violated
                   : rec_.confirmed ? Verdict::Confirmed
                                    : Verdict::NotApplicable;
    if (rec_.verdict == Verdict::NotApplicable && rec_.reason.empty())
      rec_.reason = "no instance meets the hypotheses";
    if (rec_.verdict == Verdict::Violated) {
      if (auto e = find_edge_case(rec_.id, R)) {
        rec_.registered = true;
        rec_.note = e->note;
      }
    }
    return rec_;
  }

 private:
  void set_example(const Prediction& p, const std::string& oracle, const Witness& w) {
    has_example_ = true;
    rec_.prediction = p.to_string();
    rec_.oracle = oracle;
    rec_.witness = w.text;
    rec_.canonical_witness = w.canonical;
  }

  CheckRecord rec_;
  bool has_example_ = false;
};

std::string flag_string(bool b) { return b ? "true" : "false"; }

// Coordinates grouped by field size, ascending.
std::vector<std::vector<int>> coordinate_groups(const Ring& R) {
  std::map<std::uint32_t, std::vector<int>> by_q;
  for (int i = 0; i < R.k(); ++i) by_q[R.factors()[i]].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [q, idx] : by_q) out.push_back(idx);
  return out;
}

// One support per multiset of (q_i, membership) types.
std::vector<Support> support_types(const Ring& R) {
  const auto groups = coordinate_groups(R);
  std::vector<Support> out;
  std::function<void(std::size_t, Support)> rec = [&](std::size_t g, Support s) {
    if (g == groups.size()) {
      out.push_back(s);
      return;
    }
    for (std::size_t c = 0; c <= groups[g].size(); ++c) {
      Support t = s;
      for (std::size_t j = 0; j < c; ++j) t = t.with(groups[g][j]);
      rec(g + 1, t);
    }
  };
  rec(0, Support());
  return out;
}

// One support pair per multiset of (q_i, in S, in T) types.
std::vector<std::pair<Support, Support>> support_pair_types(const Ring& R) {
  const auto groups = coordinate_groups(R);
  std::vector<std::pair<Support, Support>> out;
  std::function<void(std::size_t, Support, Support)> rec = [&](std::size_t g, Support s, Support t) {
    if (g == groups.size()) {
      out.push_back({s, t});
      return;
    }
    const std::size_t n = groups[g].size();
    for (std::size_t both = 0; both <= n; ++both)
      for (std::size_t only_s = 0; both + only_s <= n; ++only_s)
        for (std::size_t only_t = 0; both + only_s + only_t <= n; ++only_t) {
          Support s2 = s, t2 = t;
          std::size_t j = 0;
          for (std::size_t x = 0; x < both; ++x, ++j) {
            s2 = s2.with(groups[g][j]);
            t2 = t2.with(groups[g][j]);
          }
          for (std::size_t x = 0; x < only_s; ++x, ++j) s2 = s2.with(groups[g][j]);
          for (std::size_t x = 0; x < only_t; ++x, ++j) t2 = t2.with(groups[g][j]);
          rec(g + 1, s2, t2);
        }
  };
  rec(0, Support(), Support());
  return out;
}

// Number of support types (pairs when pairs is set), saturating.
std::uint64_t type_count(const Ring& R, bool pairs) {
  std::uint64_t n = 1;
  for (const auto& g : coordinate_groups(R)) {
    const std::uint64_t m = g.size();
    const std::uint64_t f = pairs ? (m + 3) * (m + 2) * (m + 1) / 6 : m + 1;
    n = n > UINT64_MAX / f ? UINT64_MAX : n * f;
  }
  return n;
}

using Pair = std::pair<VertexRef, VertexRef>;

class Sampler {
 public:
  Sampler(const Ring& R, const VerifyOptions& opts) : R_(R), opts_(opts), rng_(opts.seed) {}

  bool sampled = false;

  std::vector<VertexRef> vertices(const Graph& G) {
    std::vector<VertexRef> out;
    if (G.class_count() <= opts_.vertex_cap) {
      for (std::uint32_t c = 0; c < G.class_count(); ++c) out.push_back({c, 0});
      return out;
    }
    sampled = true;
    std::set<std::uint32_t> seen;
    std::uint64_t extra = opts_.extra_samples;
    if (type_count(R_, false) <= opts_.vertex_cap) {
      for (Support s : support_types(R_))
        if (auto c = G.class_of(s); c && seen.insert(*c).second) out.push_back({*c, 0});
    } else {
      extra += opts_.vertex_cap;
    }
    for (std::uint64_t i = 0; i < extra; ++i) {
      const auto c = static_cast<std::uint32_t>(rng_() % G.class_count());
      if (seen.insert(c).second) out.push_back({c, 0});
    }
    return out;
  }

  std::vector<Pair> pairs(const Graph& G, std::uint64_t cap) {
    std::vector<Pair> out;
    const std::uint64_t n = G.class_count();
    std::uint64_t multi = 0;
    for (std::uint32_t c = 0; c < n; ++c) multi += G.cls(c).weight >= 2;
    if (n * (n - 1) / 2 + multi <= cap) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (G.cls(c).weight >= 2) out.push_back({{c, 0}, {c, 1}});
        for (std::uint32_t t = c + 1; t < n; ++t) out.push_back({{c, 0}, {t, 0}});
      }
      return out;
    }
    sampled = true;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    auto add = [&](std::uint32_t a, std::uint32_t b) {
      if (a > b) std::swap(a, b);
      if (a == b && G.cls(a).weight < 2) return;
      if (!seen.insert({a, b}).second) return;
      out.push_back({{a, 0}, {b, a == b ? 1u : 0u}});
    };
    std::uint64_t extra = opts_.extra_samples;
    if (type_count(R_, true) <= cap) {
      for (const auto& [s, t] : support_pair_types(R_)) {
        auto a = G.class_of(s);
        auto b = G.class_of(t);
        if (a && b) add(*a, *b);
      }
    } else {
      extra += cap;
    }
    for (std::uint64_t i = 0; i < extra; ++i) {
      const auto a = static_cast<std::uint32_t>(rng_() % n);
      const auto b = static_cast<std::uint32_t>(rng_() % n);
      add(a, b);
    }
    return out;
  }

 private:
  const Ring& R_;
  const VerifyOptions& opts_;
  std::mt19937_64 rng_;
};

class Engine {
 public:
  Engine(const Ring& R, const VerifyOptions& opts)
      : R_(R), opts_(opts), Y_(R), sampler_(R, opts) {
    if (R.k() >= 2) {
      gamma_.emplace(build_gamma(R));
      ag_.emplace(build_ag(R));
    }
    two_zd_ = is_zero_divisor(R, R.from_integer(2));
  }

  VerificationReport run() {
    const Suite s = opts_.suite;
    if (s == Suite::All || s == Suite::Distance) distance_suite();
    if (s == Suite::All || s == Suite::Radius) radius_suite();
    if (s == Suite::All || s == Suite::Girth) girth_suite();
    if (s == Suite::All || s == Suite::Domination) domination_suite();
    if (s == Suite::All || s == Suite::Spectrum) spectrum_suite();
    VerificationReport rep;
    rep.ring = R_.describe();
    rep.suite = to_string(s);
    rep.seed = opts_.seed;
    rep.sampled = sampler_.sampled;
    for (auto& c : checks_) rep.checks.push_back(c.finish(R_));
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    return rep;
  }

 private:
  Check& check(const std::string& id, const std::string& source) {
    checks_.emplace_back(id, source);
    return checks_.back();
  }

  static std::string suffix(const Graph& G) { return G.kind() == GraphKind::Gamma ? "gamma" : "ag"; }

  Witness vertex_witness(const Graph& G, VertexRef v) const {
    return {vertex_label(G, R_, v),
            "S=" + G.cls(v.cls).support.to_string() + "#" + std::to_string(v.copy)};
  }

  Witness pair_witness(const Graph& G, VertexRef u, VertexRef v) const {
    const Witness a = vertex_witness(G, u), b = vertex_witness(G, v);
    return {a.text + " | " + b.text, a.canonical + " | " + b.canonical};
  }

  Witness list_witness(const Graph& G, const std::vector<VertexRef>& vs) const {
    Witness w;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Witness x = vertex_witness(G, vs[i]);
      w.text += (i ? " | " : "") + x.text;
      w.canonical += (i ? " | " : "") + x.canonical;
    }
    return w;
  }

  Witness ideal_witness(Support s) const {
    return {R_.ideal_label(Ideal{s}) + " S=" + s.to_string(), "S=" + s.to_string()};
  }

  Witness ring_witness() const { return {R_.describe(), "ring"}; }

  TopSet hc(const Graph& G, VertexRef v) const {
    if (G.kind() == GraphKind::Gamma) return hull_complement(R_, vertex_element(G, R_, v));
    return hull_complement(R_, Ideal{G.cls(v.cls).support});
  }

  TopSet h(const Graph& G, VertexRef v) const {
    if (G.kind() == GraphKind::Gamma) return hull(R_, vertex_element(G, R_, v));
    return hull(R_, Ideal{G.cls(v.cls).support});
  }

  const std::vector<std::int32_t>& dist_from(const Graph& G, std::uint32_t c) {
    auto& cache = G.kind() == GraphKind::Gamma ? gamma_dist_ : ag_dist_;
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, G.class_distances(c)).first;
    return it->second;
  }

  Length oracle_distance(const Graph& G, VertexRef u, VertexRef v) {
    if (u.cls == v.cls) return distance(G, u, v);
    const auto d = dist_from(G, u.cls)[v.cls];
    if (d < 0) return std::nullopt;
    return static_cast<std::uint32_t>(d);
  }

  std::vector<Pair>& pairs(const Graph& G) {
    auto& p = G.kind() == GraphKind::Gamma ? gamma_pairs_ : ag_pairs_;
    if (!p) p = sampler_.pairs(G, opts_.pair_cap);
    return *p;
  }

  std::vector<Pair>& girth_pairs(const Graph& G) {
    auto& p = G.kind() == GraphKind::Gamma ? gamma_girth_pairs_ : ag_girth_pairs_;
    if (!p) {
      // Each girth search walks the copy-expanded graph, so large graphs get
      // fewer pairs.
      const std::uint64_t copies = opts_.girth.initial_copies;
      std::uint64_t edges = 1;
      for (std::uint32_t c = 0; c < G.class_count(); ++c)
        G.for_each_neighbor_class(c, [&](std::uint32_t t) {
          edges += std::min(G.cls(c).weight, copies) * std::min(G.cls(t).weight, copies);
        });
      const std::uint64_t budget = std::max<std::uint64_t>(32, opts_.girth_edge_budget / edges);
      p = sampler_.pairs(G, std::min(opts_.girth_pair_cap, budget));
    }
    return *p;
  }

  std::vector<VertexRef>& vertices(const Graph& G) {
    auto& p = G.kind() == GraphKind::Gamma ? gamma_vertices_ : ag_vertices_;
    if (!p) p = sampler_.vertices(G);
    return *p;
  }

  void no_graph(std::initializer_list<std::pair<const char*, const char*>> ids) {
    for (const auto& [id, src] : ids) check(id, src).skip("R has no nonzero zero-divisors");
  }

  // Adjacency, distance, orthogonality.
  void distance_suite() {
    if (!gamma_) {
      no_graph({{"adjacency.gamma", "Lemma (adjacency)"},
                {"adjacency.ag", "Lemma (adjacency)"},
                {"distance.gamma", "Proposition (distance)"},
                {"distance.ag", "Proposition (distance)"},
                {"distance.gamma.b_literal", "Proposition (distance)"},
                {"orthogonal.gamma", "Theorem (orthogonality)"},
                {"orthogonal.ag", "Theorem (orthogonality)"}});
      return;
    }
    for (const Graph* G : {&*gamma_, &*ag_}) {
      Check& adj = check("adjacency." + suffix(*G), "Lemma (adjacency)");
      Check& dist = check("distance." + suffix(*G), "Proposition (distance)");
      Check& orth = check("orthogonal." + suffix(*G), "Theorem (orthogonality)");
      Check* printed = G->kind() == GraphKind::Gamma
                           ? &check("distance.gamma.b_literal", "Proposition (distance)")
                           : nullptr;
      for (const auto& [u, v] : pairs(*G)) {
        const PairShape s = pair_shape(Y_, hc(*G, u), hc(*G, v));
        const Witness w = pair_witness(*G, u, v);
        const bool a = G->adjacent(u, v);
        const Prediction pa = predict_adjacent(s);
        adj.record(pa, flag_string(a), pa.admits(a), w);
        const Length d = oracle_distance(*G, u, v);
        const Prediction pd = predict_distance(s);
        dist.record(pd, length_string(d), pd.admits(d), w);
        if (printed) {
          const Prediction pp = predict_distance_printed(Y_, s);
          printed->record(pp, length_string(d), pp.admits(d), w);
        }
        const bool o = orthogonal(*G, u, v);
        const Prediction po = predict_orthogonal(Y_, s);
        orth.record(po, flag_string(o), po.admits(o), w);
      }
    }
  }

  // Eccentricity, radius, triangles.
  void radius_suite() {
    if (!gamma_) {
      no_graph({{"ecc.gamma", "Theorem (eccentricity)"},
                {"ecc.ag", "Theorem (eccentricity)"},
                {"ecc_gt1.gamma", "Theorem (eccentricity)"},
                {"ecc_gt1.ag", "Theorem (eccentricity)"},
                {"radius.gamma", "Corollary (radius 2)"},
                {"radius.ag", "Corollary (radius 2)"},
                {"radius_gt1.gamma", "Corollary (Rad > 1)"},
                {"radius_gt1.ag", "Corollary (Rad > 1)"},
                {"radius_equal", "Corollary (Rad Γ = Rad 𝔸𝔾)"},
                {"radius2_equivalence", "Corollary (radius 2)"},
                {"radius3_branch", "Theorem (radius 3)"},
                {"triangle.gamma", "Proposition (triangle)"},
                {"triangle.ag", "Proposition (triangle)"},
                {"triangulated.gamma", "Theorem (Γ triangulated)"},
                {"triangulated.ag", "Theorem (𝔸𝔾 triangulated)"},
                {"triangulated.equivalence", "Theorems (triangulated)"}});
      return;
    }
    std::map<std::string, std::optional<std::uint32_t>> rad;
    std::map<std::string, bool> triangulated;
    for (const Graph* G : {&*gamma_, &*ag_}) {
      const std::string sfx = suffix(*G);
      Check& ecc = check("ecc." + sfx, "Theorem (eccentricity)");
      Check& gt1 = check("ecc_gt1." + sfx, "Theorem (eccentricity)");
      Check& tri = check("triangle." + sfx, "Proposition (triangle)");
      for (VertexRef v : vertices(*G)) {
        const Witness w = vertex_witness(*G, v);
        Length e;
        try {
          e = eccentricity(*G, v);
        } catch (const Error&) {
          e = std::nullopt;
        }
        const Prediction pe = predict_ecc(hc(*G, v));
        ecc.record(pe, length_string(e), pe.admits(e), w);
        const Prediction pg = predict_ecc_gt1();
        gt1.record(pg, length_string(e), pg.admits(e), w);
        const auto t = triangle_through(*G, v);
        const Prediction pt = predict_triangle(Y_, G->kind(), h(*G, v));
        tri.record(pt, flag_string(t.has_value()), pt.admits(t.has_value()),
                   t ? list_witness(*G, {t->begin(), t->end()}) : w);
      }

      Check& radius_check = check("radius." + sfx, "Corollary (radius 2)");
      Check& radius_gt1 = check("radius_gt1." + sfx, "Corollary (Rad > 1)");
      Length r;
      Witness center = ring_witness();
      try {
        const RadiusResult rr = radius(*G);
        r = rr.radius;
        center = vertex_witness(*G, rr.center);
      } catch (const Error&) {
        r = std::nullopt;
      }
      rad[sfx] = r;
      const Prediction pr = predict_radius(Y_);
      radius_check.record(pr, length_string(r), pr.admits(r), center);
      const Prediction pg = Prediction::greater_than(1);
      radius_gt1.record(pg, length_string(r), pg.admits(r), center);

      Check& tri_all = check("triangulated." + sfx, G->kind() == GraphKind::Gamma
                                                        ? "Theorem (Γ triangulated)"
                                                        : "Theorem (𝔸𝔾 triangulated)");
      const TriangulationResult tr = is_triangulated(*G);
      triangulated[sfx] = tr.triangulated;
      const Prediction ptr = predict_triangulated(Y_);
      tri_all.record(ptr, flag_string(tr.triangulated), ptr.admits(tr.triangulated),
                     tr.non_triangle_vertex ? vertex_witness(*G, *tr.non_triangle_vertex)
                                            : ring_witness());
    }
    const std::string both = "gamma=" + length_string(rad["gamma"]) + " ag=" + length_string(rad["ag"]);
    const bool equal = rad["gamma"] == rad["ag"];
    check("radius_equal", "Corollary (Rad Γ = Rad 𝔸𝔾)")
        .record(Prediction::truth(true), both, equal, ring_witness());

    bool isolated = false;
    for (int i = 0; i < Y_.size(); ++i) isolated = isolated || Y_.is_isolated(i);
    const bool both_two = rad["gamma"] == 2u && rad["ag"] == 2u;
    check("radius2_equivalence", "Corollary (radius 2)")
        .record(Prediction::truth(isolated), both, both_two == isolated, ring_witness());

    const auto fp = fixed_place_status(R_);
    check("radius3_branch", "Theorem (radius 3)")
        .skip(fp.status == FixedPlaceStatus::AntiFixedPlace
                  ? "unexpected anti fixed-place zero ideal"
                  : "the zero ideal is fixed-place since Min(R) is finite; the radius 3 branch "
                    "needs an anti fixed-place zero ideal");

    const bool anti = fp.status == FixedPlaceStatus::AntiFixedPlace;
    const bool consistent = triangulated["gamma"] == anti && triangulated["ag"] == anti &&
                            anti == !isolated;
    check("triangulated.equivalence", "Theorems (triangulated)")
        .record(Prediction::truth(true),
                "gamma=" + flag_string(triangulated["gamma"]) + " ag=" +
                    flag_string(triangulated["ag"]) + " anti_fixed_place=" + flag_string(anti),
                consistent, ring_witness());
  }

  void girth_suite() {
    if (!gamma_) {
      no_graph({{"girth.elements", "Proposition (girth, elements)"},
                {"girth.elements.c", "Proposition (girth, elements)"},
                {"girth.ideals", "Theorem (girth, ideals)"},
                {"girth.ideals.c", "Theorem (girth, ideals)"},
                {"girth.ideals.d_literal", "Theorem (girth, ideals)"},
                {"girth.ideals.f_converse", "Theorem (girth, ideals)"},
                {"girth5_isolated_point", "Corollary (gi = 5)"}});
      return;
    }
    auto oracle_gi = [&](const Graph& G, VertexRef u, VertexRef v, const Witness& w,
                         std::string& text) -> std::optional<Length> {
      const GirthResult g = girth_through(G, u, v, opts_.girth);
      text = length_string(g.length);
      if (!g.certified) return std::nullopt;
      if (g.length) {
        const bool valid = is_cycle(G, g.cycle) && g.cycle.size() == *g.length &&
                           std::find(g.cycle.begin(), g.cycle.end(), v) != g.cycle.end() &&
                           g.cycle.front() == u;
        if (!valid) text = "invalid cycle";
        if (!valid) return Length{0};
      }
      (void)w;
      return g.length;
    };

    Check& el = check("girth.elements", "Proposition (girth, elements)");
    Check& el_c = check("girth.elements.c", "Proposition (girth, elements)");
    for (const auto& [u, v] : girth_pairs(*gamma_)) {
      const Graph& G = *gamma_;
      const PairShape s = pair_shape(Y_, hc(G, u), hc(G, v));
      const Prediction p = predict_gi_elements(s, pendant(G, u), pendant(G, v), two_zd_);
      const Witness w = pair_witness(G, u, v);
      if (!p.applicable) {
        el.record(p, "", false, w);
        continue;
      }
      std::string text;
      const auto gi = oracle_gi(G, u, v, w, text);
      if (!gi) {
        el.skip("girth search not certified");
        continue;
      }
      (p.clause == "c" ? el_c : el).record(p, text, p.admits(*gi), w);
    }

    const Graph& A = *ag_;
    Check& id = check("girth.ideals", "Theorem (girth, ideals)");
    Check& lit = check("girth.ideals.d_literal", "Theorem (girth, ideals)");
    Check& conv = check("girth.ideals.f_converse", "Theorem (girth, ideals)");
    bool saw_five = false;
    Witness five_witness;
    for (const auto& [u, v] : girth_pairs(A)) {
      const PairShape s = pair_shape(Y_, hc(A, u), hc(A, v));
      const bool pu = pendant(A, u), pv = pendant(A, v);
      const Prediction p = predict_gi_ideals(s, pu, pv);
      const Prediction pl = predict_gi_ideals(s, pu, pv, ClauseDReading::Printed);
      const Witness w = pair_witness(A, u, v);
      if (!p.applicable) {
        id.record(p, "", false, w);
        continue;
      }
      std::string text;
      const auto gi = oracle_gi(A, u, v, w, text);
      if (!gi) {
        id.skip("girth search not certified");
        continue;
      }
      id.record(p, text, p.admits(*gi), w);
      if (pl.clause == "d") lit.record(pl, text, pl.admits(*gi), w);
      if (*gi == 5u) {
        if (!saw_five) five_witness = w;
        saw_five = true;
        conv.record(Prediction::truth(true, "f"), flag_string(gi5_conditions(s)), gi5_conditions(s), w);
      }
    }
    if (!saw_five) conv.skip("no pair with gi = 5");

    // Clause (c) needs two distinct ideals whose h^c sets have equal closures.
    Check& c = check("girth.ideals.c", "Theorem (girth, ideals)");
    std::map<std::uint32_t, std::uint32_t> closures;
    std::optional<Pair> equal_pair;
    for (std::uint32_t x = 0; x < A.class_count() && !equal_pair; ++x) {
      const TopSet cl = Y_.closure(hc(A, {x, 0}));
      auto [it, fresh] = closures.emplace(cl.members.bits(), x);
      if (!fresh) equal_pair = Pair{{it->second, 0}, {x, 0}};
    }
    if (!equal_pair) {
      c.skip("no two distinct annihilating ideals have equal h^c closures (checked over all " +
             std::to_string(A.class_count()) + " ideals)");
    } else {
      const auto [u, v] = *equal_pair;
      const PairShape s = pair_shape(Y_, hc(A, u), hc(A, v));
      std::string text;
      const auto gi = oracle_gi(A, u, v, {}, text);
      const Prediction p = predict_gi_ideals(s, pendant(A, u), pendant(A, v));
      if (gi) c.record(p, text, p.admits(*gi), pair_witness(A, u, v));
    }

    Check& cor = check("girth5_isolated_point", "Corollary (gi = 5)");
    if (!saw_five) {
      cor.skip("no pair with gi = 5");
    } else {
      bool isolated = false;
      for (int i = 0; i < Y_.size(); ++i) isolated = isolated || Y_.is_isolated(i);
      const bool b_nonempty = !bourbaki(R_).empty();
      cor.record(Prediction::truth(true), "isolated=" + flag_string(isolated) +
                                              " bourbaki_nonempty=" + flag_string(b_nonempty),
                 isolated && b_nonempty, five_witness);
    }
  }

  void domination_suite() {
    const std::initializer_list<std::pair<const char*, const char*>> ids = {
        {"domination.total_ag", "Theorem (dt_t = |B(R)|)"},
        {"domination.ag", "Theorem (dt_t = |B(R)|)"},
        {"domination.bound_B", "Theorem (|B(R)| <= dt_t)"},
        {"domination.bound_B_dt", "Theorem (|B(R)| <= dt_t)"},
        {"domination.gamma_le_ag", "Proposition (dt_t Γ <= dt_t 𝔸𝔾)"},
        {"finiteness", "Corollary (finiteness)"}};
    if (!gamma_) {
      no_graph(ids);
      return;
    }
    if (R_.k() > default_domination_k_cap()) {
      for (const auto& [id, src] : ids)
        check(id, src).skip("k above the domination search cap");
      return;
    }
    const DominationResult dt = domination_number(*ag_, opts_.domination);
    const DominationResult dtt = total_domination_number(*ag_, opts_.domination);
    const DominationResult dtt_g = total_domination_number(*gamma_, opts_.domination);
    const auto B = static_cast<std::uint32_t>(bourbaki(R_).size());
    auto witness = [&](const Graph& G, const DominationResult& d) {
      return list_witness(G, expand_witness(d.witness));
    };
    auto valid = [&](const Graph& G, const DominationResult& d, bool total) {
      return d.certified && dominates(G, d.witness, total);
    };
    auto len = [](const DominationResult& d) { return Length{static_cast<std::uint32_t>(d.size)}; };

    const Prediction p_total = Prediction::value(B, "a");
    check("domination.total_ag", "Theorem (dt_t = |B(R)|)")
        .record(p_total, std::to_string(dtt.size), valid(*ag_, dtt, true) && p_total.admits(len(dtt)),
                witness(*ag_, dtt));
    Check& dag = check("domination.ag", "Theorem (dt_t = |B(R)|)");
    const Prediction p_dom = R_.k() > 2 ? Prediction::value(B, "b")
                                       : Prediction::not_applicable("|Min(R)| = 2");
    dag.record(p_dom, std::to_string(dt.size), valid(*ag_, dt, false) && p_dom.admits(len(dt)),
               witness(*ag_, dt));
    const Prediction p_lb = Prediction::at_least(B, "a");
    check("domination.bound_B", "Theorem (|B(R)| <= dt_t)")
        .record(p_lb, std::to_string(dtt.size), valid(*ag_, dtt, true) && p_lb.admits(len(dtt)),
                witness(*ag_, dtt));
    const Prediction p_lb_dt = R_.k() > 2 ? Prediction::at_least(B, "b")
                                          : Prediction::not_applicable("|Min(R)| = 2");
    check("domination.bound_B_dt", "Theorem (|B(R)| <= dt_t)")
        .record(p_lb_dt, std::to_string(dt.size), valid(*ag_, dt, false) && p_lb_dt.admits(len(dt)),
                witness(*ag_, dt));
    const Prediction p_le = Prediction::at_most(static_cast<std::uint32_t>(dtt.size));
    check("domination.gamma_le_ag", "Proposition (dt_t Γ <= dt_t 𝔸𝔾)")
        .record(p_le, std::to_string(dtt_g.size),
                valid(*gamma_, dtt_g, true) && valid(*ag_, dtt, true) && p_le.admits(len(dtt_g)),
                witness(*gamma_, dtt_g));
    const bool finite = dt.certified && dtt.certified;
    check("finiteness", "Corollary (finiteness)")
        .record(Prediction::truth(true), flag_string(finite), finite, ring_witness());
  }

  std::vector<Support> all_supports() const {
    if (R_.k() <= 16) {
      std::vector<Support> out;
      for (std::uint32_t m = 0; m < (1u << R_.k()); ++m) out.push_back(Support(m));
      return out;
    }
    return support_types(R_);
  }

  void spectrum_suite() {
    const int k = R_.k();
    const Support full = R_.full();
    const auto supports = all_supports();

    Check& el = check("elements_prop", "Proposition (elements)");
    for (Support s : supports) {
      const Element x = R_.class_element(s, 0);
      const Witness w{R_.label(x) + " S=" + s.to_string(), "S=" + s.to_string()};
      const bool zero = R_.is_zero(x);
      const bool h_all = hull(R_, x) == Y_.whole();
      el.record(Prediction::truth(zero, "a"), flag_string(h_all), h_all == zero, w);
      const bool ann_nonzero = !annihilator(R_, x).support.empty();
      const bool not_dense = !Y_.is_dense(hull_complement(R_, x));
      el.record(Prediction::truth(ann_nonzero, "b"), flag_string(not_dense), not_dense == ann_nonzero, w);
      const Ideal I{s};
      const Witness wi = ideal_witness(s);
      const bool i_zero = s.empty();
      const bool hi_all = hull(R_, I) == Y_.whole();
      el.record(Prediction::truth(i_zero, "c"), flag_string(hi_all), hi_all == i_zero, wi);
      const bool i_ann = !annihilator(R_, I).support.empty();
      const bool i_not_dense = !Y_.is_dense(hull_complement(R_, I));
      el.record(Prediction::truth(i_ann, "d"), flag_string(i_not_dense), i_not_dense == i_ann, wi);
    }

    Check& bm = check("bourbaki_subset_min", "Bourbaki associated primes");
    const auto B = bourbaki(R_);
    const auto mins = min_primes(R_);
    for (const auto& b : B) {
      const bool in_min = std::any_of(mins.begin(), mins.end(),
                                      [&](const MinPrime& m) { return m.ideal == b.prime.ideal; });
      const bool witnessed = annihilator(R_, b.witness) == b.prime.ideal;
      bm.record(Prediction::truth(true), flag_string(in_min && witnessed), in_min && witnessed,
                {R_.ideal_label(b.prime.ideal) + " = Ann(" + R_.label(b.witness) + ")",
                 "S=" + b.prime.ideal.support.to_string()});
    }
    if (B.empty()) bm.skip("B(R) is empty");

    const auto fp = fixed_place_status(R_);
    check("fixed_place", "Fixed-place zero ideal")
        .record(Prediction::truth(true), to_string(fp.status) + " kernel=" + fp.kernel_of_bourbaki.support.to_string(),
                fp.status == FixedPlaceStatus::FixedPlace && fp.kernel_of_bourbaki.support.empty(),
                ring_witness());

    const char* heavy = "k above the exhaustive scan cap";
    Check& lemma = check("lemma_max_annihilating", "Lemma (maximal annihilating ideals)");
    Check& prop = check("prop_contained_maximal", "Proposition (maximal elements)");
    if (k < 2) {
      lemma.skip("R has no annihilating ideals");
      prop.skip("R has no annihilating ideals");
    } else if (k > opts_.exhaustive_k_cap) {
      lemma.skip(heavy);
      prop.skip(heavy);
    } else {
      std::set<Ideal> primes, maximal, bset;
      for (Support s : supports)
        if (!s.empty() && s != full && is_prime_ideal(R_, Ideal{s})) primes.insert(Ideal{s});
      for (const Ideal& I : maximal_annihilating(R_)) maximal.insert(I);
      for (const auto& b : B) bset.insert(b.prime.ideal);
      auto show = [&](const std::set<Ideal>& xs) {
        std::string out = "{";
        for (const Ideal& I : xs) out += (out.size() > 1 ? "," : "") + I.support.to_string();
        return out + "}";
      };
      lemma.record(Prediction::truth(true),
                   "prime=" + show(primes) + " maximal=" + show(maximal) + " bourbaki=" + show(bset),
                   primes == maximal && maximal == bset, ring_witness());

      bool all_contained = true;
      for (Support s : supports) {
        if (s.empty() || s == full) continue;
        const bool contained = std::any_of(maximal.begin(), maximal.end(),
                                           [&](const Ideal& M) { return s.subset_of(M.support); });
        all_contained = all_contained && contained;
        // Min(I): minimal primes over I, i.e. P_i with i outside S.
        bool meets_b = false;
        for (const Ideal& P : bset) meets_b = meets_b || s.subset_of(P.support);
        prop.record(Prediction::truth(meets_b, "a"), flag_string(contained), contained == meets_b,
                    ideal_witness(s));
      }
      const bool fixed = fp.status == FixedPlaceStatus::FixedPlace;
      prop.record(Prediction::truth(fixed, "b"), flag_string(all_contained), all_contained == fixed,
                  ring_witness());
      const bool anti = fp.status == FixedPlaceStatus::AntiFixedPlace;
      prop.record(Prediction::truth(anti, "c"), flag_string(maximal.empty()), maximal.empty() == anti,
                  ring_witness());
    }

    Check& sz = check("sz_closure", "Strong z°-closure");
    for (Support s : supports) {
      const Ideal I{s};
      const Ideal c = sz_closure(R_, I);
      const bool ok = c == I && sz_closure(R_, c) == c && I.support.subset_of(c.support) &&
                      is_sz_ideal(R_, I);
      sz.record(Prediction::truth(true), "S=" + c.support.to_string(), ok, ideal_witness(s));
    }
    if (k <= opts_.exhaustive_k_cap / 2 + 2) {
      for (Support s : supports)
        for (Support t : supports)
          if (s.subset_of(t)) {
            const bool mono = sz_closure(R_, Ideal{s}).support.subset_of(sz_closure(R_, Ideal{t}).support);
            sz.record(Prediction::truth(true, "monotone"), flag_string(mono), mono,
                      {ideal_witness(s).text + " | " + ideal_witness(t).text,
                       ideal_witness(s).canonical + " | " + ideal_witness(t).canonical});
          }
    }

    Check& sza = check("sz_adjacency", "Lemma (sz° adjacency)");
    Check& ret = check("retract", "Proposition (retract)");
    if (!ag_) {
      sza.skip("R has no annihilating ideals");
      ret.skip("R has no annihilating ideals");
      return;
    }
    const Graph& A = *ag_;
    auto ideal_adjacent = [&](Support a, Support b) {
      return a != b && ideal_algebra(R_, Ideal{a}, Ideal{b}).product.support.empty();
    };
    for (const auto& [u, v] : pairs(A)) {
      const Support a = A.cls(u.cls).support, b = A.cls(v.cls).support;
      const bool before = ideal_adjacent(a, b);
      const bool after =
          ideal_adjacent(sz_closure(R_, Ideal{a}).support, sz_closure(R_, Ideal{b}).support);
      sza.record(Prediction::truth(before), flag_string(after), before == after, pair_witness(A, u, v));
    }

    bool hom = true, fixes = true, image_ok = true;
    std::optional<Witness> bad;
    for (const auto& [u, v] : pairs(A)) {
      const Support a = A.cls(u.cls).support, b = A.cls(v.cls).support;
      if (!ideal_adjacent(a, b)) continue;
      if (!ideal_adjacent(sz_closure(R_, Ideal{a}).support, sz_closure(R_, Ideal{b}).support)) {
        hom = false;
        if (!bad) bad = pair_witness(A, u, v);
      }
    }
    for (VertexRef v : vertices(A)) {
      const Ideal I{A.cls(v.cls).support};
      const Ideal img = sz_closure(R_, I);
      if (sz_closure(R_, img) != img) fixes = false;
      const bool in_image = img == I;
      if (in_image != is_sz_ideal(R_, I)) image_ok = false;
      if ((!fixes || !image_ok) && !bad) bad = vertex_witness(A, v);
    }
    ret.record(Prediction::truth(true),
               "homomorphism=" + flag_string(hom) + " fixes_image=" + flag_string(fixes) +
                   " image_is_sz=" + flag_string(image_ok),
               hom && fixes && image_ok, bad ? *bad : ring_witness());
  }

  const Ring& R_;
  const VerifyOptions& opts_;
  MinSpectrum Y_;
  Sampler sampler_;
  std::optional<Graph> gamma_, ag_;
  bool two_zd_ = false;
  std::deque<Check> checks_;
  std::map<std::uint32_t, std::vector<std::int32_t>> gamma_dist_, ag_dist_;
  std::optional<std::vector<Pair>> gamma_pairs_, ag_pairs_, gamma_girth_pairs_, ag_girth_pairs_;
  std::optional<std::vector<VertexRef>> gamma_vertices_, ag_vertices_;
};

}  // namespace

VerificationReport run_verification(const Ring& R, const VerifyOptions& opts) {
  return Engine(R, opts).run();
}

nlohmann::ordered_json report_json(const VerificationReport& rep, bool canonical) {
  nlohmann::ordered_json doc;
  if (!canonical) doc["ring"] = rep.ring;
  doc["suite"] = rep.suite;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["source"] = c.source;
    j["prediction"] = c.prediction;
    j["oracle"] = c.oracle;
    j["verdict"] = to_string(c.verdict);
    j["witness"] = canonical ? c.canonical_witness : c.witness;
    j["instances"] = {{"confirmed", c.confirmed},
                      {"violated", c.violated},
                      {"not_applicable", c.not_applicable}};
    j["registered"] = c.registered;
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"checks", rep.checks.size()},
                    {"confirmed", rep.count(Verdict::Confirmed)},
                    {"violated", rep.count(Verdict::Violated)},
                    {"registered_violations", rep.registered_violations()},
                    {"unregistered_violations", rep.unregistered_violations()},
                    {"not_applicable", rep.count(Verdict::NotApplicable)},
                    {"sampled", rep.sampled}};
  doc["version"] = ZDG_VERSION;
  doc["seed"] = rep.seed;
  return doc;
}

}  // namespace zdg
