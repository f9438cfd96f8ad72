#include "zdg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "zdg/domination.hpp"
#include "zdg/error.hpp"
#include "zdg/export.hpp"
#include "zdg/graph.hpp"
#include "zdg/ring.hpp"
#include "zdg/spectrum.hpp"
#include "zdg/table.hpp"
#include "zdg/verification.hpp"

namespace fs = std::filesystem;

namespace zdg {

namespace {

struct RingFlags {
  std::uint64_t zn = 0;
  std::vector<std::uint32_t> fields;
  std::string table;

  void attach(CLI::App* app) {
    app->add_option("--zn", zn, "Z_n for squarefree n");
    app->add_option("--fields", fields, "F_p1 x ... x F_pk, comma separated primes")->delimiter(',');
    app->add_option("--table", table, "table ring JSON file");
  }

  Ring build() const {
    const int sources = (zn != 0) + !fields.empty() + !table.empty();
    if (sources != 1)
      throw Error(ErrorKind::InvalidArgument, "give exactly one of --zn, --fields, --table");
    if (zn) return build_ring(SquarefreeModulus{zn});
    if (!fields.empty()) return build_ring(PrimeFactors{fields});
    return decompose_table_ring(table::load_file(table));
  }
};

GraphKind parse_kind(const std::string& s) {
  if (s == "gamma") return GraphKind::Gamma;
  if (s == "ag") return GraphKind::AnnihilatingIdeal;
  throw Error(ErrorKind::InvalidArgument, "unknown graph '" + s + "'");
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t edge_count(const Graph& G) {
  std::uint64_t e = 0;
  for (std::uint32_t c = 0; c < G.class_count(); ++c)
    G.for_each_neighbor_class(c, [&](std::uint32_t t) {
      if (c < t) e = saturating_add(e, sat_mul(G.cls(c).weight, G.cls(t).weight));
    });
  return e;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    f << text;
  }
  fs::rename(tmp, path);
}

int cmd_inspect(const RingFlags& flags, std::ostream& out) {
  const Ring R = flags.build();
  out << "ring: " << R.describe() << "\n";
  out << "k: " << R.k() << "\n";
  out << "factors:";
  for (auto q : R.factors()) out << " " << q;
  out << "\n";
  out << "order: " << (R.order() ? std::to_string(*R.order()) : std::string("overflow")) << "\n";
  out << "Min(R):";
  for (const auto& p : min_primes(R)) out << " " << R.ideal_label(p.ideal);
  out << "\n";
  out << "B(R):";
  for (const auto& b : bourbaki(R))
    out << " " << R.ideal_label(b.prime.ideal) << "=Ann(" << R.label(b.witness) << ")";
  out << "\n";
  out << "fixed_place: " << to_string(fixed_place_status(R).status) << "\n";
  const std::uint64_t annihilating = R.k() >= 2 ? (std::uint64_t{1} << R.k()) - 2 : 0;
  out << "annihilating_ideals: " << annihilating << "\n";
  if (R.k() < 2) {
    out << "note: R is a field; both graphs are empty\n";
    return kExitOk;
  }
  for (GraphKind kind : {GraphKind::Gamma, GraphKind::AnnihilatingIdeal}) {
    const Graph G = build_graph(kind, R);
    out << to_string(kind) << ": vertices " << G.vertex_count() << ", classes " << G.class_count()
        << ", edges " << edge_count(G) << "\n";
  }
  if (R.k() == 2) out << "note: AG(R) is K2\n";
  return kExitOk;
}

int cmd_export(const RingFlags& flags, const std::string& graph, const std::string& format,
               bool compressed, const std::string& out_path, std::ostream& out) {
  const Ring R = flags.build();
  ExportOptions opts;
  opts.kind = parse_kind(graph);
  if (format == "dot") {
    opts.format = ExportFormat::Dot;
  } else if (format == "json") {
    opts.format = ExportFormat::Json;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + format + "'");
  }
  opts.compressed = compressed;
  const std::string text = export_graph(R, opts);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_verify(const RingFlags& flags, const std::string& suite, std::uint64_t seed,
               bool canonical, const std::string& out_path, std::ostream& out) {
  const Ring R = flags.build();
  VerifyOptions opts;
  opts.suite = parse_suite(suite);
  opts.seed = seed;
  const VerificationReport rep = run_verification(R, opts);
  const std::string text = report_json(rep, canonical).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    out << R.describe() << ": " << rep.count(Verdict::Confirmed) << " confirmed, "
        << rep.count(Verdict::Violated) << " violated (" << rep.registered_violations()
        << " registered), " << rep.count(Verdict::NotApplicable) << " not applicable\n";
  }
  return rep.unregistered_violations() ? kExitViolation : kExitOk;
}

int cmd_dominate(const RingFlags& flags, const std::string& graph, bool total, std::ostream& out) {
  const Ring R = flags.build();
  const Graph G = build_graph(parse_kind(graph), R);
  const DominationResult d = domination(G, total);
  out << "graph: " << graph << "\n";
  out << (total ? "total_domination_number: " : "domination_number: ") << d.size << "\n";
  out << "witness:";
  for (const auto& ch : d.witness) {
    out << " " << vertex_label(G, R, {ch.cls, 0});
    if (G.cls(ch.cls).weight > 1) out << " x" << ch.copies;
    out << ";";
  }
  out << "\n";
  out << "certified: " << (d.certified ? "true" : "false") << "\n";
  out << "nodes: " << d.nodes << "\n";
  out << "lower_bound: " << d.lower_bound << "\n";
  return d.certified ? kExitOk : kExitResource;
}

struct CorpusEntry {
  std::string name;
  RingFlags flags;
};

bool squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return n >= 2;
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::vector<CorpusEntry> out;
  auto table_entry = [](const fs::path& p) {
    CorpusEntry e;
    e.name = "table_" + p.stem().string();
    e.flags.table = p.string();
    return e;
  };
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& f : fs::directory_iterator(path))
      if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(table_entry(f));
    return out;
  }
  if (!fs::exists(path)) throw Error(ErrorKind::InvalidArgument, "no corpus at " + path);
  if (fs::path(path).extension() == ".json") return {table_entry(path)};
  // One ring per line: "zn N", "fields p,q,..." or "table FILE".
  std::ifstream in(path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind, arg;
    if (!(ls >> kind) || kind[0] == '#') continue;
    if (!(ls >> arg))
      throw Error(ErrorKind::InvalidArgument, path + ":" + std::to_string(lineno) + ": missing argument");
    CorpusEntry e;
    if (kind == "zn") {
      e.flags.zn = std::stoull(arg);
      e.name = "Z_" + arg;
    } else if (kind == "fields") {
      std::string q;
      std::istringstream qs(arg);
      while (std::getline(qs, q, ',')) e.flags.fields.push_back(static_cast<std::uint32_t>(std::stoul(q)));
      e.name = "F_" + arg;
      std::replace(e.name.begin(), e.name.end(), ',', '_');
    } else if (kind == "table") {
      fs::path p = arg;
      if (p.is_relative()) p = fs::path(path).parent_path() / p;
      e = table_entry(p);
    } else {
      throw Error(ErrorKind::InvalidArgument,
                  path + ":" + std::to_string(lineno) + ": unknown ring kind '" + kind + "'");
    }
    out.push_back(e);
  }
  return out;
}

int cmd_batch(std::uint64_t below, const std::string& corpus, const std::string& out_dir,
              const std::string& suite, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if ((below != 0) == !corpus.empty())
    throw Error(ErrorKind::InvalidArgument, "give exactly one of --squarefree-below, --corpus");
  std::vector<CorpusEntry> entries;
  if (below) {
    for (std::uint64_t n = 2; n < below; ++n)
      if (squarefree(n)) {
        CorpusEntry e;
        e.name = "Z_" + std::to_string(n);
        e.flags.zn = n;
        entries.push_back(e);
      }
  } else {
    entries = read_corpus(corpus);
  }

  VerifyOptions opts;
  opts.suite = parse_suite(suite);
  opts.seed = seed;

  struct Tally {
    std::uint64_t confirmed = 0, violated = 0, registered = 0, not_applicable = 0;
  };
  std::map<std::string, Tally> per_check;
  nlohmann::ordered_json rings = nlohmann::ordered_json::array();
  nlohmann::ordered_json unregistered = nlohmann::ordered_json::array();
  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  bool resource = false;

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CorpusEntry& e = entries[i];
    try {
      const Ring R = e.flags.build();
      const VerificationReport rep = run_verification(R, opts);
      for (const auto& c : rep.checks) {
        Tally& t = per_check[c.id];
        if (c.verdict == Verdict::Confirmed) ++t.confirmed;
        if (c.verdict == Verdict::NotApplicable) ++t.not_applicable;
        if (c.verdict == Verdict::Violated) {
          ++t.violated;
          if (c.registered) {
            ++t.registered;
          } else {
            unregistered.push_back({{"ring", rep.ring}, {"check", c.id}, {"witness", c.witness}});
          }
        }
      }
      std::string file;
      if (!out_dir.empty()) {
        char prefix[16];
        std::snprintf(prefix, sizeof prefix, "%05zu_", i);
        std::string slug = e.name;
        std::replace(slug.begin(), slug.end(), ' ', '_');
        file = prefix + slug + ".json";
        write_file(fs::path(out_dir) / file, report_json(rep).dump(2) + "\n");
      }
      nlohmann::ordered_json r;
      r["ring"] = rep.ring;
      if (!file.empty()) r["report"] = file;
      r["k"] = R.k();
      r["confirmed"] = rep.count(Verdict::Confirmed);
      r["violated"] = rep.count(Verdict::Violated);
      r["registered_violations"] = rep.registered_violations();
      r["not_applicable"] = rep.count(Verdict::NotApplicable);
      rings.push_back(std::move(r));
    } catch (const Error& ex) {
      resource = resource || ex.is_resource_limit();
      errors.push_back({{"ring", e.name}, {"error", ex.what()}});
      err << e.name << ": " << ex.what() << "\n";
    }
  }

  nlohmann::ordered_json summary;
  summary["version"] = ZDG_VERSION;
  summary["suite"] = suite;
  summary["seed"] = seed;
  summary["rings"] = entries.size();
  summary["unregistered_violations"] = unregistered.size();
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& [id, t] : per_check)
    checks[id] = {{"confirmed", t.confirmed},
                  {"violated", t.violated},
                  {"registered_violations", t.registered},
                  {"not_applicable", t.not_applicable}};
  summary["checks"] = std::move(checks);
  summary["unregistered"] = std::move(unregistered);
  summary["errors"] = std::move(errors);
  summary["results"] = std::move(rings);
  const std::string text = summary.dump(2) + "\n";
  if (out_dir.empty()) {
    out << text;
  } else {
    write_file(fs::path(out_dir) / "summary.json", text);
    out << entries.size() << " rings, " << summary["unregistered_violations"].get<std::size_t>()
        << " unregistered violations, " << summary["errors"].size() << " errors\n";
  }
  if (summary["unregistered_violations"].get<std::size_t>() > 0) return kExitViolation;
  if (resource) return kExitResource;
  if (!summary["errors"].empty()) return kExitInput;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-divisor and annihilating-ideal graphs of finite reduced rings", "zdg"};
  app.set_version_flag("--version", ZDG_VERSION);
  app.require_subcommand(1);

  RingFlags inspect_flags, export_flags, verify_flags, dominate_flags;

  auto* inspect = app.add_subcommand("inspect", "print the spectrum and graph sizes");
  inspect_flags.attach(inspect);

  auto* exp = app.add_subcommand("export", "write a graph as DOT or JSON");
  export_flags.attach(exp);
  std::string export_graph_kind = "gamma", format = "dot", export_out;
  bool compressed = false;
  exp->add_option("--graph", export_graph_kind, "gamma | ag");
  exp->add_option("--format", format, "dot | json");
  exp->add_flag("--compressed", compressed, "one node per support class");
  exp->add_option("--out", export_out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check every prediction against the graph");
  verify_flags.attach(verify);
  std::string suite = "all", verify_out;
  std::uint64_t seed = 0;
  bool canonical = false;
  verify->add_option("--suite", suite, "all | distance | radius | girth | domination | spectrum");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--out", verify_out, "report file (default stdout)");
  verify->add_flag("--canonical", canonical, "omit the ring and element labels");

  auto* dominate = app.add_subcommand("dominate", "exact (total) domination number");
  dominate_flags.attach(dominate);
  std::string dominate_graph = "ag";
  bool total = false;
  dominate->add_option("--graph", dominate_graph, "ag | gamma");
  dominate->add_flag("--total", total, "total domination");

  auto* batch = app.add_subcommand("batch", "verify a corpus of rings");
  std::uint64_t below = 0, batch_seed = 0;
  std::string corpus, batch_out, batch_suite = "all";
  batch->add_option("--squarefree-below", below, "every squarefree n in [2, N)");
  batch->add_option("--corpus", corpus, "table JSON file, directory of them, or ring list");
  batch->add_option("--out", batch_out, "directory for per-ring reports and summary.json");
  batch->add_option("--suite", batch_suite, "suite to run");
  batch->add_option("--seed", batch_seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*inspect) return cmd_inspect(inspect_flags, out);
    if (*exp) return cmd_export(export_flags, export_graph_kind, format, compressed, export_out, out);
    if (*verify) return cmd_verify(verify_flags, suite, seed, canonical, verify_out, out);
    if (*dominate) return cmd_dominate(dominate_flags, dominate_graph, total, out);
    if (*batch) return cmd_batch(below, corpus, batch_out, batch_suite, batch_seed, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_resource_limit() ? kExitResource : kExitInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace zdg
