#pragma once

// Runs every prediction against the graph computations and aggregates the
// outcome per check.

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "zdg/domination.hpp"
#include "zdg/girth.hpp"
#include "zdg/ring.hpp"

namespace zdg {

enum class Verdict { Confirmed, Violated, NotApplicable };
std::string to_string(Verdict v);

enum class Suite { All, Distance, Radius, Girth, Domination, Spectrum };
std::string to_string(Suite s);
/// Throws InvalidArgument for unknown names.
Suite parse_suite(const std::string& name);

struct CheckRecord {
  std::string id;
  std::string source;
  std::string prediction;  ///< first violating instance, else first instance
  std::string oracle;
  Verdict verdict = Verdict::NotApplicable;
  std::string witness;            ///< vertices with element or ideal labels
  std::string canonical_witness;  ///< supports and copy indices only
  std::string reason;             ///< why nothing was applicable
  std::uint64_t confirmed = 0;
  std::uint64_t violated = 0;
  std::uint64_t not_applicable = 0;
  bool registered = false;  ///< violation matches the edge-case register
  std::string note;
};

struct VerifyOptions {
  Suite suite = Suite::All;
  std::uint64_t seed = 0;
  /// Class pairs are exhaustive up to this many, otherwise one pair per
  /// support-pair type plus extra_samples random pairs. When even the types
  /// outnumber the cap, cap random pairs replace them.
  std::uint64_t pair_cap = 20000;
  std::uint64_t girth_pair_cap = 2000;
  /// Lowers the girth pair cap to this divided by the expanded edge count.
  std::uint64_t girth_edge_budget = 400'000'000;
  /// Same policy for single classes.
  std::uint64_t vertex_cap = 4096;
  std::uint64_t extra_samples = 32;
  /// Checks that scan all pairs of ideals or element classes stop here.
  int exhaustive_k_cap = 12;
  GirthOptions girth;
  DominationOptions domination;
};

struct VerificationReport {
  std::string ring;
  std::string suite;
  std::uint64_t seed = 0;
  bool sampled = false;
  std::vector<CheckRecord> checks;  ///< sorted by id

  std::uint64_t count(Verdict v) const;
  std::uint64_t registered_violations() const;
  std::uint64_t unregistered_violations() const;
  const CheckRecord* find(const std::string& id) const;
};

VerificationReport run_verification(const Ring& R, const VerifyOptions& opts = {});

/// The report document. The canonical form leaves out the ring descriptor
/// and element labels so isomorphic inputs produce identical text.
nlohmann::ordered_json report_json(const VerificationReport& rep, bool canonical = false);

}  // namespace zdg
