#include "zdg/registry.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "zdg/error.hpp"

namespace zdg {

namespace detail {
extern const char* const kEdgeCasesJson;
}

namespace {

bool compare(long long a, const std::string& op, long long b) {
  if (op == "==") return a == b;
  if (op == ">=") return a >= b;
  if (op == "<=") return a <= b;
  if (op == ">") return a > b;
  if (op == "<") return a < b;
  throw Error(ErrorKind::InvalidArgument, "unknown edge-case operator '" + op + "'");
}

bool atom_holds(const std::string& lhs, const std::string& op, long long rhs, const Ring& R) {
  const auto qs = R.factors();
  auto test = [&](std::uint32_t q) { return compare(q, op, rhs); };
  if (lhs == "min_count") return compare(R.k(), op, rhs);
  if (lhs == "some_q") return std::any_of(qs.begin(), qs.end(), test);
  if (lhs == "no_q") return std::none_of(qs.begin(), qs.end(), test);
  throw Error(ErrorKind::InvalidArgument, "unknown edge-case atom '" + lhs + " " + op + "'");
}

}  // namespace

std::vector<EdgeCase> parse_edge_cases(const std::string& json_text) {
  std::vector<EdgeCase> out;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& e : doc.at("edge_cases"))
      out.push_back({e.at("check").get<std::string>(), e.at("when").get<std::string>(),
                     e.at("source").get<std::string>(), e.at("note").get<std::string>()});
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("edge-case register: ") + ex.what());
  }
  return out;
}

const std::vector<EdgeCase>& edge_cases() {
  static const std::vector<EdgeCase> cases = parse_edge_cases(detail::kEdgeCasesJson);
  return cases;
}

bool ring_matches(const std::string& when, const Ring& R) {
  std::istringstream in(when);
  std::string lhs, op, joiner;
  long long rhs = 0;
  while (true) {
    if (!(in >> lhs >> op >> rhs))
      throw Error(ErrorKind::InvalidArgument, "malformed edge-case predicate '" + when + "'");
    if (!atom_holds(lhs, op, rhs, R)) return false;
    if (!(in >> joiner)) return true;
    if (joiner != "&&")
      throw Error(ErrorKind::InvalidArgument, "malformed edge-case predicate '" + when + "'");
  }
}

std::optional<EdgeCase> find_edge_case(const std::string& check, const Ring& R) {
  for (const auto& e : edge_cases())
    if (e.check == check && ring_matches(e.when, R)) return e;
  return std::nullopt;
}

}  // namespace zdg
