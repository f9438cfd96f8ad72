#include "zdg/support.hpp"

#include "zdg/error.hpp"

namespace zdg {

std::vector<int> Support::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string Support::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  s += '}';
  return s;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::FactorNotField: return "FactorNotField";
    case ErrorKind::TooManyFactors: return "TooManyFactors";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::NoAnnihilatingIdeals: return "NoAnnihilatingIdeals";
  }
  return "Unknown";
}

}  // namespace zdg
