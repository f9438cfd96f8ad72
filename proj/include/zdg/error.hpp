#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zdg {

enum class ErrorKind {
  InvalidArgument,
  NotSquarefree,
  NotPrime,
  NotReduced,
  NotCommutative,
  NotUnital,
  MalformedTable,
  FactorNotField,
  TooManyFactors,
  ResourceCap,
  EmptyGraph,
  Disconnected,
  IsolatedVertex,
  NoAnnihilatingIdeals,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` identifies the
/// failure; the message carries the witness (offending prime, element index,
/// vertex pair, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Resource caps map to a distinct CLI exit code.
  bool is_resource_limit() const noexcept {
    return kind_ == ErrorKind::ResourceCap || kind_ == ErrorKind::TooManyFactors;
  }

 private:
  ErrorKind kind_;
};

}  // namespace zdg
