#ifndef NSG_ERROR_HPP
#define NSG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nsg {

enum class ErrorKind {
  EmptyInput,
  NonCoprimeGenerators,
  InvalidArgument,
  Overflow,
  EmptyIndexSet,
  SingleGenerator,
  ResourceLimit,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonCoprimeGenerators: return "NonCoprimeGenerators";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::SingleGenerator: return "SingleGenerator";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : Error(ErrorKind::ResourceLimit, what) {}
};

}  // namespace nsg

#endif  // NSG_ERROR_HPP
