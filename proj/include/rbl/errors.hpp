#pragma once

#include <stdexcept>
#include <string>

namespace rbl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractViolation : Error { using Error::Error; };
struct UndefinedDensity : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };
struct NoBookError : Error { using Error::Error; };
struct ProvenanceError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace rbl
