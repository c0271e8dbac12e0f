#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tokgraph {

enum class ErrorCode {
  kInvalidSize,
  kInvalidK,
  kIndex,
  kDomain,
  kParse,
  kResource,
  kStructural,
  kArity,
  kIo,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code selects the C API status
/// and the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// graph6 decoding failure; offset is the 0-based byte position in the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::kParse,
              what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tokgraph
