#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxcyc {

enum class ErrorCode {
  InvalidArgument,
  CapExceeded,
  NotSubgroup,
  NotNormal,
  NotProper,
  NoSuchNormal,
  ParseError,
  ArityError,
  NotPGroup,
  CyclicGroup,
  NotFrobenius,
  NotExponentP,
  HypothesisFailed,
  ClassificationFailed,
  UnknownSuite,
  CorpusError,
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the group-spec parser. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace maxcyc
