#include "maxcyc/errors.hpp"

#include <sstream>

namespace maxcyc {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::NoSuchNormal: return "NoSuchNormal";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::NotPGroup: return "NotPGroup";
    case ErrorCode::CyclicGroup: return "CyclicGroup";
    case ErrorCode::NotFrobenius: return "NotFrobenius";
    case ErrorCode::NotExponentP: return "NotExponentP";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::ClassificationFailed: return "ClassificationFailed";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::CorpusError: return "CorpusError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::string parse_message(std::size_t position,
                          const std::vector<std::string>& expected,
                          const std::string& found) {
  std::ostringstream os;
  os << "parse error at offset " << position << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
    os << expected[i];
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : Error(ErrorCode::ParseError, parse_message(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace maxcyc
