#include "radialnet/error.hpp"

namespace radialnet {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kEmptyInput: return "empty input";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kRange: return "range error";
    case ErrorCode::kDisconnected: return "disconnected graph";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kNotFound: return "not found";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kFit: return "fit error";
  }
  return "unknown error";
}

ParseError::ParseError(ErrorCode code, std::size_t line, const std::string& content,
                       const std::string& what)
    : Error(code, "line " + std::to_string(line) + ": " + what + " in \"" + content + "\""),
      line_(line),
      content_(content) {}

}  // namespace radialnet
