#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radialnet {

enum class ErrorCode {
  kInvalidArgument = 1,
  kEmptyInput,
  kParse,
  kRange,
  kDisconnected,
  kDomain,
  kNotFound,
  kIo,
  kFit,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the C
// layer can map exceptions to status values without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& content,
             const std::string& what);

  std::size_t line() const noexcept { return line_; }
  const std::string& content() const noexcept { return content_; }

 private:
  std::size_t line_;
  std::string content_;
};

}  // namespace radialnet
