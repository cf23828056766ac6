#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace graphsim {

// Structured failure category. Every error that crosses the wire or the
// operation log carries one of these codes plus a human-readable message.
enum class ErrorCode {
  kInvalidArgument,
  kNotFound,
  kConflict,
  kSessionNotFound,
  kUnknownOperation,
  kValidation,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(message), code_(code), message_(std::move(message)) {}

  Error(ErrorCode code, std::string message, nlohmann::json details)
      : std::runtime_error(message),
        code_(code),
        message_(std::move(message)),
        details_(std::move(details)) {}

  ErrorCode code() const { return code_; }
  const std::string &message() const { return message_; }
  const nlohmann::json &details() const { return details_; }

  // Error-shaped structured result: {"status":"error","error":{...}}.
  nlohmann::json to_result() const;

 private:
  ErrorCode code_;
  std::string message_;
  nlohmann::json details_;
};

}  // namespace graphsim
