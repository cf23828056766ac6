#include "graphsim/error.hpp"

namespace graphsim {

const char *to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kNotFound:
      return "not-found";
    case ErrorCode::kConflict:
      return "conflict";
    case ErrorCode::kSessionNotFound:
      return "session-not-found";
    case ErrorCode::kUnknownOperation:
      return "unknown-operation";
    case ErrorCode::kValidation:
      return "validation";
  }
  return "unknown";
}

nlohmann::json Error::to_result() const {
  nlohmann::json err{{"code", to_string(code_)}, {"message", message_}};
  if (!details_.is_null()) err["details"] = details_;
  return nlohmann::json{{"status", "error"}, {"error", err}};
}

}  // namespace graphsim
