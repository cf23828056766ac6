#pragma once

#include <string>
#include <vector>

#include "graphsim/jsonutil.hpp"

namespace graphsim {

// Immutable record of one executed call (successful or failed). seq values
// are gap-free from 1 within a session.
struct OpLogEntry {
  std::uint64_t seq = 0;
  std::string timestamp;  // ISO-8601 UTC; excluded from replay comparison
  std::string name;       // canonical operation name
  json args;
  json result;

  // One line, fields in the order seq, timestamp, name, args, result;
  // canonical key ordering inside args/result. Byte-stable for equal entries.
  std::string to_line() const;
  static OpLogEntry from_line(const std::string &line);
};

std::string export_log(const std::vector<OpLogEntry> &entries);
std::vector<OpLogEntry> import_log(const std::string &text);

}  // namespace graphsim
