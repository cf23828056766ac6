#include "graphsim/oplog.hpp"

#include <sstream>

#include "graphsim/error.hpp"

namespace graphsim {

std::string OpLogEntry::to_line() const {
  ordered_json line;
  line["seq"] = seq;
  line["timestamp"] = timestamp;
  line["name"] = name;
  line["args"] = to_ordered(args);
  line["result"] = to_ordered(result);
  return line.dump();
}

OpLogEntry OpLogEntry::from_line(const std::string &line) {
  json doc = json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "malformed log line");
  }
  for (const char *field : {"seq", "timestamp", "name", "args", "result"}) {
    if (!doc.contains(field)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("log line is missing field '") + field + "'");
    }
  }
  OpLogEntry entry;
  entry.seq = doc["seq"].get<std::uint64_t>();
  entry.timestamp = doc["timestamp"].get<std::string>();
  entry.name = doc["name"].get<std::string>();
  entry.args = doc["args"];
  entry.result = doc["result"];
  return entry;
}

std::string export_log(const std::vector<OpLogEntry> &entries) {
  std::string out;
  for (const auto &entry : entries) {
    out += entry.to_line();
    out += '\n';
  }
  return out;
}

std::vector<OpLogEntry> import_log(const std::string &text) {
  std::vector<OpLogEntry> entries;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    entries.push_back(OpLogEntry::from_line(line));
  }
  return entries;
}

}  // namespace graphsim
