#include "graphsim/hash.hpp"

#include <openssl/evp.h>

namespace graphsim {

namespace {

void append_properties(std::string &out, const PropertyMap &properties) {
  for (const auto &[key, value] : properties) {
    out += '|';
    out += key;
    out += '=';
    if (value.is_text()) {
      out += 's';
      out += value.text();
    } else if (value.is_bool()) {
      out += value.boolean() ? "b1" : "b0";
    } else {
      out += 'n';
      out += canonical_number(value.number());
    }
  }
}

}  // namespace

std::string canonical_serialization(const PropertyGraph &g) {
  // Length-prefix free but unambiguous: record separators never occur inside
  // canonical numbers, and names/labels are emitted with their sizes.
  std::string out = "graph/v1\n";
  for (const auto &[name, node] : g.nodes()) {
    (void)name;
    out += "N ";
    out += std::to_string(node.name.size());
    out += ':';
    out += node.name;
    out += ' ';
    out += std::to_string(node.label.size());
    out += ':';
    out += node.label;
    append_properties(out, node.properties);
    out += '\n';
  }
  for (const auto &[key, edge] : g.edges()) {
    out += "E ";
    out += std::to_string(key.source.size());
    out += ':';
    out += key.source;
    out += ' ';
    out += std::to_string(key.target.size());
    out += ':';
    out += key.target;
    out += ' ';
    out += std::to_string(key.rel_type.size());
    out += ':';
    out += key.rel_type;
    out += ' ';
    out += edge.weight ? canonical_number(*edge.weight) : "_";
    append_properties(out, edge.properties);
    out += '\n';
  }
  return out;
}

std::string sha256_hex(const std::string &data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char *hex = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

StateHash state_hash(const PropertyGraph &g) {
  return StateHash{sha256_hex(canonical_serialization(g))};
}

}  // namespace graphsim
