#include "graphsim/rng.hpp"

namespace graphsim {

namespace {

std::uint64_t splitmix(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next() { return splitmix(state_); }

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t span = hi - lo + 1;
  if (span == 0) return next();  // full 64-bit range
  // Modulo bias is negligible for the small spans used here and keeps the
  // stream identical everywhere.
  return lo + next() % span;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::mix(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t state = 0x8f1bbcdcbfa53e0bull;
  for (std::uint64_t part : parts) {
    state ^= part + 0x9e3779b97f4a7c15ull + (state << 6) + (state >> 2);
    splitmix(state);
  }
  return splitmix(state);
}

std::uint64_t Rng::hash_string(const std::string &text) {
  // FNV-1a 64
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace graphsim
