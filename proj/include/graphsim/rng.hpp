#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace graphsim {

// Deterministic generator with hand-rolled distributions, so identical seeds
// give identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next();

  // Uniform integer in [lo, hi] inclusive.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  // Uniform double in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

  template <typename T>
  const T &pick(const std::vector<T> &items) {
    return items[uniform(0, items.size() - 1)];
  }

  template <typename T>
  void shuffle(std::vector<T> &items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform(0, i - 1)]);
    }
  }

  // Stable seed derivation (splitmix-style avalanche over the parts).
  static std::uint64_t mix(std::initializer_list<std::uint64_t> parts);
  static std::uint64_t hash_string(const std::string &text);

 private:
  std::uint64_t state_;
};

}  // namespace graphsim
