#ifndef ARBOR_RANDOM_H_
#define ARBOR_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace arbor {

// Deterministic generator for a (seed, stream...) tuple, so independent jobs
// get independent streams regardless of evaluation order.
inline std::mt19937_64 MakeRng(std::uint64_t seed,
                               std::initializer_list<std::uint64_t> stream = {}) {
  std::vector<std::uint32_t> words = {static_cast<std::uint32_t>(seed),
                                      static_cast<std::uint32_t>(seed >> 32)};
  for (std::uint64_t s : stream) {
    words.push_back(static_cast<std::uint32_t>(s));
    words.push_back(static_cast<std::uint32_t>(s >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

// ceil(multiplier * log2 n), at least 1.
int LogTrials(int n, int multiplier);

}  // namespace arbor

#endif  // ARBOR_RANDOM_H_
