#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "metaagents/sha256.hpp"

namespace metaagents {

// One master seed per run; every consumer derives its own child stream from a
// label, so adding a consumer never perturbs the draws of existing ones.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view label) {
  detail::Sha256 h;
  std::uint8_t le[8];
  for (int i = 0; i < 8; ++i) le[i] = static_cast<std::uint8_t>(master_seed >> (8 * i));
  h.update(le, sizeof(le));
  h.update(label.data(), label.size());
  const auto digest = h.finish();
  std::uint64_t out = 0;
  for (int i = 0; i < 8; ++i) out |= static_cast<std::uint64_t>(digest[i]) << (8 * i);
  return out;
}

inline std::mt19937_64 make_rng(std::uint64_t master_seed, std::string_view label) {
  return std::mt19937_64(derive_seed(master_seed, label));
}

// Unbiased draw in [0, n). std::uniform_int_distribution is not portable
// across standard libraries, and reproducibility is a harness requirement.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

// Inclusive range draw, used for the per-seeker interview counts.
inline int uniform_int_inclusive(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Fisher-Yates with the portable draw above; std::shuffle is also
// implementation-defined.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    using std::swap;
    swap(items[i - 1], items[uniform_index(rng, i)]);
  }
}

}  // namespace metaagents
