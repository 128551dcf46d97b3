#ifndef MARSNAV_COMMON_HPP
#define MARSNAV_COMMON_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace marsnav {

// Grid cell. x1 is the column index and grows eastward, x2 is the row
// index and grows southward.
struct Cell {
  int x1 = 0;
  int x2 = 0;
  bool operator==(const Cell&) const = default;
};

// ---------------------------------------------------------------------------
// Seeding
//
// All randomness is drawn from std::mt19937_64 engines whose output sequence
// is fixed by the standard. Floats and bounded ints are derived with the
// explicit conversions below so results do not depend on the standard
// library's distribution implementations.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from (seed, tag) or (seed, tag, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag));
}
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  return splitmix64(derive_seed(seed, tag) ^ splitmix64(index + 0x51ed2701ULL));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection, bias-free.
inline std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = eng();
  } while (v >= limit);
  return v % n;
}

inline int uniform_int(std::mt19937_64& eng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  return lo + static_cast<int>(uniform_below(eng, static_cast<std::uint64_t>(hi - lo) + 1));
}

inline double uniform_real(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform_real01(eng);
}

template <typename T>
void shuffle_indices(std::vector<T>& v, std::mt19937_64& eng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = uniform_below(eng, i);
    std::swap(v[i - 1], v[j]);
  }
}

// Seed tags for the independent streams used across the project.
namespace seed_tag {
constexpr std::uint64_t terrain = 0x7452524e;    // per-map terrain synthesis
constexpr std::uint64_t goal = 0x474f414c;       // goal cell choice
constexpr std::uint64_t starts = 0x53545254;     // trajectory start choice
constexpr std::uint64_t model_init = 0x494e4954; // weight initialization
constexpr std::uint64_t shuffle = 0x53484646;    // per-epoch sample order
constexpr std::uint64_t gradcheck = 0x47434b52;  // coordinate sampling
}  // namespace seed_tag

// ---------------------------------------------------------------------------
// Worker pool
// ---------------------------------------------------------------------------

inline int default_workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Splits [0, n) into one contiguous chunk per worker and runs
// fn(worker, begin, end) on each. Chunk boundaries depend only on
// (workers, n), so the partition is reproducible.
inline void parallel_chunks(int workers, std::size_t n,
                            const std::function<void(int, std::size_t, std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    fn(0, 0, n);
    return;
  }
  const std::size_t w = static_cast<std::size_t>(workers);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    std::size_t begin = n * t / w;
    std::size_t end = n * (t + 1) / w;
    if (begin == end) continue;
    threads.emplace_back([&fn, t, begin, end] { fn(static_cast<int>(t), begin, end); });
  }
  for (auto& th : threads) th.join();
}

// FNV-1a over a byte string; used for content digests of parameter sets.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v);

}  // namespace marsnav

#endif
