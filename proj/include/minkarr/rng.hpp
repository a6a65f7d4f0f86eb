#pragma once
// Counter-based deterministic RNG: the splitmix64 finalizer applied to an
// affine counter sequence (increment 0x9E3779B97F4A7C15). Substreams are
// derived from (seed, stream index) so independent workers can own disjoint
// streams while the merged result stays reproducible.

#include <cmath>
#include <cstdint>

namespace minkarr {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(seed) {}

  static CounterRng substream(std::uint64_t seed, std::uint64_t stream) {
    return CounterRng(detail::mix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1)) ^ stream);
  }

  std::uint64_t next_u64() { return detail::mix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  // uniform on [0,1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // Box-Muller; u1 kept away from zero so log() is finite
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.2831853071795864769 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace minkarr
