#pragma once

#include <cstdint>
#include <string_view>

namespace floorcheck {

// Deterministic seed splitting: every work unit derives its own stream from
// (root seed, theorem id, branch, lane), so results are independent of
// thread count and iteration order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::int64_t a = 0,
                                 std::int64_t b = 0) {
    std::uint64_t h = splitmix64(root ^ hash_str(tag));
    h = splitmix64(h ^ static_cast<std::uint64_t>(a));
    h = splitmix64(h ^ static_cast<std::uint64_t>(b) * 0x632be59bd9b4e019ULL);
    return h;
}

// xorshift-free small PRNG over splitmix64 (enough for sampling).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // uniform in [0,1)
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

} // namespace floorcheck
