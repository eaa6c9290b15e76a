#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace dfl {

// splitmix64 finalizer; full 64-bit avalanche
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream key from a master seed and up to three salts.
// Execution order must never influence which stream a consumer gets, so all
// per-node / per-round randomness is keyed through this.
inline std::uint64_t substream(std::uint64_t master, std::uint64_t salt,
                               std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = mix64(master ^ mix64(salt));
    h = mix64(h ^ mix64(a));
    h = mix64(h ^ mix64(b));
    return h;
}

// Stream salts used across the simulator. Values are arbitrary but frozen:
// changing them changes every seeded result.
namespace stream {
constexpr std::uint64_t kTopology = 0x746f706f;
constexpr std::uint64_t kAdversary = 0x61647673;
constexpr std::uint64_t kTrainData = 0x74726e64;
constexpr std::uint64_t kTestData = 0x74737464;
constexpr std::uint64_t kPartition = 0x70617274;
constexpr std::uint64_t kInitParams = 0x696e6974;
constexpr std::uint64_t kNodeRound = 0x6e6f6465;
constexpr std::uint64_t kSweepPoint = 0x73777065;
constexpr std::uint64_t kOracle = 0x6f72636c;
}  // namespace stream

// Seeded random stream. mt19937_64 raw output is pinned by the standard;
// the distributions below are implemented here (not via <random> adaptors,
// whose output is implementation-defined) so results are bitwise stable
// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0,1) with 53 random bits
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // unbiased uniform integer in [0, n), n > 0
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // Box-Muller; consumes two uniforms per draw
    double normal(double mean = 0.0, double stddev = 1.0) {
        double u1;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * M_PI * u2);
    }

    // Fisher-Yates
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace dfl
