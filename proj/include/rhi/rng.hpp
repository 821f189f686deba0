// Seeded RNG utilities. All stochastic pieces of the pipeline (observation
// noise, stimulation delays, weight init, VAE sampling) draw from explicitly
// seeded streams so that runs are reproducible.
#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace rhi {

// splitmix64: cheap, well-mixed stream derivation from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a over a string, for deriving child seeds from labels like
// "left/sync/3" without any cross-trial correlation.
inline std::uint64_t hash_label(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, const std::string& label) {
    return splitmix64(master ^ splitmix64(hash_label(label)));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(splitmix64(seed)) {}

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(engine_);
    }

    double gaussian(double mean = 0.0, double stddev = 1.0) {
        // Explicit Box-Muller: libstdc++'s normal_distribution caches state,
        // which makes draw counts harder to reason about across streams.
        std::uniform_real_distribution<double> d(0.0, 1.0);
        double u1 = 0.0;
        do {
            u1 = d(engine_);
        } while (u1 <= 1e-300);
        double u2 = d(engine_);
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586 * u2);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Fisher-Yates index shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::uniform_int_distribution<std::size_t> d(0, i - 1);
            std::swap(v[i - 1], v[d(engine_)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rhi
