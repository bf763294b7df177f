#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace maocs {

/// splitmix64 finalizer, used to derive child seeds from a parent seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key);

/// Deterministic random stream backing every stochastic operation.
///
/// The engine is std::mt19937_64 seeded with a single 64-bit value, which the
/// standard specifies exactly, so identical seeds give identical raw draws on
/// every platform.  Uniform doubles are built from the top 53 bits of each
/// draw instead of std::uniform_real_distribution (whose output is
/// implementation-defined), keeping whole runs bit-reproducible.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + uniform() * (hi - lo);
    }

    /// Uniform index in [0, n). Multiply-shift keeps the mapping deterministic.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
        const auto x = engine_();
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(n)) >> 64);
    }

    /// Derives an independent child stream. The child seed is a pure function
    /// of (parent seed, key); the parent's draw position is irrelevant, so
    /// replications keyed by index can run in any order.
    RngStream split(std::uint64_t key) const {
        return RngStream(mix_seed(seed_, key));
    }

    /// Fisher-Yates shuffle driven by this stream.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[uniform_index(i)]);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace maocs
