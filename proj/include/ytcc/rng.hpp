#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace ytcc {

// SplitMix64 finalizer. Used to derive independent seeds for parallel
// streams (forest trees, folds) so that parallel and serial execution
// produce identical results.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic RNG with portable helpers. std::mt19937_64 has a fully
// specified output sequence, but the standard distributions do not, so
// sampling and shuffling are implemented here and must not be replaced
// with <random> distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Unbiased integer in [0, n) via rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        // k = 2^64 mod n; values above max - k would bias the modulus.
        const std::uint64_t k = (max % n + 1) % n;
        std::uint64_t r = engine_();
        while (k != 0 && r > max - k) r = engine_();
        return r % n;
    }

    /// Fisher–Yates shuffle, fixed iteration order.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct values from [0, n), in selection order.
    std::vector<std::size_t> sample_without_replacement(std::size_t k, std::size_t n) {
        assert(k <= n);
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ytcc
