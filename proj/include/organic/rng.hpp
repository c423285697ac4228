#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace organic {

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

/// Mix a parent seed with a stage label and an index into an independent
/// child seed. Stages that draw more numbers never shift another stage.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view stage,
                                    std::uint64_t index = 0) noexcept {
    std::uint64_t h = detail::splitmix64(parent ^ detail::fnv1a(stage));
    return detail::splitmix64(h + detail::splitmix64(index));
}

/// Seeded pseudo-random stream. Every random decision in the pipeline goes
/// through one of these; sequences are reproducible per seed on a given
/// standard library.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    static RngStream derive(std::uint64_t parent, std::string_view stage,
                            std::uint64_t index = 0) {
        return RngStream(derive_seed(parent, stage, index));
    }

    std::uint64_t seed() const noexcept { return seed_; }

    // Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    // Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return std::bernoulli_distribution(p)(engine_);
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        std::shuffle(items.begin(), items.end(), engine_);
    }

    template <typename T>
    const T& pick(std::span<const T> items) {
        return items[index(items.size())];
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace organic
