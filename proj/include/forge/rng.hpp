#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace forge {

// Seeded generator with platform-independent bounded draws. Child streams are
// derived by label or index so that adding a consumer never perturbs another.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    bool coin() { return (engine_() >> 63) != 0; }

    Rng child(std::uint64_t index) const { return Rng(derive(seed_, index)); }
    Rng child(std::string_view label) const { return Rng(derive(seed_, label)); }

    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        return splitmix(splitmix(seed) ^ splitmix(index + 0x632be59bd9b4e019ULL));
    }

    static std::uint64_t derive(std::uint64_t seed, std::string_view label) {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (unsigned char ch : label) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        return derive(seed, h);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace forge
