#pragma once

#include <complex>
#include <cstdint>

namespace coinfock {

/// xoshiro256** with splitmix64 seeding. The report generator depends on this
/// exact algorithm so that identical seeds give byte-identical reports.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed)
    {
        std::uint64_t x = seed;
        for (auto& w : s_) {
            // splitmix64 step
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next()
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// uniform double in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// uniform double in [-1, 1)
    double uniform_sym() { return 2.0 * uniform() - 1.0; }

    std::complex<double> complex_sym() { return {uniform_sym(), uniform_sym()}; }

    /// uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::uint64_t s_[4];
};

}  // namespace coinfock
