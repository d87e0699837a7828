#pragma once

#include <cstdint>
#include <string>

#include "orbitlift/rational.hpp"

namespace orbitlift {

/// Splittable deterministic PRNG (splitmix64 core). The same (seed, label)
/// always yields the same stream on every platform, which is what makes
/// verification reports byte-reproducible. std:: distributions are avoided
/// on purpose: their output is implementation-defined.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent child stream; mixing in a label keeps streams for
    /// different checks decoupled from each other and from ordering.
    Prng split(const std::string& label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ state_;
        for (unsigned char c : label) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return Prng(h ^ 0x6a09e667f3bcc909ULL);
    }

    Prng split(std::uint64_t salt) const {
        Prng child(state_ ^ (salt * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL));
        child.next_u64();
        return child;
    }

    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps this exactly uniform
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return v % n;
    }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next_u64() & 1) != 0; }

    /// Numerator in [-bound, bound], denominator in [1, bound].
    Rational rational(long bound) {
        long n = range(-bound, bound);
        long d = range(1, bound);
        return Rational(n, d);
    }

    Rational nonzero_rational(long bound) {
        Rational r = rational(bound);
        while (r.is_zero()) r = rational(bound);
        return r;
    }

private:
    std::uint64_t state_;
};

} // namespace orbitlift
