#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace baire {

/// Deterministic 64-bit generator (splitmix64). The standard library engines
/// are reproducible but its distributions are not, so bounded draws are done
/// here by hand. Identical seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling over the largest multiple of bound
        const std::uint64_t limit = bound * ((~0ULL) / bound);
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % bound;
    }

    bool coin() { return (next_u64() & 1u) != 0; }

    /// Child stream keyed by a label, independent of draws made so far.
    Rng derive(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ state_;
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return Rng(h);
    }

    /// Child stream keyed by an index.
    Rng derive(std::uint64_t index) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        child.next_u64();
        return child;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace baire
