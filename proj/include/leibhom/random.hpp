#pragma once

#include <cstdint>

#include "leibhom/matrix.hpp"
#include "leibhom/tensor.hpp"

namespace leibhom {

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the output is mixed with
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
/// z ^ (z >> 31). Fixed constants make trial streams reproducible across
/// implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw from {-2,-1,0,1,2}: next() % 5 - 2.
    Scalar small() { return Scalar(static_cast<std::int64_t>(next() % 5) - 2); }

    /// Draw from 0..bound-1 (bound > 0).
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }

private:
    std::uint64_t state_;
};

/// rows x cols matrix with entries from small().
RationalMatrix random_matrix(SplitMix64 &rng, std::size_t rows, std::size_t cols);

/// Element of V^{⊗n} with one small() draw per word, words in lexicographic
/// order.
TensorElement random_tensor(SplitMix64 &rng, std::size_t dim_v, std::size_t n);

} // namespace leibhom
