#include "leibhom/random.hpp"

namespace leibhom {

RationalMatrix random_matrix(SplitMix64 &rng, std::size_t rows, std::size_t cols)
{
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rng.small();
        }
    }
    return m;
}

TensorElement random_tensor(SplitMix64 &rng, std::size_t dim_v, std::size_t n)
{
    TensorElement t(n);
    const WordBasis words = WordBasis::full(dim_v, n);
    for (const auto &w : words.words()) {
        t.add(w, rng.small());
    }
    return t;
}

} // namespace leibhom
