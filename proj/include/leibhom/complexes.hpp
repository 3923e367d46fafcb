#pragma once

#include <map>
#include <optional>
#include <vector>

#include "leibhom/leibniz.hpp"
#include "leibhom/tensor.hpp"

namespace leibhom {

/// A bounded chain complex of finite-dimensional spaces. boundaries[n] is
/// the matrix of C_n -> C_{n-1} (columns indexed by the degree-n basis);
/// missing entries are zero maps.
struct ChainComplexData {
    std::map<std::size_t, std::size_t> dims;
    std::map<std::size_t, RationalMatrix> boundaries;

    /// Checks shapes and that consecutive boundaries compose to zero.
    /// Throws CheckFailure otherwise.
    static ChainComplexData make(std::map<std::size_t, std::size_t> dims,
                                 std::map<std::size_t, RationalMatrix> boundaries);
};

struct HomologyRow {
    std::size_t degree = 0;
    std::size_t chain_dim = 0;
    /// rank of the boundary leaving this degree
    std::size_t boundary_rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t homology_dim = 0;
    /// Kernel basis of the outgoing boundary, filled on request.
    std::optional<RationalMatrix> cycles;
};

struct HomologyReport {
    std::optional<unsigned> weight;
    std::vector<HomologyRow> rows;
};

/// Homology in degrees lo..hi. Ranks for different degrees are computed
/// concurrently; the report is ordered by degree.
HomologyReport homology(const ChainComplexData &cx, std::size_t lo, std::size_t hi, bool with_cycles = false);

/// Loday boundary applied to a tensor; degree 1 maps to zero in degree 0.
TensorElement loday_boundary(const LeibnizAlgebra &a, const TensorElement &t);
/// f^n: bracket of the last two factors.
TensorElement bracket_last_two(const LeibnizAlgebra &a, const TensorElement &t);

/// Matrix of d: h^{⊗n} -> h^{⊗(n-1)} in word coordinates; n = 1 gives the
/// 1 x dim zero map onto K.
RationalMatrix loday_d(const LeibnizAlgebra &a, std::size_t n, const Limits &limits = {});
/// Matrix of f^n: h^{⊗(n+1)} -> h^{⊗n}.
RationalMatrix f_map(const LeibnizAlgebra &a, std::size_t n, const Limits &limits = {});

/// CL_0..CL_{top}. Throws ResourceLimitError when dim^top exceeds the cap.
ChainComplexData cl_complex(const LeibnizAlgebra &a, std::size_t top, const Limits &limits = {});
/// HL_0..HL_n_max (the complex is built one degree higher).
HomologyReport hl_homology(const LeibnizAlgebra &a, std::size_t n_max, const Limits &limits = {},
                           bool with_cycles = false);

/// delta_n: L(h,1)_{n+1} -> L(h,1)_n in Lie-basis coordinates, computed as
/// p_n o f^n o i_{n+1}.
RationalMatrix delta(const LeibnizAlgebra &a, std::size_t n, const Limits &limits = {});
/// Same, between explicitly given bases (used for weight-restricted chains).
RationalMatrix delta_between(const LeibnizAlgebra &a, const LieBasis &source, const LieBasis &target);

/// L(h,1)_1..L(h,1)_{top}; boundaries[n+1] = delta_n.
ChainComplexData li_complex(const LeibnizAlgebra &a, std::size_t top, const Limits &limits = {});
HomologyReport li_homology(const LeibnizAlgebra &a, std::size_t n_max, const Limits &limits = {},
                           bool with_cycles = false);

/// Li_1..Li_n_max restricted to total weight w, for a weight-graded algebra
/// (typically free_leibniz). Throws InputError if the algebra has no weights
/// or w exceeds its largest basis weight.
HomologyReport weight_graded_li(const LeibnizAlgebra &a, std::size_t n_max, unsigned weight,
                                const Limits &limits = {});

/// d i_{n+1} == (-1)^n i_n delta_n as exact matrices.
bool commutation_check(const LeibnizAlgebra &a, std::size_t n, const Limits &limits = {});

/// d(i_n(L(h,1)_n)) is contained in i_{n-1}(L(h,1)_{n-1}).
bool subcomplex_closed(const LeibnizAlgebra &a, std::size_t n, const Limits &limits = {});

} // namespace leibhom
