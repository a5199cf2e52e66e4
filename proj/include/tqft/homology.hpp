/**
 * Simplicial chain complexes and rational Betti numbers, absolute and
 * relative to a subcomplex.
 *
 * Ranks are exact: boundary matrices are reduced by fraction-free
 * (Bareiss) elimination, first in 64-bit integers and, if an intermediate
 * minor overflows, again in arbitrary precision.
 */
#ifndef TQFT_HOMOLOGY_HPP
#define TQFT_HOMOLOGY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "tqft/complex.hpp"
#include "tqft/rational.hpp"

namespace tqft {

/**
 * Basis of n-simplices for each n, and boundary matrices. boundary[n] maps
 * n-chains to (n-1)-chains; boundary[0] is the zero map with no rows.
 */
struct ChainComplex
{
    std::vector<std::vector<Simplex>> basis;
    std::vector<IntMatrix> boundary;

    int top_dimension() const { return static_cast<int>(basis.size()) - 1; }
};

/// b[n] = rank H_n over the rationals, for n = 0..dim.
using BettiVector = std::vector<long long>;

struct RankOverflow : std::overflow_error
{
    RankOverflow() : std::overflow_error("integer overflow in fraction-free elimination") {}
};

namespace detail {

template <typename Scalar>
Scalar checked_cross(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
{
    if constexpr (std::is_integral_v<Scalar>) {
        Scalar ab, cd, diff;
        if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd)
            || __builtin_sub_overflow(ab, cd, &diff))
            throw RankOverflow();
        return diff;
    }
    else {
        return a * b - c * d;
    }
}

}  // namespace detail

/**
 * Rank of `m` over the field of fractions of Scalar, by Bareiss elimination.
 * All divisions are exact; for built-in integers an overflow throws
 * RankOverflow rather than producing a wrong answer.
 */
template <typename Scalar>
Eigen::Index exact_rank(Matrix<Scalar> m)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Scalar prev(1);
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r)
            if (m(r, col) != Scalar(0)) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            m.row(pivot).swap(m.row(rank));
        const Scalar p = m(rank, col);
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            const Scalar factor = m(r, col);
            for (Eigen::Index c = col + 1; c < cols; ++c)
                m(r, c) = detail::checked_cross(p, m(r, c), factor, m(rank, c)) / prev;
            m(r, col) = Scalar(0);
        }
        // Columns left of `col` in rows below the pivot are already zero, so
        // they need no update.
        prev = p;
        ++rank;
    }
    return rank;
}

/// Rank of an integer matrix; falls back to arbitrary precision on overflow.
Eigen::Index integer_rank(const IntMatrix& m);

/// Boundary matrices over sorted-vertex orientation: deleting the i-th
/// vertex contributes (-1)^i.
ChainComplex boundary_matrices(const SimplicialComplex& c);

/// The quotient chain complex C(c)/C(rel). Throws Error(NotASubcomplex).
ChainComplex relative_chain_complex(const SimplicialComplex& c, const SimplicialComplex& rel);

BettiVector betti(const ChainComplex& chains);
BettiVector betti(const SimplicialComplex& c,
                  const std::optional<SimplicialComplex>& rel = std::nullopt);

long long euler_from_betti(const BettiVector& b);

/// Homological chi(M, union of the named boundary components).
long long euler_relative(const MarkedComplex& m, const std::vector<std::string>& rel);

}  // namespace tqft

#endif
