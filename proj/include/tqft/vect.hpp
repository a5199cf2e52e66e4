/**
 * The zero-dimensional vector-space TQFT: a positively oriented point goes
 * to V = K^n, a negatively oriented one to its dual, disjoint unions to
 * tensor products, and the bent intervals to the cup and cap maps.
 *
 * Tensor bases are lexicographic with the left factor most significant, so
 * e_i (x) e_j* sits at index i*n + j. Functions are templated on the scalar
 * type; the library uses exact rationals.
 */
#ifndef TQFT_VECT_HPP
#define TQFT_VECT_HPP

#include <cstddef>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "tqft/error.hpp"
#include "tqft/homology.hpp"
#include "tqft/rational.hpp"

namespace tqft {

enum class Orientation { Positive, Negative };

using SignedPointConfig = std::vector<Orientation>;

struct ExactVectorSpace
{
    Eigen::Index dimension = 1;
    /// Sign of each tensor factor; a negative factor is a dual space.
    SignedPointConfig factors;
};

/// Tensor product of one copy of V or V* per point; the empty configuration
/// gives the ground field.
ExactVectorSpace space_of(const SignedPointConfig& config, Eigen::Index n);

template <typename Scalar>
Matrix<Scalar> tensor(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    return Eigen::kroneckerProduct(a, b).eval();
}

/// K -> V (x) V*, 1 |-> sum_i e_i (x) e_i*.
template <typename Scalar = Rational>
Matrix<Scalar> cup(Eigen::Index n)
{
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n * n, 1);
    for (Eigen::Index i = 0; i < n; ++i)
        m(i * n + i, 0) = Scalar(1);
    return m;
}

/// V (x) V* -> K, e_i (x) e_j* |-> delta_ij.
template <typename Scalar = Rational>
Matrix<Scalar> cap(Eigen::Index n)
{
    return cup<Scalar>(n).transpose();
}

/// Closing the interval into a circle: cap o cup applied to 1.
template <typename Scalar = Rational>
Scalar circle_invariant(Eigen::Index n)
{
    return (cap<Scalar>(n) * cup<Scalar>(n))(0, 0);
}

/// Self-gluing the ends of a cylinder over an endomorphism: its trace.
template <typename Derived>
typename Derived::Scalar trace_closure(const Eigen::MatrixBase<Derived>& z)
{
    if (z.rows() != z.cols())
        throw Error(ErrorKind::NotSquare, "trace closure needs a square matrix, got "
                                              + std::to_string(z.rows()) + "x"
                                              + std::to_string(z.cols()));
    return z.trace();
}

/// (cap (x) id_V) o (id_V (x) cup), which the zig-zag identity makes id_V.
template <typename Scalar = Rational>
Matrix<Scalar> snake(Eigen::Index n)
{
    const Matrix<Scalar> id = Matrix<Scalar>::Identity(n, n);
    return tensor<Scalar>(cap<Scalar>(n), id) * tensor<Scalar>(id, cup<Scalar>(n));
}

/// A map Z_I: V -> V satisfying Z_I o Z_I = Z_I is a projection; if it is
/// also surjective it must be the identity. Returns true when `z` is an
/// idempotent of full rank.
template <typename Scalar>
bool is_surjective_idempotent(const Matrix<Scalar>& z)
{
    if (z.rows() != z.cols())
        return false;
    return (z * z) == z && exact_rank<Scalar>(z) == z.rows();
}

}  // namespace tqft

#endif
