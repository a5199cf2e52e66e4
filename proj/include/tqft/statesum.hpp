/**
 * Finite-group state sums on closed triangulated surfaces.
 *
 * Surfaces are Delta-complex style: loops and parallel edges are allowed,
 * so the one-vertex torus is expressible. A colouring assigns a group
 * element to every oriented edge; it is admissible when the product around
 * every triangle is the identity, with an edge traversed against its
 * orientation contributing its inverse. The partition function is
 *
 *     Z = #(admissible colourings) / |G|^#V.
 */
#ifndef TQFT_STATESUM_HPP
#define TQFT_STATESUM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tqft/rational.hpp"

namespace tqft {

class FiniteGroup
{
public:
    using Table = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

    /// Z/n with mul(a, b) = (a + b) mod n.
    static FiniteGroup cyclic(int n);

    /// S3 as permutations of {0, 1, 2} in lexicographic order.
    static FiniteGroup symmetric3();

    /// Validates the group axioms exhaustively; throws Error(NotAGroup)
    /// naming the failed axiom and a witness.
    static FiniteGroup from_table(const Table& mul);

    int order() const { return static_cast<int>(mul_.rows()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return mul_(a, b); }
    int inverse(int a) const { return inverse_[a]; }
    const Table& table() const { return mul_; }

    /// A non-commuting pair, if one exists.
    std::optional<std::pair<int, int>> non_commuting_pair() const;

private:
    FiniteGroup(Table mul, int identity, std::vector<int> inverse)
        : mul_(std::move(mul)), identity_(identity), inverse_(std::move(inverse))
    {
    }

    Table mul_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

struct Edge
{
    int tail = 0;
    int head = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// An edge traversed along (forward) or against its stored orientation.
struct EdgeRef
{
    int edge = 0;
    bool forward = true;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

using Triangle = std::array<EdgeRef, 3>;

struct Surface2D
{
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;

    friend bool operator==(const Surface2D&, const Surface2D&) = default;
};

/// Edge index -> group element index.
using Coloring = std::vector<int>;

/// Reason the surface is malformed, or nullopt.
std::optional<std::string> validate(const Surface2D& s);

long long euler_characteristic(const Surface2D& s);

Surface2D disjoint_union(const Surface2D& a, const Surface2D& b);

/// Product of the triangle's edge elements starting at slot 0.
int holonomy(const Triangle& t, const FiniteGroup& g, const Coloring& c);

bool is_admissible(const Surface2D& s, const FiniteGroup& g, const Coloring& c);

/**
 * Number of admissible colourings by backtracking. Edges are visited
 * most-constrained first and an edge whose triangle already has its other
 * two edges coloured takes its forced value. With threads > 1 the search is
 * split on the colour of the first edge; the count does not depend on the
 * split.
 */
std::uint64_t count_admissible(const Surface2D& s, const FiniteGroup& g, unsigned threads = 1);

/// Exhaustive count over all |G|^#E colourings.
std::uint64_t count_admissible_naive(const Surface2D& s, const FiniteGroup& g);

/// |G|^#E, saturating at UINT64_MAX.
std::uint64_t colouring_space_size(const Surface2D& s, const FiniteGroup& g);

Rational partition_function(const Surface2D& s, const FiniteGroup& g, unsigned threads = 1);

/// 1-3 move: the triangle is replaced by three triangles around a new
/// vertex. Throws std::out_of_range for a bad index.
Surface2D pachner_13(const Surface2D& s, int triangle);

/// 2-2 move: the diagonal shared by two triangles is replaced by the other
/// diagonal of their quadrilateral. Throws Error(NotFlippable) when the two
/// triangles coincide, are incoherently oriented along the edge, or share
/// another edge.
Surface2D pachner_22(const Surface2D& s, int edge);

struct PachnerMove
{
    enum class Kind { OneThree, TwoTwo } kind;
    int index;
};

std::string to_string(const PachnerMove& m);

/// Picks a 1-3 or 2-2 move with equal probability; a 2-2 move falls back to
/// 1-3 when no edge is flippable.
PachnerMove random_pachner_move(const Surface2D& s, std::mt19937_64& rng);
Surface2D apply(const Surface2D& s, const PachnerMove& m);

}  // namespace tqft

#endif
