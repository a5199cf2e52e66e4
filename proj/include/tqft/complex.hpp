/**
 * Finite abstract simplicial complexes, marked (in/out) boundary
 * subcomplexes, and simplicial maps between complexes.
 *
 * A simplex is a sorted vector of vertex ids. Complexes are immutable once
 * constructed and compare by value.
 */
#ifndef TQFT_COMPLEX_HPP
#define TQFT_COMPLEX_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tqft {

using Vertex = int;
using Simplex = std::vector<Vertex>;

/// Orders simplices by dimension first, then lexicographically.
struct SimplexOrder
{
    bool operator()(const Simplex& a, const Simplex& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

using SimplexSet = std::set<Simplex, SimplexOrder>;

class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Stores the sets as given (each simplex is sorted). No closure is
    /// applied, so the result may violate the invariants; see validate().
    SimplicialComplex(std::set<Vertex> vertices, SimplexSet simplices);

    /// Face closure of the given simplices. Every vertex of every simplex
    /// becomes a 0-simplex.
    static SimplicialComplex from_maximal(const std::vector<Simplex>& simplices);

    const std::set<Vertex>& vertices() const noexcept { return vertices_; }
    const SimplexSet& simplices() const noexcept { return simplices_; }

    bool empty() const noexcept { return simplices_.empty() && vertices_.empty(); }
    bool contains(const Simplex& s) const { return simplices_.count(s) != 0; }

    /// Top dimension, or -1 for the empty complex.
    int dimension() const;
    std::size_t count(int dim) const;
    std::vector<Simplex> simplices_of_dimension(int dim) const;
    std::vector<Simplex> maximal_simplices() const;

    bool is_subcomplex_of(const SimplicialComplex& other) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::set<Vertex> vertices_;
    SimplexSet simplices_;
};

struct Violation
{
    std::string message;
    Simplex simplex;
};

/// First broken invariant, or nullopt when the complex is valid.
std::optional<Violation> validate(const SimplicialComplex& c);

/// Alternating simplex count.
long long euler_combinatorial(const SimplicialComplex& c);

/// Components under shared-vertex adjacency, ordered by smallest vertex.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& c);

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);

/// Renames vertices through `relabel`; vertices missing from the map keep
/// their id.
SimplicialComplex relabel(const SimplicialComplex& c, const std::map<Vertex, Vertex>& relabel);

bool vertex_disjoint(const SimplicialComplex& a, const SimplicialComplex& b);

// ---------------------------------------------------------------------------
// Marked complexes
// ---------------------------------------------------------------------------

enum class Label { In, Out };

Label flip(Label l);
const char* to_string(Label l);

struct BoundaryComponent
{
    std::string name;
    Label label = Label::In;
    SimplicialComplex complex;

    friend bool operator==(const BoundaryComponent&, const BoundaryComponent&) = default;
};

/// A complex M together with labelled, pairwise vertex-disjoint boundary
/// subcomplexes.
struct MarkedComplex
{
    SimplicialComplex complex;
    std::vector<BoundaryComponent> boundary;

    friend bool operator==(const MarkedComplex&, const MarkedComplex&) = default;
};

std::optional<Violation> validate(const MarkedComplex& m);

/// Equal complexes and equal boundary components, ignoring list order.
bool same_object(const MarkedComplex& a, const MarkedComplex& b);

/// Throws Error(UnknownComponent) if the name is absent.
const BoundaryComponent& component(const MarkedComplex& m, const std::string& name);

SimplicialComplex boundary_union(const MarkedComplex& m, const std::vector<std::string>& names);
SimplicialComplex boundary_union(const MarkedComplex& m, Label label);

/**
 * Monoidal product. Vertices of `b` are shifted past the largest id of `a`;
 * boundary lists are concatenated, and names of `b` that collide with a name
 * of `a` get a numeric suffix.
 */
MarkedComplex disjoint_union(const MarkedComplex& a, const MarkedComplex& b);
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

MarkedComplex flip_labels(const MarkedComplex& m);

// ---------------------------------------------------------------------------
// Simplicial maps
// ---------------------------------------------------------------------------

struct SimplicialMap
{
    SimplicialComplex source;
    SimplicialComplex target;
    std::map<Vertex, Vertex> vertex_map;

    friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

/// Vertex set of the image, sorted and deduplicated. Throws std::out_of_range
/// for an unmapped vertex.
Simplex image(const std::map<Vertex, Vertex>& vertex_map, const Simplex& s);

bool is_simplicial(const SimplicialMap& f);
bool is_isomorphism(const SimplicialMap& f);

SimplicialMap identity_map(const SimplicialComplex& c);
SimplicialMap inverse(const SimplicialMap& f);

/// g after f.
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

/// Vertex bijection a -> b carrying simplices onto simplices, if one exists.
/// Backtracking search; intended for small complexes.
std::optional<std::map<Vertex, Vertex>> find_isomorphism(const SimplicialComplex& a,
                                                         const SimplicialComplex& b);

}  // namespace tqft

#endif
