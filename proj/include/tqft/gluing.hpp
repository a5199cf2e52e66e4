/**
 * Gluing morphisms between marked complexes.
 *
 * A gluing identifies two disjoint families of boundary components,
 * Sigma1 and Sigma2, through a simplicial isomorphism phi. glue() builds the
 * identification space M_phi together with the canonical quotient map, and
 * check_conditions() verifies the five defining conditions of a gluing
 * morphism on the underlying simplex sets. Isomorphisms of marked complexes
 * form the second kind of morphism; compose() handles every mix of the two.
 */
#ifndef TQFT_GLUING_HPP
#define TQFT_GLUING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tqft/complex.hpp"

namespace tqft {

struct GluingSpec
{
    MarkedComplex source;
    std::vector<std::string> sigma1;
    std::vector<std::string> sigma2;
    /// Vertex map from the union of sigma1 onto the union of sigma2.
    std::map<Vertex, Vertex> phi;

    friend bool operator==(const GluingSpec&, const GluingSpec&) = default;
};

struct GluingMorphism
{
    GluingSpec spec;
    MarkedComplex target;
    /// Quotient map from spec.source.complex onto target.complex.
    SimplicialMap f;

    friend bool operator==(const GluingMorphism&, const GluingMorphism&) = default;
};

/// An isomorphism of marked complexes: a simplicial isomorphism carrying each
/// boundary component onto a boundary component with the same label.
struct Isomorphism
{
    MarkedComplex source;
    MarkedComplex target;
    SimplicialMap f;

    friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

/**
 * Builds M_phi by identifying each vertex x of Sigma1 with phi(x). The class
 * {x, phi(x)} takes the smaller id. The remaining boundary components keep
 * their names and labels.
 *
 * Errors: UnknownComponent, NotDisjoint, NotIsomorphism (phi not a
 * label-reversing simplicial isomorphism Sigma1 -> Sigma2), and
 * NonSimplicialQuotient when two simplices other than a pair (s, phi(s))
 * collapse onto the same vertex set.
 */
GluingMorphism glue(const GluingSpec& spec);

/// Result of check_conditions: 0 means all conditions hold, otherwise the
/// number (1-5) of the first failing condition.
struct ConditionReport
{
    int failed = 0;
    std::string detail;

    bool ok() const { return failed == 0; }
};

/**
 * Checks the gluing-morphism conditions for `f` against `spec`, with
 * `target_boundary` playing the role of Sigma':
 *   1. f is surjective;
 *   2. f is injective off Sigma1 u Sigma2;
 *   3. f restricted to the unglued boundary is an isomorphism onto Sigma';
 *   4. every image cell of Sigma1 has a unique preimage pair (x, phi(x));
 *   5. f(Sigma1) misses f(M \ (Sigma1 u Sigma2)).
 * Points are open simplices, so a simplex that collapses under f counts as a
 * non-injective cell.
 */
ConditionReport check_conditions(const SimplicialMap& f, const GluingSpec& spec,
                                  const std::vector<BoundaryComponent>& target_boundary);
ConditionReport check_conditions(const GluingMorphism& g);

/// Validates an isomorphism; throws Error(NotIsomorphism) on failure.
Isomorphism make_isomorphism(const MarkedComplex& source, const MarkedComplex& target,
                             const std::map<Vertex, Vertex>& vertex_map);
Isomorphism identity(const MarkedComplex& m);

/// Names of the boundary components of `source` mapped onto each boundary
/// component of the target, keyed by target name.
std::map<std::string, std::string> component_preimages(const SimplicialMap& f,
                                                       const MarkedComplex& source,
                                                       const std::vector<BoundaryComponent>& target_boundary);

/// (g2 o g1, theta) with theta = phi1 u (f1^-1 o phi2 o f1).
/// Throws Error(NotComposable) unless g1.target equals g2.spec.source.
GluingMorphism compose(const GluingMorphism& g1, const GluingMorphism& g2);
GluingMorphism compose(const Isomorphism& h, const GluingMorphism& g);
GluingMorphism compose(const GluingMorphism& g, const Isomorphism& h);
Isomorphism compose(const Isomorphism& h1, const Isomorphism& h2);

/// Sorts sigma name lists so that equal gluings compare equal.
GluingSpec canonical(GluingSpec spec);

}  // namespace tqft

#endif
