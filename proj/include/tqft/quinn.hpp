/**
 * The generalized Quinn Euler-characteristic theory.
 *
 * Every boundary space is the ground field, so a bulk value is a single
 * power u^q of a fixed nonzero base u. Exponents are exact rationals; u is
 * never evaluated numerically.
 */
#ifndef TQFT_QUINN_HPP
#define TQFT_QUINN_HPP

#include <optional>
#include <string>
#include <vector>

#include "tqft/complex.hpp"
#include "tqft/gluing.hpp"
#include "tqft/rational.hpp"

namespace tqft {

struct EulerTheoryParams
{
    Rational c1;
    Rational c2;
    Rational c3;
    Rational c4;

    static EulerTheoryParams euler() { return {1, -1, 0, 0}; }
    static EulerTheoryParams skew_euler() { return {1, 0, -1, 0}; }
    static EulerTheoryParams balanced() { return {1, Rational(-1, 2), Rational(-1, 2), 0}; }

    friend bool operator==(const EulerTheoryParams&, const EulerTheoryParams&) = default;
};

/// "euler", "skew" or "balanced"; throws std::invalid_argument otherwise.
EulerTheoryParams preset(const std::string& name);

/// Formal power u^exponent.
struct ZValue
{
    Rational exponent;

    static ZValue unit() { return {Rational(0)}; }

    friend ZValue operator*(const ZValue& a, const ZValue& b) { return {a.exponent + b.exponent}; }
    friend bool operator==(const ZValue&, const ZValue&) = default;
};

/// "u^(p/q)", e.g. "u^(-1/2)" or "u^(0)".
std::string to_string(const ZValue& z);

/// u^(c1 chi(M) + c2 chi(in boundary) + c3 chi(out boundary)).
ZValue z_value(const MarkedComplex& m, const EulerTheoryParams& p);

/// Exponent of the evaluation pairing on the boundary space of sigma: c4 chi(sigma).
Rational evaluation_exponent(const SimplicialComplex& sigma, const EulerTheoryParams& p);

/// Image of z under the linear map of a gluing morphism: multiplication by
/// u^(c4 chi(Sigma2)). Isomorphisms act trivially.
ZValue apply_gluing(const GluingMorphism& g, const ZValue& z, const EulerTheoryParams& p);

bool check_constraint(const EulerTheoryParams& p);

struct Counterexample
{
    std::size_t index;
    ZValue glued_source;  // apply_gluing(g, z_value(source))
    ZValue target;        // z_value(target)
};

/// First corpus entry (by index) where the functor equation fails, if any.
std::optional<Counterexample> verify_functoriality(const std::vector<GluingMorphism>& corpus,
                                                   const EulerTheoryParams& p);

}  // namespace tqft

#endif
