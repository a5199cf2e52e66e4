#include "tqft/quinn.hpp"

#include <stdexcept>

namespace tqft {

EulerTheoryParams preset(const std::string& name)
{
    if (name == "euler")
        return EulerTheoryParams::euler();
    if (name == "skew")
        return EulerTheoryParams::skew_euler();
    if (name == "balanced")
        return EulerTheoryParams::balanced();
    throw std::invalid_argument("unknown preset '" + name + "' (expected euler, skew or balanced)");
}

std::string to_string(const ZValue& z)
{
    return "u^(" + to_string(z.exponent) + ")";
}

ZValue z_value(const MarkedComplex& m, const EulerTheoryParams& p)
{
    const Rational chi_m = euler_combinatorial(m.complex);
    const Rational chi_in = euler_combinatorial(boundary_union(m, Label::In));
    const Rational chi_out = euler_combinatorial(boundary_union(m, Label::Out));
    return {p.c1 * chi_m + p.c2 * chi_in + p.c3 * chi_out};
}

Rational evaluation_exponent(const SimplicialComplex& sigma, const EulerTheoryParams& p)
{
    return p.c4 * Rational(euler_combinatorial(sigma));
}

ZValue apply_gluing(const GluingMorphism& g, const ZValue& z, const EulerTheoryParams& p)
{
    const SimplicialComplex sigma2 = boundary_union(g.spec.source, g.spec.sigma2);
    return z * ZValue{evaluation_exponent(sigma2, p)};
}

bool check_constraint(const EulerTheoryParams& p)
{
    return p.c1 + p.c2 + p.c3 + p.c4 == 0;
}

std::optional<Counterexample> verify_functoriality(const std::vector<GluingMorphism>& corpus,
                                                   const EulerTheoryParams& p)
{
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        ZValue lhs = apply_gluing(g, z_value(g.spec.source, p), p);
        ZValue rhs = z_value(g.target, p);
        if (lhs != rhs)
            return Counterexample{i, lhs, rhs};
    }
    return std::nullopt;
}

}  // namespace tqft
