#include "tqft/gluing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tqft/error.hpp"

namespace tqft {

namespace {

std::string format_simplex(const Simplex& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::vector<std::string> remaining_names(const GluingSpec& spec)
{
    std::set<std::string> glued(spec.sigma1.begin(), spec.sigma1.end());
    glued.insert(spec.sigma2.begin(), spec.sigma2.end());
    std::vector<std::string> out;
    for (const auto& b : spec.source.boundary)
        if (!glued.count(b.name))
            out.push_back(b.name);
    return out;
}

// Label of the boundary component containing vertex v, among `names`.
Label label_of(const MarkedComplex& m, const std::vector<std::string>& names, Vertex v)
{
    for (const auto& n : names) {
        const auto& b = component(m, n);
        if (b.complex.vertices().count(v))
            return b.label;
    }
    throw std::logic_error("vertex not in any named component");
}

void check_names(const GluingSpec& spec)
{
    if (spec.sigma1.empty() || spec.sigma2.empty())
        throw Error(ErrorKind::NotDisjoint, "Sigma1 and Sigma2 must both be non-empty");
    std::set<std::string> seen;
    for (const auto* list : {&spec.sigma1, &spec.sigma2})
        for (const auto& n : *list) {
            component(spec.source, n);
            if (!seen.insert(n).second)
                throw Error(ErrorKind::NotDisjoint,
                            "component '" + n + "' is listed more than once");
        }
}

void check_phi(const GluingSpec& spec, const SimplicialComplex& u1, const SimplicialComplex& u2)
{
    std::set<Vertex> domain;
    std::set<Vertex> range;
    for (const auto& [x, y] : spec.phi) {
        if (!u1.vertices().count(x))
            throw Error(ErrorKind::NotIsomorphism,
                        "phi is defined on " + std::to_string(x) + ", which is not in Sigma1");
        if (!u2.vertices().count(y))
            throw Error(ErrorKind::NotIsomorphism,
                        "phi maps " + std::to_string(x) + " to " + std::to_string(y)
                            + ", which is not in Sigma2");
        if (!range.insert(y).second)
            throw Error(ErrorKind::NotIsomorphism,
                        "phi is not injective: vertex " + std::to_string(y) + " is hit twice");
        domain.insert(x);
    }
    if (domain != u1.vertices())
        throw Error(ErrorKind::NotIsomorphism, "phi is not defined on every vertex of Sigma1");
    if (range != u2.vertices())
        throw Error(ErrorKind::NotIsomorphism, "phi is not onto the vertices of Sigma2");
    if (!is_isomorphism(SimplicialMap{u1, u2, spec.phi}))
        throw Error(ErrorKind::NotIsomorphism, "phi is not a simplicial isomorphism Sigma1 -> Sigma2");
    // phi lands in I(Sigma2): in-components go to out-components and back.
    for (const auto& [x, y] : spec.phi)
        if (label_of(spec.source, spec.sigma1, x) == label_of(spec.source, spec.sigma2, y))
            throw Error(ErrorKind::NotIsomorphism,
                        "phi maps vertex " + std::to_string(x) + " to " + std::to_string(y)
                            + " between components with the same label");
}

}  // namespace

GluingMorphism glue(const GluingSpec& spec)
{
    if (auto v = validate(spec.source))
        throw Error(ErrorKind::InvalidComplex, v->message);
    check_names(spec);

    const SimplicialComplex u1 = boundary_union(spec.source, spec.sigma1);
    const SimplicialComplex u2 = boundary_union(spec.source, spec.sigma2);
    if (!vertex_disjoint(u1, u2))
        throw Error(ErrorKind::NotDisjoint, "Sigma1 and Sigma2 share a vertex");
    check_phi(spec, u1, u2);

    const SimplicialComplex& m = spec.source.complex;
    std::map<Vertex, Vertex> nu;
    for (Vertex v : m.vertices())
        nu[v] = v;
    for (const auto& [x, y] : spec.phi)
        nu[x] = nu[y] = std::min(x, y);

    std::map<Simplex, std::vector<Simplex>> preimages;
    for (const auto& s : m.simplices()) {
        Simplex t = image(nu, s);
        if (t.size() != s.size())
            throw Error(ErrorKind::NonSimplicialQuotient,
                        "simplex " + format_simplex(s) + " collapses to " + format_simplex(t)
                            + "; subdivide before gluing");
        preimages[t].push_back(s);
    }
    for (const auto& [t, group] : preimages) {
        if (group.size() == 1)
            continue;
        bool glued_pair = false;
        if (group.size() == 2) {
            for (int k = 0; k < 2; ++k) {
                const Simplex& a = group[k];
                const Simplex& b = group[1 - k];
                if (u1.contains(a) && image(spec.phi, a) == b)
                    glued_pair = true;
            }
        }
        if (!glued_pair) {
            std::string list;
            for (const auto& s : group)
                list += " " + format_simplex(s);
            throw Error(ErrorKind::NonSimplicialQuotient,
                        "simplices" + list + " would be identified as " + format_simplex(t)
                            + "; subdivide before gluing");
        }
    }

    std::set<Vertex> verts;
    SimplexSet simplices;
    for (const auto& [t, group] : preimages) {
        verts.insert(t.begin(), t.end());
        simplices.insert(t);
    }
    MarkedComplex target{SimplicialComplex(std::move(verts), std::move(simplices)), {}};
    for (const auto& name : remaining_names(spec)) {
        const auto& b = component(spec.source, name);
        target.boundary.push_back({b.name, b.label, relabel(b.complex, nu)});
    }

    GluingMorphism g{spec, std::move(target), SimplicialMap{m, {}, std::move(nu)}};
    g.f.target = g.target.complex;
    if (auto report = check_conditions(g); !report.ok())
        throw std::logic_error("glue produced a map failing condition "
                               + std::to_string(report.failed) + ": " + report.detail);
    return g;
}

ConditionReport check_conditions(const SimplicialMap& f, const GluingSpec& spec,
                                 const std::vector<BoundaryComponent>& target_boundary)
{
    if (f.source != spec.source.complex)
        throw std::invalid_argument("map source differs from the gluing source");
    if (!is_simplicial(f))
        throw std::invalid_argument("map is not simplicial");

    const SimplicialComplex u1 = boundary_union(spec.source, spec.sigma1);
    const SimplicialComplex u2 = boundary_union(spec.source, spec.sigma2);
    auto img = [&](const Simplex& s) { return image(f.vertex_map, s); };
    auto outside = [&](const Simplex& s) { return !u1.contains(s) && !u2.contains(s); };

    // 1) surjective
    {
        std::set<Simplex> hit;
        for (const auto& s : f.source.simplices())
            hit.insert(img(s));
        for (const auto& t : f.target.simplices())
            if (!hit.count(t))
                return {1, "target simplex " + format_simplex(t) + " is not in the image"};
    }

    // 2) injective off Sigma1 u Sigma2
    {
        std::map<Simplex, Simplex> seen;
        for (const auto& s : f.source.simplices()) {
            if (!outside(s))
                continue;
            Simplex t = img(s);
            if (t.size() != s.size())
                return {2, "simplex " + format_simplex(s) + " collapses"};
            auto [it, fresh] = seen.emplace(t, s);
            if (!fresh)
                return {2, "simplices " + format_simplex(it->second) + " and " + format_simplex(s)
                               + " have the same image"};
        }
    }

    // 3) unglued boundary maps isomorphically onto Sigma'
    {
        SimplicialComplex rest;
        std::vector<const BoundaryComponent*> rest_components;
        for (const auto& name : remaining_names(spec)) {
            rest_components.push_back(&component(spec.source, name));
            rest = union_of(rest, rest_components.back()->complex);
        }
        SimplicialComplex sigma_prime;
        for (const auto& b : target_boundary)
            sigma_prime = union_of(sigma_prime, b.complex);

        std::map<Vertex, Vertex> restricted;
        for (Vertex v : rest.vertices())
            restricted[v] = f.vertex_map.at(v);
        if (!is_isomorphism(SimplicialMap{rest, sigma_prime, restricted}))
            return {3, "unglued boundary is not mapped isomorphically onto the target boundary"};
        if (rest_components.size() != target_boundary.size())
            return {3, "unglued boundary and target boundary have different component counts"};
        std::set<std::size_t> matched;
        for (const auto* b : rest_components) {
            const SimplicialComplex mapped = relabel(b->complex, restricted);
            bool found = false;
            for (std::size_t j = 0; j < target_boundary.size() && !found; ++j)
                if (!matched.count(j) && target_boundary[j].label == b->label
                    && target_boundary[j].complex == mapped) {
                    matched.insert(j);
                    found = true;
                }
            if (!found)
                return {3, "component '" + b->name + "' has no matching target component"};
        }
    }

    // 4) unique pair (x, phi(x)) over each image cell of Sigma1
    {
        std::map<Simplex, int> pairs;
        for (const auto& x : u1.simplices()) {
            Simplex y = img(x);
            if (y.size() != x.size())
                return {4, "simplex " + format_simplex(x) + " of Sigma1 collapses"};
            pairs.emplace(y, 0);
            Simplex phi_x;
            try {
                phi_x = image(spec.phi, x);
            }
            catch (const std::out_of_range&) {
                return {4, "phi is undefined on " + format_simplex(x)};
            }
            if (img(phi_x) == y)
                ++pairs[y];
        }
        for (const auto& [y, n] : pairs)
            if (n != 1)
                return {4, "image cell " + format_simplex(y) + " has " + std::to_string(n)
                               + " preimage pairs"};
    }

    // 5) f(Sigma1) and f(M \ (Sigma1 u Sigma2)) are disjoint
    {
        std::set<Simplex> glued_image;
        for (const auto& x : u1.simplices())
            glued_image.insert(img(x));
        for (const auto& s : f.source.simplices())
            if (outside(s) && glued_image.count(img(s)))
                return {5, "cell " + format_simplex(img(s)) + " is hit from Sigma1 and from "
                               + format_simplex(s)};
    }
    return {};
}

ConditionReport check_conditions(const GluingMorphism& g)
{
    if (g.f.target != g.target.complex)
        throw std::invalid_argument("map target differs from the target complex");
    return check_conditions(g.f, g.spec, g.target.boundary);
}

std::map<std::string, std::string> component_preimages(const SimplicialMap& f,
                                                       const MarkedComplex& source,
                                                       const std::vector<BoundaryComponent>& target_boundary)
{
    std::map<std::string, std::string> out;
    for (const auto& b : source.boundary) {
        const SimplicialComplex mapped = relabel(b.complex, f.vertex_map);
        for (const auto& t : target_boundary)
            if (t.label == b.label && t.complex == mapped && !out.count(t.name)) {
                out[t.name] = b.name;
                break;
            }
    }
    return out;
}

Isomorphism make_isomorphism(const MarkedComplex& source, const MarkedComplex& target,
                             const std::map<Vertex, Vertex>& vertex_map)
{
    SimplicialMap f{source.complex, target.complex, vertex_map};
    if (!is_isomorphism(f))
        throw Error(ErrorKind::NotIsomorphism, "vertex map is not a simplicial isomorphism");
    if (source.boundary.size() != target.boundary.size()
        || component_preimages(f, source, target.boundary).size() != target.boundary.size())
        throw Error(ErrorKind::NotIsomorphism,
                    "vertex map does not carry the boundary components onto each other");
    return Isomorphism{source, target, std::move(f)};
}

Isomorphism identity(const MarkedComplex& m)
{
    return Isomorphism{m, m, identity_map(m.complex)};
}

namespace {

GluingMorphism checked(GluingMorphism g, const char* what)
{
    if (auto report = check_conditions(g); !report.ok())
        throw std::logic_error(std::string(what) + " fails condition "
                               + std::to_string(report.failed) + ": " + report.detail);
    return g;
}

std::vector<std::string> translate(const std::vector<std::string>& names,
                                   const std::map<std::string, std::string>& preimage)
{
    std::vector<std::string> out;
    for (const auto& n : names) {
        auto it = preimage.find(n);
        if (it == preimage.end())
            throw Error(ErrorKind::NotComposable,
                        "component '" + n + "' has no preimage boundary component");
        out.push_back(it->second);
    }
    return out;
}

}  // namespace

GluingMorphism compose(const GluingMorphism& g1, const GluingMorphism& g2)
{
    if (!same_object(g1.target, g2.spec.source))
        throw Error(ErrorKind::NotComposable,
                    "target of the first gluing is not the source of the second");

    MarkedComplex unglued{g1.spec.source.complex, {}};
    for (const auto& name : remaining_names(g1.spec))
        unglued.boundary.push_back(component(g1.spec.source, name));
    const auto pre = component_preimages(g1.f, unglued, g1.target.boundary);

    GluingSpec spec = g1.spec;
    const auto extra1 = translate(g2.spec.sigma1, pre);
    const auto extra2 = translate(g2.spec.sigma2, pre);
    spec.sigma1.insert(spec.sigma1.end(), extra1.begin(), extra1.end());
    spec.sigma2.insert(spec.sigma2.end(), extra2.begin(), extra2.end());

    // theta on the new part: (f restricted to Sigma4)^-1 o psi o f.
    const SimplicialComplex sigma3 = boundary_union(g1.spec.source, extra1);
    const SimplicialComplex sigma4 = boundary_union(g1.spec.source, extra2);
    std::map<Vertex, Vertex> back;
    for (Vertex v : sigma4.vertices())
        back[g1.f.vertex_map.at(v)] = v;
    for (Vertex x : sigma3.vertices())
        spec.phi[x] = back.at(g2.spec.phi.at(g1.f.vertex_map.at(x)));

    return checked(GluingMorphism{std::move(spec), g2.target, compose(g1.f, g2.f)},
                   "composite gluing");
}

GluingMorphism compose(const Isomorphism& h, const GluingMorphism& g)
{
    if (!same_object(h.target, g.spec.source))
        throw Error(ErrorKind::NotComposable, "isomorphism target is not the gluing source");
    const auto pre = component_preimages(h.f, h.source, h.target.boundary);
    GluingSpec spec{h.source, translate(g.spec.sigma1, pre), translate(g.spec.sigma2, pre), {}};
    const SimplicialMap h_inv = inverse(h.f);
    const SimplicialComplex sigma1 = boundary_union(h.source, spec.sigma1);
    for (Vertex x : sigma1.vertices())
        spec.phi[x] = h_inv.vertex_map.at(g.spec.phi.at(h.f.vertex_map.at(x)));
    return checked(GluingMorphism{std::move(spec), g.target, compose(h.f, g.f)},
                   "isomorphism followed by gluing");
}

GluingMorphism compose(const GluingMorphism& g, const Isomorphism& h)
{
    if (!same_object(g.target, h.source))
        throw Error(ErrorKind::NotComposable, "gluing target is not the isomorphism source");
    return checked(GluingMorphism{g.spec, h.target, compose(g.f, h.f)},
                   "gluing followed by isomorphism");
}

Isomorphism compose(const Isomorphism& h1, const Isomorphism& h2)
{
    if (!same_object(h1.target, h2.source))
        throw Error(ErrorKind::NotComposable, "isomorphisms are not composable");
    return make_isomorphism(h1.source, h2.target, compose(h1.f, h2.f).vertex_map);
}

GluingSpec canonical(GluingSpec spec)
{
    std::sort(spec.sigma1.begin(), spec.sigma1.end());
    std::sort(spec.sigma2.begin(), spec.sigma2.end());
    return spec;
}

}  // namespace tqft
