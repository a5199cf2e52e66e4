#include "catch_amalgamated.hpp"

#include "tqft/corpus.hpp"
#include "tqft/error.hpp"
#include "tqft/gluing.hpp"
#include "tqft/homology.hpp"

using namespace tqft;

namespace {

SimplicialComplex point(Vertex v)
{
    return SimplicialComplex::from_maximal({{v}});
}

SimplicialComplex ring(Vertex a, Vertex b, Vertex c)
{
    return SimplicialComplex::from_maximal({{a, b}, {b, c}, {a, c}});
}

MarkedComplex path3()
{
    return {SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {2, 3}}),
            {{"A", Label::In, point(0)}, {"B", Label::Out, point(3)}}};
}

MarkedComplex two_intervals()
{
    return {SimplicialComplex::from_maximal({{0, 1}, {2, 3}}),
            {{"a0", Label::In, point(0)},
             {"a1", Label::Out, point(1)},
             {"b0", Label::In, point(2)},
             {"b1", Label::Out, point(3)}}};
}

MarkedComplex two_paths()
{
    return {SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {3, 4}, {4, 5}}),
            {{"a0", Label::In, point(0)},
             {"a1", Label::Out, point(2)},
             {"b0", Label::In, point(3)},
             {"b1", Label::Out, point(5)}}};
}

MarkedComplex minimal_annulus()
{
    return {SimplicialComplex::from_maximal({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}}),
            {{"B", Label::In, ring(0, 1, 2)}, {"T", Label::Out, ring(3, 4, 5)}}};
}

ErrorKind glue_error(const GluingSpec& spec)
{
    try {
        glue(spec);
    }
    catch (const Error& e) {
        return e.kind();
    }
    FAIL("glue succeeded unexpectedly");
    return ErrorKind::InvalidComplex;
}

SimplicialComplex image_of(const SimplicialMap& f, const SimplicialComplex& sub)
{
    std::vector<Simplex> out;
    for (const auto& s : sub.simplices())
        out.push_back(image(f.vertex_map, s));
    return SimplicialComplex::from_maximal(out);
}

}  // namespace

TEST_CASE("self-gluing a path yields a circle")
{
    const auto g = glue({path3(), {"A"}, {"B"}, {{0, 3}}});
    REQUIRE(g.target.complex == ring(0, 1, 2));
    REQUIRE(g.target.boundary.empty());
    REQUIRE(euler_combinatorial(g.spec.source.complex) == 1);
    REQUIRE(euler_combinatorial(g.target.complex) == 0);
    REQUIRE(check_conditions(g).ok());
    REQUIRE_FALSE(validate(g.target));
}

TEST_CASE("mutual gluing of two intervals yields a path")
{
    const auto g = glue({two_intervals(), {"a1"}, {"b0"}, {{1, 2}}});
    REQUIRE(euler_combinatorial(g.target.complex) == 1);
    REQUIRE(g.target.boundary.size() == 2);
    REQUIRE(find_isomorphism(g.target.complex, SimplicialComplex::from_maximal({{0, 1}, {1, 2}})));
    REQUIRE(check_conditions(g).ok());
}

TEST_CASE("the identified class takes the minimum id")
{
    const auto g = glue({two_intervals(), {"a1"}, {"b0"}, {{1, 2}}});
    REQUIRE(g.f.vertex_map.at(1) == 1);
    REQUIRE(g.f.vertex_map.at(2) == 1);
    REQUIRE(g.target.complex.vertices() == std::set<Vertex>{0, 1, 3});
}

TEST_CASE("minimal cylinder self-gluing is not simplicial")
{
    REQUIRE(glue_error({minimal_annulus(), {"B"}, {"T"}, {{0, 3}, {1, 4}, {2, 5}}})
            == ErrorKind::NonSimplicialQuotient);
}

TEST_CASE("two-edge cycle from single-edge intervals is not simplicial")
{
    const auto first = glue({two_intervals(), {"a1"}, {"b0"}, {{1, 2}}});
    REQUIRE(glue_error({first.target, {"a0"}, {"b1"}, {{0, 3}}}) == ErrorKind::NonSimplicialQuotient);
}

TEST_CASE("glue input errors")
{
    REQUIRE(glue_error({path3(), {"A"}, {"A"}, {{0, 0}}}) == ErrorKind::NotDisjoint);
    REQUIRE(glue_error({path3(), {}, {"B"}, {}}) == ErrorKind::NotDisjoint);
    REQUIRE(glue_error({path3(), {"A"}, {"B"}, {{0, 2}}}) == ErrorKind::NotIsomorphism);
    REQUIRE(glue_error({path3(), {"A"}, {"B"}, {}}) == ErrorKind::NotIsomorphism);
    REQUIRE(glue_error({path3(), {"A"}, {"Q"}, {{0, 3}}}) == ErrorKind::UnknownComponent);

    MarkedComplex same_label = path3();
    same_label.boundary[1].label = Label::In;
    REQUIRE(glue_error({same_label, {"A"}, {"B"}, {{0, 3}}}) == ErrorKind::NotIsomorphism);

    const MarkedComplex edge_to_point{SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
                                      {{"A", Label::In, SimplicialComplex::from_maximal({{0, 1}})},
                                       {"B", Label::Out, point(4)}}};
    REQUIRE(glue_error({edge_to_point, {"A"}, {"B"}, {{0, 4}, {1, 4}}}) == ErrorKind::NotIsomorphism);
}

TEST_CASE("check_conditions: identity fails condition 4")
{
    const GluingSpec spec{path3(), {"A"}, {"B"}, {{0, 3}}};
    const auto report = check_conditions(identity_map(spec.source.complex), spec, {});
    REQUIRE(report.failed == 4);
}

TEST_CASE("check_conditions: constant map fails condition 2")
{
    const MarkedComplex path2{SimplicialComplex::from_maximal({{0, 1}, {1, 2}}),
                              {{"A", Label::In, point(0)}, {"B", Label::Out, point(2)}}};
    const GluingSpec spec{path2, {"A"}, {"B"}, {{0, 2}}};
    const SimplicialMap constant{path2.complex, point(0), {{0, 0}, {1, 0}, {2, 0}}};
    REQUIRE(check_conditions(constant, spec, {}).failed == 2);
}

TEST_CASE("check_conditions: non-surjective map fails condition 1")
{
    const GluingSpec spec{path3(), {"A"}, {"B"}, {{0, 3}}};
    auto g = glue(spec);
    const auto bigger = SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}, {7}});
    REQUIRE(check_conditions({spec.source.complex, bigger, g.f.vertex_map}, spec, {}).failed == 1);
}

TEST_CASE("check_conditions: dropping a boundary component fails condition 3")
{
    const auto g = glue({two_intervals(), {"a1"}, {"b0"}, {{1, 2}}});
    auto boundary = g.target.boundary;
    boundary.pop_back();
    REQUIRE(check_conditions(g.f, g.spec, boundary).failed == 3);
}

TEST_CASE("two-stage gluing equals the one-shot gluing")
{
    const auto g1 = glue({two_paths(), {"a1"}, {"b0"}, {{2, 3}}});
    const auto g2 = glue({g1.target, {"a0"}, {"b1"}, {{0, 5}}});
    const auto c = compose(g1, g2);
    REQUIRE(check_conditions(c).ok());
    REQUIRE(c.target == g2.target);

    const auto one_shot = glue({two_paths(), {"a1", "a0"}, {"b0", "b1"}, {{2, 3}, {0, 5}}});
    REQUIRE(one_shot.target == c.target);
    REQUIRE(one_shot.f == c.f);
    REQUIRE(canonical(one_shot.spec) == canonical(c.spec));

    const long long chi0 = euler_combinatorial(two_paths().complex);
    REQUIRE(euler_combinatorial(c.target.complex) == chi0 - 1 - 1);
    REQUIRE(betti(c.target.complex) == BettiVector{1, 1});
}

TEST_CASE("identity laws for composition")
{
    const auto g = glue({path3(), {"A"}, {"B"}, {{0, 3}}});
    REQUIRE(compose(g, identity(g.target)) == g);
    REQUIRE(compose(identity(g.spec.source), g) == g);
}

TEST_CASE("composition with nontrivial isomorphisms")
{
    const auto m = two_paths();
    std::map<Vertex, Vertex> shift;
    for (Vertex v : m.complex.vertices())
        shift[v] = v + 10;
    MarkedComplex shifted{relabel(m.complex, shift), {}};
    for (const auto& b : m.boundary)
        shifted.boundary.push_back({b.name, b.label, relabel(b.complex, shift)});
    const auto h = make_isomorphism(m, shifted, shift);

    const auto g = glue({shifted, {"a1"}, {"b0"}, {{12, 13}}});
    const auto hg = compose(h, g);
    REQUIRE(check_conditions(hg).ok());
    REQUIRE(hg.spec.source == m);
    REQUIRE(hg.spec.phi == std::map<Vertex, Vertex>{{2, 3}});
    REQUIRE(hg.target == g.target);

    const auto back = make_isomorphism(shifted, m, inverse(h.f).vertex_map);
    REQUIRE(compose(h, back) == identity(m));

    std::map<Vertex, Vertex> swap_ids;
    for (Vertex v : g.target.complex.vertices())
        swap_ids[v] = -v;
    MarkedComplex negated{relabel(g.target.complex, swap_ids), {}};
    for (const auto& b : g.target.boundary)
        negated.boundary.push_back({b.name, b.label, relabel(b.complex, swap_ids)});
    const auto gh = compose(g, make_isomorphism(g.target, negated, swap_ids));
    REQUIRE(check_conditions(gh).ok());
    REQUIRE(gh.target == negated);
}

TEST_CASE("non-composable pairs are rejected")
{
    const auto g = glue({path3(), {"A"}, {"B"}, {{0, 3}}});
    const auto other = glue({two_intervals(), {"a1"}, {"b0"}, {{1, 2}}});
    try {
        compose(g, other);
        FAIL("expected an exception");
    }
    catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NotComposable);
    }
    REQUIRE_THROWS_AS(compose(identity(two_paths()), g), Error);
}

TEST_CASE("composition is associative on a triple")
{
    const MarkedComplex m{SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}}),
                          {{"p0", Label::In, point(0)},
                           {"p2", Label::Out, point(2)},
                           {"p3", Label::In, point(3)},
                           {"p5", Label::Out, point(5)},
                           {"p6", Label::In, point(6)},
                           {"p8", Label::Out, point(8)}}};
    const auto g1 = glue({m, {"p2"}, {"p3"}, {{2, 3}}});
    const auto g2 = glue({g1.target, {"p5"}, {"p6"}, {{5, 6}}});
    const auto g3 = glue({g2.target, {"p0"}, {"p8"}, {{0, 8}}});
    const auto left = compose(compose(g1, g2), g3);
    const auto right = compose(g1, compose(g2, g3));
    REQUIRE(left == right);
    REQUIRE(check_conditions(left).ok());
    REQUIRE(euler_combinatorial(left.target.complex) == 0);
}

TEST_CASE("mutual gluing as a unary gluing of a disjoint union")
{
    const MarkedComplex i{SimplicialComplex::from_maximal({{0, 1}}),
                          {{"s", Label::In, point(0)}, {"t", Label::Out, point(1)}}};
    const auto ii = disjoint_union(i, i);
    const auto& t = component(ii, "t").complex;
    const auto& s2 = component(ii, ii.boundary[2].name).complex;
    const auto g = glue({ii, {"t"}, {ii.boundary[2].name}, {{*t.vertices().begin(), *s2.vertices().begin()}}});
    REQUIRE(find_isomorphism(g.target.complex, SimplicialComplex::from_maximal({{0, 1}, {1, 2}})));
}

TEST_CASE("corpus gluings satisfy every condition and the excision isomorphism")
{
    const auto corpus = load_corpus(TQFT_CORPUS_DIR);
    REQUIRE_FALSE(corpus.gluings.empty());
    for (const auto& [name, g] : corpus.gluings) {
        INFO(name);
        REQUIRE(check_conditions(g).ok());
        REQUIRE_FALSE(validate(g.target));
        REQUIRE(euler_combinatorial(g.target.complex)
                == euler_combinatorial(g.spec.source.complex)
                       - euler_combinatorial(boundary_union(g.spec.source, g.spec.sigma2)));

        std::vector<std::string> both = g.spec.sigma1;
        both.insert(both.end(), g.spec.sigma2.begin(), g.spec.sigma2.end());
        const auto rel_source = betti(g.spec.source.complex, boundary_union(g.spec.source, both));
        const auto nu_sigma1 = image_of(g.f, boundary_union(g.spec.source, g.spec.sigma1));
        REQUIRE(rel_source == betti(g.target.complex, nu_sigma1));
    }
}
