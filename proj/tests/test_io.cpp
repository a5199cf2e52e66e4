#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "tqft/corpus.hpp"
#include "tqft/error.hpp"
#include "tqft/io.hpp"
#include "tqft/rational.hpp"
#include "tqft/verify.hpp"

using namespace tqft;
using nlohmann::json;

TEST_CASE("rational parsing and printing")
{
    REQUIRE(parse_rational("3/6") == Rational(1, 2));
    REQUIRE(parse_rational("-1/2") == Rational(-1, 2));
    REQUIRE(parse_rational("7") == 7);
    REQUIRE(to_string(Rational(-1, 2)) == "-1/2");
    REQUIRE(to_string(Rational(4, 2)) == "2");
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
}

TEST_CASE("explicit complex format")
{
    const auto j = json::parse(R"({"vertices":[0,1,2], "simplices":[[0],[1],[2],[0,1],[1,2],[0,2]],
                                   "boundary":[{"name":"A","label":"in","simplices":[[0],[1],[0,1]]}]})");
    const auto m = io::parse_complex(j);
    REQUIRE_FALSE(validate(m));
    REQUIRE(euler_combinatorial(m.complex) == 0);
    REQUIRE(m.boundary.at(0).label == Label::In);
    REQUIRE(m.boundary.at(0).complex.count(1) == 1);
}

TEST_CASE("closure generates faces")
{
    const auto m = io::parse_complex(json::parse(R"({"closure":true, "simplices":[[2,1,0]]})"));
    REQUIRE(m.complex.simplices().size() == 7);
    REQUIRE(m.complex.contains({0, 1, 2}));
}

TEST_CASE("without closure a face-deficient complex is kept and fails validation")
{
    const auto m = io::parse_complex(json::parse(R"({"simplices":[[0,1]]})"));
    REQUIRE(validate(m.complex));
}

TEST_CASE("malformed complexes are input errors")
{
    for (const char* text : {R"([])", R"({"vertices":[0]})", R"({"simplices":[[]]})", R"({"simplices":[["a"]]})",
                             R"({"simplices":[[0]],"boundary":[{"name":"A","label":"sideways","simplices":[[0]]}]})",
                             R"({"simplices":[[0]],"boundary":[{"label":"in","simplices":[[0]]}]})"}) {
        INFO(text);
        REQUIRE_THROWS_AS(io::parse_complex(json::parse(text)), io::InputError);
    }
}

TEST_CASE("phi accepts string or integer targets")
{
    const std::string base = R"({"closure":true,"simplices":[[0,1],[1,2],[2,3]],
        "boundary":[{"name":"A","label":"in","simplices":[[0]]},{"name":"B","label":"out","simplices":[[3]]}],
        "sigma1":["A"],"sigma2":["B"],)";
    REQUIRE(io::parse_gluing(json::parse(base + R"("phi":{"0":"3"}})")).phi.at(0) == 3);
    REQUIRE(io::parse_gluing(json::parse(base + R"("phi":{"0":3}})")).phi.at(0) == 3);
    REQUIRE_THROWS_AS(io::parse_gluing(json::parse(base + R"("phi":{"zero":3}})")), io::InputError);
    REQUIRE_THROWS_AS(io::parse_gluing(json::parse(base + R"("phi":[0,3]})")), io::InputError);
}

TEST_CASE("surface format")
{
    const auto s = io::parse_surface(json::parse(
        R"({"vertex_count":1, "edges":[[0,0],[0,0],[0,0]],
            "triangles":[[[0,true],[1,true],[2,false]],[[1,true],[0,true],[2,false]]]})"));
    REQUIRE_FALSE(validate(s));
    REQUIRE(io::parse_surface(io::to_json(s)) == s);
    REQUIRE_THROWS_AS(io::parse_surface(json::parse(R"({"vertex_count":1,"edges":[],"triangles":[[[0,1]]]})")),
                      io::InputError);
}

TEST_CASE("group arguments")
{
    REQUIRE(io::parse_group_argument("cyclic:5").order() == 5);
    REQUIRE(io::parse_group_argument("symmetric:3").order() == 6);
    REQUIRE(io::parse_group(json::parse(R"({"kind":"table","mul":[[0,1],[1,0]]})")).order() == 2);
    REQUIRE_THROWS_AS(io::parse_group_argument("symmetric:4"), io::InputError);
    REQUIRE_THROWS_AS(io::parse_group_argument("cyclic:x"), io::InputError);
    REQUIRE_THROWS_AS(io::parse_group(json::parse(R"({"kind":"dihedral","n":4})")), io::InputError);
    try {
        io::parse_group(json::parse(R"({"kind":"table","mul":[[0,1],[0,1]]})"));
        FAIL("expected an exception");
    }
    catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NotAGroup);
    }
}

TEST_CASE("load_json reports the byte offset of a syntax error")
{
    const auto path = std::filesystem::temp_directory_path() / "tqft_bad.json";
    std::ofstream(path) << "{\"simplices\": [[0],}";
    try {
        io::load_json(path);
        FAIL("expected an exception");
    }
    catch (const io::InputError& e) {
        REQUIRE(std::string(e.what()).find("byte") != std::string::npos);
    }
    std::filesystem::remove(path);
}

TEST_CASE("corpus loads and every expectation carries a tag")
{
    const auto corpus = load_corpus(TQFT_CORPUS_DIR);
    REQUIRE(corpus.entries.size() >= 20);
    REQUIRE(corpus.surfaces.size() >= 3);
    REQUIRE_FALSE(corpus.chains.empty());
    for (const auto& e : corpus.entries)
        for (const auto& [key, v] : e.expect.items())
            REQUIRE(is_provenance_tag(v.at("tag").get<std::string>()));
}

TEST_CASE("corpus expectations and canonical round trip")
{
    const auto corpus = load_corpus(TQFT_CORPUS_DIR);
    for (const auto& r : check_expectations(corpus)) {
        INFO(r.id << ": " << r.detail);
        REQUIRE(r.passed);
    }
    const auto rt = check_round_trip(corpus);
    INFO(rt.detail);
    REQUIRE(rt.passed);
}

TEST_CASE("serialization is canonical regardless of input order")
{
    const auto a = io::parse_complex(json::parse(R"({"closure":true,"simplices":[[2,1],[0,1]]})"));
    const auto b = io::parse_complex(json::parse(R"({"closure":true,"simplices":[[0,1],[1,2]],"vertices":[2,0]})"));
    REQUIRE(io::dump_canonical(io::to_json(a)) == io::dump_canonical(io::to_json(b)));
}
