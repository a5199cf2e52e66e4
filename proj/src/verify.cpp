#include "tqft/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "tqft/error.hpp"
#include "tqft/homology.hpp"
#include "tqft/io.hpp"
#include "tqft/quinn.hpp"
#include "tqft/statesum.hpp"
#include "tqft/vect.hpp"

namespace tqft {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body`, which fills in passed/detail, and records the wall time.
CheckResult timed(std::string id, std::string title, double limit,
                  const std::function<void(CheckResult&)>& body)
{
    CheckResult r{std::move(id), std::move(title), true, "", 0.0, limit};
    const auto start = Clock::now();
    try {
        body(r);
    }
    catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit > 0 && r.seconds > limit) {
        r.passed = false;
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("exceeded time limit");
    }
    return r;
}

void fail(CheckResult& r, const std::string& why)
{
    if (r.passed)
        r.detail = why;
    r.passed = false;
}

std::string format_betti(const BettiVector& b)
{
    std::string out = "(";
    for (std::size_t i = 0; i < b.size(); ++i)
        out += (i ? "," : "") + std::to_string(b[i]);
    return out + ")";
}

long long betti_at(const BettiVector& b, std::size_t n)
{
    return n < b.size() ? b[n] : 0;
}

const Surface2D* find_surface(const Corpus& corpus, const std::string& name)
{
    for (const auto& s : corpus.surfaces)
        if (s.name == name)
            return &s.surface;
    return nullptr;
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    return Rational(num(rng), den(rng));
}

// Two-piece decomposition of a mutual gluing: the components of M holding
// Sigma1 and Sigma2, when M has exactly two components.
std::optional<std::pair<SimplicialComplex, SimplicialComplex>> two_pieces(const GluingMorphism& g)
{
    auto parts = connected_components(g.spec.source.complex);
    if (parts.size() != 2)
        return std::nullopt;
    const auto u1 = boundary_union(g.spec.source, g.spec.sigma1);
    const auto u2 = boundary_union(g.spec.source, g.spec.sigma2);
    const bool first_has_1 = u1.is_subcomplex_of(parts[0]);
    const bool first_has_2 = u2.is_subcomplex_of(parts[0]);
    if (first_has_1 == first_has_2)
        return std::nullopt;
    return std::make_pair(parts[0], parts[1]);
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

CheckResult circle_criterion()
{
    // Timed separately: the bound applies to computing the invariant itself.
    CheckResult r = timed("1", "d=0 circle invariant Z_S1 = n", 1e-3, [](CheckResult& r) {
        if (circle_invariant(2) != 2)
            fail(r, "circle_invariant(2) != 2");
    });
    if (!r.passed)
        return r;
    for (int n = 1; n <= 8; ++n)
        if (circle_invariant(n) != n)
            fail(r, "circle_invariant(" + std::to_string(n) + ") != " + std::to_string(n));
    if (r.passed)
        r.detail = "Z_S1 = 2 for n=2; Z_S1 = n for n in 1..8";
    return r;
}

CheckResult snake_criterion()
{
    return timed("2", "snake identity and trace closure", 1.0, [](CheckResult& r) {
        for (int n = 1; n <= 8; ++n)
            if (snake(n) != RationalMatrix::Identity(n, n))
                fail(r, "snake identity fails for n=" + std::to_string(n));
        for (int d = 1; d <= 64; ++d)
            if (trace_closure(RationalMatrix::Identity(d, d)) != d)
                fail(r, "trace_closure(id_" + std::to_string(d) + ") != " + std::to_string(d));
        for (int n = 1; n <= 3; ++n)
            for (std::size_t k = 0; k <= 3; ++k) {
                const auto v = space_of(SignedPointConfig(k, Orientation::Positive), n);
                if (trace_closure(RationalMatrix::Identity(v.dimension, v.dimension)) != v.dimension)
                    fail(r, "trace closure over a tensor power disagrees with its dimension");
            }
        if (r.passed)
            r.detail = "snake = id for n<=8; tr(id_d) = d for d<=64";
    });
}

CheckResult euler_poincare_criterion(const Corpus& corpus, std::uint64_t seed)
{
    return timed("3", "Euler-Poincare on corpus + 200 random complexes", 10.0, [&](CheckResult& r) {
        std::size_t checked = 0;
        auto check = [&](const SimplicialComplex& c, const std::string& name) {
            const long long comb = euler_combinatorial(c);
            const auto b = betti(c);
            if (euler_from_betti(b) != comb)
                fail(r, name + ": combinatorial chi " + std::to_string(comb) + " vs homological "
                            + std::to_string(euler_from_betti(b)));
            ++checked;
        };
        for (const auto& c : corpus.complexes)
            check(c.complex.complex, c.name);
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 200; ++i)
            check(random_complex(rng, 12), "random complex #" + std::to_string(i));
        if (r.passed)
            r.detail = std::to_string(checked) + " complexes agree";
    });
}

CheckResult gluing_euler_criterion(const Corpus& corpus)
{
    return timed("4", "gluing Euler formulas and Betti identity", 10.0, [&](CheckResult& r) {
        std::size_t two_piece = 0;
        std::size_t betti_failures = 0;
        std::string first_betti_failure;
        for (const auto& [name, g] : corpus.gluings) {
            const auto sigma2 = boundary_union(g.spec.source, g.spec.sigma2);
            const long long chi_m = euler_combinatorial(g.spec.source.complex);
            const long long chi_t = euler_combinatorial(g.target.complex);
            const long long chi_s = euler_combinatorial(sigma2);
            if (chi_t != chi_m - chi_s)
                fail(r, name + ": chi(M_phi) = " + std::to_string(chi_t) + " but chi(M) - chi(Sigma2) = "
                            + std::to_string(chi_m - chi_s));
            const auto b_m = betti(g.spec.source.complex);
            const auto b_t = betti(g.target.complex);
            const auto b_s = betti(sigma2);
            if (euler_from_betti(b_t) != euler_from_betti(b_m) - euler_from_betti(b_s))
                fail(r, name + ": homological chi formula fails");

            if (auto pieces = two_pieces(g)) {
                ++two_piece;
                const long long lhs = chi_t;
                const long long rhs = euler_combinatorial(pieces->first)
                                      + euler_combinatorial(pieces->second) - chi_s;
                if (lhs != rhs)
                    fail(r, name + ": mutual gluing chi " + std::to_string(lhs) + " vs "
                                + std::to_string(rhs));
            }

            const std::size_t top = std::max({b_m.size(), b_t.size(), b_s.size()});
            for (std::size_t n = 0; n < top; ++n) {
                const long long expected = betti_at(b_m, n) - betti_at(b_s, n);
                if (betti_at(b_t, n) != expected) {
                    if (betti_failures++ == 0)
                        first_betti_failure = name + " at n=" + std::to_string(n) + ": b(M_phi)="
                                              + format_betti(b_t) + ", b(M)=" + format_betti(b_m)
                                              + ", b(Sigma2)=" + format_betti(b_s);
                    break;
                }
            }
        }
        if (betti_failures)
            fail(r, "Betti identity b_n(M_phi) = b_n(M) - b_n(Sigma2) fails on "
                        + std::to_string(betti_failures) + " of "
                        + std::to_string(corpus.gluings.size()) + " gluings; first: "
                        + first_betti_failure);
        if (r.passed)
            r.detail = std::to_string(corpus.gluings.size()) + " gluings (" + std::to_string(two_piece)
                       + " two-piece) satisfy every formula";
        else
            r.detail += " [chi formulas hold on all " + std::to_string(corpus.gluings.size()) + " gluings]";
    });
}

CheckResult composition_criterion(const Corpus& corpus)
{
    return timed("5", "gluing-morphism conditions and composition", 5.0, [&](CheckResult& r) {
        std::size_t composites = 0;
        for (const auto& [name, g] : corpus.gluings) {
            if (auto report = check_conditions(g); !report.ok())
                fail(r, name + " fails condition " + std::to_string(report.failed) + ": " + report.detail);
            if (compose(g, identity(g.target)) != g || compose(identity(g.spec.source), g) != g)
                fail(r, name + ": identity law fails");
        }
        for (const auto& chain : corpus.chains) {
            const auto& st = chain.stages;
            for (std::size_t i = 0; i < st.size(); ++i) {
                GluingMorphism acc = st[i];
                for (std::size_t j = i + 1; j < st.size(); ++j) {
                    acc = compose(acc, st[j]);
                    ++composites;
                    const std::string label = chain.name + "[" + std::to_string(i + 1) + ".."
                                              + std::to_string(j + 1) + "]";
                    if (auto report = check_conditions(acc); !report.ok())
                        fail(r, label + " composite fails condition " + std::to_string(report.failed));
                    if (!same_object(acc.target, st[j].target))
                        fail(r, label + ": composite target differs from the staged target");
                    const GluingMorphism one_shot = glue(acc.spec);
                    if (one_shot.target != acc.target || one_shot.f != acc.f)
                        fail(r, label + ": one-shot gluing differs from the composite");
                }
            }
            for (std::size_t i = 0; i + 2 < st.size(); ++i) {
                const auto left = compose(compose(st[i], st[i + 1]), st[i + 2]);
                const auto right = compose(st[i], compose(st[i + 1], st[i + 2]));
                if (left != right)
                    fail(r, chain.name + ": composition is not associative at stage " + std::to_string(i + 1));
            }
        }
        if (composites == 0)
            fail(r, "corpus has no composable gluing pairs");
        if (r.passed)
            r.detail = std::to_string(corpus.gluings.size()) + " gluings, " + std::to_string(composites)
                       + " composites match one-shot gluings";
    });
}

CheckResult quinn_criterion(const Corpus& corpus, std::uint64_t seed)
{
    return timed("6", "Quinn functoriality iff c1+c2+c3+c4=0", 10.0, [&](CheckResult& r) {
        const auto morphisms = corpus.morphisms();
        for (const auto& name : {"euler", "skew", "balanced"})
            if (auto cx = verify_functoriality(morphisms, preset(name)))
                fail(r, std::string(name) + " preset fails on " + corpus.gluings[cx->index].name);

        bool has_nonzero = false;
        for (const auto& g : morphisms)
            if (euler_combinatorial(boundary_union(g.spec.source, g.spec.sigma2)) != 0)
                has_nonzero = true;
        if (!has_nonzero)
            fail(r, "corpus lacks a gluing with chi(Sigma2) != 0");

        std::mt19937_64 rng(seed);
        for (int i = 0; i < 100; ++i) {
            EulerTheoryParams p{random_rational(rng), random_rational(rng), random_rational(rng), 0};
            p.c4 = -(p.c1 + p.c2 + p.c3);
            if (!check_constraint(p) || verify_functoriality(morphisms, p))
                fail(r, "constrained parameters #" + std::to_string(i) + " are not functorial");
        }
        for (int i = 0; i < 100; ++i) {
            EulerTheoryParams p{random_rational(rng), random_rational(rng), random_rational(rng), 0};
            Rational delta = random_rational(rng);
            if (delta == 0)
                delta = 1;
            p.c4 = -(p.c1 + p.c2 + p.c3) + delta;
            if (check_constraint(p) || !verify_functoriality(morphisms, p))
                fail(r, "unconstrained parameters #" + std::to_string(i) + " found no counterexample");
        }
        if (r.passed)
            r.detail = "3 presets + 100 constrained pass; 100 unconstrained each yield a counterexample";
    });
}

CheckResult statesum_criterion(const Corpus& corpus)
{
    return timed("7", "state sums on pillowcase sphere and 2-triangle torus", 1.0, [&](CheckResult& r) {
        const Surface2D* sphere = find_surface(corpus, "pillowcase");
        const Surface2D* torus = find_surface(corpus, "torus2");
        if (!sphere || !torus) {
            fail(r, "corpus lacks pillowcase or torus2");
            return;
        }
        struct Case
        {
            const Surface2D* surface;
            const char* surface_name;
            FiniteGroup group;
            const char* group_name;
            Rational expected;
        };
        const std::vector<Case> cases{
            {sphere, "pillowcase", FiniteGroup::cyclic(2), "Z/2", Rational(1, 2)},
            {sphere, "pillowcase", FiniteGroup::cyclic(3), "Z/3", Rational(1, 3)},
            {sphere, "pillowcase", FiniteGroup::symmetric3(), "S3", Rational(1, 6)},
            {torus, "torus2", FiniteGroup::cyclic(2), "Z/2", Rational(2)},
            {torus, "torus2", FiniteGroup::symmetric3(), "S3", Rational(3)},
        };
        std::string summary;
        for (const auto& c : cases) {
            const Rational z = partition_function(*c.surface, c.group);
            if (z != c.expected)
                fail(r, std::string("Z(") + c.surface_name + ", " + c.group_name + ") = " + to_string(z)
                            + ", expected " + to_string(c.expected));
            if (count_admissible_naive(*c.surface, c.group) != count_admissible(*c.surface, c.group))
                fail(r, std::string("backtracking and naive counts differ on ") + c.surface_name);
            summary += std::string(summary.empty() ? "" : ", ") + "Z(" + c.surface_name + "," + c.group_name
                       + ")=" + to_string(z);
        }
        if (r.passed)
            r.detail = summary;
    });
}

CheckResult pachner_criterion(const Corpus& corpus, std::uint64_t seed)
{
    return timed("8", "Pachner invariance over 20 random moves", 60.0, [&](CheckResult& r) {
        std::size_t one_three = 0;
        std::size_t two_two = 0;
        std::size_t naive_checks = 0;
        std::uint64_t stream = 0;
        for (const char* name : {"pillowcase", "torus2_sub"}) {
            const Surface2D* start = find_surface(corpus, name);
            if (!start) {
                fail(r, std::string("corpus lacks ") + name);
                continue;
            }
            for (int order : {2, 3}) {
                const auto g = FiniteGroup::cyclic(order);
                std::mt19937_64 rng(seed + stream++);
                Surface2D s = *start;
                const Rational z0 = partition_function(s, g);
                for (int step = 0; step < 20; ++step) {
                    const PachnerMove move = random_pachner_move(s, rng);
                    (move.kind == PachnerMove::Kind::OneThree ? one_three : two_two)++;
                    s = apply(s, move);
                    if (auto why = validate(s)) {
                        fail(r, std::string(name) + ": invalid surface after " + to_string(move) + ": " + *why);
                        break;
                    }
                    const std::uint64_t count = count_admissible(s, g);
                    const Rational z = partition_function(s, g);
                    if (z != z0)
                        fail(r, std::string(name) + " Z/" + std::to_string(order) + ": Z changed from "
                                    + to_string(z0) + " to " + to_string(z) + " after " + to_string(move));
                    if (colouring_space_size(s, g) <= 10'000'000) {
                        ++naive_checks;
                        if (count_admissible_naive(s, g) != count)
                            fail(r, std::string(name) + ": naive and backtracking counts differ");
                    }
                }
            }
        }
        if (one_three == 0 || two_two == 0)
            fail(r, "move sequence did not mix 1-3 and 2-2 moves");
        if (r.passed)
            r.detail = std::to_string(one_three) + " 1-3 and " + std::to_string(two_two)
                       + " 2-2 moves; Z constant; " + std::to_string(naive_checks) + " naive cross-checks";
    });
}

CheckResult multiplicativity_criterion(const Corpus& corpus)
{
    return timed("9", "multiplicativity under disjoint union", 5.0, [&](CheckResult& r) {
        const std::vector<FiniteGroup> groups{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                              FiniteGroup::symmetric3()};
        std::size_t pairs = 0;
        for (const auto& g : groups) {
            std::vector<Rational> z;
            for (const auto& s : corpus.surfaces)
                z.push_back(partition_function(s.surface, g));
            for (std::size_t i = 0; i < corpus.surfaces.size(); ++i)
                for (std::size_t j = i; j < corpus.surfaces.size(); ++j) {
                    ++pairs;
                    const auto both = disjoint_union(corpus.surfaces[i].surface, corpus.surfaces[j].surface);
                    if (partition_function(both, g) != z[i] * z[j])
                        fail(r, "Z(" + corpus.surfaces[i].name + " u " + corpus.surfaces[j].name
                                    + ") != product");
                }
        }
        const std::vector<EulerTheoryParams> params{EulerTheoryParams::euler(), EulerTheoryParams::skew_euler(),
                                                    EulerTheoryParams::balanced(),
                                                    {Rational(2, 3), Rational(-5, 7), 1, Rational(1, 4)}};
        std::vector<const NamedComplex*> marked;
        for (const auto& c : corpus.complexes)
            if (c.name.find('.') == std::string::npos || c.name.ends_with(".source"))
                marked.push_back(&c);
        for (std::size_t i = 0; i < marked.size(); ++i)
            for (std::size_t j = i; j < marked.size(); ++j) {
                ++pairs;
                const auto both = disjoint_union(marked[i]->complex, marked[j]->complex);
                for (const auto& p : params)
                    if (z_value(both, p) != z_value(marked[i]->complex, p) * z_value(marked[j]->complex, p))
                        fail(r, "z_value not multiplicative on " + marked[i]->name + " u " + marked[j]->name);
            }
        if (r.passed)
            r.detail = std::to_string(pairs) + " disjoint-union pairs multiply exactly";
    });
}

// ---------------------------------------------------------------------------
// Manifest expectations
// ---------------------------------------------------------------------------

nlohmann::json betti_json(const BettiVector& b)
{
    return nlohmann::json(b);
}

std::vector<std::string> split_names(const std::string& list)
{
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

// Computes the actual value of an expectation key for a marked complex.
std::optional<nlohmann::json> complex_value(const MarkedComplex& m, const std::string& key)
{
    if (key == "chi")
        return euler_combinatorial(m.complex);
    if (key == "betti")
        return betti_json(betti(m.complex));
    if (key.starts_with("chi_rel:"))
        return euler_relative(m, split_names(key.substr(8)));
    if (key.starts_with("betti_rel:"))
        return betti_json(betti(m.complex, boundary_union(m, split_names(key.substr(10)))));
    if (key.starts_with("z:")) {
        const auto p = preset(key.substr(2));
        return to_string(z_value(m, p));
    }
    return std::nullopt;
}

}  // namespace

SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices)
{
    std::uniform_int_distribution<int> vertex_count(1, max_vertices);
    const int n = vertex_count(rng);
    std::uniform_int_distribution<int> simplex_count(1, 8);
    std::uniform_int_distribution<int> dim(0, std::min(3, n - 1));
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i)
        ids[i] = i;
    std::vector<Simplex> maximal;
    const int k = simplex_count(rng);
    for (int i = 0; i < k; ++i) {
        std::shuffle(ids.begin(), ids.end(), rng);
        maximal.emplace_back(ids.begin(), ids.begin() + dim(rng) + 1);
    }
    std::bernoulli_distribution isolated(0.2);
    for (int v = 0; v < n; ++v)
        if (isolated(rng))
            maximal.push_back({v});
    return SimplicialComplex::from_maximal(maximal);
}

std::vector<CheckResult> check_expectations(const Corpus& corpus)
{
    std::vector<CheckResult> out;
    std::map<std::string, const MarkedComplex*> complexes;
    for (const auto& c : corpus.complexes)
        complexes[c.name] = &c.complex;
    std::map<std::string, const GluingMorphism*> gluings;
    for (const auto& g : corpus.gluings)
        gluings[g.name] = &g.morphism;
    std::map<std::string, const GluingChain*> chains;
    for (const auto& c : corpus.chains)
        chains[c.name] = &c;

    for (const auto& entry : corpus.entries) {
        out.push_back(timed(entry.name, "expected invariants of " + entry.name, 0.0, [&](CheckResult& r) {
            std::size_t checked = 0;
            for (const auto& [key, spec] : entry.expect.items()) {
                const auto& expected = spec.at("value");
                std::optional<nlohmann::json> actual;
                if (entry.kind == "complex") {
                    actual = complex_value(*complexes.at(entry.name), key);
                }
                else if (entry.kind == "gluing") {
                    const auto& g = *gluings.at(entry.name);
                    if (key.starts_with("source."))
                        actual = complex_value(g.spec.source, key.substr(7));
                    else if (key.starts_with("target."))
                        actual = complex_value(g.target, key.substr(7));
                    else if (key == "chi_sigma2")
                        actual = euler_combinatorial(boundary_union(g.spec.source, g.spec.sigma2));
                }
                else if (entry.kind == "chain") {
                    const auto& chain = *chains.at(entry.name);
                    if (key.starts_with("final.") && !chain.stages.empty())
                        actual = complex_value(chain.stages.back().target, key.substr(6));
                }
                else if (entry.kind == "gluing-error") {
                    if (key == "error") {
                        try {
                            glue(io::parse_gluing(io::load_json(entry.file)));
                            actual = "none";
                        }
                        catch (const Error& e) {
                            actual = to_string(e.kind());
                        }
                    }
                }
                else if (entry.kind == "surface") {
                    const Surface2D* s = find_surface(corpus, entry.name);
                    if (key == "chi")
                        actual = euler_characteristic(*s);
                    else if (key.starts_with("Z:"))
                        actual = to_string(partition_function(*s, io::parse_group_argument(key.substr(2))));
                }
                if (!actual) {
                    fail(r, "unknown expectation key '" + key + "'");
                    continue;
                }
                ++checked;
                if (*actual != expected)
                    fail(r, key + " = " + actual->dump() + ", expected " + expected.dump() + " ["
                                + spec.at("tag").get<std::string>() + "]");
            }
            if (r.passed)
                r.detail = std::to_string(checked) + " expected values match";
        }));
    }
    return out;
}

CheckResult check_round_trip(const Corpus& corpus)
{
    return timed("round-trip", "canonical JSON round trip of every corpus file", 0.0, [&](CheckResult& r) {
        for (const auto& entry : corpus.entries) {
            std::ifstream in(entry.file);
            std::stringstream text;
            text << in.rdbuf();
            const auto j = nlohmann::json::parse(text.str());
            std::string again;
            if (entry.kind == "surface") {
                const auto s = io::parse_surface(j);
                again = io::dump_canonical(io::to_json(s));
                if (io::parse_surface(io::to_json(s)) != s)
                    fail(r, entry.name + ": parse(serialize(x)) != x");
            }
            else if (entry.kind == "gluing" || entry.kind == "gluing-error") {
                const auto g = io::parse_gluing(j);
                again = io::dump_canonical(io::to_json(g));
                if (io::parse_gluing(io::to_json(g)) != g)
                    fail(r, entry.name + ": parse(serialize(x)) != x");
            }
            else {
                const auto m = io::parse_complex(j);
                again = io::dump_canonical(io::to_json(m));
                if (io::parse_complex(io::to_json(m)) != m)
                    fail(r, entry.name + ": parse(serialize(x)) != x");
            }
            if (again != text.str())
                fail(r, entry.file.filename().string() + " is not in canonical form");
        }
        if (r.passed)
            r.detail = std::to_string(corpus.entries.size()) + " files reproduce byte for byte";
    });
}

std::vector<CheckResult> acceptance_suite(const Corpus& corpus, std::uint64_t seed)
{
    return {
        circle_criterion(),
        snake_criterion(),
        euler_poincare_criterion(corpus, seed),
        gluing_euler_criterion(corpus),
        composition_criterion(corpus),
        quinn_criterion(corpus, seed),
        statesum_criterion(corpus),
        pachner_criterion(corpus, seed),
        multiplicativity_criterion(corpus),
    };
}

}  // namespace tqft
