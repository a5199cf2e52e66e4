// Command-line front end.
//
// Exit status: 0 on success or pass, 1 when a checked property is violated,
// 2 on malformed input or usage errors.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tqft/corpus.hpp"
#include "tqft/error.hpp"
#include "tqft/gluing.hpp"
#include "tqft/homology.hpp"
#include "tqft/io.hpp"
#include "tqft/quinn.hpp"
#include "tqft/statesum.hpp"
#include "tqft/vect.hpp"
#include "tqft/verify.hpp"

namespace fs = std::filesystem;
using namespace tqft;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct Options
{
    std::uint64_t seed = 1;
    bool json = false;
};

std::string format_betti(const BettiVector& b)
{
    std::string out = "(";
    for (std::size_t i = 0; i < b.size(); ++i)
        out += (i ? "," : "") + std::to_string(b[i]);
    return out + ")";
}

MarkedComplex load_valid_complex(const std::string& path)
{
    auto m = io::parse_complex(io::load_json(path));
    if (auto v = validate(m))
        throw io::InputError(path + ": " + v->message);
    return m;
}

Surface2D load_valid_surface(const std::string& path)
{
    auto s = io::parse_surface(io::load_json(path));
    if (auto why = validate(s))
        throw io::InputError(path + ": " + *why);
    return s;
}

int print_results(const std::vector<CheckResult>& results, const Options& opt)
{
    bool all = true;
    json report = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (opt.json) {
            report.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                              {"detail", r.detail}, {"seconds", r.seconds}});
        }
        else {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail
                      << "\n";
        }
    }
    if (opt.json)
        std::cout << report.dump(2) << "\n";
    return all ? kOk : kViolation;
}

// -- quinn parameters -------------------------------------------------------

struct QuinnArgs
{
    std::string preset;
    std::string c1, c2, c3, c4;
};

EulerTheoryParams resolve_params(const QuinnArgs& q)
{
    const bool explicit_c = !(q.c1.empty() && q.c2.empty() && q.c3.empty() && q.c4.empty());
    if (!q.preset.empty() && explicit_c)
        throw io::InputError("use either --preset or --c1..--c4, not both");
    if (!explicit_c)
        return preset(q.preset.empty() ? "euler" : q.preset);
    auto get = [](const std::string& s) { return s.empty() ? Rational(0) : parse_rational(s); };
    return {get(q.c1), get(q.c2), get(q.c3), get(q.c4)};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact TQFT workbench: Euler and homology invariants, gluing morphisms, "
                 "Quinn Euler theories, finite-group state sums and the d=0 vector-space theory"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--seed", opt.seed, "Seed for randomized checks");
    app.add_flag("--json", opt.json, "Machine-readable output");

    std::function<int()> action;

    // euler
    std::string file;
    auto* euler = app.add_subcommand("euler", "Combinatorial Euler characteristic of a complex");
    euler->add_option("file", file, "Complex JSON")->required();
    euler->callback([&] {
        action = [&] {
            const auto m = load_valid_complex(file);
            const long long chi = euler_combinatorial(m.complex);
            if (opt.json)
                std::cout << json{{"chi", chi}}.dump() << "\n";
            else
                std::cout << "chi = " << chi << "\n";
            return kOk;
        };
    });

    // homology
    std::vector<std::string> rel;
    auto* homology = app.add_subcommand("homology", "Rational Betti numbers, optionally relative");
    homology->add_option("file", file, "Complex JSON")->required();
    homology->add_option("--rel", rel, "Boundary components to take homology relative to")->delimiter(',');
    homology->callback([&] {
        action = [&] {
            const auto m = load_valid_complex(file);
            const auto b = rel.empty() ? betti(m.complex) : betti(m.complex, boundary_union(m, rel));
            const long long chi = euler_from_betti(b);
            if (opt.json)
                std::cout << json{{"betti", b}, {"chi", chi}}.dump() << "\n";
            else
                std::cout << "betti = " << format_betti(b) << "\nchi = " << chi << "\n";
            return kOk;
        };
    });

    // glue
    std::string output;
    auto* gl = app.add_subcommand("glue", "Glue Sigma1 to Sigma2 and check the morphism conditions");
    gl->add_option("file", file, "Complex JSON with sigma1, sigma2 and phi")->required();
    gl->add_option("-o,--output", output, "Write the glued complex here as canonical JSON");
    gl->callback([&] {
        action = [&] {
            const auto g = glue(io::parse_gluing(io::load_json(file)));
            const auto report = check_conditions(g);
            const long long chi_m = euler_combinatorial(g.spec.source.complex);
            const long long chi_s = euler_combinatorial(boundary_union(g.spec.source, g.spec.sigma2));
            const long long chi_t = euler_combinatorial(g.target.complex);
            if (!output.empty()) {
                std::ofstream out(output);
                out << io::dump_canonical(io::to_json(g.target));
            }
            if (opt.json) {
                std::cout << json{{"chi_source", chi_m}, {"chi_sigma2", chi_s}, {"chi_target", chi_t},
                                  {"conditions", report.ok() ? "ok" : std::to_string(report.failed)},
                                  {"target", io::to_json(g.target)}}
                                 .dump(2)
                          << "\n";
            }
            else {
                std::cout << "chi(M) = " << chi_m << "\nchi(Sigma2) = " << chi_s << "\nchi(M_phi) = " << chi_t
                          << "\nconditions: "
                          << (report.ok() ? "ok" : "condition " + std::to_string(report.failed) + " fails: "
                                                       + report.detail)
                          << "\n";
            }
            return report.ok() && chi_t == chi_m - chi_s ? kOk : kViolation;
        };
    });

    // quinn
    QuinnArgs qargs;
    auto* quinn = app.add_subcommand("quinn", "Generalized Quinn Euler theories");
    quinn->require_subcommand(1);
    quinn->add_option("--preset", qargs.preset, "euler | skew | balanced")
        ->check(CLI::IsMember({"euler", "skew", "balanced"}));
    quinn->add_option("--c1", qargs.c1, "Rational p/q");
    quinn->add_option("--c2", qargs.c2, "Rational p/q");
    quinn->add_option("--c3", qargs.c3, "Rational p/q");
    quinn->add_option("--c4", qargs.c4, "Rational p/q");
    auto* qeval = quinn->add_subcommand("eval", "Z_M of a marked complex");
    qeval->add_option("file", file, "Complex JSON")->required();
    qeval->callback([&] {
        action = [&] {
            const auto p = resolve_params(qargs);
            const auto z = z_value(load_valid_complex(file), p);
            if (opt.json)
                std::cout << json{{"exponent", to_string(z.exponent)}}.dump() << "\n";
            else
                std::cout << "Z = " << to_string(z) << "\n";
            return kOk;
        };
    });
    std::string dir;
    auto* qcheck = quinn->add_subcommand("check-functor", "Check Z(f,phi)(Z_M) = Z_{M_phi} on a directory of gluings");
    qcheck->add_option("corpus-dir", dir, "Directory of gluing JSON files")->required();
    qcheck->callback([&] {
        action = [&] {
            const auto p = resolve_params(qargs);
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(dir))
                if (e.path().extension() == ".json")
                    files.push_back(e.path());
            std::sort(files.begin(), files.end());
            std::vector<GluingMorphism> corpus;
            std::vector<fs::path> names;
            for (const auto& f : files) {
                const auto j = io::load_json(f);
                if (!j.is_object() || !j.contains("sigma1"))
                    continue;
                try {
                    corpus.push_back(glue(io::parse_gluing(j)));
                    names.push_back(f);
                }
                catch (const Error&) {
                    // Not a valid gluing; check-functor only judges accepted ones.
                }
            }
            const auto cx = verify_functoriality(corpus, p);
            if (opt.json) {
                json report{{"constraint", check_constraint(p)}, {"gluings", corpus.size()}, {"passed", !cx}};
                if (cx)
                    report["counterexample"] = {{"file", names[cx->index].filename().string()},
                                                {"glued_source", to_string(cx->glued_source)},
                                                {"target", to_string(cx->target)}};
                std::cout << report.dump(2) << "\n";
                return cx ? kViolation : kOk;
            }
            std::cout << "constraint c1+c2+c3+c4 = 0: " << (check_constraint(p) ? "satisfied" : "violated") << "\n";
            if (cx) {
                std::cout << "counterexample: " << names[cx->index].filename().string() << ": "
                          << to_string(cx->glued_source) << " != " << to_string(cx->target) << "\n";
                return kViolation;
            }
            std::cout << "pass (" << corpus.size() << " gluings)\n";
            return kOk;
        };
    });

    // statesum
    std::string group_arg;
    unsigned threads = 1;
    int moves = 20;
    auto* ss = app.add_subcommand("statesum", "Finite-group state sums on closed surfaces");
    ss->require_subcommand(1);
    ss->add_option("--group", group_arg, "cyclic:N, symmetric:3, or a group JSON file")->required();
    auto* ssz = ss->add_subcommand("z", "Partition function");
    ssz->add_option("surface", file, "Surface JSON")->required();
    ssz->add_option("--threads", threads, "Worker threads for the enumeration");
    ssz->callback([&] {
        action = [&] {
            const auto s = load_valid_surface(file);
            const auto g = io::parse_group_argument(group_arg);
            const Rational z = partition_function(s, g, threads);
            if (opt.json)
                std::cout << json{{"Z", to_string(z)}}.dump() << "\n";
            else
                std::cout << "Z = " << to_string(z) << "\n";
            return kOk;
        };
    });
    auto* ssp = ss->add_subcommand("pachner-check", "Apply random Pachner moves and check Z stays constant");
    ssp->add_option("surface", file, "Surface JSON")->required();
    ssp->add_option("--moves", moves, "Number of random moves")->check(CLI::NonNegativeNumber);
    ssp->callback([&] {
        action = [&] {
            Surface2D s = load_valid_surface(file);
            const auto g = io::parse_group_argument(group_arg);
            std::mt19937_64 rng(opt.seed);
            const Rational z0 = partition_function(s, g);
            for (int i = 0; i < moves; ++i) {
                const auto move = random_pachner_move(s, rng);
                s = apply(s, move);
                const Rational z = partition_function(s, g);
                if (z != z0) {
                    if (opt.json)
                        std::cout << json{{"Z", to_string(z0)}, {"Z_after", to_string(z)}, {"move", i + 1},
                                          {"kind", to_string(move)}, {"passed", false}}
                                         .dump(2)
                                  << "\n";
                    else
                        std::cout << "Z changed from " << to_string(z0) << " to " << to_string(z)
                                  << " after move " << i + 1 << " (" << to_string(move) << ")\n";
                    return kViolation;
                }
            }
            if (opt.json)
                std::cout << json{{"Z", to_string(z0)}, {"moves", moves}, {"passed", true}}.dump(2) << "\n";
            else
                std::cout << "Z = " << to_string(z0) << " constant over " << moves << " moves\n";
            return kOk;
        };
    });

    // vect
    long dim = 2;
    auto* vect = app.add_subcommand("vect", "The d=0 vector-space theory");
    vect->require_subcommand(1);
    auto* circle = vect->add_subcommand("circle", "Z of the circle, cap o cup");
    circle->add_option("--dim", dim, "Dimension of the point space")->check(CLI::PositiveNumber);
    circle->callback([&] {
        action = [&] {
            const std::string z = to_string(circle_invariant(dim));
            if (opt.json)
                std::cout << json{{"Z_S1", z}}.dump() << "\n";
            else
                std::cout << "Z_S1 = " << z << "\n";
            return kOk;
        };
    });
    auto* sn = vect->add_subcommand("snake", "Zig-zag identity (cap x id) o (id x cup) = id");
    sn->add_option("--dim", dim, "Dimension of the point space")->check(CLI::PositiveNumber);
    sn->callback([&] {
        action = [&] {
            const RationalMatrix m = snake(dim);
            const bool pass = m == RationalMatrix::Identity(dim, dim);
            if (opt.json) {
                std::cout << json{{"passed", pass}}.dump() << "\n";
                return pass ? kOk : kViolation;
            }
            if (pass) {
                std::cout << "snake: pass\n";
                return kOk;
            }
            std::cout << "snake: FAIL\n" << m << "\n";
            return kViolation;
        };
    });

    // corpus-verify
    std::string corpus_dir = "corpus";
    auto* cv = app.add_subcommand("corpus-verify", "Check every expected invariant and acceptance criterion");
    cv->add_option("dir", corpus_dir, "Corpus directory containing manifest.json");
    cv->callback([&] {
        action = [&] {
            const Corpus corpus = load_corpus(corpus_dir);
            auto results = check_expectations(corpus);
            results.push_back(check_round_trip(corpus));
            for (auto& r : acceptance_suite(corpus, opt.seed)) {
                r.id = "criterion-" + r.id;
                results.push_back(std::move(r));
            }
            return print_results(results, opt);
        };
    });

    // canon
    std::string kind = "complex";
    auto* canon = app.add_subcommand("canon", "Print a file in canonical JSON form");
    canon->add_option("file", file, "Input JSON")->required();
    canon->add_option("--kind", kind, "complex | gluing | surface")
        ->check(CLI::IsMember({"complex", "gluing", "surface"}));
    canon->callback([&] {
        action = [&] {
            const auto j = io::load_json(file);
            if (kind == "surface")
                std::cout << io::dump_canonical(io::to_json(io::parse_surface(j)));
            else if (kind == "gluing")
                std::cout << io::dump_canonical(io::to_json(io::parse_gluing(j)));
            else
                std::cout << io::dump_canonical(io::to_json(io::parse_complex(j)));
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        return action();
    }
    catch (const io::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    }
    catch (const tqft::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
    }
    catch (const fs::filesystem_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
    }
    return kInputError;
}
