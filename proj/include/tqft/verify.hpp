/**
 * Corpus-wide verification: expected invariants, codec round trips, and the
 * acceptance criteria of the workbench. Shared by `tqft corpus-verify` and
 * the acceptance test binary.
 */
#ifndef TQFT_VERIFY_HPP
#define TQFT_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tqft/corpus.hpp"

namespace tqft {

struct CheckResult
{
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0;  // seconds; 0 means unbounded
};

/// Every "expect" value of the manifest recomputed from scratch.
std::vector<CheckResult> check_expectations(const Corpus& corpus);

/// parse then serialize reproduces every corpus file byte for byte.
CheckResult check_round_trip(const Corpus& corpus);

/// The nine acceptance criteria, in order. Randomized parts draw from `seed`.
std::vector<CheckResult> acceptance_suite(const Corpus& corpus, std::uint64_t seed);

/// Face closure of a few random simplices (dimension <= 3) on at most
/// `max_vertices` vertices, plus isolated vertices.
SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices);

}  // namespace tqft

#endif
