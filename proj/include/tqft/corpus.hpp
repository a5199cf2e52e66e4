/**
 * The bundled example corpus: complexes, gluings, multi-stage gluing chains
 * and closed surfaces, each with expected invariants tagged by provenance.
 *
 * manifest.json lists the entries:
 *
 *   {"name": ..., "kind": "complex" | "gluing" | "gluing-error" | "chain" | "surface",
 *    "file": ..., "stages": [...] (chains only),
 *    "expect": {"<key>": {"value": ..., "tag": "PAPER" | "TRIVIAL" | "DERIVED"}}}
 */
#ifndef TQFT_CORPUS_HPP
#define TQFT_CORPUS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tqft/complex.hpp"
#include "tqft/gluing.hpp"
#include "tqft/statesum.hpp"

namespace tqft {

struct CorpusEntry
{
    std::string name;
    std::string kind;
    std::filesystem::path file;
    nlohmann::json expect;  // key -> {"value", "tag"}
    nlohmann::json raw;     // the manifest record
};

struct NamedComplex
{
    std::string name;
    MarkedComplex complex;
};

struct NamedGluing
{
    std::string name;
    GluingMorphism morphism;
};

/// Successive gluings g1, g2, ... with g(k+1).source == g(k).target.
struct GluingChain
{
    std::string name;
    std::vector<GluingMorphism> stages;
};

struct NamedSurface
{
    std::string name;
    Surface2D surface;
};

struct Corpus
{
    std::filesystem::path directory;
    std::vector<CorpusEntry> entries;
    std::vector<NamedComplex> complexes;
    std::vector<NamedGluing> gluings;  // single gluings and every chain stage
    std::vector<GluingChain> chains;
    std::vector<NamedSurface> surfaces;
    std::vector<CorpusEntry> expected_failures;  // kind "gluing-error"

    /// Every gluing morphism, in corpus order.
    std::vector<GluingMorphism> morphisms() const;
};

/// Loads and validates every entry. Throws io::InputError on malformed
/// files and tqft::Error when a gluing that should succeed fails.
Corpus load_corpus(const std::filesystem::path& directory);

/// Tags every expectation must carry.
bool is_provenance_tag(const std::string& tag);

}  // namespace tqft

#endif
