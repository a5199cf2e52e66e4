#include "tqft/corpus.hpp"

#include "tqft/error.hpp"
#include "tqft/io.hpp"

namespace tqft {

std::vector<GluingMorphism> Corpus::morphisms() const
{
    std::vector<GluingMorphism> out;
    out.reserve(gluings.size());
    for (const auto& g : gluings)
        out.push_back(g.morphism);
    return out;
}

bool is_provenance_tag(const std::string& tag)
{
    return tag == "PAPER" || tag == "TRIVIAL" || tag == "DERIVED";
}

namespace {

GluingSpec stage_spec(const MarkedComplex& source, const nlohmann::json& stage)
{
    // A stage carries only sigma1/sigma2/phi; its source is the previous target.
    nlohmann::json j = io::to_json(source);
    for (const char* key : {"sigma1", "sigma2", "phi"})
        if (stage.contains(key))
            j[key] = stage.at(key);
    return io::parse_gluing(j);
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& directory)
{
    Corpus corpus;
    corpus.directory = directory;
    const auto manifest = io::load_json(directory / "manifest.json");
    if (!manifest.contains("entries") || !manifest.at("entries").is_array())
        throw io::InputError("manifest.json: missing 'entries' array");

    for (const auto& record : manifest.at("entries")) {
        CorpusEntry entry;
        entry.raw = record;
        entry.name = record.value("name", "");
        entry.kind = record.value("kind", "");
        entry.file = directory / record.value("file", "");
        entry.expect = record.value("expect", nlohmann::json::object());
        if (entry.name.empty())
            throw io::InputError("manifest.json: entry without a name");
        for (const auto& [key, value] : entry.expect.items())
            if (!value.contains("tag") || !is_provenance_tag(value.at("tag").get<std::string>()))
                throw io::InputError("manifest.json: " + entry.name + "." + key
                                     + " lacks a provenance tag");

        const auto doc = io::load_json(entry.file);
        if (entry.kind == "complex") {
            auto m = io::parse_complex(doc);
            if (auto v = validate(m))
                throw io::InputError(entry.file.string() + ": " + v->message);
            corpus.complexes.push_back({entry.name, std::move(m)});
        }
        else if (entry.kind == "gluing") {
            auto g = glue(io::parse_gluing(doc));
            corpus.complexes.push_back({entry.name + ".source", g.spec.source});
            corpus.complexes.push_back({entry.name + ".target", g.target});
            corpus.gluings.push_back({entry.name, std::move(g)});
        }
        else if (entry.kind == "gluing-error") {
            corpus.expected_failures.push_back(entry);
        }
        else if (entry.kind == "chain") {
            GluingChain chain{entry.name, {}};
            MarkedComplex current = io::parse_complex(doc);
            corpus.complexes.push_back({entry.name + ".source", current});
            const auto& stages = record.at("stages");
            for (std::size_t k = 0; k < stages.size(); ++k) {
                auto g = glue(stage_spec(current, stages[k]));
                current = g.target;
                corpus.complexes.push_back({entry.name + ".stage" + std::to_string(k + 1), current});
                corpus.gluings.push_back({entry.name + ".stage" + std::to_string(k + 1), g});
                chain.stages.push_back(std::move(g));
            }
            corpus.chains.push_back(std::move(chain));
        }
        else if (entry.kind == "surface") {
            auto s = io::parse_surface(doc);
            if (auto why = validate(s))
                throw io::InputError(entry.file.string() + ": " + *why);
            corpus.surfaces.push_back({entry.name, std::move(s)});
        }
        else {
            throw io::InputError("manifest.json: " + entry.name + " has unknown kind '" + entry.kind + "'");
        }
        corpus.entries.push_back(std::move(entry));
    }
    return corpus;
}

}  // namespace tqft
