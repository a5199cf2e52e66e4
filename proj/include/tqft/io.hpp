/**
 * JSON codecs for complexes, gluing specifications, surfaces and groups.
 *
 * Serialization is canonical: object keys sorted, simplices sorted, complexes
 * written as their maximal simplices with "closure": true, two-space indent
 * and a trailing newline. Parsing a canonical file and writing it back
 * reproduces it byte for byte.
 */
#ifndef TQFT_IO_HPP
#define TQFT_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "tqft/complex.hpp"
#include "tqft/gluing.hpp"
#include "tqft/statesum.hpp"

namespace tqft::io {

using json = nlohmann::json;

/// Malformed or unreadable input; the message carries the location.
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

json load_json(const std::filesystem::path& path);
std::string dump_canonical(const json& j);

MarkedComplex parse_complex(const json& j);
json to_json(const MarkedComplex& m);

GluingSpec parse_gluing(const json& j);
json to_json(const GluingSpec& spec);

Surface2D parse_surface(const json& j);
json to_json(const Surface2D& s);

FiniteGroup parse_group(const json& j);

/// "cyclic:N", "symmetric:3", or a path to a group JSON file.
FiniteGroup parse_group_argument(const std::string& arg);

}  // namespace tqft::io

#endif
