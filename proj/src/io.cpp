#include "tqft/io.hpp"

#include <fstream>
#include <sstream>

#include "tqft/error.hpp"

namespace tqft::io {

namespace {

// Wraps nlohmann type/out-of-range errors with the path of the offending key.
template <typename F>
auto at_key(const std::string& where, F&& f) -> decltype(f())
{
    try {
        return f();
    }
    catch (const json::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

Simplex parse_simplex(const json& j, const std::string& where)
{
    if (!j.is_array() || j.empty())
        throw InputError(where + ": simplex must be a non-empty array of vertex ids");
    Simplex s;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw InputError(where + ": vertex ids must be integers");
        s.push_back(v.get<Vertex>());
    }
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<Simplex> parse_simplices(const json& j, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array of simplices");
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_simplex(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

SimplicialComplex build(const std::vector<Simplex>& simplices, const std::set<Vertex>& extra,
                        bool closure)
{
    if (closure) {
        std::vector<Simplex> all = simplices;
        for (Vertex v : extra)
            all.push_back({v});
        return SimplicialComplex::from_maximal(all);
    }
    std::set<Vertex> verts = extra;
    SimplexSet set;
    for (const auto& s : simplices) {
        verts.insert(s.begin(), s.end());
        set.insert(s);
    }
    return SimplicialComplex(std::move(verts), std::move(set));
}

json simplices_json(const SimplicialComplex& c)
{
    json arr = json::array();
    for (const auto& s : c.maximal_simplices())
        arr.push_back(s);
    return arr;
}

}  // namespace

json load_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    }
    catch (const json::parse_error& e) {
        throw InputError(path.string() + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

std::string dump_canonical(const json& j)
{
    return j.dump(2) + "\n";
}

MarkedComplex parse_complex(const json& j)
{
    if (!j.is_object())
        throw InputError("complex: expected a JSON object");
    const bool closure = j.contains("closure") && at_key("closure", [&] { return j.at("closure").get<bool>(); });

    std::set<Vertex> verts;
    if (j.contains("vertices"))
        verts = at_key("vertices", [&] { return j.at("vertices").get<std::set<Vertex>>(); });
    if (!j.contains("simplices"))
        throw InputError("complex: missing key 'simplices'");
    MarkedComplex m{build(parse_simplices(j.at("simplices"), "simplices"), verts, closure), {}};

    if (j.contains("boundary")) {
        const json& b = j.at("boundary");
        if (!b.is_array())
            throw InputError("boundary: expected an array");
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::string where = "boundary[" + std::to_string(i) + "]";
            BoundaryComponent c;
            c.name = at_key(where + ".name", [&] { return b[i].at("name").get<std::string>(); });
            const auto label = at_key(where + ".label", [&] { return b[i].at("label").get<std::string>(); });
            if (label == "in")
                c.label = Label::In;
            else if (label == "out")
                c.label = Label::Out;
            else
                throw InputError(where + ".label: expected \"in\" or \"out\", got \"" + label + "\"");
            if (!b[i].contains("simplices"))
                throw InputError(where + ": missing key 'simplices'");
            c.complex = build(parse_simplices(b[i].at("simplices"), where + ".simplices"), {}, closure);
            m.boundary.push_back(std::move(c));
        }
    }
    return m;
}

json to_json(const MarkedComplex& m)
{
    json j;
    j["closure"] = true;
    j["vertices"] = m.complex.vertices();
    j["simplices"] = simplices_json(m.complex);
    j["boundary"] = json::array();
    for (const auto& b : m.boundary)
        j["boundary"].push_back(
            {{"name", b.name}, {"label", to_string(b.label)}, {"simplices", simplices_json(b.complex)}});
    return j;
}

GluingSpec parse_gluing(const json& j)
{
    GluingSpec spec;
    spec.source = parse_complex(j);
    spec.sigma1 = at_key("sigma1", [&] { return j.at("sigma1").get<std::vector<std::string>>(); });
    spec.sigma2 = at_key("sigma2", [&] { return j.at("sigma2").get<std::vector<std::string>>(); });
    if (!j.contains("phi") || !j.at("phi").is_object())
        throw InputError("phi: expected an object mapping vertex ids to vertex ids");
    for (const auto& [key, value] : j.at("phi").items()) {
        Vertex from = 0;
        Vertex to = 0;
        try {
            std::size_t used = 0;
            from = std::stoi(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
            if (value.is_string()) {
                const auto text = value.get<std::string>();
                to = std::stoi(text, &used);
                if (used != text.size())
                    throw std::invalid_argument(text);
            }
            else {
                to = value.get<Vertex>();
            }
        }
        catch (const std::exception&) {
            throw InputError("phi: entry \"" + key + "\" is not an integer vertex mapping");
        }
        spec.phi[from] = to;
    }
    return spec;
}

json to_json(const GluingSpec& spec)
{
    json j = to_json(spec.source);
    j["sigma1"] = spec.sigma1;
    j["sigma2"] = spec.sigma2;
    j["phi"] = json::object();
    for (const auto& [x, y] : spec.phi)
        j["phi"][std::to_string(x)] = std::to_string(y);
    return j;
}

Surface2D parse_surface(const json& j)
{
    Surface2D s;
    s.vertex_count = at_key("vertex_count", [&] { return j.at("vertex_count").get<int>(); });
    const json& edges = at_key("edges", [&]() -> const json& { return j.at("edges"); });
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto pair = at_key("edges[" + std::to_string(i) + "]",
                                 [&] { return edges[i].get<std::array<int, 2>>(); });
        s.edges.push_back({pair[0], pair[1]});
    }
    const json& tris = at_key("triangles", [&]() -> const json& { return j.at("triangles"); });
    for (std::size_t t = 0; t < tris.size(); ++t) {
        const std::string where = "triangles[" + std::to_string(t) + "]";
        if (!tris[t].is_array() || tris[t].size() != 3)
            throw InputError(where + ": expected three [edge, forward] pairs");
        Triangle tri;
        for (int k = 0; k < 3; ++k) {
            const json& r = tris[t][k];
            if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_boolean())
                throw InputError(where + "[" + std::to_string(k) + "]: expected [edge, bool]");
            tri[k] = {r[0].get<int>(), r[1].get<bool>()};
        }
        s.triangles.push_back(tri);
    }
    return s;
}

json to_json(const Surface2D& s)
{
    json j;
    j["vertex_count"] = s.vertex_count;
    j["edges"] = json::array();
    for (const auto& e : s.edges)
        j["edges"].push_back({e.tail, e.head});
    j["triangles"] = json::array();
    for (const auto& t : s.triangles) {
        json tri = json::array();
        for (const auto& r : t)
            tri.push_back({r.edge, r.forward});
        j["triangles"].push_back(tri);
    }
    return j;
}

FiniteGroup parse_group(const json& j)
{
    const auto kind = at_key("kind", [&] { return j.at("kind").get<std::string>(); });
    if (kind == "cyclic")
        return FiniteGroup::cyclic(at_key("n", [&] { return j.at("n").get<int>(); }));
    if (kind == "symmetric") {
        if (at_key("n", [&] { return j.at("n").get<int>(); }) != 3)
            throw InputError("group: only the symmetric group on 3 letters is built in");
        return FiniteGroup::symmetric3();
    }
    if (kind == "table") {
        const auto rows = at_key("mul", [&] { return j.at("mul").get<std::vector<std::vector<int>>>(); });
        FiniteGroup::Table mul(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows.size())
                throw InputError("group: Cayley table row " + std::to_string(r) + " has the wrong length");
            for (std::size_t c = 0; c < rows.size(); ++c)
                mul(r, c) = rows[r][c];
        }
        return FiniteGroup::from_table(mul);
    }
    throw InputError("group: unknown kind '" + kind + "'");
}

FiniteGroup parse_group_argument(const std::string& arg)
{
    auto colon = arg.find(':');
    if (colon != std::string::npos) {
        const std::string kind = arg.substr(0, colon);
        int n = 0;
        try {
            n = std::stoi(arg.substr(colon + 1));
        }
        catch (const std::exception&) {
            throw InputError("group '" + arg + "': order is not an integer");
        }
        return parse_group(json{{"kind", kind}, {"n", n}});
    }
    return parse_group(load_json(arg));
}

}  // namespace tqft::io
