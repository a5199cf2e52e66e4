#include "tqft/complex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/connected_components.hpp>

#include "tqft/error.hpp"

namespace tqft {

namespace {

std::string format_simplex(const Simplex& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// All non-empty proper faces of codimension one.
std::vector<Simplex> facets(const Simplex& s)
{
    std::vector<Simplex> out;
    if (s.size() < 2)
        return out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        f.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i)
                f.push_back(s[j]);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::set<Vertex> vertices, SimplexSet simplices)
    : vertices_(std::move(vertices))
{
    for (Simplex s : simplices) {
        std::sort(s.begin(), s.end());
        simplices_.insert(std::move(s));
    }
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& simplices)
{
    SimplicialComplex c;
    for (Simplex s : simplices) {
        if (s.empty())
            continue;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        // Enumerate all non-empty subsets.
        const std::size_t k = s.size();
        if (k > 20)
            throw Error(ErrorKind::InvalidComplex, "simplex of dimension > 19 is not supported");
        for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ul << i))
                    face.push_back(s[i]);
            c.simplices_.insert(std::move(face));
        }
        c.vertices_.insert(s.begin(), s.end());
    }
    return c;
}

int SimplicialComplex::dimension() const
{
    if (simplices_.empty())
        return -1;
    return static_cast<int>(simplices_.rbegin()->size()) - 1;
}

std::size_t SimplicialComplex::count(int dim) const
{
    std::size_t n = 0;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) == dim + 1)
            ++n;
    return n;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dimension(int dim) const
{
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) == dim + 1)
            out.push_back(s);
    return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const
{
    std::set<Simplex> non_maximal;
    for (const auto& s : simplices_)
        for (auto& f : facets(s))
            non_maximal.insert(std::move(f));
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (!non_maximal.count(s))
            out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end())
           && std::includes(other.simplices_.begin(), other.simplices_.end(),
                            simplices_.begin(), simplices_.end(), SimplexOrder{});
}

std::optional<Violation> validate(const SimplicialComplex& c)
{
    for (const auto& s : c.simplices()) {
        if (s.empty())
            return Violation{"empty simplex", s};
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            return Violation{"repeated vertex in simplex " + format_simplex(s), s};
        for (Vertex v : s)
            if (!c.vertices().count(v))
                return Violation{"simplex " + format_simplex(s) + " uses undeclared vertex "
                                     + std::to_string(v),
                                 s};
        for (const auto& f : facets(s))
            if (!c.contains(f))
                return Violation{"missing face " + format_simplex(f) + " of " + format_simplex(s),
                                 f};
    }
    for (Vertex v : c.vertices())
        if (!c.contains(Simplex{v}))
            return Violation{"vertex " + std::to_string(v) + " is not a 0-simplex", Simplex{v}};
    return std::nullopt;
}

long long euler_combinatorial(const SimplicialComplex& c)
{
    long long chi = 0;
    for (const auto& s : c.simplices())
        chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& c)
{
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    std::vector<Vertex> ids(c.vertices().begin(), c.vertices().end());
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i)
        index[ids[i]] = i;

    Graph graph(ids.size());
    for (const auto& s : c.simplices())
        if (s.size() == 2)
            boost::add_edge(index.at(s[0]), index.at(s[1]), graph);

    std::vector<int> label(ids.size());
    const int n = ids.empty() ? 0 : boost::connected_components(graph, label.data());

    // boost numbers components in order of first vertex visited, which is the
    // smallest id since vertices are indexed in sorted order.
    std::vector<std::vector<Simplex>> parts(n);
    for (const auto& s : c.simplices())
        parts[label[index.at(s[0])]].push_back(s);
    std::vector<SimplicialComplex> out;
    out.reserve(n);
    for (auto& p : parts) {
        std::set<Vertex> verts;
        SimplexSet simplices;
        for (auto& s : p) {
            verts.insert(s.begin(), s.end());
            simplices.insert(std::move(s));
        }
        out.emplace_back(std::move(verts), std::move(simplices));
    }
    return out;
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::set<Vertex> verts = a.vertices();
    verts.insert(b.vertices().begin(), b.vertices().end());
    SimplexSet simplices = a.simplices();
    simplices.insert(b.simplices().begin(), b.simplices().end());
    return SimplicialComplex(std::move(verts), std::move(simplices));
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::map<Vertex, Vertex>& relabel)
{
    auto map_vertex = [&](Vertex v) {
        auto it = relabel.find(v);
        return it == relabel.end() ? v : it->second;
    };
    std::set<Vertex> verts;
    for (Vertex v : c.vertices())
        verts.insert(map_vertex(v));
    SimplexSet simplices;
    for (const auto& s : c.simplices()) {
        Simplex t;
        t.reserve(s.size());
        for (Vertex v : s)
            t.push_back(map_vertex(v));
        std::sort(t.begin(), t.end());
        simplices.insert(std::move(t));
    }
    return SimplicialComplex(std::move(verts), std::move(simplices));
}

bool vertex_disjoint(const SimplicialComplex& a, const SimplicialComplex& b)
{
    for (Vertex v : a.vertices())
        if (b.vertices().count(v))
            return false;
    return true;
}

Label flip(Label l)
{
    return l == Label::In ? Label::Out : Label::In;
}

const char* to_string(Label l)
{
    return l == Label::In ? "in" : "out";
}

std::optional<Violation> validate(const MarkedComplex& m)
{
    if (auto v = validate(m.complex))
        return v;
    std::set<std::string> names;
    for (std::size_t i = 0; i < m.boundary.size(); ++i) {
        const auto& b = m.boundary[i];
        if (!names.insert(b.name).second)
            return Violation{"duplicate boundary name '" + b.name + "'", {}};
        if (auto v = validate(b.complex))
            return Violation{"boundary '" + b.name + "': " + v->message, v->simplex};
        if (!b.complex.is_subcomplex_of(m.complex)) {
            for (const auto& s : b.complex.simplices())
                if (!m.complex.contains(s))
                    return Violation{"boundary '" + b.name + "' simplex " + format_simplex(s)
                                         + " is not in the complex",
                                     s};
            return Violation{"boundary '" + b.name + "' has a vertex outside the complex", {}};
        }
        for (std::size_t j = 0; j < i; ++j)
            if (!vertex_disjoint(b.complex, m.boundary[j].complex))
                return Violation{"boundary components '" + m.boundary[j].name + "' and '" + b.name
                                     + "' share a vertex",
                                 {}};
    }
    return std::nullopt;
}

bool same_object(const MarkedComplex& a, const MarkedComplex& b)
{
    if (a.complex != b.complex || a.boundary.size() != b.boundary.size())
        return false;
    auto by_name = [](const BoundaryComponent& x, const BoundaryComponent& y) {
        return x.name < y.name;
    };
    auto lhs = a.boundary;
    auto rhs = b.boundary;
    std::sort(lhs.begin(), lhs.end(), by_name);
    std::sort(rhs.begin(), rhs.end(), by_name);
    return lhs == rhs;
}

const BoundaryComponent& component(const MarkedComplex& m, const std::string& name)
{
    for (const auto& b : m.boundary)
        if (b.name == name)
            return b;
    throw Error(ErrorKind::UnknownComponent, "no boundary component named '" + name + "'");
}

SimplicialComplex boundary_union(const MarkedComplex& m, const std::vector<std::string>& names)
{
    SimplicialComplex out;
    for (const auto& n : names)
        out = union_of(out, component(m, n).complex);
    return out;
}

SimplicialComplex boundary_union(const MarkedComplex& m, Label label)
{
    SimplicialComplex out;
    for (const auto& b : m.boundary)
        if (b.label == label)
            out = union_of(out, b.complex);
    return out;
}

namespace {

std::map<Vertex, Vertex> shift_for(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::map<Vertex, Vertex> shift;
    if (a.vertices().empty() || b.vertices().empty())
        return shift;
    // Shift by max(a)+1, and also past any negative ids in b.
    Vertex offset = *a.vertices().rbegin() + 1 - std::min(0, *b.vertices().begin());
    for (Vertex v : b.vertices())
        shift[v] = v + offset;
    return shift;
}

}  // namespace

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return union_of(a, relabel(b, shift_for(a, b)));
}

MarkedComplex disjoint_union(const MarkedComplex& a, const MarkedComplex& b)
{
    auto shift = shift_for(a.complex, b.complex);
    MarkedComplex out{union_of(a.complex, relabel(b.complex, shift)), a.boundary};
    std::set<std::string> names;
    for (const auto& c : a.boundary)
        names.insert(c.name);
    for (const auto& c : b.boundary) {
        std::string name = c.name;
        for (int k = 2; names.count(name); ++k)
            name = c.name + "_" + std::to_string(k);
        names.insert(name);
        out.boundary.push_back({name, c.label, relabel(c.complex, shift)});
    }
    return out;
}

MarkedComplex flip_labels(const MarkedComplex& m)
{
    MarkedComplex out = m;
    for (auto& b : out.boundary)
        b.label = flip(b.label);
    return out;
}

Simplex image(const std::map<Vertex, Vertex>& vertex_map, const Simplex& s)
{
    Simplex t;
    t.reserve(s.size());
    for (Vertex v : s)
        t.push_back(vertex_map.at(v));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

bool is_simplicial(const SimplicialMap& f)
{
    for (Vertex v : f.source.vertices()) {
        auto it = f.vertex_map.find(v);
        if (it == f.vertex_map.end() || !f.target.vertices().count(it->second))
            return false;
    }
    for (const auto& s : f.source.simplices())
        if (!f.target.contains(image(f.vertex_map, s)))
            return false;
    return true;
}

bool is_isomorphism(const SimplicialMap& f)
{
    if (!is_simplicial(f) || f.source.vertices().size() != f.target.vertices().size()
        || f.source.simplices().size() != f.target.simplices().size())
        return false;
    std::set<Vertex> hit;
    for (Vertex v : f.source.vertices())
        if (!hit.insert(f.vertex_map.at(v)).second)
            return false;
    // Injective on vertices and on simplices with equal counts: the inverse
    // is simplicial as well.
    for (const auto& s : f.source.simplices())
        if (image(f.vertex_map, s).size() != s.size())
            return false;
    return true;
}

SimplicialMap identity_map(const SimplicialComplex& c)
{
    SimplicialMap f{c, c, {}};
    for (Vertex v : c.vertices())
        f.vertex_map[v] = v;
    return f;
}

SimplicialMap inverse(const SimplicialMap& f)
{
    SimplicialMap g{f.target, f.source, {}};
    for (const auto& [from, to] : f.vertex_map)
        if (!g.vertex_map.emplace(to, from).second)
            throw Error(ErrorKind::NotIsomorphism,
                        "vertex map is not injective at " + std::to_string(to));
    return g;
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g)
{
    SimplicialMap h{f.source, g.target, {}};
    for (const auto& [from, mid] : f.vertex_map)
        h.vertex_map[from] = g.vertex_map.at(mid);
    return h;
}

std::optional<std::map<Vertex, Vertex>> find_isomorphism(const SimplicialComplex& a,
                                                         const SimplicialComplex& b)
{
    if (a.vertices().size() != b.vertices().size() || a.simplices().size() != b.simplices().size())
        return std::nullopt;
    const int top = std::max(a.dimension(), b.dimension()) + 1;
    for (int d = 0; d < top; ++d)
        if (a.count(d) != b.count(d))
            return std::nullopt;

    // Per-vertex signature: number of cofaces of each dimension.
    auto signatures = [top](const SimplicialComplex& c) {
        std::map<Vertex, std::vector<int>> sig;
        for (Vertex v : c.vertices())
            sig[v].assign(top, 0);
        for (const auto& s : c.simplices())
            for (Vertex v : s)
                ++sig[v][s.size() - 1];
        return sig;
    };
    const auto sig_a = signatures(a);
    const auto sig_b = signatures(b);

    std::vector<Vertex> order(a.vertices().begin(), a.vertices().end());
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
        return sig_a.at(x) > sig_a.at(y);
    });

    // Simplices of a indexed by their last vertex in `order`, so each is
    // checked exactly when it becomes fully assigned.
    std::map<Vertex, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;
    std::vector<std::vector<const Simplex*>> closing(order.size());
    for (const auto& s : a.simplices()) {
        std::size_t last = 0;
        for (Vertex v : s)
            last = std::max(last, position[v]);
        closing[last].push_back(&s);
    }

    std::map<Vertex, Vertex> map;
    std::set<Vertex> used;
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == order.size())
            return true;
        const Vertex v = order[i];
        for (Vertex w : b.vertices()) {
            if (used.count(w) || sig_b.at(w) != sig_a.at(v))
                continue;
            map[v] = w;
            bool ok = true;
            for (const Simplex* s : closing[i])
                if (!b.contains(image(map, *s))) {
                    ok = false;
                    break;
                }
            if (ok) {
                used.insert(w);
                if (extend(i + 1))
                    return true;
                used.erase(w);
            }
            map.erase(v);
        }
        return false;
    };
    if (extend(0))
        return map;
    return std::nullopt;
}

}  // namespace tqft
