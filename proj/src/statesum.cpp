#include "tqft/statesum.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tqft/error.hpp"

namespace tqft {

// ---------------------------------------------------------------------------
// FiniteGroup
// ---------------------------------------------------------------------------

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1)
        throw Error(ErrorKind::NotAGroup, "cyclic group order must be positive");
    Table mul(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul(a, b) = (a + b) % n;
    std::vector<int> inv(n);
    for (int a = 0; a < n; ++a)
        inv[a] = (n - a) % n;
    return FiniteGroup(std::move(mul), 0, std::move(inv));
}

FiniteGroup FiniteGroup::symmetric3()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    Table mul(6, 6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            // (a*b)(i) = a(b(i))
            std::array<int, 3> ab{};
            for (int i = 0; i < 3; ++i)
                ab[i] = perms[a][perms[b][i]];
            mul(a, b) = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
        }
    return from_table(mul);
}

FiniteGroup FiniteGroup::from_table(const Table& mul)
{
    const auto n = static_cast<int>(mul.rows());
    if (n < 1 || mul.cols() != n)
        throw Error(ErrorKind::NotAGroup, "Cayley table must be square and non-empty");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) < 0 || mul(a, b) >= n)
                throw Error(ErrorKind::NotAGroup, "closure fails: " + std::to_string(a) + "*"
                                                      + std::to_string(b) + " = "
                                                      + std::to_string(mul(a, b)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error(ErrorKind::NotAGroup,
                                "associativity fails for (" + std::to_string(a) + ","
                                    + std::to_string(b) + "," + std::to_string(c) + ")");
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = mul(cand, x) == x && mul(x, cand) == x;
        if (ok)
            e = cand;
    }
    if (e < 0)
        throw Error(ErrorKind::NotAGroup, "no two-sided identity element");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == e && mul(b, a) == e) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0)
            throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
    }
    return FiniteGroup(mul, e, std::move(inv));
}

std::optional<std::pair<int, int>> FiniteGroup::non_commuting_pair() const
{
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a))
                return std::make_pair(a, b);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Surfaces
// ---------------------------------------------------------------------------

namespace {

int start_vertex(const Surface2D& s, const EdgeRef& r)
{
    const Edge& e = s.edges[r.edge];
    return r.forward ? e.tail : e.head;
}

int end_vertex(const Surface2D& s, const EdgeRef& r)
{
    const Edge& e = s.edges[r.edge];
    return r.forward ? e.head : e.tail;
}

Triangle rotate(const Triangle& t, int k)
{
    return {t[k % 3], t[(k + 1) % 3], t[(k + 2) % 3]};
}

}  // namespace

std::optional<std::string> validate(const Surface2D& s)
{
    if (s.vertex_count < 1)
        return "vertex_count must be positive";
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        const Edge& e = s.edges[i];
        if (e.tail < 0 || e.tail >= s.vertex_count || e.head < 0 || e.head >= s.vertex_count)
            return "edge " + std::to_string(i) + " has an endpoint out of range";
    }
    std::vector<int> uses(s.edges.size(), 0);
    for (std::size_t t = 0; t < s.triangles.size(); ++t) {
        for (const auto& r : s.triangles[t]) {
            if (r.edge < 0 || r.edge >= static_cast<int>(s.edges.size()))
                return "triangle " + std::to_string(t) + " references a missing edge";
            ++uses[r.edge];
        }
        const auto& tri = s.triangles[t];
        for (int k = 0; k < 3; ++k)
            if (end_vertex(s, tri[k]) != start_vertex(s, tri[(k + 1) % 3]))
                return "triangle " + std::to_string(t) + " does not close up at slot "
                       + std::to_string(k);
    }
    for (std::size_t i = 0; i < uses.size(); ++i)
        if (uses[i] != 2)
            return "edge " + std::to_string(i) + " is used by " + std::to_string(uses[i])
                   + " triangle slots (expected 2)";
    std::vector<bool> seen(s.vertex_count, false);
    for (const Edge& e : s.edges)
        seen[e.tail] = seen[e.head] = true;
    for (int v = 0; v < s.vertex_count; ++v)
        if (!seen[v])
            return "vertex " + std::to_string(v) + " lies on no edge";
    return std::nullopt;
}

long long euler_characteristic(const Surface2D& s)
{
    return static_cast<long long>(s.vertex_count) - static_cast<long long>(s.edges.size())
           + static_cast<long long>(s.triangles.size());
}

Surface2D disjoint_union(const Surface2D& a, const Surface2D& b)
{
    Surface2D out = a;
    out.vertex_count += b.vertex_count;
    const int edge_offset = static_cast<int>(a.edges.size());
    for (const Edge& e : b.edges)
        out.edges.push_back({e.tail + a.vertex_count, e.head + a.vertex_count});
    for (Triangle t : b.triangles) {
        for (auto& r : t)
            r.edge += edge_offset;
        out.triangles.push_back(t);
    }
    return out;
}

int holonomy(const Triangle& t, const FiniteGroup& g, const Coloring& c)
{
    int prod = g.identity();
    for (const auto& r : t) {
        const int x = c[r.edge];
        prod = g.mul(prod, r.forward ? x : g.inverse(x));
    }
    return prod;
}

bool is_admissible(const Surface2D& s, const FiniteGroup& g, const Coloring& c)
{
    for (const auto& t : s.triangles)
        if (holonomy(t, g, c) != g.identity())
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

struct SearchPlan
{
    std::vector<int> order;
    // Triangle whose last two slots fix the colour of order[k], as
    // (triangle, slot), or (-1, -1).
    std::vector<std::pair<int, int>> forcing;
    // Triangles completed at step k, to be checked.
    std::vector<std::vector<int>> checks;
};

SearchPlan plan_search(const Surface2D& s)
{
    const int edges = static_cast<int>(s.edges.size());
    std::vector<std::vector<int>> incident(edges);
    for (int t = 0; t < static_cast<int>(s.triangles.size()); ++t)
        for (const auto& r : s.triangles[t])
            incident[r.edge].push_back(t);

    SearchPlan plan;
    std::vector<int> position(edges, -1);
    std::vector<int> placed_in(s.triangles.size(), 0);
    for (int k = 0; k < edges; ++k) {
        int best = -1;
        int best_score = -1;
        for (int e = 0; e < edges; ++e) {
            if (position[e] >= 0)
                continue;
            int score = 0;
            for (int t : incident[e])
                score += placed_in[t];
            if (score > best_score) {
                best = e;
                best_score = score;
            }
        }
        position[best] = k;
        plan.order.push_back(best);
        for (int t : incident[best])
            ++placed_in[t];
    }

    plan.forcing.assign(edges, {-1, -1});
    plan.checks.resize(edges);
    for (int t = 0; t < static_cast<int>(s.triangles.size()); ++t) {
        const auto& tri = s.triangles[t];
        int last = 0;
        for (const auto& r : tri)
            last = std::max(last, position[r.edge]);
        const int e = plan.order[last];
        int occurrences = 0;
        int slot = -1;
        for (int i = 0; i < 3; ++i)
            if (tri[i].edge == e) {
                ++occurrences;
                slot = i;
            }
        if (occurrences == 1 && plan.forcing[last].first < 0)
            plan.forcing[last] = {t, slot};
        else
            plan.checks[last].push_back(t);
    }
    return plan;
}

class Counter
{
public:
    Counter(const Surface2D& s, const FiniteGroup& g, const SearchPlan& plan)
        : s_(s), g_(g), plan_(plan), colour_(s.edges.size(), 0)
    {
    }

    std::uint64_t count_from(std::size_t k)
    {
        if (k == plan_.order.size())
            return 1;
        const int e = plan_.order[k];
        if (auto [t, slot] = plan_.forcing[k]; t >= 0) {
            const Triangle& tri = s_.triangles[t];
            // Rotating the cycle conjugates the product, so the slot's
            // element must equal the inverse of the product of the other two.
            int rest = g_.identity();
            for (int i = 1; i <= 2; ++i) {
                const EdgeRef& r = tri[(slot + i) % 3];
                const int x = colour_[r.edge];
                rest = g_.mul(rest, r.forward ? x : g_.inverse(x));
            }
            const int slot_value = g_.inverse(rest);
            colour_[e] = tri[slot].forward ? slot_value : g_.inverse(slot_value);
            return passes(k) ? count_from(k + 1) : 0;
        }
        std::uint64_t total = 0;
        for (int x = 0; x < g_.order(); ++x) {
            colour_[e] = x;
            if (passes(k))
                total += count_from(k + 1);
        }
        return total;
    }

    std::uint64_t count_with_first(int x)
    {
        colour_[plan_.order[0]] = x;
        return passes(0) ? count_from(1) : 0;
    }

private:
    bool passes(std::size_t k) const
    {
        for (int t : plan_.checks[k])
            if (holonomy(s_.triangles[t], g_, colour_) != g_.identity())
                return false;
        return true;
    }

    const Surface2D& s_;
    const FiniteGroup& g_;
    const SearchPlan& plan_;
    Coloring colour_;
};

void require_valid(const Surface2D& s)
{
    if (auto why = validate(s))
        throw Error(ErrorKind::InvalidSurface, *why);
}

}  // namespace

std::uint64_t count_admissible(const Surface2D& s, const FiniteGroup& g, unsigned threads)
{
    require_valid(s);
    const SearchPlan plan = plan_search(s);
    if (plan.order.empty())
        return 1;
    // The first edge is never forced: no triangle is complete before it.
    if (threads <= 1)
        return Counter(s, g, plan).count_from(0);

    std::vector<std::future<std::uint64_t>> parts;
    const int n = g.order();
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
    for (unsigned w = 0; w < workers; ++w)
        parts.push_back(std::async(std::launch::async, [&, w] {
            std::uint64_t sum = 0;
            Counter counter(s, g, plan);
            for (int x = static_cast<int>(w); x < n; x += static_cast<int>(workers))
                sum += counter.count_with_first(x);
            return sum;
        }));
    std::uint64_t total = 0;
    for (auto& p : parts)
        total += p.get();
    return total;
}

std::uint64_t colouring_space_size(const Surface2D& s, const FiniteGroup& g)
{
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        if (size > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(g.order()))
            return std::numeric_limits<std::uint64_t>::max();
        size *= static_cast<std::uint64_t>(g.order());
    }
    return size;
}

std::uint64_t count_admissible_naive(const Surface2D& s, const FiniteGroup& g)
{
    require_valid(s);
    Coloring c(s.edges.size(), 0);
    std::uint64_t count = 0;
    while (true) {
        if (is_admissible(s, g, c))
            ++count;
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == g.order())
            c[i++] = 0;
        if (i == c.size())
            break;
    }
    return count;
}

Rational partition_function(const Surface2D& s, const FiniteGroup& g, unsigned threads)
{
    const std::uint64_t count = count_admissible(s, g, threads);
    BigInt denom = 1;
    for (int v = 0; v < s.vertex_count; ++v)
        denom *= g.order();
    return Rational(BigInt(count), denom);
}

// ---------------------------------------------------------------------------
// Pachner moves
// ---------------------------------------------------------------------------

Surface2D pachner_13(const Surface2D& s, int triangle)
{
    if (triangle < 0 || triangle >= static_cast<int>(s.triangles.size()))
        throw std::out_of_range("no triangle " + std::to_string(triangle));
    Surface2D out = s;
    const Triangle tri = s.triangles[triangle];
    const int centre = out.vertex_count++;
    std::array<int, 3> spoke{};
    for (int k = 0; k < 3; ++k) {
        spoke[k] = static_cast<int>(out.edges.size());
        out.edges.push_back({start_vertex(s, tri[k]), centre});
    }
    // Triangle k: corner k -> corner k+1 -> centre -> corner k.
    auto fan = [&](int k) {
        return Triangle{tri[k], EdgeRef{spoke[(k + 1) % 3], true}, EdgeRef{spoke[k], false}};
    };
    out.triangles[triangle] = fan(0);
    out.triangles.push_back(fan(1));
    out.triangles.push_back(fan(2));
    return out;
}

Surface2D pachner_22(const Surface2D& s, int edge)
{
    if (edge < 0 || edge >= static_cast<int>(s.edges.size()))
        throw std::out_of_range("no edge " + std::to_string(edge));
    std::vector<std::pair<int, int>> slots;
    for (int t = 0; t < static_cast<int>(s.triangles.size()); ++t)
        for (int k = 0; k < 3; ++k)
            if (s.triangles[t][k].edge == edge)
                slots.emplace_back(t, k);
    if (slots.size() != 2 || slots[0].first == slots[1].first)
        throw Error(ErrorKind::NotFlippable,
                    "edge " + std::to_string(edge) + " does not separate two distinct triangles");

    const Triangle t1 = rotate(s.triangles[slots[0].first], slots[0].second);
    const Triangle t2 = rotate(s.triangles[slots[1].first], slots[1].second);
    if (t1[0].forward == t2[0].forward)
        throw Error(ErrorKind::NotFlippable,
                    "triangles on edge " + std::to_string(edge) + " are incoherently oriented");
    // t1 = [e: P->Q, a: Q->R, b: R->P], t2 = [e: Q->P, c: P->S, d: S->Q]
    const EdgeRef a = t1[1], b = t1[2], c = t2[1], d = t2[2];
    std::array<int, 4> others{a.edge, b.edge, c.edge, d.edge};
    std::sort(others.begin(), others.end());
    if (std::adjacent_find(others.begin(), others.end()) != others.end())
        throw Error(ErrorKind::NotFlippable,
                    "triangles on edge " + std::to_string(edge) + " share another edge");

    Surface2D out = s;
    out.edges[edge] = {start_vertex(s, b), start_vertex(s, d)};  // R -> S
    out.triangles[slots[0].first] = Triangle{b, c, EdgeRef{edge, false}};
    out.triangles[slots[1].first] = Triangle{d, a, EdgeRef{edge, true}};
    return out;
}

std::string to_string(const PachnerMove& m)
{
    return m.kind == PachnerMove::Kind::OneThree ? "1-3 on triangle " + std::to_string(m.index)
                                                 : "2-2 on edge " + std::to_string(m.index);
}

PachnerMove random_pachner_move(const Surface2D& s, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 1) {
        std::vector<int> edges(s.edges.size());
        std::iota(edges.begin(), edges.end(), 0);
        std::shuffle(edges.begin(), edges.end(), rng);
        for (int e : edges) {
            try {
                pachner_22(s, e);
                return {PachnerMove::Kind::TwoTwo, e};
            }
            catch (const Error&) {
            }
        }
    }
    std::uniform_int_distribution<int> pick(0, static_cast<int>(s.triangles.size()) - 1);
    return {PachnerMove::Kind::OneThree, pick(rng)};
}

Surface2D apply(const Surface2D& s, const PachnerMove& m)
{
    return m.kind == PachnerMove::Kind::OneThree ? pachner_13(s, m.index) : pachner_22(s, m.index);
}

}  // namespace tqft
