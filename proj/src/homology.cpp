#include "tqft/homology.hpp"

#include <map>

#include "tqft/error.hpp"

namespace tqft {

Eigen::Index integer_rank(const IntMatrix& m)
{
    try {
        return exact_rank<long long>(m);
    }
    catch (const RankOverflow&) {
        return exact_rank<BigInt>(m.cast<BigInt>());
    }
}

namespace {

ChainComplex chains_excluding(const SimplicialComplex& c, const SimplicialComplex* rel)
{
    ChainComplex out;
    const int dim = c.dimension();
    out.basis.resize(dim + 1);
    for (const auto& s : c.simplices())
        if (!rel || !rel->contains(s))
            out.basis[s.size() - 1].push_back(s);

    std::vector<std::map<Simplex, Eigen::Index>> index(dim + 1);
    for (int n = 0; n <= dim; ++n)
        for (std::size_t i = 0; i < out.basis[n].size(); ++i)
            index[n][out.basis[n][i]] = static_cast<Eigen::Index>(i);

    out.boundary.resize(dim + 1);
    for (int n = 0; n <= dim; ++n) {
        const auto rows = n == 0 ? Eigen::Index(0) : Eigen::Index(out.basis[n - 1].size());
        const auto cols = Eigen::Index(out.basis[n].size());
        IntMatrix d = IntMatrix::Zero(rows, cols);
        if (n > 0) {
            for (Eigen::Index j = 0; j < cols; ++j) {
                const Simplex& s = out.basis[n][j];
                for (std::size_t i = 0; i < s.size(); ++i) {
                    Simplex face;
                    face.reserve(s.size() - 1);
                    for (std::size_t k = 0; k < s.size(); ++k)
                        if (k != i)
                            face.push_back(s[k]);
                    // Faces lying in rel vanish in the quotient.
                    auto it = index[n - 1].find(face);
                    if (it != index[n - 1].end())
                        d(it->second, j) = (i % 2 == 0) ? 1 : -1;
                }
            }
        }
        out.boundary[n] = std::move(d);
    }
    return out;
}

}  // namespace

ChainComplex boundary_matrices(const SimplicialComplex& c)
{
    return chains_excluding(c, nullptr);
}

ChainComplex relative_chain_complex(const SimplicialComplex& c, const SimplicialComplex& rel)
{
    if (!rel.is_subcomplex_of(c))
        throw Error(ErrorKind::NotASubcomplex, "relative subcomplex is not contained in the complex");
    return chains_excluding(c, &rel);
}

BettiVector betti(const ChainComplex& chains)
{
    const int dim = chains.top_dimension();
    std::vector<Eigen::Index> rank(dim + 2, 0);
    for (int n = 1; n <= dim; ++n)
        rank[n] = integer_rank(chains.boundary[n]);
    BettiVector b(dim + 1);
    for (int n = 0; n <= dim; ++n) {
        const auto nullity = static_cast<Eigen::Index>(chains.basis[n].size()) - rank[n];
        b[n] = nullity - rank[n + 1];
    }
    return b;
}

BettiVector betti(const SimplicialComplex& c, const std::optional<SimplicialComplex>& rel)
{
    if (rel)
        return betti(relative_chain_complex(c, *rel));
    return betti(boundary_matrices(c));
}

long long euler_from_betti(const BettiVector& b)
{
    long long chi = 0;
    for (std::size_t n = 0; n < b.size(); ++n)
        chi += (n % 2 == 0) ? b[n] : -b[n];
    return chi;
}

long long euler_relative(const MarkedComplex& m, const std::vector<std::string>& rel)
{
    if (rel.empty())
        return euler_from_betti(betti(m.complex));
    return euler_from_betti(betti(m.complex, boundary_union(m, rel)));
}

}  // namespace tqft
