#include "tqft/vect.hpp"

#include <limits>
#include <stdexcept>

namespace tqft {

ExactVectorSpace space_of(const SignedPointConfig& config, Eigen::Index n)
{
    if (n < 1)
        throw std::invalid_argument("dimension of the point space must be at least 1");
    Eigen::Index dim = 1;
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (dim > std::numeric_limits<Eigen::Index>::max() / n)
            throw std::overflow_error("tensor power dimension overflows");
        dim *= n;
    }
    return ExactVectorSpace{dim, config};
}

}  // namespace tqft
