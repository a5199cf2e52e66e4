#include "tqft/error.hpp"

namespace tqft {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidComplex: return "invalid-complex";
    case ErrorKind::NotASubcomplex: return "not-a-subcomplex";
    case ErrorKind::UnknownComponent: return "unknown-component";
    case ErrorKind::NotDisjoint: return "not-disjoint";
    case ErrorKind::NotIsomorphism: return "not-isomorphism";
    case ErrorKind::NonSimplicialQuotient: return "non-simplicial-quotient";
    case ErrorKind::NotComposable: return "not-composable";
    case ErrorKind::NotAGroup: return "not-a-group";
    case ErrorKind::InvalidSurface: return "invalid-surface";
    case ErrorKind::NotFlippable: return "not-flippable";
    case ErrorKind::NotSquare: return "not-square";
    }
    return "unknown";
}

}  // namespace tqft
