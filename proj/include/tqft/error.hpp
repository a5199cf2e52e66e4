#ifndef TQFT_ERROR_HPP
#define TQFT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tqft {

enum class ErrorKind {
    InvalidComplex,
    NotASubcomplex,
    UnknownComponent,
    NotDisjoint,
    NotIsomorphism,
    NonSimplicialQuotient,
    NotComposable,
    NotAGroup,
    InvalidSurface,
    NotFlippable,
    NotSquare,
};

/// Kebab-case name of an error kind, e.g. "non-simplicial-quotient".
const char* to_string(ErrorKind kind);

/**
 * Exception type for all contract violations in the library. The kind is
 * machine-checkable; the message names the offending simplices, vertices or
 * group elements.
 */
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tqft

#endif
