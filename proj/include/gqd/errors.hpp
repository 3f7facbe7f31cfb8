#ifndef GQD_ERRORS_HPP
#define GQD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gqd {

/// Input outside the mathematical domain of an operation (bad radius, mass, order...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed: non-finite samples, eigensolver non-convergence.
class NumericError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string &what)
{
    if (!ok)
        throw DomainError(what);
}

} // namespace detail
} // namespace gqd

#endif
