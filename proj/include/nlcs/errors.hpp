#ifndef NLCS_ERRORS_HPP
#define NLCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nlcs {

// amplitude outside the convergence disk of a coefficient series
class DomainError : public std::runtime_error {
 public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// adaptive truncation hit the dimension cap before the tail converged
class TruncationError : public std::runtime_error {
 public:
    explicit TruncationError(const std::string& what)
        : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlcs

#endif
