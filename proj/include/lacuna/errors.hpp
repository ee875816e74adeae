#pragma once

#include <stdexcept>
#include <string>

namespace lacuna {

/// A polynomial built over Q(sqrt d) was expected to lie in Q[x] but a
/// coefficient kept a nonzero sqrt(d) component.
class NonRealResidue : public std::domain_error {
public:
    NonRealResidue(std::size_t degree, const std::string& coefficient)
        : std::domain_error("non-real residue at degree " + std::to_string(degree) + ": " + coefficient),
          degree_(degree), coefficient_(coefficient) {}

    std::size_t degree() const noexcept { return degree_; }
    const std::string& coefficient() const noexcept { return coefficient_; }

private:
    std::size_t degree_;
    std::string coefficient_;
};

class BadParity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BadM : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BadN : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedDiscriminant : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ZeroDiscriminant : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnknownIdentity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace lacuna
