#ifndef CYCLO_ERRORS_HPP
#define CYCLO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different numbers of v-parameters.
class ArityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A denominator vanished under specialization.
class SingularityError : public Error {
public:
    using Error::Error;
};

class GenericityError : public Error {
public:
    using Error::Error;
};

class ContentStringError : public Error {
public:
    using Error::Error;
};

class SpectralCollisionError : public Error {
public:
    using Error::Error;
};

class DegeneracyError : public Error {
public:
    using Error::Error;
};

class LookupError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class BasisMismatchError : public Error {
public:
    using Error::Error;
};

class SizeMismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

}  // namespace cyclo

#endif
