#ifndef QTORIC_ERRORS_HPP
#define QTORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtoric {

// Bad arguments or malformed configuration (CLI exit code 2).
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A computation hit a state that contradicts the mathematics (exit code 1).
class MathError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qtoric

#endif
