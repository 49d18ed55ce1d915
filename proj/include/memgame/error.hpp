#ifndef MEMGAME_ERROR_HPP
#define MEMGAME_ERROR_HPP

#include <stdexcept>
#include <string>

namespace memgame {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IllegalMove : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// Requested table does not fit the configured memory or option budget.
class CapacityError : public Error {
public:
    using Error::Error;
};

class RuleMismatch : public Error {
public:
    using Error::Error;
};

class NotOnFrontier : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace memgame

#endif
