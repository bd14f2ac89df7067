/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_ERRORS_HH
#define HAMTOUGH_GUARD_ERRORS_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamtough
{
    /// Malformed textual graph input. offset() is the byte position of the problem.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & message, std::size_t offset);

        auto offset() const noexcept -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
    };

    /// An exact search gave up: size guard, node budget, deadline or cancellation.
    class ResourceLimitExceeded : public std::runtime_error
    {
    public:
        explicit ResourceLimitExceeded(const std::string & message);
    };
}

#endif
