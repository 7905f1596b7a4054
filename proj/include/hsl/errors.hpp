#pragma once
#include <stdexcept>
#include <string>

namespace hsl
{
    class Error : public std::runtime_error
    {
        public:
        using std::runtime_error::runtime_error;
    };

    /// Bad parameters (degree out of range, dilatation order beyond the cap, ...).
    class ConfigError : public Error
    {
        public:
        using Error::Error;
    };

    /// Mesh file could not be read or does not conform to the format.
    class ParseError : public Error
    {
        public:
        using Error::Error;
    };

    /// Stored grid window is too small for the requested enumeration.
    class WindowError : public Error
    {
        public:
        using Error::Error;
    };

    /// Constraint system exceeds the configured unknown budget.
    class SizeGuardError : public Error
    {
        public:
        using Error::Error;
    };

    /// A certified identity failed at runtime; indicates an implementation bug.
    class InternalError : public Error
    {
        public:
        using Error::Error;
    };
}
