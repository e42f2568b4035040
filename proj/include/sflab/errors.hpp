#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sflab {

/// Base of every error the library throws.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A family violates its invariants (element out of range, unsorted member,
/// duplicate member in a non-multifamily).
class InvalidFamily : public Error
{
public:
    using Error::Error;
};

/// An argument is outside an operation's domain (r < 3 for find_sunflower,
/// a bound evaluated outside its theorem's range, ...).
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// A search or enumeration ran past its node/time budget.
class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

/// Transversal requested on a family that contains the empty set.
class EmptyMemberError : public Error
{
public:
    explicit EmptyMemberError(std::size_t member)
        : Error("member " + std::to_string(member) + " is empty; no transversal exists"), member(member)
    {
    }
    std::size_t member;
};

/// A point lies exactly on a region boundary.
class GeneralPositionError : public Error
{
public:
    GeneralPositionError(std::size_t point, std::size_t region)
        : Error("point " + std::to_string(point) + " lies on the boundary of region " + std::to_string(region)),
          point(point), region(region)
    {
    }
    std::size_t point;
    std::size_t region;
};

/// Text-format parse failure with 1-based position.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line), column(column)
    {
    }
    std::size_t line;
    std::size_t column;
};

} // namespace sflab
