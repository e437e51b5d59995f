#pragma once

#include <stdexcept>
#include <string>

namespace graphrel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph construction input (bad index, self-loop, bad vertex count).
class InvalidGraph : public Error
{
public:
    using Error::Error;
};

/// Unreadable or malformed graph file.
class ParseError : public Error
{
public:
    using Error::Error;
};

/// Distance-based measure requested on a graph with unreachable pairs.
class DisconnectedGraph : public Error
{
public:
    DisconnectedGraph() : Error("graph is disconnected; distance-based measures are undefined") {}
};

/// An operation precondition does not hold (pendant vertices, n < 2, ...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// Input exceeds a configured size cap.
class TooLarge : public Error
{
public:
    using Error::Error;
};

/// Invalid generator family parameters.
class InvalidFamily : public Error
{
public:
    using Error::Error;
};

} // namespace graphrel
