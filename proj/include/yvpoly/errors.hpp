#pragma once

#include <stdexcept>
#include <string>

namespace yvpoly {

// Exact division had a nonzero remainder.
class NotDivisibleError : public std::runtime_error {
public:
    explicit NotDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

// Root bound requested for a constant polynomial.
class DegreeZeroError : public std::runtime_error {
public:
    explicit DegreeZeroError(const std::string& what) : std::runtime_error(what) {}
};

// The defining recurrence produced an inexact division.  This cannot happen
// for correct arithmetic; treat as fatal.
class RecurrenceDivisionError : public std::runtime_error {
public:
    explicit RecurrenceDivisionError(const std::string& what) : std::runtime_error(what) {}
};

// The lowest-coefficient recursion produced an inexact division (same
// severity as RecurrenceDivisionError).
class RecursionDivisionError : public std::runtime_error {
public:
    explicit RecursionDivisionError(const std::string& what) : std::runtime_error(what) {}
};

// Sturm chain construction requires a squarefree input.
class NotSquarefreeError : public std::runtime_error {
public:
    explicit NotSquarefreeError(const std::string& what) : std::runtime_error(what) {}
};

// Two polynomials expected to be coprime share a root.
class CommonRootError : public std::runtime_error {
public:
    explicit CommonRootError(const std::string& what) : std::runtime_error(what) {}
};

// A persisted cache failed validation on load.
class CacheError : public std::runtime_error {
public:
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace yvpoly
