#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meetdet {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text or file. Carries a 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, std::size_t line = 0)
        : Error(line ? std::to_string(line) + ": " + msg : msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A caller violated an operation's stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public PreconditionError {
public:
    DivisionByZero() : PreconditionError("DivisionByZero: division by zero scalar") {}
};

class DivisionNotExact : public PreconditionError {
public:
    explicit DivisionNotExact(const std::string& detail)
        : PreconditionError("DivisionNotExact: " + detail) {}
};

class ScalarNotDivisible : public PreconditionError {
public:
    explicit ScalarNotDivisible(const std::string& detail)
        : PreconditionError("ScalarNotDivisible: " + detail) {}
};

class CycleDetected : public PreconditionError {
public:
    explicit CycleDetected(const std::string& detail)
        : PreconditionError("CycleDetected: " + detail) {}
};

class IndexOutOfRange : public PreconditionError {
public:
    explicit IndexOutOfRange(const std::string& detail)
        : PreconditionError("IndexOutOfRange: " + detail) {}
};

class NotAMeetSemilattice : public PreconditionError {
public:
    NotAMeetSemilattice(int x, int y, const std::string& detail)
        : PreconditionError("NotAMeetSemilattice: " + detail), x_(x), y_(y) {}
    int x() const { return x_; }
    int y() const { return y_; }

private:
    int x_, y_;
};

class NotGcdClosed : public PreconditionError {
public:
    NotGcdClosed(long a, long b)
        : PreconditionError("NotGcdClosed: gcd(" + std::to_string(a) + "," + std::to_string(b) +
                            ") is not in the set; apply gcd_closure first"),
          a_(a), b_(b) {}
    long a() const { return a_; }
    long b() const { return b_; }

private:
    long a_, b_;
};

class SubsetNotMeetClosed : public PreconditionError {
public:
    explicit SubsetNotMeetClosed(const std::string& detail)
        : PreconditionError("SubsetNotMeetClosed: " + detail) {}
};

class SubsetNotFactorClosed : public PreconditionError {
public:
    explicit SubsetNotFactorClosed(const std::string& detail)
        : PreconditionError("SubsetNotFactorClosed: " + detail) {}
};

class IndexSetNotWholeLattice : public PreconditionError {
public:
    explicit IndexSetNotWholeLattice(const std::string& detail)
        : PreconditionError("IndexSetNotWholeLattice: " + detail) {}
};

class ArityMismatch : public PreconditionError {
public:
    explicit ArityMismatch(const std::string& detail)
        : PreconditionError("ArityMismatch: " + detail) {}
};

class DimensionMismatch : public PreconditionError {
public:
    explicit DimensionMismatch(const std::string& detail)
        : PreconditionError("DimensionMismatch: " + detail) {}
};

class NotBelowAny : public PreconditionError {
public:
    explicit NotBelowAny(const std::string& detail)
        : PreconditionError("NotBelowAny: " + detail) {}
};

class FunctionsNotUniform : public PreconditionError {
public:
    explicit FunctionsNotUniform(const std::string& detail)
        : PreconditionError("FunctionsNotUniform: " + detail) {}
};

class NotALinearExtension : public PreconditionError {
public:
    explicit NotALinearExtension(const std::string& detail)
        : PreconditionError("NotALinearExtension: " + detail) {}
};

/// Enumeration refused: the term count exceeds the brute-force guard.
class GuardExceeded : public PreconditionError {
public:
    explicit GuardExceeded(const std::string& detail)
        : PreconditionError("GuardExceeded: " + detail) {}
};

} // namespace meetdet
