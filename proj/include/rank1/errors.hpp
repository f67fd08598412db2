#pragma once

#include <stdexcept>
#include <string>

namespace rank1 {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error
{
    public:
        explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SingularMatrixError : public Error
{
    public:
        explicit SingularMatrixError(const std::string& what = "singular matrix") : Error(what) {}
};

/** Raised when a quadratic vanishes identically on the queried interval. */
class IdenticallyZeroError : public Error
{
    public:
        explicit IdenticallyZeroError(const std::string& what = "quadratic is identically zero") : Error(what) {}
};

class IrrationalInteriorZeroError : public Error
{
    public:
        explicit IrrationalInteriorZeroError(const std::string& what = "irrational zero inside interval") : Error(what) {}
};

/** A precondition on the game (rank, row-constancy, scaling sign, ...) does not hold. */
class PreconditionError : public Error
{
    public:
        explicit PreconditionError(const std::string& what) : Error(what) {}
};

class NotRankOneError : public PreconditionError
{
    public:
        explicit NotRankOneError(const std::string& what = "game is not of rank 1") : PreconditionError(what) {}
};

class NotFullRankError : public PreconditionError
{
    public:
        explicit NotFullRankError(const std::string& what = "game is not of full rank") : PreconditionError(what) {}
};

class NotRowConstantError : public PreconditionError
{
    public:
        explicit NotRowConstantError(const std::string& what = "game is not row-constant") : PreconditionError(what) {}
};

class NonPositiveScaleError : public PreconditionError
{
    public:
        explicit NonPositiveScaleError(const std::string& what = "scale factor must be positive") : PreconditionError(what) {}
};

class FactorizationMismatchError : public PreconditionError
{
    public:
        explicit FactorizationMismatchError(const std::string& what = "b * c^T does not equal A + B") : PreconditionError(what) {}
};

/**
 * The game is degenerate. `witness()` describes the offending vertex
 * (polyhedron, point and oversized label set) when one is known.
 */
class DegenerateGameError : public Error
{
    public:
        explicit DegenerateGameError(const std::string& what, std::string witness = "")
            : Error(what), witness_(std::move(witness)) {}

        const std::string& witness() const noexcept { return witness_; }

    private:
        std::string witness_;
};

/** Internal consistency failures of the LP machinery. These indicate bugs. */
class LpError : public Error
{
    public:
        explicit LpError(const std::string& what) : Error(what) {}
};

class InfeasibleError : public LpError
{
    public:
        explicit InfeasibleError(const std::string& what = "linear program is infeasible") : LpError(what) {}
};

class UnboundedError : public LpError
{
    public:
        explicit UnboundedError(const std::string& what = "linear program is unbounded") : LpError(what) {}
};

class SingularBasisError : public LpError
{
    public:
        explicit SingularBasisError(const std::string& what = "basis system is singular") : LpError(what) {}
};

class EmptyIntervalError : public LpError
{
    public:
        explicit EmptyIntervalError(const std::string& what = "basis is not optimal for any parameter value") : LpError(what) {}
};

class StalledError : public LpError
{
    public:
        explicit StalledError(const std::string& what = "no admissible pivot") : LpError(what) {}
};

class ParseError : public Error
{
    public:
        explicit ParseError(const std::string& what) : Error(what) {}
};

}   // namespace rank1
