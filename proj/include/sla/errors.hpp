#pragma once

#include <stdexcept>
#include <string>

namespace sla {

// Base class for all domain errors raised by the library. Everything that can
// go wrong for a *mathematical* reason (as opposed to a programming bug)
// derives from this, so callers can catch one type at the CLI boundary.
// Messages are prefixed with the error name so reports stay self-describing.
struct SlaError : std::runtime_error {
    explicit SlaError(const std::string& msg) : std::runtime_error(msg) {}
};

// A linear map whose spectrum is not fully rational; exact decompositions
// that need the eigenvalues themselves cannot proceed.
struct IrrationalSpectrum : SlaError {
    explicit IrrationalSpectrum(const std::string& msg = "matrix has irrational eigenvalues")
        : SlaError("IrrationalSpectrum: " + msg) {}
};

// A matrix that was required to be diagonalizable is not.
struct NotSemisimple : SlaError {
    explicit NotSemisimple(const std::string& msg = "matrix is not semisimple")
        : SlaError("NotSemisimple: " + msg) {}
};

struct SingularMatrix : SlaError {
    explicit SingularMatrix(const std::string& msg = "matrix is singular")
        : SlaError("SingularMatrix: " + msg) {}
};

// Element passed where a homogeneous (pure even or pure odd) one is required.
struct NonHomogeneous : SlaError {
    explicit NonHomogeneous(const std::string& msg = "element is not parity homogeneous")
        : SlaError("NonHomogeneous: " + msg) {}
};

struct NotNilpotent : SlaError {
    explicit NotNilpotent(const std::string& msg = "algebra is not nilpotent")
        : SlaError("NotNilpotent: " + msg) {}
};

struct NotSolvable : SlaError {
    explicit NotSolvable(const std::string& msg = "algebra is not solvable")
        : SlaError("NotSolvable: " + msg) {}
};

// The candidate nilradical could not be certified (kernel of the trace form
// failed to be a nilpotent ideal).
struct NilradicalVerificationFailed : SlaError {
    explicit NilradicalVerificationFailed(const std::string& msg = "certification failed")
        : SlaError("NilradicalVerificationFailed: " + msg) {}
};

struct NotMaximalRank : SlaError {
    explicit NotMaximalRank(const std::string& msg = "nilpotent algebra is not of maximal rank")
        : SlaError("NotMaximalRank: " + msg) {}
};

// The torus could not be renormalized to act by delta weights on generators.
struct TorusNormalizationFailed : SlaError {
    explicit TorusNormalizationFailed(const std::string& msg = "torus normalization failed")
        : SlaError("TorusNormalizationFailed: " + msg) {}
};

// A structural checker was invoked on input that does not satisfy its
// hypotheses; distinct from the checker *failing*.
struct PreconditionNotMet : SlaError {
    explicit PreconditionNotMet(const std::string& msg = "precondition not met")
        : SlaError("PreconditionNotMet: " + msg) {}
};

// Text format and CLI errors. These keep their raw message (it already
// carries file and line information).
struct ParseError : SlaError {
    explicit ParseError(const std::string& msg) : SlaError(msg) {}
};

struct DuplicateBracket : ParseError {
    explicit DuplicateBracket(const std::string& msg) : ParseError(msg) {}
};

struct UnknownLabel : ParseError {
    explicit UnknownLabel(const std::string& msg) : ParseError(msg) {}
};

struct ParityMismatch : ParseError {
    explicit ParityMismatch(const std::string& msg) : ParseError(msg) {}
};

} // namespace sla
