#ifndef FOLIATION_ERRORS_HPP
#define FOLIATION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fol {

enum class ErrorCode {
    ZeroPolynomial,
    DegenerateLinearPart,
    NotSingular,
    NotSaddleNode,
    OrderTooSmall,
    NotInvariantBranch,
    TruncationInsufficient,
    MaxBlowupsExceeded,
    AlgebraicCenterUnsupported,
    ProximityMismatch,
    FormulaMismatch,
    NotInvariant,
    NotReducedEffective,
    CommonComponent,
    GenericityFailure,
    UnsupportedBranch,
    ParseError
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& what)
        : std::runtime_error(std::string(error_name(c)) + ": " + what), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// true for the errors the cli maps to "unsupported input"
bool is_unsupported(ErrorCode c);

} // namespace fol

#endif
