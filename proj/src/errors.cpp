#include "foliation/errors.hpp"

namespace fol {

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegenerateLinearPart: return "DegenerateLinearPart";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::NotSaddleNode: return "NotSaddleNode";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NotInvariantBranch: return "NotInvariantBranch";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::MaxBlowupsExceeded: return "MaxBlowupsExceeded";
    case ErrorCode::AlgebraicCenterUnsupported: return "AlgebraicCenterUnsupported";
    case ErrorCode::ProximityMismatch: return "ProximityMismatch";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotReducedEffective: return "NotReducedEffective";
    case ErrorCode::CommonComponent: return "CommonComponent";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::UnsupportedBranch: return "UnsupportedBranch";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_unsupported(ErrorCode c) {
    return c == ErrorCode::AlgebraicCenterUnsupported || c == ErrorCode::UnsupportedBranch ||
           c == ErrorCode::ParseError || c == ErrorCode::NotSingular ||
           c == ErrorCode::MaxBlowupsExceeded || c == ErrorCode::CommonComponent;
}

} // namespace fol
