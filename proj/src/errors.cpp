#include "itdim/errors.hpp"

namespace itdim {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonAdmissible: return "NonAdmissible";
        case ErrorCode::ZeroModule: return "ZeroModule";
        case ErrorCode::ResolutionCutoff: return "ResolutionCutoff";
        case ErrorCode::PrimeTooSmall: return "PrimeTooSmall";
        case ErrorCode::DecompositionStuck: return "DecompositionStuck";
        case ErrorCode::InternAmbiguous: return "InternAmbiguous";
        case ErrorCode::ClosureCutoff: return "ClosureCutoff";
        case ErrorCode::OrbitCutoff: return "OrbitCutoff";
        case ErrorCode::PdUndetermined: return "PdUndetermined";
        case ErrorCode::ConditionAViolated: return "ConditionAViolated";
    }
    return "Unknown";
}

}  // namespace itdim
