#include "orlicz/error.hpp"

namespace orlicz {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::NoModulus: return "NoModulus";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::NonFiniteEnergy: return "NonFiniteEnergy";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace orlicz
