#ifndef REINHARDT_ERRORS_HPP
#define REINHARDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reinhardt {

enum class ErrorCode {
    NotPositivelyOriented,
    DegenerateDenominator,
    StarExit,
    BracketFailure,
    ClosureFailure,
    SingularSystem,
    NewtonDivergence,
    ChartFailure,
    StepSizeUnderflow,
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotPositivelyOriented: return "NotPositivelyOriented";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::StarExit: return "StarExit";
        case ErrorCode::BracketFailure: return "BracketFailure";
        case ErrorCode::ClosureFailure: return "ClosureFailure";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::NewtonDivergence: return "NewtonDivergence";
        case ErrorCode::ChartFailure: return "ChartFailure";
        case ErrorCode::StepSizeUnderflow: return "StepSizeUnderflow";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace reinhardt

#endif
