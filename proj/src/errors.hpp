#pragma once

#include <stdexcept>
#include <string>

namespace clustersim {

enum class ErrorCode {
    InvalidArity = 1,
    DimensionMismatch = 2,
    SiteOutOfRange = 3,
    SameSite = 4,
    NotUnitary = 5,
    TooFewSites = 6,
    InvalidPartition = 7,
    VacPopulated = 8,
    InvalidArgument = 9,
    Internal = 10,
};

class SimError : public std::runtime_error {
  public:
    SimError(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &msg) {
    throw SimError(code, msg);
}

} // namespace clustersim
