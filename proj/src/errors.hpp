#pragma once

#include <stdexcept>
#include <string>

namespace hzeta {

// Error taxonomy shared by the C++ core and the C API (see hz_status in
// include/hzeta/hzeta.h; codes must stay in sync).
enum class ErrorCode : int {
    Ok = 0,
    Domain = 1,
    PoleProximity = 2,
    NoConvergence = 3,
    BadIntegrand = 4,
    UnresolvedHypothesis = 5,
    AmbiguousResolution = 6,
    InvalidArgument = 7,
    Internal = 8,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct PoleProximity : Error {
    explicit PoleProximity(const std::string& what) : Error(ErrorCode::PoleProximity, what) {}
};

// Quadrature did not reach the requested tolerance within the level budget.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error(ErrorCode::NoConvergence, what) {}
};

// An integrand sample came back NaN/Inf.
struct BadIntegrand : Error {
    explicit BadIntegrand(const std::string& what) : Error(ErrorCode::BadIntegrand, what) {}
};

struct UnresolvedHypothesis : Error {
    explicit UnresolvedHypothesis(const std::string& what)
        : Error(ErrorCode::UnresolvedHypothesis, what) {}
};

struct AmbiguousResolution : Error {
    explicit AmbiguousResolution(const std::string& what)
        : Error(ErrorCode::AmbiguousResolution, what) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

}  // namespace hzeta
