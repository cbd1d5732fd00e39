#pragma once

#include <stdexcept>
#include <string>

namespace fpspectral {

// Process exit codes used by the command-line tool. Library errors map onto
// these so scripted callers get a stable contract.
enum class ExitCode : int {
  ok = 0,
  bad_parameter = 2,
  tunnelling_collapse = 3,
  no_convergence = 4,
  io_failure = 5,
};

class Error : public std::runtime_error {
public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode exit_code() const { return code_; }

private:
  ExitCode code_;
};

struct BadParameter : Error {
  explicit BadParameter(const std::string& what) : Error(ExitCode::bad_parameter, what) {}
};

// The Maxwellian weight could not be normalized (quadrature of exp(-W/vartheta)
// is zero, negative or not finite).
struct NonNormalizable : Error {
  explicit NonNormalizable(const std::string& what) : Error(ExitCode::bad_parameter, what) {}
};

struct MeshMismatch : Error {
  explicit MeshMismatch(const std::string& what) : Error(ExitCode::bad_parameter, what) {}
};

struct AssemblyFailure : Error {
  explicit AssemblyFailure(const std::string& what) : Error(ExitCode::bad_parameter, what) {}
};

struct FactorizationFailure : Error {
  explicit FactorizationFailure(const std::string& what) : Error(ExitCode::no_convergence, what) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& what) : Error(ExitCode::no_convergence, what) {}
};

struct NonConvergentQuadrature : Error {
  explicit NonConvergentQuadrature(const std::string& what) : Error(ExitCode::no_convergence, what) {}
};

// The spectral gap above the kernel direction has collapsed below resolution;
// coefficient sums past this point are meaningless and must not be formed.
struct TunnellingCollapse : Error {
  explicit TunnellingCollapse(const std::string& what) : Error(ExitCode::tunnelling_collapse, what) {}
};

// A retained eigenvalue sits inside the zero tolerance, so dividing by it
// would amplify noise instead of adding a spectral term.
struct DivisionHazard : Error {
  explicit DivisionHazard(const std::string& what) : Error(ExitCode::tunnelling_collapse, what) {}
};

struct IoFailure : Error {
  explicit IoFailure(const std::string& what) : Error(ExitCode::io_failure, what) {}
};

}  // namespace fpspectral
