#ifndef RODLIM_ERRORS_HPP
#define RODLIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rodlim {

// Exit-code categories used by the CLI layer:
//   2 = configuration error, 3 = solver failure, 4 = invariant violation.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateMesh : std::runtime_error {
    explicit DegenerateMesh(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotCoercive : std::runtime_error {
    explicit NotCoercive(const std::string& msg) : std::runtime_error(msg) {}
};

struct SolverFailure : std::runtime_error {
    explicit SolverFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConstraintViolation : std::runtime_error {
    explicit ConstraintViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularKKT : std::runtime_error {
    explicit SingularKKT(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingField : std::runtime_error {
    explicit MissingField(const std::string& msg) : std::runtime_error(msg) {}
};

struct ForceNotBalanced : std::runtime_error {
    explicit ForceNotBalanced(const std::string& msg) : std::runtime_error(msg) {}
};

struct MonotonicityViolation : std::runtime_error {
    explicit MonotonicityViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rodlim

#endif
