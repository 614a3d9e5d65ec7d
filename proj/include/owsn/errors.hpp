#pragma once

#include <stdexcept>
#include <string>

namespace owsn {

// Thrown when the inputs are valid but the requested result does not
// exist: a mandatory ISL cannot be established, a ground point lies
// outside the coverage band, or the latency gap never favors the
// satellite path. The CLI maps these to exit code 2; plain validation
// errors (std::invalid_argument / std::domain_error) map to exit 1.
class infeasible_error : public std::runtime_error {
  public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace owsn
