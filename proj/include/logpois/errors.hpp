#ifndef LOGPOIS_ERRORS_HPP
#define LOGPOIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logpois {

/* Malformed or invalid input data (bad syntax, violated construction
 * invariants). CLI exit code 3. */
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string &msg) : std::runtime_error(msg) {}
};

/* A mathematical hypothesis required by the requested computation fails
 * (non-resonance, flatness, tangency, ...). Carries the hypothesis name
 * and a witness in canonical text form. CLI exit code 2. */
class math_error : public std::runtime_error {
public:
    math_error(std::string hypothesis, const std::string &msg,
               std::string witness = "")
        : std::runtime_error(msg), hypothesis(std::move(hypothesis)),
          witness(std::move(witness)) {}
    std::string hypothesis;
    std::string witness;
};

} // namespace logpois

#endif
