#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stablewave {

/// Adaptive quadrature ran out of its panel budget before meeting the
/// requested tolerance.  Carries the best value so far and its error estimate
/// so callers can decide whether the partial answer is usable.
class QuadratureBudgetError : public std::runtime_error {
  public:
    QuadratureBudgetError(const std::string& what, double partial, double error_estimate)
        : std::runtime_error(what), partial_value(partial), error_estimate(error_estimate) {}
    double partial_value;
    double error_estimate;
};

/// Field evaluation requested exactly at a noise atom where the kernel's
/// logarithmic singularity makes U undefined.
class SingularAtomError : public std::runtime_error {
  public:
    SingularAtomError(const std::string& what, std::size_t atom_index)
        : std::runtime_error(what), atom_index(atom_index) {}
    std::size_t atom_index;
};

/// A function handed to the stochastic integral produced a non-finite value
/// at one of the atoms.
class NonFiniteAtomError : public std::runtime_error {
  public:
    NonFiniteAtomError(const std::string& what, std::size_t atom_index)
        : std::runtime_error(what), atom_index(atom_index) {}
    std::size_t atom_index;
};

/// Malformed text in a noise-realization or config file.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line_no)
        : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"), line_no(line_no) {}
    std::size_t line_no;
};

/// Structurally valid file whose header contradicts its body
/// (e.g. K promises more rows than are present).
class IntegrityError : public std::runtime_error {
  public:
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stablewave
