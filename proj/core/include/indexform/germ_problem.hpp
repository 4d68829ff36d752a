#ifndef INDEXFORM_GERM_PROBLEM_HPP
#define INDEXFORM_GERM_PROBLEM_HPP

#include <stdexcept>
#include <vector>

#include "indexform/polynomial.hpp"

namespace indexform {

/// Violated operation precondition (maps to CLI exit code 3).
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string &what) : std::runtime_error(what) {}
};

/// A configuration the exact pipeline cannot handle directly; the caller
/// should retry with perturbed parameters (CLI exit code 4).
class DegenerateConfiguration : public std::runtime_error {
  public:
    explicit DegenerateConfiguration(const std::string &what) : std::runtime_error(what) {}
};

/// Input germ data: the map f = (f_1..f_k) cutting out the variety and the
/// 1-form coefficients A_1..A_n. All polynomials share one context; each
/// f_i vanishes at the origin.
struct GermProblem {
    RingPtr ring;         // n ordered variables
    std::vector<Poly> f;  // k entries, k < n
    std::vector<Poly> A;  // n entries

    std::size_t n() const { return ring->nvars(); }
    std::size_t k() const { return f.size(); }

    /// Throws PreconditionError on arity mismatches, mixed contexts or an
    /// f_i with nonzero constant term.
    void validate() const;

    /// The same problem with the 1-form replaced by omega - lambda * eta.
    GermProblem perturbed(const std::vector<Poly> &eta, const Rat &lambda) const;

    /// Coordinate change x = J * x'. f pulls back by composition; the
    /// 1-form coefficients transform covariantly: A' = J^T (A painted in
    /// the new coordinates).
    GermProblem linear_change(const std::vector<std::vector<Rat>> &J) const;
};

}  // namespace indexform

#endif
