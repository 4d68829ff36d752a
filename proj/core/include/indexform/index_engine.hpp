#ifndef INDEXFORM_INDEX_ENGINE_HPP
#define INDEXFORM_INDEX_ENGINE_HPP

#include <optional>

#include "indexform/germ_problem.hpp"
#include "indexform/poly_matrix.hpp"
#include "indexform/standard_basis.hpp"

namespace indexform {

/// Outcome of the complex index computation. index is empty when the zero
/// is not algebraically isolated (infinite colength); otherwise it equals
/// the number of quotient basis monomials.
struct IndexReport {
    std::optional<long> index;
    std::vector<Poly> ideal_generators;
    std::vector<Mono> leading_monomials;
    std::vector<Mono> quotient_basis;
};

/// The (k+1) x n matrix whose rows are the Jacobian rows of f followed by
/// the 1-form coefficients A_1..A_n.
PolyMat index_matrix(const GermProblem &g);

/// Generators of the index ideal: f_1..f_k followed by all (k+1)x(k+1)
/// minors of index_matrix(g) in the deterministic minor order. For k=0
/// this degenerates to A_1..A_n.
std::vector<Poly> build_index_ideal(const GermProblem &g);

/// Complex index as the colength of the index ideal in the local ring.
IndexReport complex_index(const GermProblem &g, int degree_cap = 64);

/// Effective sufficient check that V = f^{-1}(0) has an isolated
/// singularity: the ideal generated by f and the k x k minors of the
/// Jacobian of f has finite colength. Always true for k = 0.
bool check_icis(const GermProblem &g, int degree_cap = 64);

}  // namespace indexform

#endif
