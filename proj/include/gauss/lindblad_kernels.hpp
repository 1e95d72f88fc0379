#pragma once

#include <Eigen/Dense>

#include "gauss/channels.hpp"

namespace gauss {

using ComplexMatrix = Eigen::MatrixXcd;

/// Truncated ladder operators on span{|0>, ..., |d-1>}.
struct LadderOperators {
  ComplexMatrix a;
  ComplexMatrix a_dag;

  explicit LadderOperators(int dim);
};

/// Rows at or above this dimension are distributed over OpenMP threads.
inline constexpr int kParallelMinDim = 64;

/// Right-hand side of the single-mode master equation (thermal terms, plus the
/// M / M* double-ladder terms for squeezed baths, plus -i w0 [a^dag a, rho]
/// when `include_rotation`). Evaluated entrywise from the banded structure of
/// the truncated ladder operators; row-parallel with OpenMP.
void lindblad_rhs_into(const ComplexMatrix& rho, const BathSpec& bath, bool include_rotation,
                       ComplexMatrix& out);

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const BathSpec& bath, bool include_rotation);

/// Serial reference: the master equation transcribed as dense operator
/// products. Same truncated operator algebra as lindblad_rhs(), O(d^3).
ComplexMatrix lindblad_rhs_reference(const ComplexMatrix& rho, const BathSpec& bath,
                                     bool include_rotation);

}  // namespace gauss
