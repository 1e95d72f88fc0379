#include "gauss/lindblad_kernels.hpp"

#include <cmath>
#include <complex>

#include "gauss/errors.hpp"

namespace gauss {

using cd = std::complex<double>;

LadderOperators::LadderOperators(int dim) {
  if (dim < 2) throw DimensionError("LadderOperators: dimension must be >= 2");
  a = ComplexMatrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  a_dag = a.adjoint();
}

void lindblad_rhs_into(const ComplexMatrix& rho, const BathSpec& bath, bool include_rotation,
                       ComplexMatrix& out) {
  const int d = static_cast<int>(rho.rows());
  if (d < 2 || rho.cols() != d) throw DimensionError("lindblad_rhs: expected a square matrix, dim >= 2");
  out.resize(d, d);

  const double g = bath.gamma0;
  const double n = bath.occupancy();
  const cd m = bath.anomalous();
  const cd m_conj = std::conj(m);
  const bool squeezed = m != cd{0.0, 0.0};
  const double w = include_rotation ? bath.omega0 : 0.0;

  auto s = [](int k) { return std::sqrt(static_cast<double>(k)); };
  // diagonal of the truncated a a^dag
  auto aad = [d](int k) { return k < d - 1 ? static_cast<double>(k + 1) : 0.0; };
  auto at = [&](int i, int j) -> cd {
    return (i >= 0 && i < d && j >= 0 && j < d) ? rho(i, j) : cd{0.0, 0.0};
  };

#pragma omp parallel for schedule(static) if (d >= kParallelMinDim)
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const cd r = rho(i, j);
      // a rho a^dag - {a^dag a, rho}/2
      cd down = (i + 1 < d && j + 1 < d) ? s(i + 1) * s(j + 1) * rho(i + 1, j + 1) : cd{};
      down -= 0.5 * static_cast<double>(i + j) * r;
      // a^dag rho a - {a a^dag, rho}/2
      cd up = (i >= 1 && j >= 1) ? s(i) * s(j) * rho(i - 1, j - 1) : cd{};
      up -= 0.5 * (aad(i) + aad(j)) * r;
      cd value = g * (n + 1.0) * down + g * n * up;

      if (squeezed) {
        // 2 a rho a - a^2 rho - rho a^2
        cd lower{};
        if (i + 1 < d && j >= 1) lower += 2.0 * s(i + 1) * s(j) * at(i + 1, j - 1);
        if (i + 2 < d) lower -= s(i + 1) * s(i + 2) * at(i + 2, j);
        if (j >= 2) lower -= s(j) * s(j - 1) * at(i, j - 2);
        // 2 a^dag rho a^dag - a^dag^2 rho - rho a^dag^2
        cd raise{};
        if (i >= 1 && j + 1 < d) raise += 2.0 * s(i) * s(j + 1) * at(i - 1, j + 1);
        if (i >= 2) raise -= s(i) * s(i - 1) * at(i - 2, j);
        if (j + 2 < d) raise -= s(j + 1) * s(j + 2) * at(i, j + 2);
        value -= 0.5 * g * (m_conj * lower + m * raise);
      }
      if (w != 0.0) value -= cd{0.0, w * static_cast<double>(i - j)} * r;
      out(i, j) = value;
    }
  }
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const BathSpec& bath, bool include_rotation) {
  ComplexMatrix out;
  lindblad_rhs_into(rho, bath, include_rotation, out);
  return out;
}

ComplexMatrix lindblad_rhs_reference(const ComplexMatrix& rho, const BathSpec& bath,
                                     bool include_rotation) {
  const int d = static_cast<int>(rho.rows());
  if (d < 2 || rho.cols() != d) throw DimensionError("lindblad_rhs: expected a square matrix, dim >= 2");
  const LadderOperators ops(d);
  const ComplexMatrix& a = ops.a;
  const ComplexMatrix& ad = ops.a_dag;
  const double g = bath.gamma0;
  const double n = bath.occupancy();
  const cd m = bath.anomalous();

  const ComplexMatrix num = ad * a;
  const ComplexMatrix anti = a * ad;
  ComplexMatrix out = g * (n + 1.0) * (a * rho * ad - 0.5 * num * rho - 0.5 * rho * num) +
                      g * n * (ad * rho * a - 0.5 * anti * rho - 0.5 * rho * anti);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix ad2 = ad * ad;
  out -= 0.5 * g * std::conj(m) * (2.0 * a * rho * a - a2 * rho - rho * a2);
  out -= 0.5 * g * m * (2.0 * ad * rho * ad - ad2 * rho - rho * ad2);
  if (include_rotation) out -= cd{0.0, bath.omega0} * (num * rho - rho * num);
  return out;
}

}  // namespace gauss
