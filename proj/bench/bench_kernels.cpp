// Compares the OpenMP kernels against their serial references:
//   - Lindblad RHS: banded row-parallel kernel vs dense operator products
//   - parameter sweep: OpenMP grid evaluation vs serial evaluation

#include <chrono>
#include <iostream>

#include <fmt/format.h>
#include <omp.h>

#include "gauss/fock_oracle.hpp"
#include "gauss/lindblad_kernels.hpp"
#include "gauss/sweep.hpp"

namespace {

template <class F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  using namespace gauss;
  fmt::print("threads: {}\n\n", omp_get_max_threads());

  const auto bath = BathSpec::squeezed(1.0, 0.5, 0.4, 0.3);
  fmt::print("{:>6} {:>14} {:>14} {:>9} {:>12}\n", "dim", "reference ms", "kernel ms", "speedup", "max |diff|");
  for (int dim : {40, 80, 160, 320}) {
    const auto rho = FockDensityMatrix::squeezed_vacuum(dim, 0.3, 0.0).entries();
    ComplexMatrix fast;
    ComplexMatrix slow;
    const int reps = dim <= 80 ? 50 : 5;
    const double t_ref = time_ms([&] { slow = lindblad_rhs_reference(rho, bath, false); }, reps);
    const double t_fast = time_ms([&] { lindblad_rhs_into(rho, bath, false, fast); }, reps);
    fmt::print("{:>6} {:>14.4f} {:>14.4f} {:>9.1f} {:>12.3e}\n", dim, t_ref, t_fast, t_ref / t_fast,
               (fast - slow).cwiseAbs().maxCoeff());
  }

  SweepSpec spec;
  spec.bath = BathSpec::squeezed(1.0, 0.5, 0.1, 0.0);
  spec.state.kind = StateTemplate::Kind::family;
  spec.state.family = {2.0, 1.5, 1.5};
  spec.grid = {{"N_th", 0.1, 2.0, 24, false}, {"r", 0.0, 0.2, 24, false}};
  spec.outputs = {"t_c", "t_esd", "bound_time"};
  const double t_serial = time_ms([&] { (void)evaluate_sweep_serial(spec); }, 1);
  const double t_omp = time_ms([&] { (void)evaluate_sweep(spec); }, 1);
  fmt::print("\nsweep 24x24 squeezed grid: serial {:.1f} ms, OpenMP {:.1f} ms, speedup {:.1f}\n", t_serial,
             t_omp, t_serial / t_omp);
  return 0;
}
