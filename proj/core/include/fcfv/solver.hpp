#ifndef FCFV_SOLVER_HPP
#define FCFV_SOLVER_HPP

#include <string>

#include "fcfv/assembly.hpp"

namespace fcfv {

enum class SolverMethod { Auto, Direct, CG };
enum class Preconditioner { None, Jacobi };

const char* to_string(SolverMethod method);
const char* to_string(Preconditioner precond);

struct SolverConfig {
    SolverMethod method = SolverMethod::Auto;  // Auto: Direct up to 2e5 DOFs, CG beyond
    double cg_tolerance = 1e-9;                // relative residual in ||f||
    int cg_max_iterations = 20000;
    Preconditioner preconditioner = Preconditioner::Jacobi;

    void validate() const;
};

struct SolveReport {
    SolverMethod method_used = SolverMethod::Direct;
    int iterations = 0;          // 0 for direct solves
    double relative_residual = 0.0;
    double seconds = 0.0;
};

/// Solves the symmetric system K u_hat = f. Direct solves use a sparse
/// LDL^T factorization; CG uses the configured preconditioner and stops at
/// ||K u - f|| <= cg_tolerance * ||f||. Non-convergence raises SolveError
/// carrying the best iterate; a factorization breakdown raises SolveError
/// suggesting the CG fallback.
Eigen::VectorXd solve(const GlobalSystem& system, const SolverConfig& config, SolveReport* report = nullptr);

} // namespace fcfv

#endif
