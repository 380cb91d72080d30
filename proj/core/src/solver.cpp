#include "fcfv/solver.hpp"

#include <chrono>
#include <stdexcept>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include "fcfv/error.hpp"

namespace fcfv {

const char* to_string(SolverMethod method) {
    switch (method) {
        case SolverMethod::Auto: return "auto";
        case SolverMethod::Direct: return "direct";
        case SolverMethod::CG: return "cg";
    }
    return "?";
}

const char* to_string(Preconditioner precond) {
    return precond == Preconditioner::Jacobi ? "jacobi" : "none";
}

void SolverConfig::validate() const {
    if (!(cg_tolerance > 0.0 && cg_tolerance < 1.0))
        throw std::invalid_argument("SolverConfig: cg_tolerance must lie in (0, 1)");
    if (cg_max_iterations < 1)
        throw std::invalid_argument("SolverConfig: cg_max_iterations must be >= 1");
}

namespace {

constexpr int kDirectDofLimit = 200000;

double relative_residual(const GlobalSystem& system, const Eigen::VectorXd& solution) {
    const double rhs_norm = system.rhs.norm();
    if (rhs_norm == 0.0) return (system.stiffness * solution).norm();
    return (system.stiffness * solution - system.rhs).norm() / rhs_norm;
}

template <typename Precond>
Eigen::VectorXd solve_cg(const GlobalSystem& system, const SolverConfig& config, SolveReport& report) {
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper, Precond> cg;
    cg.setTolerance(config.cg_tolerance);
    cg.setMaxIterations(config.cg_max_iterations);
    cg.compute(system.stiffness);
    Eigen::VectorXd solution = cg.solve(system.rhs);
    report.iterations = static_cast<int>(cg.iterations());
    report.relative_residual = relative_residual(system, solution);
    if (cg.info() != Eigen::Success) {
        throw SolveError("cg did not converge within " + std::to_string(config.cg_max_iterations) +
                             " iterations (residual " + std::to_string(report.relative_residual) + ")",
                         std::move(solution), report.relative_residual, report.iterations);
    }
    return solution;
}

} // namespace

Eigen::VectorXd solve(const GlobalSystem& system, const SolverConfig& config, SolveReport* report_out) {
    config.validate();
    if (system.stiffness.rows() != system.stiffness.cols() ||
        system.stiffness.rows() != system.rhs.size())
        throw DimensionError("solve: inconsistent system dimensions");

    SolveReport report;
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](Eigen::VectorXd solution) {
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (report_out) *report_out = report;
        return solution;
    };

    if (system.n_dof() == 0) return finish(Eigen::VectorXd());

    SolverMethod method = config.method;
    if (method == SolverMethod::Auto)
        method = system.n_dof() <= kDirectDofLimit ? SolverMethod::Direct : SolverMethod::CG;
    report.method_used = method;

    if (method == SolverMethod::Direct) {
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(system.stiffness);
        if (ldlt.info() != Eigen::Success)
            throw SolveError("sparse LDLT factorization failed; consider the cg solver",
                             Eigen::VectorXd::Zero(system.n_dof()), 1.0, 0);
        Eigen::VectorXd solution = ldlt.solve(system.rhs);
        report.relative_residual = relative_residual(system, solution);
        return finish(std::move(solution));
    }

    if (config.preconditioner == Preconditioner::Jacobi)
        return finish(solve_cg<Eigen::DiagonalPreconditioner<double>>(system, config, report));
    return finish(solve_cg<Eigen::IdentityPreconditioner>(system, config, report));
}

} // namespace fcfv
