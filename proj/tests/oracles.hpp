#ifndef FCFV_TEST_ORACLES_HPP
#define FCFV_TEST_ORACLES_HPP

#include <functional>

#include "fcfv/assembly.hpp"
#include "fcfv/face_sets.hpp"
#include "fcfv/material.hpp"
#include "fcfv/mesh.hpp"
#include "fcfv/stabilization.hpp"

// Test-only oracles. Everything here re-derives the discrete equations
// directly from their one-point-quadrature definitions with dense algebra,
// independently of the closed-form implementation under test.

namespace fcfv::oracle {

/// Residuals of the two local equations for a given candidate (L_e, u_e):
///   r_L = |O_e| L_e + sum_D |G_j| D~^T N_j u_D + sum_B |G_j| D~^T N_j S_j u_hat_j
///   r_u = (sum_A |G_j| tau) u_e - |O_e| f - sum_D |G_j| tau u_D - sum_B |G_j| tau S_j u_hat_j
struct LocalResiduals {
    VecM mixed;
    VecN displacement;
};
LocalResiduals local_residuals(const Mesh& mesh, int element, const Material& material,
                               const Stabilization& stabilization, const ProblemData& problem,
                               const std::vector<VecN>& hybrid_values, const VecM& mixed,
                               const VecN& displacement);

/// Dense direct solve of the same local equations (LU on the full block).
struct DenseLocal {
    VecM mixed;
    VecN displacement;
};
DenseLocal dense_local_solve(const Mesh& mesh, int element, const Material& material,
                             const Stabilization& stabilization, const ProblemData& problem,
                             const std::vector<VecN>& hybrid_values);

/// Dense global matrix/rhs obtained by assembling the full (L, u, u_hat)
/// block system of the one-point-quadrature weak form and eliminating the
/// element unknowns numerically (Schur complement). DOF numbering matches
/// FaceSets::hybrid_index.
struct DenseSystem {
    Eigen::MatrixXd stiffness;
    Eigen::VectorXd rhs;
};
DenseSystem schur_system(const Mesh& mesh, const FaceSets& sets, const Material& material,
                         const Stabilization& stabilization, const ProblemData& problem);

/// Central finite differences of analytic fields.
MatNN fd_gradient(const std::function<VecN(const Vec3&)>& field, const Vec3& at, int nsd,
                  double step = 1e-6);
VecN fd_stress_divergence(const std::function<VecM(const Vec3&)>& stress, const Vec3& at, int nsd,
                          double step = 1e-6);

} // namespace fcfv::oracle

#endif
