#ifndef FCFV_VOIGT_HPP
#define FCFV_VOIGT_HPP

#include "fcfv/material.hpp"
#include "fcfv/types.hpp"

namespace fcfv {

// Voigt component ordering, fixed project-wide:
//   2D: [s11, s22, t12]
//   3D: [s11, s22, s33, t12, t13, t23]
// Strain vectors use engineering shear (gamma_ij = 2 eps_ij).

/// Constitutive matrix D (msd x msd, symmetric positive definite).
/// Throws DimensionError for poisson_ratio == 0.5 (singular material) and
/// std::invalid_argument for out-of-range inputs.
MatMM elasticity_matrix(const Material& material);

/// Symmetric spectral square root: returns M with M * M^T == D.
/// Eigenvalues are clamped at a tiny positive floor before the square root;
/// eigenvalues below -1e-10 * ||D|| raise DecompositionError, as does an
/// asymmetric input.
MatMM sqrt_elasticity_matrix(const MatMM& elasticity);

/// Face-normal matrix N (msd x nsd): N^T * s_voigt == S * n for every
/// symmetric tensor S with Voigt form s_voigt.
MatMN normal_matrix(const VecN& unit_normal);

/// Normal and tangential projectors (P_n = n n^T, P_t = I - n n^T).
struct Projectors {
    MatNN normal;
    MatNN tangent;
};
Projectors projection_matrices(const VecN& unit_normal);

/// Stress from the mixed variable: sigma_V = -D_tilde * L.
VecM stress_from_mixed(const VecM& mixed, const MatMM& sqrt_elasticity);

/// Von Mises equivalent stress. In 2D the out-of-plane stress is embedded
/// per the material model: s33 = 0 for plane stress, s33 = nu (s11 + s22)
/// for plane strain; the standard deviatoric second-invariant definition is
/// then applied in 3D.
double von_mises(const VecM& stress_voigt, const Material& material);

/// Symmetric-gradient Voigt vector of a displacement gradient (engineering
/// shear convention), grad(i,j) = d u_i / d x_j.
VecM symmetric_gradient_voigt(const MatNN& grad);

} // namespace fcfv

#endif
