#ifndef FCFV_ASSEMBLY_HPP
#define FCFV_ASSEMBLY_HPP

#include <functional>
#include <vector>

#include <Eigen/Sparse>

#include "fcfv/face_sets.hpp"
#include "fcfv/material.hpp"
#include "fcfv/mesh.hpp"
#include "fcfv/stabilization.hpp"
#include "fcfv/types.hpp"

namespace fcfv {

/// Pointwise problem data, evaluated at face barycenters (dirichlet,
/// traction) and element centroids (body_force). Empty std::function means
/// identically zero.
struct ProblemData {
    std::function<VecN(const Vec3&)> dirichlet;
    std::function<VecN(const Vec3&, const VecN& outward_normal)> traction;
    std::function<VecN(const Vec3&)> body_force;
};

/// Per-element, per-face quantities entering the local and global problems:
/// everything is one-point quadrature, so a face contributes through its
/// area, barycenter and the Voigt normal matrix of its outward normal.
struct ElementContext {
    int element = -1;
    double measure = 0.0;
    std::vector<int> face_ids;       // all faces (A_e), element-local order
    std::vector<double> face_area;
    std::vector<MatMN> face_normal_matrix;  // N_j from the element-outward normal
    std::vector<FaceTag> face_tag;
    std::vector<MatNN> face_trace_op;  // S_j: identity, or P_t on symmetry faces
};

ElementContext make_element_context(const Mesh& mesh, int element);

/// alpha_e, beta_e, z_e: the face sums defining the closed-form local solve.
struct LocalPrecomp {
    MatNN alpha;
    VecN beta;
    VecM z;
};

LocalPrecomp local_precompute(const ElementContext& ctx, const Mesh& mesh,
                              const MatMM& sqrt_elasticity, const MatNN& tau_face,
                              const ProblemData& problem);

/// Constant element solution recovered from the hybrid trace.
struct LocalSolution {
    VecM mixed;        // L_e
    VecN displacement; // u_e
};

/// Closed-form local solve: hybrid_values holds the trace on the element's
/// hybrid (non-Dirichlet) faces, in element-local face order.
LocalSolution recover_local_solution(const ElementContext& ctx, const LocalPrecomp& precomp,
                                     const MatMM& sqrt_elasticity, const MatNN& tau_face,
                                     const std::vector<VecN>& hybrid_values);

/// Elemental stiffness and load blocks over the element's hybrid faces.
/// dofs[k] is the first of nsd consecutive global DOFs of the k-th hybrid
/// face. The blocks are written in the sign convention that makes the
/// assembled matrix symmetric positive definite: interior rows carry the
/// normal-stress jump, Neumann rows the traction condition and symmetry
/// rows the tangential traction condition projected with P_t plus a scaled
/// normal-displacement pin (the pin row is decoupled, so solutions match
/// the unprojected equations exactly).
struct ElementContribution {
    std::vector<int> dofs;
    Eigen::MatrixXd stiffness;
    Eigen::VectorXd load;
};

ElementContribution elemental_contribution(const ElementContext& ctx, const LocalPrecomp& precomp,
                                           const FaceSets& sets, const Mesh& mesh,
                                           const MatMM& sqrt_elasticity, const MatNN& tau_face,
                                           const ProblemData& problem);

/// Face-based global system K u_hat = f with nsd DOFs per hybrid face.
struct GlobalSystem {
    Eigen::SparseMatrix<double> stiffness;
    Eigen::VectorXd rhs;
    std::vector<int> dof_map;  // face id -> first DOF, -1 on Dirichlet faces
    int nsd = 2;

    int n_dof() const { return static_cast<int>(rhs.size()); }
};

/// Assembles the global system. Elemental work runs in parallel over
/// elements; the final scatter is serial in element order, so the result is
/// bit-identical to a serial assembly.
GlobalSystem assemble(const Mesh& mesh, const FaceSets& sets, const Material& material,
                      const Stabilization& stabilization, const ProblemData& problem);

/// Convenience: precomputes alpha/beta/z for every element (parallel).
std::vector<LocalPrecomp> precompute_all(const Mesh& mesh, const Material& material,
                                         const Stabilization& stabilization,
                                         const ProblemData& problem);

/// Hybrid trace values of one element's hybrid faces from the solved vector.
std::vector<VecN> element_hybrid_values(const ElementContext& ctx, const GlobalSystem& system,
                                        const Eigen::VectorXd& solution);

} // namespace fcfv

#endif
