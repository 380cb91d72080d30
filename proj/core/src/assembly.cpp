#include "fcfv/assembly.hpp"

#include <stdexcept>

#include "fcfv/error.hpp"
#include "fcfv/parallel.hpp"
#include "fcfv/voigt.hpp"

namespace fcfv {

namespace {

VecN eval_or_zero(const std::function<VecN(const Vec3&)>& fn, const Vec3& x, int nsd) {
    return fn ? fn(x) : VecN(VecN::Zero(nsd));
}

} // namespace

ElementContext make_element_context(const Mesh& mesh, int element) {
    const int nsd = mesh.nsd;
    ElementContext ctx;
    ctx.element = element;
    ctx.measure = mesh.elem_measure[element];
    const auto& faces = mesh.elem_faces[element];
    ctx.face_ids.assign(faces.begin(), faces.end());
    ctx.face_area.reserve(faces.size());
    ctx.face_normal_matrix.reserve(faces.size());
    ctx.face_tag.reserve(faces.size());
    ctx.face_trace_op.reserve(faces.size());
    for (int f : faces) {
        const Face& face = mesh.faces[f];
        const VecN normal = mesh.outward_sign(f, element) * face.normal.head(nsd);
        ctx.face_area.push_back(face.area);
        ctx.face_normal_matrix.push_back(normal_matrix(normal));
        ctx.face_tag.push_back(face.tag);
        if (face.tag == FaceTag::Symmetry)
            ctx.face_trace_op.push_back(projection_matrices(normal).tangent);
        else
            ctx.face_trace_op.push_back(MatNN::Identity(nsd, nsd));
    }
    return ctx;
}

LocalPrecomp local_precompute(const ElementContext& ctx, const Mesh& mesh,
                              const MatMM& sqrt_elasticity, const MatNN& tau_face,
                              const ProblemData& problem) {
    if (ctx.face_ids.empty()) throw std::invalid_argument("local_precompute: element has no faces");
    const int nsd = static_cast<int>(tau_face.rows());
    const int msd = static_cast<int>(sqrt_elasticity.rows());

    LocalPrecomp pre;
    pre.alpha = MatNN::Zero(nsd, nsd);
    pre.beta = ctx.measure * eval_or_zero(problem.body_force, mesh.elem_centroid[ctx.element], nsd);
    pre.z = VecM::Zero(msd);

    for (std::size_t j = 0; j < ctx.face_ids.size(); ++j) {
        const double area = ctx.face_area[j];
        pre.alpha += area * tau_face;
        if (ctx.face_tag[j] != FaceTag::Dirichlet) continue;
        const VecN u_d =
            eval_or_zero(problem.dirichlet, mesh.faces[ctx.face_ids[j]].barycenter, nsd);
        pre.beta += area * (tau_face * u_d);
        pre.z += area * (sqrt_elasticity.transpose() * (ctx.face_normal_matrix[j] * u_d));
    }
    return pre;
}

LocalSolution recover_local_solution(const ElementContext& ctx, const LocalPrecomp& precomp,
                                     const MatMM& sqrt_elasticity, const MatNN& tau_face,
                                     const std::vector<VecN>& hybrid_values) {
    VecM mixed_sum = precomp.z;
    VecN displacement_sum = precomp.beta;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ctx.face_ids.size(); ++j) {
        if (ctx.face_tag[j] == FaceTag::Dirichlet) continue;
        if (k >= hybrid_values.size())
            throw std::invalid_argument("recover_local_solution: missing hybrid value");
        const VecN traced = ctx.face_trace_op[j] * hybrid_values[k++];
        const double area = ctx.face_area[j];
        mixed_sum += area * (sqrt_elasticity.transpose() * (ctx.face_normal_matrix[j] * traced));
        displacement_sum += area * (tau_face * traced);
    }
    if (k != hybrid_values.size())
        throw std::invalid_argument("recover_local_solution: too many hybrid values");

    LocalSolution sol;
    sol.mixed = -mixed_sum / ctx.measure;
    sol.displacement = precomp.alpha.ldlt().solve(displacement_sum);
    return sol;
}

ElementContribution elemental_contribution(const ElementContext& ctx, const LocalPrecomp& precomp,
                                           const FaceSets& sets, const Mesh& mesh,
                                           const MatMM& sqrt_elasticity, const MatNN& tau_face,
                                           const ProblemData& problem) {
    const int nsd = static_cast<int>(tau_face.rows());
    const auto& hybrid_local = sets.hybrid[ctx.element];
    const int n_hybrid = static_cast<int>(hybrid_local.size());

    ElementContribution out;
    out.dofs.resize(n_hybrid);
    out.stiffness = Eigen::MatrixXd::Zero(n_hybrid * nsd, n_hybrid * nsd);
    out.load = Eigen::VectorXd::Zero(n_hybrid * nsd);
    if (n_hybrid == 0) return out;

    const MatNN alpha_inv_tau = precomp.alpha.ldlt().solve(tau_face);

    // W_j = D~^T N_j, so the stress coupling block is W_i^T W_j / |Omega_e|.
    std::vector<MatMN> weighted_normals(n_hybrid);
    for (int k = 0; k < n_hybrid; ++k) {
        const int j = hybrid_local[k];
        weighted_normals[k] = sqrt_elasticity.transpose() * ctx.face_normal_matrix[j];
        out.dofs[k] = sets.hybrid_index[ctx.face_ids[j]] * nsd;
    }

    const MatNN tau_alpha_inv_tau = tau_face * alpha_inv_tau;
    const VecN alpha_inv_beta = precomp.alpha.ldlt().solve(precomp.beta);

    for (int a = 0; a < n_hybrid; ++a) {
        const int i = hybrid_local[a];
        const double area_i = ctx.face_area[i];
        const MatNN& trace_i = ctx.face_trace_op[i];

        // Right-hand side: data flowing through the local solve, plus the
        // imposed traction on pure Neumann faces.
        VecN load_i = area_i * (tau_face * alpha_inv_beta -
                                weighted_normals[a].transpose() * precomp.z / ctx.measure);
        load_i = trace_i.transpose() * load_i;
        if (ctx.face_tag[i] == FaceTag::Neumann && problem.traction) {
            const Face& face = mesh.faces[ctx.face_ids[i]];
            const VecN outward = mesh.outward_sign(ctx.face_ids[i], ctx.element) *
                                 face.normal.head(nsd);
            load_i += area_i * problem.traction(face.barycenter, outward);
        }
        out.load.segment(a * nsd, nsd) = load_i;

        for (int b = a; b < n_hybrid; ++b) {
            const int j = hybrid_local[b];
            const double area_j = ctx.face_area[j];

            MatNN block = (area_i * area_j) *
                          (weighted_normals[a].transpose() * weighted_normals[b] / ctx.measure -
                           tau_alpha_inv_tau);
            if (a == b) {
                block += area_i * tau_face;
                block = trace_i.transpose() * block * ctx.face_trace_op[j];
                if (ctx.face_tag[i] == FaceTag::Symmetry) {
                    // Pin the (otherwise decoupled) normal component of the
                    // trace on symmetry faces; scaled like the tau blocks.
                    const VecN outward =
                        mesh.outward_sign(ctx.face_ids[i], ctx.element) *
                        mesh.faces[ctx.face_ids[i]].normal.head(nsd);
                    block += area_i * tau_face(0, 0) * projection_matrices(outward).normal;
                }
                // Projected products can drift a ulp; make the diagonal
                // block exactly symmetric.
                for (int r = 0; r < nsd; ++r)
                    for (int s = 0; s < r; ++s) block(r, s) = block(s, r);
                out.stiffness.block(a * nsd, a * nsd, nsd, nsd) = block;
            } else {
                block = trace_i.transpose() * block * ctx.face_trace_op[j];
                out.stiffness.block(a * nsd, b * nsd, nsd, nsd) = block;
                out.stiffness.block(b * nsd, a * nsd, nsd, nsd) = block.transpose();
            }
        }
    }
    return out;
}

GlobalSystem assemble(const Mesh& mesh, const FaceSets& sets, const Material& material,
                      const Stabilization& stabilization, const ProblemData& problem) {
    material.validate();
    stabilization.validate();
    if (material.nsd() != mesh.nsd)
        throw DimensionError("assemble: material model does not match mesh dimension");

    const int nsd = mesh.nsd;
    const MatMM elasticity = elasticity_matrix(material);
    const MatMM sqrt_elasticity = sqrt_elasticity_matrix(elasticity);
    const MatNN tau_face = stabilization.face_tensor(material, nsd);

    const int n_elem = mesh.num_elements();
    std::vector<ElementContribution> contributions(n_elem);
    parallel_for(n_elem, [&](int e) {
        const ElementContext ctx = make_element_context(mesh, e);
        const LocalPrecomp pre = local_precompute(ctx, mesh, sqrt_elasticity, tau_face, problem);
        contributions[e] =
            elemental_contribution(ctx, pre, sets, mesh, sqrt_elasticity, tau_face, problem);
    });

    GlobalSystem system;
    system.nsd = nsd;
    system.dof_map.assign(mesh.num_faces(), -1);
    for (int f = 0; f < mesh.num_faces(); ++f)
        if (sets.hybrid_index[f] >= 0) system.dof_map[f] = sets.hybrid_index[f] * nsd;

    const int n_dof = sets.n_hybrid_faces * nsd;
    system.rhs = Eigen::VectorXd::Zero(n_dof);
    std::vector<Eigen::Triplet<double>> triplets;
    std::size_t nnz = 0;
    for (const auto& c : contributions) nnz += static_cast<std::size_t>(c.dofs.size() * c.dofs.size()) * nsd * nsd;
    triplets.reserve(nnz);

    for (const auto& c : contributions) {
        const int n_b = static_cast<int>(c.dofs.size());
        for (int a = 0; a < n_b; ++a) {
            system.rhs.segment(c.dofs[a], nsd) += c.load.segment(a * nsd, nsd);
            for (int b = 0; b < n_b; ++b)
                for (int r = 0; r < nsd; ++r)
                    for (int s = 0; s < nsd; ++s)
                        triplets.emplace_back(c.dofs[a] + r, c.dofs[b] + s,
                                              c.stiffness(a * nsd + r, b * nsd + s));
        }
    }

    system.stiffness.resize(n_dof, n_dof);
    system.stiffness.setFromTriplets(triplets.begin(), triplets.end());
    return system;
}

std::vector<LocalPrecomp> precompute_all(const Mesh& mesh, const Material& material,
                                         const Stabilization& stabilization,
                                         const ProblemData& problem) {
    const MatMM sqrt_elasticity = sqrt_elasticity_matrix(elasticity_matrix(material));
    const MatNN tau_face = stabilization.face_tensor(material, mesh.nsd);
    std::vector<LocalPrecomp> result(mesh.num_elements());
    parallel_for(mesh.num_elements(), [&](int e) {
        result[e] = local_precompute(make_element_context(mesh, e), mesh, sqrt_elasticity,
                                     tau_face, problem);
    });
    return result;
}

std::vector<VecN> element_hybrid_values(const ElementContext& ctx, const GlobalSystem& system,
                                        const Eigen::VectorXd& solution) {
    std::vector<VecN> values;
    for (std::size_t j = 0; j < ctx.face_ids.size(); ++j) {
        if (ctx.face_tag[j] == FaceTag::Dirichlet) continue;
        const int dof = system.dof_map[ctx.face_ids[j]];
        if (dof < 0) throw Error("element_hybrid_values: missing DOF for hybrid face");
        values.push_back(solution.segment(dof, system.nsd));
    }
    return values;
}

} // namespace fcfv
