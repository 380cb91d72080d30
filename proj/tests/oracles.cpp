#include "oracles.hpp"

#include <Eigen/Dense>

#include "fcfv/voigt.hpp"

namespace fcfv::oracle {

namespace {

struct FaceData {
    int id = -1;
    double area = 0.0;
    VecN outward;     // unit outward normal of this element
    MatMN normal_mat; // N_j
    MatNN trace_op;   // S_j
    FaceTag tag = FaceTag::Interior;
};

std::vector<FaceData> gather_faces(const Mesh& mesh, int element) {
    std::vector<FaceData> out;
    for (int f : mesh.elem_faces[element]) {
        const Face& face = mesh.faces[f];
        FaceData data;
        data.id = f;
        data.area = face.area;
        data.outward = mesh.outward_sign(f, element) * face.normal.head(mesh.nsd);
        data.normal_mat = normal_matrix(data.outward);
        data.tag = face.tag;
        data.trace_op = face.tag == FaceTag::Symmetry
                            ? projection_matrices(data.outward).tangent
                            : MatNN(MatNN::Identity(mesh.nsd, mesh.nsd));
        out.push_back(std::move(data));
    }
    return out;
}

VecN eval_or_zero(const std::function<VecN(const Vec3&)>& fn, const Vec3& x, int nsd) {
    return fn ? fn(x) : VecN(VecN::Zero(nsd));
}

} // namespace

LocalResiduals local_residuals(const Mesh& mesh, int element, const Material& material,
                               const Stabilization& stabilization, const ProblemData& problem,
                               const std::vector<VecN>& hybrid_values, const VecM& mixed,
                               const VecN& displacement) {
    const int nsd = mesh.nsd;
    const MatMM sqrt_d = sqrt_elasticity_matrix(elasticity_matrix(material));
    const double tau = stabilization.face_value(material);
    const double measure = mesh.elem_measure[element];

    LocalResiduals res;
    res.mixed = measure * mixed;
    res.displacement = -measure * eval_or_zero(problem.body_force, mesh.elem_centroid[element], nsd);

    std::size_t k = 0;
    for (const FaceData& face : gather_faces(mesh, element)) {
        res.displacement += face.area * tau * displacement;
        if (face.tag == FaceTag::Dirichlet) {
            const VecN u_d = eval_or_zero(problem.dirichlet, mesh.faces[face.id].barycenter, nsd);
            res.mixed += face.area * (sqrt_d.transpose() * (face.normal_mat * u_d));
            res.displacement -= face.area * tau * u_d;
        } else {
            const VecN traced = face.trace_op * hybrid_values.at(k++);
            res.mixed += face.area * (sqrt_d.transpose() * (face.normal_mat * traced));
            res.displacement -= face.area * tau * traced;
        }
    }
    return res;
}

DenseLocal dense_local_solve(const Mesh& mesh, int element, const Material& material,
                             const Stabilization& stabilization, const ProblemData& problem,
                             const std::vector<VecN>& hybrid_values) {
    const int nsd = mesh.nsd;
    const int msd = voigt_dim(nsd);
    const MatMM sqrt_d = sqrt_elasticity_matrix(elasticity_matrix(material));
    const double tau = stabilization.face_value(material);
    const double measure = mesh.elem_measure[element];

    Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(msd + nsd, msd + nsd);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(msd + nsd);
    lhs.topLeftCorner(msd, msd) = measure * Eigen::MatrixXd::Identity(msd, msd);
    rhs.tail(nsd) = measure * eval_or_zero(problem.body_force, mesh.elem_centroid[element], nsd);

    std::size_t k = 0;
    for (const FaceData& face : gather_faces(mesh, element)) {
        lhs.bottomRightCorner(nsd, nsd) += face.area * tau * Eigen::MatrixXd::Identity(nsd, nsd);
        const VecN value = face.tag == FaceTag::Dirichlet
                               ? eval_or_zero(problem.dirichlet, mesh.faces[face.id].barycenter, nsd)
                               : VecN(face.trace_op * hybrid_values.at(k++));
        rhs.head(msd) -= face.area * (sqrt_d.transpose() * (face.normal_mat * value));
        rhs.tail(nsd) += face.area * tau * value;
    }

    const Eigen::VectorXd solution = lhs.fullPivLu().solve(rhs);
    DenseLocal out;
    out.mixed = solution.head(msd);
    out.displacement = solution.tail(nsd);
    return out;
}

DenseSystem schur_system(const Mesh& mesh, const FaceSets& sets, const Material& material,
                         const Stabilization& stabilization, const ProblemData& problem) {
    const int nsd = mesh.nsd;
    const int msd = voigt_dim(nsd);
    const int n_elem = mesh.num_elements();
    const int n_local = n_elem * (msd + nsd);
    const int n_hat = sets.n_hybrid_faces * nsd;

    const MatMM sqrt_d = sqrt_elasticity_matrix(elasticity_matrix(material));
    const double tau = stabilization.face_value(material);

    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(n_local + n_hat, n_local + n_hat);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_local + n_hat);

    auto mixed_row = [&](int e) { return e * (msd + nsd); };
    auto disp_row = [&](int e) { return e * (msd + nsd) + msd; };
    auto hat_row = [&](int face) { return n_local + sets.hybrid_index[face] * nsd; };

    for (int e = 0; e < n_elem; ++e) {
        const double measure = mesh.elem_measure[e];
        full.block(mixed_row(e), mixed_row(e), msd, msd) =
            measure * Eigen::MatrixXd::Identity(msd, msd);
        rhs.segment(disp_row(e), nsd) =
            measure * eval_or_zero(problem.body_force, mesh.elem_centroid[e], nsd);

        for (const FaceData& face : gather_faces(mesh, e)) {
            full.block(disp_row(e), disp_row(e), nsd, nsd) +=
                face.area * tau * Eigen::MatrixXd::Identity(nsd, nsd);
            const Eigen::MatrixXd weighted = sqrt_d.transpose() * face.normal_mat;  // msd x nsd

            if (face.tag == FaceTag::Dirichlet) {
                const VecN u_d = eval_or_zero(problem.dirichlet, mesh.faces[face.id].barycenter, nsd);
                rhs.segment(mixed_row(e), msd) -= face.area * (weighted * u_d);
                rhs.segment(disp_row(e), nsd) += face.area * tau * u_d;
                continue;
            }

            const Eigen::MatrixXd traced = face.trace_op;  // S_j
            full.block(mixed_row(e), hat_row(face.id), msd, nsd) += face.area * weighted * traced;
            full.block(disp_row(e), hat_row(face.id), nsd, nsd) -= face.area * tau * traced;

            // Hybrid row of this face: minus the natural residual of the
            // numerical normal stress, projected with S_i.
            const Eigen::MatrixXd project = traced.transpose();
            full.block(hat_row(face.id), mixed_row(e), nsd, msd) -=
                face.area * project * weighted.transpose();
            full.block(hat_row(face.id), disp_row(e), nsd, nsd) -=
                face.area * tau * project;
            full.block(hat_row(face.id), hat_row(face.id), nsd, nsd) +=
                face.area * tau * project * traced;

            if (face.tag == FaceTag::Neumann && problem.traction) {
                rhs.segment(hat_row(face.id), nsd) +=
                    face.area * problem.traction(mesh.faces[face.id].barycenter, face.outward);
            }
            if (face.tag == FaceTag::Symmetry) {
                full.block(hat_row(face.id), hat_row(face.id), nsd, nsd) +=
                    face.area * tau * projection_matrices(face.outward).normal;
            }
        }
    }

    // Schur complement onto the hybrid unknowns.
    const Eigen::MatrixXd local_block = full.topLeftCorner(n_local, n_local);
    const Eigen::MatrixXd coupling_up = full.topRightCorner(n_local, n_hat);
    const Eigen::MatrixXd coupling_down = full.bottomLeftCorner(n_hat, n_local);
    const Eigen::MatrixXd hat_block = full.bottomRightCorner(n_hat, n_hat);

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(local_block);
    DenseSystem out;
    out.stiffness = hat_block - coupling_down * lu.solve(coupling_up);
    out.rhs = rhs.tail(n_hat) - coupling_down * lu.solve(rhs.head(n_local));
    return out;
}

MatNN fd_gradient(const std::function<VecN(const Vec3&)>& field, const Vec3& at, int nsd,
                  double step) {
    MatNN grad(nsd, nsd);
    for (int j = 0; j < nsd; ++j) {
        Vec3 fwd = at, bwd = at;
        fwd[j] += step;
        bwd[j] -= step;
        const VecN diff = (field(fwd) - field(bwd)) / (2.0 * step);
        for (int i = 0; i < nsd; ++i) grad(i, j) = diff[i];
    }
    return grad;
}

VecN fd_stress_divergence(const std::function<VecM(const Vec3&)>& stress, const Vec3& at, int nsd,
                          double step) {
    // Columns: d sigma_V / d x_j.
    std::vector<VecM> derivative(nsd);
    for (int j = 0; j < nsd; ++j) {
        Vec3 fwd = at, bwd = at;
        fwd[j] += step;
        bwd[j] -= step;
        derivative[j] = (stress(fwd) - stress(bwd)) / (2.0 * step);
    }
    VecN divergence(nsd);
    if (nsd == 2) {
        divergence[0] = derivative[0][0] + derivative[1][2];
        divergence[1] = derivative[0][2] + derivative[1][1];
    } else {
        divergence[0] = derivative[0][0] + derivative[1][3] + derivative[2][4];
        divergence[1] = derivative[0][3] + derivative[1][1] + derivative[2][5];
        divergence[2] = derivative[0][4] + derivative[1][5] + derivative[2][2];
    }
    return divergence;
}

} // namespace fcfv::oracle
