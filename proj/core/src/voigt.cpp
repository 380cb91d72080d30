#include "fcfv/voigt.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fcfv/error.hpp"

namespace fcfv {

MatMM elasticity_matrix(const Material& material) {
    material.validate();
    const double young = material.young_modulus;
    const double nu = material.poisson_ratio;

    if (material.model == ElasticModel::ThreeD) {
        if (1.0 - 2.0 * nu <= 0.0)
            throw DimensionError("elasticity_matrix: material is singular (poisson_ratio >= 0.5)");
        MatMM mat = MatMM::Zero(6, 6);
        const double scale = young / ((1.0 + nu) * (1.0 - 2.0 * nu));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                mat(i, j) = (i == j) ? 1.0 - nu : nu;
        for (int i = 3; i < 6; ++i)
            mat(i, i) = (1.0 - 2.0 * nu) / 2.0;
        return scale * mat;
    }

    const double theta = static_cast<double>(material.theta());
    if (1.0 - theta * nu <= 0.0)
        throw DimensionError("elasticity_matrix: material is singular (1 - theta*nu <= 0)");
    MatMM mat = MatMM::Zero(3, 3);
    const double scale = young / ((1.0 + nu) * (1.0 - theta * nu));
    mat(0, 0) = mat(1, 1) = 1.0 + (1.0 - theta) * nu;
    mat(0, 1) = mat(1, 0) = nu;
    mat(2, 2) = (1.0 - theta * nu) / 2.0;
    return scale * mat;
}

MatMM sqrt_elasticity_matrix(const MatMM& elasticity) {
    const auto rows = elasticity.rows();
    if (rows != elasticity.cols() || (rows != 3 && rows != 6))
        throw DimensionError("sqrt_elasticity_matrix: expected a 3x3 or 6x6 matrix");

    const double norm = elasticity.norm();
    if ((elasticity - elasticity.transpose()).norm() > 1e-12 * norm)
        throw DecompositionError("sqrt_elasticity_matrix: input is not symmetric");

    Eigen::SelfAdjointEigenSolver<MatMM> eigen(elasticity);
    if (eigen.info() != Eigen::Success)
        throw DecompositionError("sqrt_elasticity_matrix: eigendecomposition failed");

    VecM values = eigen.eigenvalues();
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (values[i] < -1e-10 * norm)
            throw DecompositionError("sqrt_elasticity_matrix: input is not positive definite");
        values[i] = std::sqrt(std::max(values[i], 1e-300));
    }
    return eigen.eigenvectors() * values.asDiagonal() * eigen.eigenvectors().transpose();
}

namespace {

void check_unit(const VecN& normal) {
    if (std::abs(normal.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("expected a unit normal vector");
}

} // namespace

MatMN normal_matrix(const VecN& unit_normal) {
    const auto nsd = unit_normal.size();
    if (nsd != 2 && nsd != 3)
        throw DimensionError("normal_matrix: normal must have 2 or 3 components");
    check_unit(unit_normal);

    if (nsd == 2) {
        MatMN mat = MatMN::Zero(3, 2);
        mat(0, 0) = unit_normal[0];
        mat(1, 1) = unit_normal[1];
        mat(2, 0) = unit_normal[1];
        mat(2, 1) = unit_normal[0];
        return mat;
    }

    MatMN mat = MatMN::Zero(6, 3);
    mat(0, 0) = unit_normal[0];
    mat(1, 1) = unit_normal[1];
    mat(2, 2) = unit_normal[2];
    mat(3, 0) = unit_normal[1];
    mat(3, 1) = unit_normal[0];
    mat(4, 0) = unit_normal[2];
    mat(4, 2) = unit_normal[0];
    mat(5, 1) = unit_normal[2];
    mat(5, 2) = unit_normal[1];
    return mat;
}

Projectors projection_matrices(const VecN& unit_normal) {
    const auto nsd = unit_normal.size();
    if (nsd != 2 && nsd != 3)
        throw DimensionError("projection_matrices: normal must have 2 or 3 components");
    check_unit(unit_normal);

    Projectors proj;
    proj.normal = unit_normal * unit_normal.transpose();
    proj.tangent = MatNN::Identity(nsd, nsd) - proj.normal;
    return proj;
}

VecM stress_from_mixed(const VecM& mixed, const MatMM& sqrt_elasticity) {
    if (sqrt_elasticity.rows() != mixed.size())
        throw DimensionError("stress_from_mixed: dimension mismatch");
    return -(sqrt_elasticity * mixed);
}

double von_mises(const VecM& stress_voigt, const Material& material) {
    double s11, s22, s33, t12, t13 = 0.0, t23 = 0.0;
    if (material.nsd() == 2) {
        if (stress_voigt.size() != 3)
            throw DimensionError("von_mises: expected 3 stress components in 2D");
        s11 = stress_voigt[0];
        s22 = stress_voigt[1];
        t12 = stress_voigt[2];
        s33 = material.model == ElasticModel::PlaneStrain
                  ? material.poisson_ratio * (s11 + s22)
                  : 0.0;
    } else {
        if (stress_voigt.size() != 6)
            throw DimensionError("von_mises: expected 6 stress components in 3D");
        s11 = stress_voigt[0];
        s22 = stress_voigt[1];
        s33 = stress_voigt[2];
        t12 = stress_voigt[3];
        t13 = stress_voigt[4];
        t23 = stress_voigt[5];
    }
    const double diff = 0.5 * ((s11 - s22) * (s11 - s22) + (s22 - s33) * (s22 - s33) +
                               (s33 - s11) * (s33 - s11));
    const double shear = 3.0 * (t12 * t12 + t13 * t13 + t23 * t23);
    return std::sqrt(diff + shear);
}

VecM symmetric_gradient_voigt(const MatNN& grad) {
    const auto nsd = grad.rows();
    if (grad.cols() != nsd || (nsd != 2 && nsd != 3))
        throw DimensionError("symmetric_gradient_voigt: expected a 2x2 or 3x3 gradient");

    if (nsd == 2) {
        VecM strain(3);
        strain << grad(0, 0), grad(1, 1), grad(0, 1) + grad(1, 0);
        return strain;
    }
    VecM strain(6);
    strain << grad(0, 0), grad(1, 1), grad(2, 2),
        grad(0, 1) + grad(1, 0), grad(0, 2) + grad(2, 0), grad(1, 2) + grad(2, 1);
    return strain;
}

} // namespace fcfv
