#include "fcfv/postproc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fcfv/error.hpp"
#include "fcfv/parallel.hpp"
#include "fcfv/voigt.hpp"

namespace fcfv {

std::vector<ElementSolution> recover_all(const Mesh& mesh, const FaceSets& sets,
                                         const Material& material,
                                         const Stabilization& stabilization,
                                         const ProblemData& problem, const GlobalSystem& system,
                                         const Eigen::VectorXd& solution) {
    (void)sets;
    const MatMM sqrt_elasticity = sqrt_elasticity_matrix(elasticity_matrix(material));
    const MatNN tau_face = stabilization.face_tensor(material, mesh.nsd);

    std::vector<ElementSolution> result(mesh.num_elements());
    parallel_for(mesh.num_elements(), [&](int e) {
        const ElementContext ctx = make_element_context(mesh, e);
        const LocalPrecomp pre = local_precompute(ctx, mesh, sqrt_elasticity, tau_face, problem);
        const auto hybrid = element_hybrid_values(ctx, system, solution);
        const LocalSolution local =
            recover_local_solution(ctx, pre, sqrt_elasticity, tau_face, hybrid);
        ElementSolution& out = result[e];
        out.displacement = local.displacement;
        out.mixed = local.mixed;
        out.stress = stress_from_mixed(local.mixed, sqrt_elasticity);
        out.von_mises = von_mises(out.stress, material);
    });
    return result;
}

FieldError l2_error(const Mesh& mesh,
                    const std::function<Eigen::VectorXd(int element)>& numerical,
                    const std::function<Eigen::VectorXd(const Vec3&)>& exact) {
    double num = 0.0;
    double den = 0.0;
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const Eigen::VectorXd exact_value = exact(mesh.elem_centroid[e]);
        const Eigen::VectorXd diff = numerical(e) - exact_value;
        num += mesh.elem_measure[e] * diff.squaredNorm();
        den += mesh.elem_measure[e] * exact_value.squaredNorm();
    }
    FieldError result;
    if (den > 0.0) {
        result.value = std::sqrt(num / den);
    } else {
        result.value = std::sqrt(num);
        result.absolute_norm = true;
    }
    return result;
}

double radial_error(const Mesh& mesh, const std::vector<ElementSolution>& solutions,
                    double section_x1, double section_x2,
                    const std::function<double(double z)>& exact_radial) {
    if (mesh.nsd != 3) throw Error("radial_error: needs a 3D mesh");

    double best = std::numeric_limits<double>::max();
    std::vector<double> planar(mesh.num_elements());
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const Vec3& c = mesh.elem_centroid[e];
        planar[e] = std::hypot(c.x() - section_x1, c.y() - section_x2);
        best = std::min(best, planar[e]);
    }
    if (best > mesh.characteristic_size())
        throw Error("radial_error: section line misses the mesh");

    double num = 0.0;
    double den = 0.0;
    int selected = 0;
    const double tol = best * (1.0 + 1e-6) + 1e-12;
    for (int e = 0; e < mesh.num_elements(); ++e) {
        if (planar[e] > tol) continue;
        ++selected;
        const Vec3& c = mesh.elem_centroid[e];
        const double theta = std::atan2(c.y(), c.x());
        const double radial_numeric = solutions[e].displacement[0] * std::cos(theta) +
                                      solutions[e].displacement[1] * std::sin(theta);
        double z_min = std::numeric_limits<double>::max();
        double z_max = std::numeric_limits<double>::lowest();
        for (int n : mesh.elements[e]) {
            z_min = std::min(z_min, mesh.nodes[n].z());
            z_max = std::max(z_max, mesh.nodes[n].z());
        }
        const double dz = z_max - z_min;
        const double exact_value = exact_radial(c.z());
        num += dz * (radial_numeric - exact_value) * (radial_numeric - exact_value);
        den += dz * exact_value * exact_value;
    }
    if (selected == 0 || den <= 0.0) throw Error("radial_error: empty section or zero reference");
    return std::sqrt(num / den);
}

double fit_rate(const std::vector<double>& h, const std::vector<double>& error) {
    if (h.size() != error.size() || h.size() < 2)
        throw std::invalid_argument("fit_rate: need at least two (h, error) samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!(h[i] > 0.0) || !(error[i] > 0.0))
            throw std::invalid_argument("fit_rate: samples must be positive");
        const double x = std::log(h[i]);
        const double y = std::log(error[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-14) throw std::invalid_argument("fit_rate: h values are degenerate");
    return (n * sxy - sx * sy) / denom;
}

} // namespace fcfv
