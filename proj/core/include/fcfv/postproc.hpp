#ifndef FCFV_POSTPROC_HPP
#define FCFV_POSTPROC_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fcfv/assembly.hpp"
#include "fcfv/solver.hpp"

namespace fcfv {

/// Recovered per-element fields: displacement u_e, mixed variable L_e,
/// stress sigma_V = -D~ L_e and the Von Mises equivalent.
struct ElementSolution {
    VecN displacement;
    VecM mixed;
    VecM stress;
    double von_mises = 0.0;
};

/// Element-wise closed-form recovery from the solved hybrid trace
/// (parallel over elements).
std::vector<ElementSolution> recover_all(const Mesh& mesh, const FaceSets& sets,
                                         const Material& material,
                                         const Stabilization& stabilization,
                                         const ProblemData& problem, const GlobalSystem& system,
                                         const Eigen::VectorXd& solution);

/// Relative L2 error of a piecewise-constant field against an exact field
/// sampled at element centroids (midpoint rule). A zero-measure exact field
/// flips the norm to absolute and flags it.
struct FieldError {
    double value = 0.0;
    bool absolute_norm = false;
};

FieldError l2_error(const Mesh& mesh,
                    const std::function<Eigen::VectorXd(int element)>& numerical,
                    const std::function<Eigen::VectorXd(const Vec3&)>& exact);

/// Relative sectional error of the radial displacement along the axial
/// element column nearest to the in-plane point (x1, x2); midpoint rule in
/// the axial coordinate. Throws Error when the section misses the mesh.
double radial_error(const Mesh& mesh, const std::vector<ElementSolution>& solutions,
                    double section_x1, double section_x2,
                    const std::function<double(double z)>& exact_radial);

/// Error summary for one solved mesh.
struct ErrorReport {
    double h = 0.0;
    int n_dof = 0;
    double displacement_error = 0.0;
    double stress_error = 0.0;
    std::optional<double> radial = {};
    bool displacement_absolute = false;
    bool stress_absolute = false;
};

/// Least-squares slope of log(error) against log(h). Requires at least two
/// samples with positive h and error.
double fit_rate(const std::vector<double>& h, const std::vector<double>& error);

} // namespace fcfv

#endif
