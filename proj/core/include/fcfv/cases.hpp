#ifndef FCFV_CASES_HPP
#define FCFV_CASES_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcfv/assembly.hpp"
#include "fcfv/face_sets.hpp"
#include "fcfv/structured.hpp"

namespace fcfv {

/// A benchmark problem: material, boundary classification, boundary/volume
/// data and (when available) exact fields, plus a structured mesh recipe.
struct BenchmarkCase {
    std::string name;
    Material material;
    Stabilization stabilization;  // per-case default tau and length scale
    BoundarySpec boundary;
    ProblemData problem;

    std::function<VecN(const Vec3&)> exact_displacement;  // may be empty
    std::function<VecM(const Vec3&)> exact_stress;        // may be empty

    /// Structured mesh recipe; empty for cases solved on imported meshes.
    std::function<Mesh(ElemKind kind, int level)> mesh_recipe;
    ElemKind default_kind = ElemKind::Quadrilateral;

    std::map<std::string, double> reference_scalars;

    /// Case-specific scalar observable (e.g. a tip displacement) extracted
    /// from the solved trace.
    std::string scalar_name;
    std::function<double(const Mesh&, const GlobalSystem&, const Eigen::VectorXd&)> scalar_observable;

    /// Radial-displacement reference for sectional errors (shell case).
    std::function<double(double z)> exact_radial;
    std::optional<std::array<double, 2>> radial_section;
};

/// Manufactured polynomial solution on the unit square; traction on the
/// x2 = 0 edge, homogeneous Dirichlet elsewhere. Body force and traction are
/// derived analytically from the displacement.
BenchmarkCase poly2d_case(double poisson = 1.0 / 3.0,
                          ElasticModel model = ElasticModel::PlaneStrain);

/// Infinite plate with a circular hole under remote uniaxial tension,
/// quarter model: symmetry on the bottom/left edges, traction-free hole,
/// exact tractions on the outer edges. Solved on imported meshes.
BenchmarkCase kirsch_case(ElasticModel model = ElasticModel::PlaneStress);

/// Tapered plate clamped on the left and sheared on the right edge;
/// reference value: vertical displacement at the right-edge midpoint.
enum class CookVariant { Compressible, NearlyIncompressible };
BenchmarkCase cook_case(CookVariant which);

/// Cantilever beam under end shear with a series-corrected axial
/// displacement; exact displacement imposed on x3 = L, exact tractions
/// elsewhere.
BenchmarkCase beam3d_case(int series_terms = 30);

/// Thin cylindrical shell under uniform internal pressure with fixed ends.
struct ShellOptions {
    double pressure = 1e-4;
    bool classical_rigidity = false;  // bending rigidity with (1 - nu^2) instead of (1 - nu^3)
    double stretch = 40.0;            // axial centre-to-end spacing ratio
    int n_theta = 80;                 // level-1 resolution; doubled per level
    int n_z = 10;
    int n_thickness = 2;
    double length = 5.0;
    double midplane_radius = 1.0;
    double thickness = 0.02;
};
BenchmarkCase shell_case(const ShellOptions& options = {});

/// Registry ----------------------------------------------------------------

struct CaseOptions {
    std::optional<double> poisson;
    std::optional<ElasticModel> model;
    CookVariant cook_variant = CookVariant::Compressible;
    int beam_series_terms = 30;
    ShellOptions shell;
};

std::vector<std::string> case_names();
BenchmarkCase make_case(const std::string& name, const CaseOptions& options = {});

} // namespace fcfv

#endif
