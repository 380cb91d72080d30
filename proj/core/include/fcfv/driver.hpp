#ifndef FCFV_DRIVER_HPP
#define FCFV_DRIVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcfv/cases.hpp"
#include "fcfv/postproc.hpp"
#include "fcfv/solver.hpp"

namespace fcfv {

/// Batch-run configuration shared by the run/converge/tau-sweep commands.
struct RunConfig {
    std::string case_name = "poly2d";
    CaseOptions case_options;
    std::string mesh_file;             // external mesh instead of the recipe
    std::optional<ElemKind> kind;      // defaults to the case's element kind
    std::vector<int> levels = {3};
    bool distort = false;
    std::uint64_t seed = 0;
    std::optional<double> tau;         // stabilisation overrides
    std::optional<double> length_scale;
    std::vector<double> tau_values = {0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0};
    SolverConfig solver;
    std::string output_dir;            // empty: no artifacts written
    bool write_vtk = false;

    void validate() const;
};

/// Result of solving one case on one mesh.
struct SingleRunResult {
    std::string mesh_id;
    int n_elements = 0;
    int n_dof = 0;
    double h = 0.0;
    std::uint64_t mesh_hash = 0;
    std::optional<double> displacement_error;
    std::optional<double> stress_error;
    std::optional<double> radial_error_value;
    std::optional<double> scalar;  // case observable (e.g. tip displacement)
    std::string scalar_name;
    SolveReport solve;
    double tau = 0.0;
    double length_scale = 0.0;
};

struct ConvergenceResult {
    std::vector<SingleRunResult> runs;
    std::optional<double> displacement_rate;  // slope over the last three levels
    std::optional<double> stress_rate;
    std::optional<double> radial_rate;
};

struct TauSweepResult {
    std::vector<SingleRunResult> runs;  // one per (level, tau)
    double best_tau = 0.0;              // arg min of E_u + E_sigma, summed over meshes
};

/// Builds the mesh for one level per the config (recipe or imported file,
/// optional distortion) and classifies its boundary.
Mesh build_mesh(const BenchmarkCase& bench, const RunConfig& config, int level, FaceSets& sets);

/// Assemble + solve + recover + evaluate errors/observables for one level.
SingleRunResult run_single(const BenchmarkCase& bench, const RunConfig& config, int level,
                           std::vector<ElementSolution>* solutions_out = nullptr,
                           Mesh* mesh_out = nullptr);

/// run: executes all configured levels, writes errors.csv (plus VTK and
/// metadata.json) into output_dir when set.
std::vector<SingleRunResult> run_case(const RunConfig& config);

/// converge: per-level rows plus fitted rates over the last three levels;
/// writes errors.csv and rates.csv when output_dir is set.
ConvergenceResult run_convergence(const RunConfig& config);

/// tau-sweep: one run per (level, tau) on the configured grid; marks the
/// combined-error minimiser; writes tau.csv when output_dir is set.
TauSweepResult run_tau_sweep(const RunConfig& config);

/// Frozen CSV schema (documented in the README).
std::string csv_header();
std::string csv_row(const SingleRunResult& result);

} // namespace fcfv

#endif
