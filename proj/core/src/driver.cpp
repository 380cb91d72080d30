#include "fcfv/driver.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fcfv/error.hpp"
#include "fcfv/mesh_io.hpp"
#include "fcfv/vtk.hpp"

namespace fcfv {

namespace {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string mesh_id_for(const RunConfig& config, ElemKind kind, int level) {
    if (!config.mesh_file.empty())
        return "import_" + std::filesystem::path(config.mesh_file).stem().string() + "_l" +
               std::to_string(level);
    std::string id = std::string(to_string(kind)) + "_l" + std::to_string(level);
    if (config.distort) id += "_distorted_s" + std::to_string(config.seed);
    return id;
}

Stabilization effective_stabilization(const BenchmarkCase& bench, const RunConfig& config) {
    Stabilization stab = bench.stabilization;
    if (config.tau) stab.tau = *config.tau;
    if (config.length_scale) stab.length_scale = *config.length_scale;
    stab.validate();
    return stab;
}

nlohmann::ordered_json run_metadata(const BenchmarkCase& bench, const RunConfig& config,
                                    const SingleRunResult& result) {
    nlohmann::ordered_json meta;
    meta["case"] = bench.name;
    meta["mesh_id"] = result.mesh_id;
    meta["material"] = {{"young_modulus", bench.material.young_modulus},
                        {"poisson_ratio", bench.material.poisson_ratio},
                        {"model", to_string(bench.material.model)}};
    meta["tau"] = result.tau;
    meta["length_scale"] = result.length_scale;
    meta["mesh"] = {{"elements", result.n_elements},
                    {"h", result.h},
                    {"hash", result.mesh_hash},
                    {"distorted", config.distort},
                    {"seed", config.seed}};
    meta["n_dof"] = result.n_dof;
    meta["solver"] = {{"method", to_string(result.solve.method_used)},
                      {"iterations", result.solve.iterations},
                      {"relative_residual", result.solve.relative_residual},
                      {"seconds", result.solve.seconds}};
    if (result.displacement_error) meta["E_u"] = *result.displacement_error;
    if (result.stress_error) meta["E_sigma"] = *result.stress_error;
    if (result.radial_error_value) meta["E_r"] = *result.radial_error_value;
    if (result.scalar) meta[result.scalar_name] = *result.scalar;
    return meta;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

} // namespace

void RunConfig::validate() const {
    if (levels.empty()) throw std::invalid_argument("RunConfig: level list must not be empty");
    solver.validate();
    for (double t : tau_values)
        if (!(t > 0.0)) throw std::invalid_argument("RunConfig: tau values must be positive");
}

Mesh build_mesh(const BenchmarkCase& bench, const RunConfig& config, int level, FaceSets& sets) {
    Mesh mesh;
    if (!config.mesh_file.empty()) {
        mesh = import_mesh_file(config.mesh_file);
        sets = build_face_sets(mesh);
        return mesh;
    }
    if (!bench.mesh_recipe)
        throw std::invalid_argument("case '" + bench.name + "' needs --mesh-file (no mesh recipe)");
    const ElemKind kind = config.kind.value_or(bench.default_kind);
    mesh = bench.mesh_recipe(kind, level);
    if (config.distort) mesh = distort_mesh(mesh, config.seed);
    check_mesh(mesh);
    sets = classify_faces(mesh, bench.boundary);
    return mesh;
}

SingleRunResult run_single(const BenchmarkCase& bench, const RunConfig& config, int level,
                           std::vector<ElementSolution>* solutions_out, Mesh* mesh_out) {
    const Stabilization stab = effective_stabilization(bench, config);

    FaceSets sets;
    Mesh mesh = build_mesh(bench, config, level, sets);

    const GlobalSystem system = assemble(mesh, sets, bench.material, stab, bench.problem);
    SolveReport report;
    const Eigen::VectorXd solution = solve(system, config.solver, &report);
    const std::vector<ElementSolution> fields =
        recover_all(mesh, sets, bench.material, stab, bench.problem, system, solution);

    SingleRunResult result;
    result.mesh_id = mesh_id_for(config, config.kind.value_or(bench.default_kind), level);
    result.n_elements = mesh.num_elements();
    result.n_dof = system.n_dof();
    result.h = mesh.characteristic_size();
    result.mesh_hash = mesh.hash();
    result.solve = report;
    result.tau = stab.tau;
    result.length_scale = stab.length_scale;

    if (bench.exact_displacement) {
        const auto err = l2_error(
            mesh, [&fields](int e) { return Eigen::VectorXd(fields[e].displacement); },
            [&bench](const Vec3& x) { return Eigen::VectorXd(bench.exact_displacement(x)); });
        result.displacement_error = err.value;
    }
    if (bench.exact_stress) {
        const auto err = l2_error(
            mesh, [&fields](int e) { return Eigen::VectorXd(fields[e].stress); },
            [&bench](const Vec3& x) { return Eigen::VectorXd(bench.exact_stress(x)); });
        result.stress_error = err.value;
    }
    if (bench.exact_radial && bench.radial_section) {
        result.radial_error_value = radial_error(mesh, fields, (*bench.radial_section)[0],
                                                 (*bench.radial_section)[1], bench.exact_radial);
    }
    if (bench.scalar_observable) {
        result.scalar = bench.scalar_observable(mesh, system, solution);
        result.scalar_name = bench.scalar_name;
    }

    if (solutions_out) *solutions_out = fields;
    if (mesh_out) *mesh_out = std::move(mesh);
    return result;
}

std::string csv_header() { return "mesh_id,h,n_dof,E_u,E_sigma,E_r,scalar"; }

std::string csv_row(const SingleRunResult& result) {
    std::ostringstream row;
    row << result.mesh_id << ',' << format_double(result.h) << ',' << result.n_dof << ',';
    if (result.displacement_error) row << format_double(*result.displacement_error);
    row << ',';
    if (result.stress_error) row << format_double(*result.stress_error);
    row << ',';
    if (result.radial_error_value) row << format_double(*result.radial_error_value);
    row << ',';
    if (result.scalar) row << format_double(*result.scalar);
    return row.str();
}

namespace {

void write_artifacts(const BenchmarkCase& bench, const RunConfig& config,
                     const std::vector<SingleRunResult>& results,
                     const std::vector<std::pair<Mesh, std::vector<ElementSolution>>>& fields,
                     const std::string& extra_csv_name = "", const std::string& extra_csv = "") {
    if (config.output_dir.empty()) return;
    const std::filesystem::path dir(config.output_dir);
    std::filesystem::create_directories(dir);

    std::string csv = csv_header() + "\n";
    for (const auto& r : results) csv += csv_row(r) + "\n";
    write_text_file(dir / "errors.csv", csv);

    nlohmann::ordered_json meta;
    meta["runs"] = nlohmann::ordered_json::array();
    for (const auto& r : results) meta["runs"].push_back(run_metadata(bench, config, r));
    write_text_file(dir / "metadata.json", meta.dump(2) + "\n");

    if (config.write_vtk) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            export_vtk_file(fields[i].first, fields[i].second,
                            (dir / ("solution_" + results[i].mesh_id + ".vtk")).string());
        }
    }
    if (!extra_csv_name.empty()) write_text_file(dir / extra_csv_name, extra_csv);
}

} // namespace

std::vector<SingleRunResult> run_case(const RunConfig& config) {
    config.validate();
    const BenchmarkCase bench = make_case(config.case_name, config.case_options);

    std::vector<SingleRunResult> results;
    std::vector<std::pair<Mesh, std::vector<ElementSolution>>> fields;
    for (int level : config.levels) {
        std::vector<ElementSolution> sol;
        Mesh mesh;
        results.push_back(run_single(bench, config, level, &sol, &mesh));
        if (config.write_vtk) fields.emplace_back(std::move(mesh), std::move(sol));
    }
    write_artifacts(bench, config, results, fields);
    return results;
}

ConvergenceResult run_convergence(const RunConfig& config) {
    config.validate();
    const BenchmarkCase bench = make_case(config.case_name, config.case_options);

    ConvergenceResult out;
    for (int level : config.levels) out.runs.push_back(run_single(bench, config, level));

    // Fitted slope over the last three levels (all levels if fewer).
    auto rate_of = [&out](const std::function<std::optional<double>(const SingleRunResult&)>& get)
        -> std::optional<double> {
        std::vector<double> h, err;
        for (const auto& r : out.runs) {
            if (const auto v = get(r); v && *v > 0.0) {
                h.push_back(r.h);
                err.push_back(*v);
            }
        }
        if (h.size() < 2) return std::nullopt;
        const std::size_t take = std::min<std::size_t>(3, h.size());
        std::vector<double> h3(h.end() - take, h.end());
        std::vector<double> e3(err.end() - take, err.end());
        return fit_rate(h3, e3);
    };
    out.displacement_rate = rate_of([](const SingleRunResult& r) { return r.displacement_error; });
    out.stress_rate = rate_of([](const SingleRunResult& r) { return r.stress_error; });
    out.radial_rate = rate_of([](const SingleRunResult& r) { return r.radial_error_value; });

    std::string rates = "quantity,rate\n";
    if (out.displacement_rate) rates += "E_u," + format_double(*out.displacement_rate) + "\n";
    if (out.stress_rate) rates += "E_sigma," + format_double(*out.stress_rate) + "\n";
    if (out.radial_rate) rates += "E_r," + format_double(*out.radial_rate) + "\n";
    write_artifacts(bench, config, out.runs, {}, "rates.csv", rates);
    return out;
}

TauSweepResult run_tau_sweep(const RunConfig& config) {
    config.validate();
    const BenchmarkCase bench = make_case(config.case_name, config.case_options);

    TauSweepResult out;
    std::vector<double> combined(config.tau_values.size(), 0.0);
    std::string csv = "mesh_id,h,tau,E_u,E_sigma\n";
    for (int level : config.levels) {
        for (std::size_t t = 0; t < config.tau_values.size(); ++t) {
            RunConfig local = config;
            local.tau = config.tau_values[t];
            SingleRunResult r = run_single(bench, local, level);
            if (!r.displacement_error || !r.stress_error)
                throw Error("tau sweep needs a case with exact displacement and stress");
            combined[t] += *r.displacement_error + *r.stress_error;
            csv += r.mesh_id + "," + format_double(r.h) + "," + format_double(local.tau.value()) +
                   "," + format_double(*r.displacement_error) + "," +
                   format_double(*r.stress_error) + "\n";
            out.runs.push_back(std::move(r));
        }
    }
    const auto best =
        std::distance(combined.begin(), std::min_element(combined.begin(), combined.end()));
    out.best_tau = config.tau_values[static_cast<std::size_t>(best)];
    csv += "# best_tau," + format_double(out.best_tau) + "\n";

    if (!config.output_dir.empty()) {
        const std::filesystem::path dir(config.output_dir);
        std::filesystem::create_directories(dir);
        write_text_file(dir / "tau.csv", csv);
    }
    return out;
}

} // namespace fcfv
