#include "fcfv/cases.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fcfv/error.hpp"
#include "fcfv/voigt.hpp"

namespace fcfv {

namespace {

// ---------------------------------------------------------------------------
// Manufactured polynomial solution on [0,1]^2. Both components factor into
// the two 1D polynomials
//   A(s) = s^2 (s-1)^2,   B(s) = s (s-1) (2s-1) = 2s^3 - 3s^2 + s,
// as u1 = -A(x) B(y), u2 = B(x) A(y); all derivatives are exact.
// ---------------------------------------------------------------------------

double poly_a(double s) { return s * s * (s - 1.0) * (s - 1.0); }
double poly_da(double s) { return 2.0 * s * (s - 1.0) * (2.0 * s - 1.0); }
double poly_dda(double s) { return 12.0 * s * s - 12.0 * s + 2.0; }
double poly_b(double s) { return s * (s - 1.0) * (2.0 * s - 1.0); }
double poly_db(double s) { return 6.0 * s * s - 6.0 * s + 1.0; }
double poly_ddb(double s) { return 12.0 * s - 6.0; }

struct Poly2dFields {
    MatMM elasticity;

    VecN displacement(const Vec3& p) const {
        VecN u(2);
        u << -poly_a(p.x()) * poly_b(p.y()), poly_b(p.x()) * poly_a(p.y());
        return u;
    }

    VecM strain(const Vec3& p) const {
        const double x = p.x(), y = p.y();
        VecM eps(3);
        eps << -poly_da(x) * poly_b(y), poly_b(x) * poly_da(y),
            -poly_a(x) * poly_db(y) + poly_db(x) * poly_a(y);
        return eps;
    }

    VecM stress(const Vec3& p) const { return elasticity * strain(p); }

    VecN body_force(const Vec3& p) const {
        const double x = p.x(), y = p.y();
        // Column-wise x/y derivatives of the strain vector.
        const double e11_x = -poly_dda(x) * poly_b(y);
        const double e22_x = poly_db(x) * poly_da(y);
        const double g12_x = -poly_da(x) * poly_db(y) + poly_ddb(x) * poly_a(y);
        const double e11_y = -poly_da(x) * poly_db(y);
        const double e22_y = poly_b(x) * poly_dda(y);
        const double g12_y = -poly_a(x) * poly_ddb(y) + poly_db(x) * poly_da(y);

        const MatMM& d = elasticity;
        const double s11_x = d(0, 0) * e11_x + d(0, 1) * e22_x;
        const double s22_y = d(1, 0) * e11_y + d(1, 1) * e22_y;
        const double t12_x = d(2, 2) * g12_x;
        const double t12_y = d(2, 2) * g12_y;

        VecN f(2);
        f << -(s11_x + t12_y), -(t12_x + s22_y);
        return f;
    }
};

// ---------------------------------------------------------------------------
// Plate with a circular hole (quarter model). Displacement depends on the
// plane model through the Kolosov constant; the stress field is the
// classical hole solution.
// ---------------------------------------------------------------------------

struct KirschFields {
    double shear = 0.0;    // mu
    double kolosov = 0.0;  // k
    double radius = 1.0;   // a
    double tension = 10.0; // sigma0

    void polar(const Vec3& p, double& r, double& theta) const {
        r = std::hypot(p.x(), p.y());
        if (r < radius * (1.0 - 1e-12))
            throw std::invalid_argument("kirsch: evaluation inside the hole (r < a)");
        theta = std::atan2(p.y(), p.x());
    }

    VecN displacement(const Vec3& p) const {
        double r, theta;
        polar(p, r, theta);
        const double rho = r / radius;
        const double ar = radius / r;
        const double scale = tension * radius / (8.0 * shear);
        VecN u(2);
        u[0] = scale * ((kolosov + 1.0) * rho * (1.0 + 2.0 * ar * ar) * std::cos(theta) +
                        2.0 * ar * (1.0 - ar * ar) * std::cos(3.0 * theta));
        u[1] = scale * (rho * ((kolosov - 3.0) - (kolosov - 1.0) * 2.0 * ar * ar) * std::sin(theta) +
                        2.0 * ar * (1.0 - ar * ar) * std::sin(3.0 * theta));
        return u;
    }

    VecM stress(const Vec3& p) const {
        double r, theta;
        polar(p, r, theta);
        const double q2 = (radius / r) * (radius / r);
        const double q4 = q2 * q2;
        const double c2 = std::cos(2.0 * theta);
        const double s2 = std::sin(2.0 * theta);
        const double srr = 0.5 * tension * ((1.0 - q2) + (1.0 - 4.0 * q2 + 3.0 * q4) * c2);
        const double stt = 0.5 * tension * ((1.0 + q2) - (1.0 + 3.0 * q4) * c2);
        const double srt = -0.5 * tension * (1.0 + 2.0 * q2 - 3.0 * q4) * s2;

        const double c = std::cos(theta), s = std::sin(theta);
        VecM sv(3);
        sv[0] = c * c * srr - 2.0 * c * s * srt + s * s * stt;
        sv[1] = s * s * srr + 2.0 * c * s * srt + c * c * stt;
        sv[2] = c * s * (srr - stt) + (c * c - s * s) * srt;
        return sv;
    }
};

// ---------------------------------------------------------------------------
// Cantilever beam under end shear; the axial displacement carries a series
// correction in the cross-section coordinates (x, y) = (x1, x2).
// ---------------------------------------------------------------------------

struct BeamFields {
    double young = 25.0;
    double poisson = 0.3;
    double load = 0.1;  // P
    int terms = 30;
    MatMM elasticity;

    VecN displacement(const Vec3& p) const {
        const double x = p.x(), y = p.y(), z = p.z();
        const double c = load / (8.0 * young);
        VecN u(3);
        u[0] = 0.75 * load * poisson / young * x * y * z;
        u[1] = c * (3.0 * poisson * z * (x * x - y * y) - z * z * z);
        u[2] = c * y * (poisson * (3.0 * x * x - y * y + 4.0) + 3.0 * z * z - 2.0 * y * y + 6.0);
        double series = 0.0;
        for (int n = 1; n <= terms; ++n) {
            const double npi = n * M_PI;
            series += ((n % 2 == 0) ? 1.0 : -1.0) / (n * n * n * std::cosh(npi)) *
                      std::cos(npi * x) * std::sinh(npi * y);
        }
        u[2] -= 3.0 * load * poisson / (M_PI * M_PI * M_PI * young) * series;
        return u;
    }

    MatNN gradient(const Vec3& p) const {
        const double x = p.x(), y = p.y(), z = p.z();
        const double c = load / (8.0 * young);
        MatNN g = MatNN::Zero(3, 3);
        g(0, 0) = 0.75 * load * poisson / young * y * z;
        g(0, 1) = 0.75 * load * poisson / young * x * z;
        g(0, 2) = 0.75 * load * poisson / young * x * y;
        g(1, 0) = c * 6.0 * poisson * z * x;
        g(1, 1) = -c * 6.0 * poisson * z * y;
        g(1, 2) = c * (3.0 * poisson * (x * x - y * y) - 3.0 * z * z);
        g(2, 0) = c * 6.0 * poisson * x * y;
        g(2, 1) = c * (poisson * (3.0 * x * x - 3.0 * y * y + 4.0) + 3.0 * z * z - 6.0 * y * y + 6.0);
        g(2, 2) = c * 6.0 * y * z;
        double series_x = 0.0, series_y = 0.0;
        for (int n = 1; n <= terms; ++n) {
            const double npi = n * M_PI;
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            const double denom = n * n * std::cosh(npi);
            series_x += sign / denom * std::sin(npi * x) * std::sinh(npi * y);
            series_y += sign / denom * std::cos(npi * x) * std::cosh(npi * y);
        }
        const double factor = 3.0 * load * poisson / (M_PI * M_PI * young);
        g(2, 0) += factor * series_x;
        g(2, 1) -= factor * series_y;
        return g;
    }

    VecM stress(const Vec3& p) const {
        return elasticity * symmetric_gradient_voigt(gradient(p));
    }
};

// ---------------------------------------------------------------------------
// Thin cylindrical shell under internal pressure, fixed ends. The radial
// profile comes from cylindrical-bending shell theory; displacements are
// outward-positive for positive pressure.
// ---------------------------------------------------------------------------

struct ShellFields {
    double pressure = 1e-4;
    double radius = 1.0;     // midplane
    double thickness = 0.02;
    double length = 5.0;
    double young = 1.0;
    double poisson = 0.3;
    bool classical_rigidity = false;
    MatMM elasticity;

    double beta() const {
        const double nu_term =
            classical_rigidity ? 1.0 - poisson * poisson : 1.0 - poisson * poisson * poisson;
        const double rigidity = young * std::pow(thickness, 3) / (12.0 * nu_term);
        return std::pow(young * thickness / (4.0 * radius * radius * rigidity), 0.25);
    }

    void constants(double& c1, double& c2) const {
        const double alpha = 0.5 * beta() * length;
        const double denom = std::cos(2.0 * alpha) + std::cosh(2.0 * alpha);
        c1 = 2.0 * std::sin(alpha) * std::sinh(alpha) / denom;
        c2 = 2.0 * std::cos(alpha) * std::cosh(alpha) / denom;
    }

    double radial(double z) const {
        double c1, c2;
        constants(c1, c2);
        const double b = beta();
        const double membrane = pressure * radius * radius / (young * thickness);
        return membrane * (1.0 - c1 * std::sin(b * z) * std::sinh(b * z) -
                           c2 * std::cos(b * z) * std::cosh(b * z));
    }

    double radial_derivative(double z) const {
        double c1, c2;
        constants(c1, c2);
        const double b = beta();
        const double membrane = pressure * radius * radius / (young * thickness);
        const double d_sin_sinh = b * (std::cos(b * z) * std::sinh(b * z) + std::sin(b * z) * std::cosh(b * z));
        const double d_cos_cosh = b * (-std::sin(b * z) * std::cosh(b * z) + std::cos(b * z) * std::sinh(b * z));
        return membrane * (-c1 * d_sin_sinh - c2 * d_cos_cosh);
    }

    VecN displacement(const Vec3& p) const {
        const double r = std::hypot(p.x(), p.y());
        const double ur = radial(p.z());
        VecN u(3);
        u << ur * p.x() / r, ur * p.y() / r, 0.0;
        return u;
    }

    VecM stress(const Vec3& p) const {
        const double r = std::hypot(p.x(), p.y());
        const double r3 = r * r * r;
        const double ur = radial(p.z());
        const double dur = radial_derivative(p.z());
        VecM eps(6);
        eps << ur * p.y() * p.y() / r3, ur * p.x() * p.x() / r3, 0.0,
            -2.0 * ur * p.x() * p.y() / r3, dur * p.x() / r, dur * p.y() / r;
        return elasticity * eps;
    }
};

} // namespace

BenchmarkCase poly2d_case(double poisson, ElasticModel model) {
    if (model == ElasticModel::ThreeD)
        throw std::invalid_argument("poly2d_case: needs a plane model");

    BenchmarkCase bench;
    bench.name = "poly2d";
    bench.material = Material(1.0, poisson, model);
    bench.stabilization = Stabilization(3.0, 1.0);

    Poly2dFields fields{elasticity_matrix(bench.material)};

    bench.boundary.add(BoundarySpec::plane(1, 0.0), FaceTag::Neumann);
    bench.boundary.add([](const Vec3&, const Vec3&) { return true; }, FaceTag::Dirichlet);

    bench.problem.dirichlet = [](const Vec3&) { return VecN(VecN::Zero(2)); };
    bench.problem.body_force = [fields](const Vec3& p) { return fields.body_force(p); };
    bench.problem.traction = [fields](const Vec3& p, const VecN& normal) {
        return VecN(normal_matrix(normal).transpose() * fields.stress(p));
    };
    bench.exact_displacement = [fields](const Vec3& p) { return fields.displacement(p); };
    bench.exact_stress = [fields](const Vec3& p) { return fields.stress(p); };

    bench.mesh_recipe = [](ElemKind kind, int level) {
        return generate_structured_2d(level, kind, Box{});
    };
    bench.default_kind = ElemKind::Quadrilateral;
    return bench;
}

BenchmarkCase kirsch_case(ElasticModel model) {
    if (model == ElasticModel::ThreeD)
        throw std::invalid_argument("kirsch_case: needs a plane model");

    BenchmarkCase bench;
    bench.name = "kirsch";
    bench.material = Material(1e5, 0.3, model);
    const double edge = 4.0;  // quarter-domain edge length
    bench.stabilization = Stabilization(3.0, edge * std::sqrt(2.0));

    KirschFields fields;
    fields.shear = bench.material.shear_modulus();
    fields.kolosov = model == ElasticModel::PlaneStress
                         ? (3.0 - bench.material.poisson_ratio) / (1.0 + bench.material.poisson_ratio)
                         : 3.0 - 4.0 * bench.material.poisson_ratio;

    bench.boundary.add(BoundarySpec::plane(0, 0.0), FaceTag::Symmetry);
    bench.boundary.add(BoundarySpec::plane(1, 0.0), FaceTag::Symmetry);
    bench.boundary.add([](const Vec3&, const Vec3&) { return true; }, FaceTag::Neumann);

    const double hole_cutoff = 2.0;  // hole faces sit near r = a = 1, outer edges at r >= 4
    bench.problem.traction = [fields, hole_cutoff](const Vec3& p, const VecN& normal) {
        if (std::hypot(p.x(), p.y()) < hole_cutoff) return VecN(VecN::Zero(2));
        return VecN(normal_matrix(normal).transpose() * fields.stress(p));
    };
    bench.exact_displacement = [fields](const Vec3& p) { return fields.displacement(p); };
    bench.exact_stress = [fields](const Vec3& p) { return fields.stress(p); };

    bench.reference_scalars["hoop_stress_at_hole_top"] = 3.0 * fields.tension;
    bench.default_kind = ElemKind::Triangle;
    return bench;
}

BenchmarkCase cook_case(CookVariant which) {
    BenchmarkCase bench;
    bench.name = "cook";
    // Reference materials correspond to (mu, lambda) = (0.375, 0.75) and
    // (0.375, 7.5e6) under plane strain.
    if (which == CookVariant::Compressible)
        bench.material = Material(1.0, 1.0 / 3.0, ElasticModel::PlaneStrain);
    else
        bench.material = Material(1.12499998125, 0.499999975, ElasticModel::PlaneStrain);
    bench.stabilization = Stabilization(3.0, 48.0);

    bench.boundary.add(BoundarySpec::plane(0, 0.0), FaceTag::Dirichlet);
    bench.boundary.add([](const Vec3&, const Vec3&) { return true; }, FaceTag::Neumann);

    bench.problem.dirichlet = [](const Vec3&) { return VecN(VecN::Zero(2)); };
    bench.problem.traction = [](const Vec3& p, const VecN&) {
        VecN g = VecN::Zero(2);
        if (std::abs(p.x() - 48.0) < 1e-9 * 48.0) g[1] = 1.0 / 16.0;
        return g;
    };

    // Tapered plate (0,0)-(48,44)-(48,60)-(0,44) mapped from the unit square;
    // the right-edge midpoint maps from (1, 1/2) to (48, 52).
    auto mapping = [](const Vec3& p) {
        return Vec3(48.0 * p.x(), 44.0 * p.x() + p.y() * (44.0 - 28.0 * p.x()), 0.0);
    };
    bench.mesh_recipe = [mapping](ElemKind kind, int level) {
        return map_mesh(generate_structured_2d(level, kind, Box{}), mapping);
    };
    bench.default_kind = ElemKind::Quadrilateral;

    bench.scalar_name = "tip_uy";
    bench.scalar_observable = [](const Mesh& mesh, const GlobalSystem& system,
                                 const Eigen::VectorXd& solution) {
        double best = std::numeric_limits<double>::max();
        for (int f = 0; f < mesh.num_faces(); ++f) {
            const Face& face = mesh.faces[f];
            if (!face.is_boundary() || system.dof_map[f] < 0) continue;
            if (std::abs(face.barycenter.x() - 48.0) > 1e-6 * 48.0) continue;
            best = std::min(best, std::abs(face.barycenter.y() - 52.0));
        }
        double sum = 0.0;
        int count = 0;
        for (int f = 0; f < mesh.num_faces(); ++f) {
            const Face& face = mesh.faces[f];
            if (!face.is_boundary() || system.dof_map[f] < 0) continue;
            if (std::abs(face.barycenter.x() - 48.0) > 1e-6 * 48.0) continue;
            if (std::abs(face.barycenter.y() - 52.0) > best + 1e-9) continue;
            sum += solution[system.dof_map[f] + 1];
            ++count;
        }
        if (count == 0) throw Error("cook observable: no right-edge faces found");
        return sum / count;
    };
    bench.reference_scalars["tip_uy"] = which == CookVariant::Compressible ? 21.520 : 16.442;
    return bench;
}

BenchmarkCase beam3d_case(int series_terms) {
    if (series_terms < 1) throw std::invalid_argument("beam3d_case: series_terms must be >= 1");

    BenchmarkCase bench;
    bench.name = "beam3d";
    bench.material = Material(25.0, 0.3, ElasticModel::ThreeD);
    const double length = 10.0;
    bench.stabilization = Stabilization(3.0, std::sqrt(4.0 + 4.0 + length * length));

    BeamFields fields;
    fields.young = bench.material.young_modulus;
    fields.poisson = bench.material.poisson_ratio;
    fields.terms = series_terms;
    fields.elasticity = elasticity_matrix(bench.material);

    bench.boundary.add(BoundarySpec::plane(2, length), FaceTag::Dirichlet);
    bench.boundary.add([](const Vec3&, const Vec3&) { return true; }, FaceTag::Neumann);

    bench.problem.dirichlet = [fields](const Vec3& p) { return fields.displacement(p); };
    bench.problem.traction = [fields](const Vec3& p, const VecN& normal) {
        return VecN(normal_matrix(normal).transpose() * fields.stress(p));
    };
    bench.exact_displacement = [fields](const Vec3& p) { return fields.displacement(p); };
    bench.exact_stress = [fields](const Vec3& p) { return fields.stress(p); };

    bench.mesh_recipe = [length](ElemKind kind, int level) {
        Box box;
        box.lo = Vec3(-1.0, -1.0, 0.0);
        box.hi = Vec3(1.0, 1.0, length);
        return generate_structured_3d(level, kind, box);
    };
    bench.default_kind = ElemKind::Hexahedron;
    return bench;
}

BenchmarkCase shell_case(const ShellOptions& options) {
    if (!(options.pressure != 0.0)) throw std::invalid_argument("shell_case: zero pressure");

    BenchmarkCase bench;
    bench.name = "shell";
    bench.material = Material(1.0, 0.3, ElasticModel::ThreeD);
    bench.stabilization = Stabilization(3.0, 1.0);

    ShellFields fields;
    fields.pressure = options.pressure;
    fields.radius = options.midplane_radius;
    fields.thickness = options.thickness;
    fields.length = options.length;
    fields.young = bench.material.young_modulus;
    fields.poisson = bench.material.poisson_ratio;
    fields.classical_rigidity = options.classical_rigidity;
    fields.elasticity = elasticity_matrix(bench.material);

    const double half_length = 0.5 * options.length;
    bench.boundary.add(BoundarySpec::plane(2, -half_length), FaceTag::Dirichlet);
    bench.boundary.add(BoundarySpec::plane(2, half_length), FaceTag::Dirichlet);
    bench.boundary.add([](const Vec3&, const Vec3&) { return true; }, FaceTag::Neumann);

    bench.problem.dirichlet = [](const Vec3&) { return VecN(VecN::Zero(3)); };
    const double pressure = options.pressure;
    const double midplane = options.midplane_radius;
    bench.problem.traction = [pressure, midplane](const Vec3& p, const VecN& normal) {
        // Internal pressure acts on the inner surface along the inward face
        // normal of the fluid side, i.e. against the solid's outward normal.
        if (std::hypot(p.x(), p.y()) < midplane) return VecN(-pressure * normal);
        return VecN(VecN::Zero(3));
    };
    bench.exact_displacement = [fields](const Vec3& p) { return fields.displacement(p); };
    bench.exact_stress = [fields](const Vec3& p) { return fields.stress(p); };
    bench.exact_radial = [fields](double z) { return fields.radial(z); };
    bench.radial_section = {{options.midplane_radius + 0.5 * options.thickness, 0.0}};

    const ShellOptions opts = options;
    bench.mesh_recipe = [opts](ElemKind kind, int level) {
        if (kind != ElemKind::Hexahedron)
            throw std::invalid_argument("shell mesh recipe is hexahedral");
        const int scale = 1 << (level - 1);
        return generate_shell_mesh(opts.n_theta * scale, opts.n_z * scale, opts.n_thickness,
                                   opts.stretch, opts.midplane_radius, opts.thickness,
                                   opts.length);
    };
    bench.default_kind = ElemKind::Hexahedron;
    return bench;
}

std::vector<std::string> case_names() { return {"poly2d", "kirsch", "cook", "beam3d", "shell"}; }

BenchmarkCase make_case(const std::string& name, const CaseOptions& options) {
    BenchmarkCase bench;
    if (name == "poly2d") {
        bench = poly2d_case(options.poisson.value_or(1.0 / 3.0),
                            options.model.value_or(ElasticModel::PlaneStrain));
    } else if (name == "kirsch") {
        bench = kirsch_case(options.model.value_or(ElasticModel::PlaneStress));
    } else if (name == "cook") {
        bench = cook_case(options.cook_variant);
    } else if (name == "beam3d") {
        bench = beam3d_case(options.beam_series_terms);
    } else if (name == "shell") {
        bench = shell_case(options.shell);
    } else {
        std::string known;
        for (const auto& n : case_names()) known += (known.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown case '" + name + "'; known cases: " + known);
    }
    // The other cases bake the Poisson ratio into their analytic fields, so
    // overriding it there would desynchronise data and reference solution.
    if (options.poisson && name != "poly2d")
        throw std::invalid_argument("poisson ratio is only adjustable for the poly2d case");
    return bench;
}

} // namespace fcfv
