#include "fcfv/structured.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fcfv/error.hpp"

namespace fcfv {

namespace {

int cells_along(double extent, double h) {
    const int n = static_cast<int>(std::lround(extent / h));
    if (n < 1 || std::abs(n * h - extent) > 1e-9 * extent)
        throw std::invalid_argument("box extent is not a multiple of the cell size");
    return n;
}

} // namespace

Mesh generate_structured_2d(int refinement, ElemKind kind, const Box& box) {
    if (refinement < 0) throw std::invalid_argument("refinement must be >= 0");
    if (kind != ElemKind::Quadrilateral && kind != ElemKind::Triangle)
        throw std::invalid_argument("generate_structured_2d: kind must be quad or tri");
    const double w = box.hi.x() - box.lo.x();
    const double h = box.hi.y() - box.lo.y();
    if (!(w > 0.0) || !(h > 0.0)) throw std::invalid_argument("degenerate domain box");

    const double cell = std::pow(0.5, refinement);
    const int nx = cells_along(w, cell);
    const int ny = cells_along(h, cell);

    Mesh mesh;
    mesh.nsd = 2;
    mesh.kind = kind;
    mesh.nodes.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1)));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            mesh.nodes.emplace_back(box.lo.x() + i * cell, box.lo.y() + j * cell, 0.0);

    auto node = [nx](int i, int j) { return j * (nx + 1) + i; };

    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int c0 = node(i, j), c1 = node(i + 1, j);
            const int c2 = node(i + 1, j + 1), c3 = node(i, j + 1);
            if (kind == ElemKind::Quadrilateral) {
                mesh.elements.push_back({c0, c1, c2, c3});
            } else {
                const int centre = mesh.num_nodes();
                mesh.nodes.emplace_back(box.lo.x() + (i + 0.5) * cell,
                                        box.lo.y() + (j + 0.5) * cell, 0.0);
                mesh.elements.push_back({c0, c1, centre});
                mesh.elements.push_back({c1, c2, centre});
                mesh.elements.push_back({c2, c3, centre});
                mesh.elements.push_back({c3, c0, centre});
            }
        }
    }
    build_topology(mesh);
    return mesh;
}

Mesh generate_structured_3d(int level, ElemKind kind, const Box& box) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (kind != ElemKind::Hexahedron && kind != ElemKind::Tetrahedron)
        throw std::invalid_argument("generate_structured_3d: kind must be hex or tet");
    const Vec3 extent = box.hi - box.lo;
    if (!(extent.minCoeff() > 0.0)) throw std::invalid_argument("degenerate domain box");

    const double cell = extent.minCoeff() / std::pow(2.0, level - 1);
    const int nx = cells_along(extent.x(), cell);
    const int ny = cells_along(extent.y(), cell);
    const int nz = cells_along(extent.z(), cell);

    Mesh mesh;
    mesh.nsd = 3;
    mesh.kind = kind;
    for (int k = 0; k <= nz; ++k)
        for (int j = 0; j <= ny; ++j)
            for (int i = 0; i <= nx; ++i)
                mesh.nodes.emplace_back(box.lo.x() + i * cell, box.lo.y() + j * cell,
                                        box.lo.z() + k * cell);

    auto node = [nx, ny](int i, int j, int k) {
        return (k * (ny + 1) + j) * (nx + 1) + i;
    };

    for (int k = 0; k < nz; ++k) {
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const std::array<int, 8> c = {
                    node(i, j, k),         node(i + 1, j, k),
                    node(i + 1, j + 1, k), node(i, j + 1, k),
                    node(i, j, k + 1),     node(i + 1, j, k + 1),
                    node(i + 1, j + 1, k + 1), node(i, j + 1, k + 1)};
                if (kind == ElemKind::Hexahedron) {
                    mesh.elements.push_back({c.begin(), c.end()});
                    continue;
                }
                // 24-tet split: four tetrahedra per face through the face
                // centre and the cell centre.
                const int centre = mesh.num_nodes();
                Vec3 cc = Vec3::Zero();
                for (int n : c) cc += mesh.nodes[n];
                mesh.nodes.push_back(cc / 8.0);

                static const int hex_faces[6][4] = {{0, 3, 2, 1}, {4, 5, 6, 7},
                                                    {0, 1, 5, 4}, {1, 2, 6, 5},
                                                    {2, 3, 7, 6}, {3, 0, 4, 7}};
                for (const auto& lf : hex_faces) {
                    const int fc = mesh.num_nodes();
                    Vec3 fcc = Vec3::Zero();
                    for (int n : lf) fcc += mesh.nodes[c[n]];
                    mesh.nodes.push_back(fcc / 4.0);
                    for (int s = 0; s < 4; ++s) {
                        const int a = c[lf[s]];
                        const int b = c[lf[(s + 1) % 4]];
                        // (b, a, fc) faces the cell centre; positive volume.
                        mesh.elements.push_back({b, a, fc, centre});
                    }
                }
            }
        }
    }
    build_topology(mesh);
    return mesh;
}

Mesh distort_mesh(const Mesh& mesh, std::uint64_t seed, double amplitude) {
    if (mesh.nsd != 2)
        throw std::invalid_argument("distort_mesh supports 2D meshes");
    if (amplitude < 0.0) amplitude = mesh.min_edge_length() / 3.0;

    Mesh out = mesh;
    const std::vector<bool> on_boundary = mesh.boundary_node_mask();

    // mt19937_64 has a standard-mandated bit-exact sequence; the mapping to
    // [-amplitude, amplitude] is done explicitly to stay reproducible.
    std::mt19937_64 rng(seed);
    auto uniform = [&rng, amplitude]() {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
        return amplitude * (2.0 * u - 1.0);
    };

    for (int n = 0; n < mesh.num_nodes(); ++n) {
        const double dx = uniform();
        const double dy = uniform();
        if (on_boundary[n]) continue;
        out.nodes[n].x() += dx;
        out.nodes[n].y() += dy;
    }

    compute_geometry(out);
    for (int e = 0; e < out.num_elements(); ++e)
        if (!(out.elem_measure[e] > 0.0))
            throw MeshError("distortion inverted element " + std::to_string(e));
    return out;
}

Mesh generate_shell_mesh(int n_theta, int n_z, int n_thickness, double stretch,
                         double midplane_radius, double thickness, double height) {
    if (n_theta < 3 || n_z < 1 || n_thickness < 1)
        throw std::invalid_argument("generate_shell_mesh: invalid subdivision counts");
    if (!(stretch >= 1.0)) throw std::invalid_argument("generate_shell_mesh: stretch must be >= 1");
    if (!(midplane_radius > 0.0) || !(thickness > 0.0) || !(height > 0.0) ||
        thickness >= 2.0 * midplane_radius)
        throw std::invalid_argument("generate_shell_mesh: invalid geometry");

    // Axial nodes: zeta(s) = tanh(gamma s)/tanh(gamma) on s in [-1, 1] with
    // cosh^2(gamma) = stretch, so `stretch` is the centre-to-end spacing
    // ratio. stretch -> 1 degenerates to uniform spacing.
    std::vector<double> z(n_z + 1);
    const double gamma = std::acosh(std::sqrt(stretch));
    for (int k = 0; k <= n_z; ++k) {
        const double s = 2.0 * k / n_z - 1.0;
        const double zeta = gamma > 1e-8 ? std::tanh(gamma * s) / std::tanh(gamma) : s;
        z[k] = 0.5 * height * zeta;
    }

    const double r_inner = midplane_radius - 0.5 * thickness;

    Mesh mesh;
    mesh.nsd = 3;
    mesh.kind = ElemKind::Hexahedron;
    auto node = [&](int it, int iz, int ir) {
        return (iz * (n_thickness + 1) + ir) * n_theta + (it % n_theta);
    };
    for (int iz = 0; iz <= n_z; ++iz) {
        for (int ir = 0; ir <= n_thickness; ++ir) {
            const double r = r_inner + thickness * ir / n_thickness;
            for (int it = 0; it < n_theta; ++it) {
                const double angle = 2.0 * M_PI * it / n_theta;
                mesh.nodes.emplace_back(r * std::cos(angle), r * std::sin(angle), z[iz]);
            }
        }
    }
    for (int iz = 0; iz < n_z; ++iz) {
        for (int ir = 0; ir < n_thickness; ++ir) {
            for (int it = 0; it < n_theta; ++it) {
                // Bottom quad runs radial-then-hoop so the hex is right-handed.
                mesh.elements.push_back({node(it, iz, ir), node(it, iz, ir + 1),
                                         node(it + 1, iz, ir + 1), node(it + 1, iz, ir),
                                         node(it, iz + 1, ir), node(it, iz + 1, ir + 1),
                                         node(it + 1, iz + 1, ir + 1), node(it + 1, iz + 1, ir)});
            }
        }
    }
    build_topology(mesh);
    return mesh;
}

Mesh map_mesh(const Mesh& mesh, const std::function<Vec3(const Vec3&)>& mapping) {
    Mesh out = mesh;
    for (auto& p : out.nodes) p = mapping(p);
    compute_geometry(out);
    return out;
}

} // namespace fcfv
