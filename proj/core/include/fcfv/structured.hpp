#ifndef FCFV_STRUCTURED_HPP
#define FCFV_STRUCTURED_HPP

#include <array>
#include <cstdint>
#include <functional>

#include "fcfv/mesh.hpp"

namespace fcfv {

/// Axis-aligned box; only the first nsd components are used.
struct Box {
    Vec3 lo = Vec3::Zero();
    Vec3 hi = Vec3::Ones();
};

/// Structured 2D mesh with square cells of size 2^-r. Triangle meshes split
/// each square into four triangles through both diagonals (adding the cell
/// centre node).
Mesh generate_structured_2d(int refinement, ElemKind kind, const Box& box = {});

/// Structured 3D mesh with cubic cells of size min_extent / 2^(level-1).
/// Tetrahedral meshes split each cube into 24 tetrahedra through the face
/// centres and the cell centre.
Mesh generate_structured_3d(int level, ElemKind kind, const Box& box);

/// Moves every interior node by an independent uniform random offset in
/// [-amplitude, amplitude]^nsd; boundary nodes stay put. The default
/// amplitude is h_min/3 with h_min the minimum edge length of the input.
/// Deterministic for a fixed seed. Throws MeshError if an element inverts.
Mesh distort_mesh(const Mesh& mesh, std::uint64_t seed, double amplitude = -1.0);

/// Hexahedral annular cylinder: midplane radius, thickness, height (centred
/// at z = 0). Axial spacing follows a symmetric tanh law clustering elements
/// towards both ends; stretch is the ratio of centre to end spacing (1 =
/// uniform).
Mesh generate_shell_mesh(int n_theta, int n_z, int n_thickness, double stretch,
                         double midplane_radius = 1.0, double thickness = 0.02,
                         double height = 5.0);

/// Applies a node mapping to a structured mesh (used for mapped domains such
/// as tapered plates) and recomputes all geometry.
Mesh map_mesh(const Mesh& mesh, const std::function<Vec3(const Vec3&)>& mapping);

} // namespace fcfv

#endif
