#ifndef FCFV_MESH_HPP
#define FCFV_MESH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fcfv/types.hpp"

namespace fcfv {

enum class ElemKind { Triangle, Quadrilateral, Tetrahedron, Hexahedron };

const char* to_string(ElemKind kind);
ElemKind elem_kind_from_string(const std::string& name);
int elem_dimension(ElemKind kind);
int faces_per_element(ElemKind kind);

enum class FaceTag { Interior, Dirichlet, Neumann, Symmetry };

const char* to_string(FaceTag tag);

/// One mesh face (an edge in 2D). The stored normal points out of elem[0];
/// the second adjacent element sees the opposite sign.
struct Face {
    std::vector<int> nodes;
    std::array<int, 2> elem = {-1, -1};
    double area = 0.0;           // length in 2D
    Vec3 normal = Vec3::Zero();  // unit, outward from elem[0]
    Vec3 barycenter = Vec3::Zero();
    FaceTag tag = FaceTag::Interior;

    bool is_boundary() const { return elem[1] < 0; }
};

/// Broken computational domain: elements plus the unique face skeleton and
/// all one-point-quadrature geometry (measures, normals, barycenters).
/// A fully built Mesh is immutable in practice and safe to share across
/// threads.
struct Mesh {
    int nsd = 2;
    ElemKind kind = ElemKind::Quadrilateral;
    std::vector<Vec3> nodes;                 // z = 0 in 2D
    std::vector<std::vector<int>> elements;
    std::vector<Face> faces;
    std::vector<std::vector<int>> elem_faces;
    std::vector<double> elem_measure;
    std::vector<Vec3> elem_centroid;
    std::vector<double> elem_diameter;

    int num_elements() const { return static_cast<int>(elements.size()); }
    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_faces() const { return static_cast<int>(faces.size()); }

    /// +1 if the stored face normal points out of element e, -1 otherwise.
    double outward_sign(int face, int element) const {
        return faces[face].elem[0] == element ? 1.0 : -1.0;
    }

    /// Characteristic size: maximum element diameter.
    double characteristic_size() const;

    /// Minimum edge length over all elements.
    double min_edge_length() const;

    /// Nodes lying on the domain boundary (members of any boundary face).
    std::vector<bool> boundary_node_mask() const;

    /// FNV-1a over coordinates and connectivity; stable across runs.
    std::uint64_t hash() const;
};

/// Extracts the unique face skeleton from element connectivity and fills all
/// geometric quantities. Throws MeshError for inverted or degenerate
/// elements and for faces shared by more than two elements.
void build_topology(Mesh& mesh);

/// Recomputes measures, normals and barycenters after nodes moved;
/// connectivity and face identity are kept.
void compute_geometry(Mesh& mesh);

/// Verifies the mesh invariants (positive measures, interior-face pairing,
/// per-element closed-surface identity). Throws MeshError on violation.
void check_mesh(const Mesh& mesh);

} // namespace fcfv

#endif
