#include "fcfv/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "fcfv/error.hpp"

namespace fcfv {

const char* to_string(ElemKind kind) {
    switch (kind) {
        case ElemKind::Triangle: return "tri";
        case ElemKind::Quadrilateral: return "quad";
        case ElemKind::Tetrahedron: return "tet";
        case ElemKind::Hexahedron: return "hex";
    }
    return "?";
}

ElemKind elem_kind_from_string(const std::string& name) {
    if (name == "tri") return ElemKind::Triangle;
    if (name == "quad") return ElemKind::Quadrilateral;
    if (name == "tet") return ElemKind::Tetrahedron;
    if (name == "hex") return ElemKind::Hexahedron;
    throw std::invalid_argument("unknown element kind '" + name + "'");
}

int elem_dimension(ElemKind kind) {
    return (kind == ElemKind::Triangle || kind == ElemKind::Quadrilateral) ? 2 : 3;
}

int faces_per_element(ElemKind kind) {
    switch (kind) {
        case ElemKind::Triangle: return 3;
        case ElemKind::Quadrilateral: return 4;
        case ElemKind::Tetrahedron: return 4;
        case ElemKind::Hexahedron: return 6;
    }
    return 0;
}

const char* to_string(FaceTag tag) {
    switch (tag) {
        case FaceTag::Interior: return "interior";
        case FaceTag::Dirichlet: return "dirichlet";
        case FaceTag::Neumann: return "neumann";
        case FaceTag::Symmetry: return "symmetry";
    }
    return "?";
}

namespace {

// Local face connectivity, ordered so the right-hand rule yields the
// element-outward normal (counterclockwise elements in 2D).
std::vector<std::vector<int>> local_faces(ElemKind kind) {
    switch (kind) {
        case ElemKind::Triangle:
            return {{0, 1}, {1, 2}, {2, 0}};
        case ElemKind::Quadrilateral:
            return {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        case ElemKind::Tetrahedron:
            return {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}};
        case ElemKind::Hexahedron:
            return {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                    {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
    }
    return {};
}

struct FaceGeometry {
    double area = 0.0;
    Vec3 normal = Vec3::Zero();
    Vec3 barycenter = Vec3::Zero();
};

// 2D faces are segments: length, barycenter and the normal obtained by
// rotating the tangent -90 degrees (outward for counterclockwise elements).
FaceGeometry face_geometry_2d(const Mesh& mesh, const std::vector<int>& nodes) {
    const Vec3& a = mesh.nodes[nodes[0]];
    const Vec3& b = mesh.nodes[nodes[1]];
    FaceGeometry geo;
    const Vec3 d = b - a;
    geo.area = d.norm();
    if (geo.area <= 0.0) throw MeshError("degenerate mesh face (zero length)");
    geo.normal = Vec3(d.y(), -d.x(), 0.0) / geo.area;
    geo.barycenter = 0.5 * (a + b);
    return geo;
}

// 3D faces: triangles directly, quadrilaterals via the two-triangle split
// (split-independent vector area; scalar area and barycenter area-weighted).
FaceGeometry face_geometry_3d(const Mesh& mesh, const std::vector<int>& nodes) {
    FaceGeometry geo;
    Vec3 vector_area = Vec3::Zero();
    double area_sum = 0.0;
    Vec3 weighted_centroid = Vec3::Zero();
    const Vec3& base = mesh.nodes[nodes[0]];
    for (std::size_t k = 1; k + 1 < nodes.size(); ++k) {
        const Vec3& p = mesh.nodes[nodes[k]];
        const Vec3& q = mesh.nodes[nodes[k + 1]];
        const Vec3 tri_vec = 0.5 * (p - base).cross(q - base);
        const double tri_area = tri_vec.norm();
        vector_area += tri_vec;
        area_sum += tri_area;
        weighted_centroid += tri_area * (base + p + q) / 3.0;
    }
    if (area_sum <= 0.0) throw MeshError("degenerate mesh face (zero area)");
    geo.area = area_sum;
    geo.normal = vector_area.normalized();
    geo.barycenter = weighted_centroid / area_sum;
    return geo;
}

// Signed polygon measure and centroid by fanning around the vertex mean.
void element_geometry_2d(const Mesh& mesh, int e, double& measure, Vec3& centroid) {
    const auto& conn = mesh.elements[e];
    Vec3 mean = Vec3::Zero();
    for (int n : conn) mean += mesh.nodes[n];
    mean /= static_cast<double>(conn.size());

    double total = 0.0;
    Vec3 weighted = Vec3::Zero();
    for (std::size_t k = 0; k < conn.size(); ++k) {
        const Vec3& a = mesh.nodes[conn[k]];
        const Vec3& b = mesh.nodes[conn[(k + 1) % conn.size()]];
        const double signed_area =
            0.5 * ((a.x() - mean.x()) * (b.y() - mean.y()) - (b.x() - mean.x()) * (a.y() - mean.y()));
        total += signed_area;
        weighted += signed_area * (a + b + mean) / 3.0;
    }
    if (total <= 0.0)
        throw MeshError("inverted or degenerate element " + std::to_string(e));
    measure = total;
    centroid = weighted / total;
}

// Polyhedron measure and centroid from signed tetrahedra fanned around the
// vertex mean, with faces split consistently with face_geometry_3d.
void element_geometry_3d(const Mesh& mesh, int e, double& measure, Vec3& centroid) {
    const auto& conn = mesh.elements[e];
    Vec3 mean = Vec3::Zero();
    for (int n : conn) mean += mesh.nodes[n];
    mean /= static_cast<double>(conn.size());

    double total = 0.0;
    Vec3 weighted = Vec3::Zero();
    for (const auto& lf : local_faces(mesh.kind)) {
        const Vec3& base = mesh.nodes[conn[lf[0]]];
        for (std::size_t k = 1; k + 1 < lf.size(); ++k) {
            const Vec3& p = mesh.nodes[conn[lf[k]]];
            const Vec3& q = mesh.nodes[conn[lf[k + 1]]];
            const double vol = (base - mean).dot((p - mean).cross(q - mean)) / 6.0;
            total += vol;
            weighted += vol * (mean + base + p + q) / 4.0;
        }
    }
    if (total <= 0.0)
        throw MeshError("inverted or degenerate element " + std::to_string(e));
    measure = total;
    centroid = weighted / total;
}

} // namespace

double Mesh::characteristic_size() const {
    double h = 0.0;
    for (double d : elem_diameter) h = std::max(h, d);
    return h;
}

double Mesh::min_edge_length() const {
    double h = std::numeric_limits<double>::max();
    for (const auto& conn : elements) {
        const auto lfs = local_faces(kind);
        for (const auto& lf : lfs) {
            for (std::size_t k = 0; k < lf.size(); ++k) {
                const Vec3& a = nodes[conn[lf[k]]];
                const Vec3& b = nodes[conn[lf[(k + 1) % lf.size()]]];
                h = std::min(h, (a - b).norm());
            }
        }
    }
    return h;
}

std::vector<bool> Mesh::boundary_node_mask() const {
    std::vector<bool> mask(nodes.size(), false);
    for (const auto& face : faces)
        if (face.is_boundary())
            for (int n : face.nodes) mask[n] = true;
    return mask;
}

std::uint64_t Mesh::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* data, std::size_t size) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < size; ++i) {
            h ^= bytes[i];
            h *= 1099511628211ull;
        }
    };
    const int kind_id = static_cast<int>(kind);
    mix(&nsd, sizeof nsd);
    mix(&kind_id, sizeof kind_id);
    for (const auto& p : nodes) {
        const double coords[3] = {p.x(), p.y(), p.z()};
        mix(coords, sizeof coords);
    }
    for (const auto& conn : elements)
        mix(conn.data(), conn.size() * sizeof(int));
    return h;
}

void build_topology(Mesh& mesh) {
    if (mesh.elements.empty()) throw MeshError("mesh has no elements");
    mesh.faces.clear();
    mesh.elem_faces.assign(mesh.elements.size(), {});

    std::map<std::vector<int>, int> index;  // sorted node ids -> face id
    const auto lfs = local_faces(mesh.kind);
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const auto& conn = mesh.elements[e];
        for (const auto& lf : lfs) {
            std::vector<int> face_nodes(lf.size());
            for (std::size_t k = 0; k < lf.size(); ++k) face_nodes[k] = conn[lf[k]];
            std::vector<int> key = face_nodes;
            std::sort(key.begin(), key.end());

            auto it = index.find(key);
            int fid;
            if (it == index.end()) {
                fid = mesh.num_faces();
                index.emplace(std::move(key), fid);
                Face face;
                face.nodes = std::move(face_nodes);
                face.elem[0] = e;
                mesh.faces.push_back(std::move(face));
            } else {
                fid = it->second;
                Face& face = mesh.faces[fid];
                if (face.elem[1] >= 0)
                    throw MeshError("face " + std::to_string(fid) + " shared by more than two elements");
                face.elem[1] = e;
            }
            mesh.elem_faces[e].push_back(fid);
        }
    }
    compute_geometry(mesh);
}

void compute_geometry(Mesh& mesh) {
    const int n_elem = mesh.num_elements();
    mesh.elem_measure.assign(n_elem, 0.0);
    mesh.elem_centroid.assign(n_elem, Vec3::Zero());
    mesh.elem_diameter.assign(n_elem, 0.0);

    for (int e = 0; e < n_elem; ++e) {
        if (mesh.nsd == 2)
            element_geometry_2d(mesh, e, mesh.elem_measure[e], mesh.elem_centroid[e]);
        else
            element_geometry_3d(mesh, e, mesh.elem_measure[e], mesh.elem_centroid[e]);

        const auto& conn = mesh.elements[e];
        double diameter = 0.0;
        for (std::size_t i = 0; i < conn.size(); ++i)
            for (std::size_t j = i + 1; j < conn.size(); ++j)
                diameter = std::max(diameter, (mesh.nodes[conn[i]] - mesh.nodes[conn[j]]).norm());
        mesh.elem_diameter[e] = diameter;
    }

    for (auto& face : mesh.faces) {
        const FaceGeometry geo = mesh.nsd == 2 ? face_geometry_2d(mesh, face.nodes)
                                               : face_geometry_3d(mesh, face.nodes);
        face.area = geo.area;
        face.normal = geo.normal;
        face.barycenter = geo.barycenter;
    }
}

void check_mesh(const Mesh& mesh) {
    for (int e = 0; e < mesh.num_elements(); ++e) {
        if (!(mesh.elem_measure[e] > 0.0))
            throw MeshError("element " + std::to_string(e) + " has non-positive measure");

        Vec3 closure = Vec3::Zero();
        double surface = 0.0;
        for (int f : mesh.elem_faces[e]) {
            const Face& face = mesh.faces[f];
            closure += mesh.outward_sign(f, e) * face.area * face.normal;
            surface += face.area;
        }
        if (closure.norm() > 1e-10 * surface)
            throw MeshError("element " + std::to_string(e) + " violates the closed-surface identity");
    }
    for (int f = 0; f < mesh.num_faces(); ++f) {
        const Face& face = mesh.faces[f];
        if (!(face.area > 0.0))
            throw MeshError("face " + std::to_string(f) + " has non-positive area");
        if (face.elem[0] < 0)
            throw MeshError("face " + std::to_string(f) + " has no adjacent element");
    }
}

} // namespace fcfv
