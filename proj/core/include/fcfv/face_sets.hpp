#ifndef FCFV_FACE_SETS_HPP
#define FCFV_FACE_SETS_HPP

#include <functional>
#include <vector>

#include "fcfv/mesh.hpp"

namespace fcfv {

/// Ordered tagging rules for boundary faces. Rules are tried in order and
/// the first match wins, so precedence (e.g. Dirichlet over Neumann at
/// corners) is expressed by rule order. Interior faces are never tagged.
struct BoundarySpec {
    using Predicate = std::function<bool(const Vec3& barycenter, const Vec3& outward_normal)>;

    struct Rule {
        Predicate matches;
        FaceTag tag;
    };
    std::vector<Rule> rules;

    BoundarySpec& add(Predicate predicate, FaceTag tag) {
        rules.push_back({std::move(predicate), tag});
        return *this;
    }

    /// Tags every boundary face.
    static BoundarySpec all(FaceTag tag);

    /// Matches barycenters on the plane {x_axis = value} (within tol).
    static Predicate plane(int axis, double value, double tol = 1e-9);
};

/// Per-element face bookkeeping mirroring the classification into all (A_e),
/// Dirichlet (D_e) and remaining (B_e = I_e u N_e) faces.
struct FaceSets {
    std::vector<std::vector<int>> dirichlet;  // D_e, local face positions
    std::vector<std::vector<int>> hybrid;     // B_e, local face positions
    int n_dirichlet_faces = 0;
    int n_hybrid_faces = 0;  // interior + Neumann + symmetry

    /// Global face id -> dense index over hybrid faces (-1 for Dirichlet).
    std::vector<int> hybrid_index;
};

/// Applies the boundary spec to the mesh (writes face tags) and builds the
/// face sets. Every boundary face must match a rule; otherwise a
/// ClassificationError listing the offending faces is thrown.
FaceSets classify_faces(Mesh& mesh, const BoundarySpec& spec);

/// Builds the face sets from tags already present on the mesh (e.g. after
/// import). Boundary faces still tagged Interior raise ClassificationError.
FaceSets build_face_sets(const Mesh& mesh);

} // namespace fcfv

#endif
