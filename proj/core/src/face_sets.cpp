#include "fcfv/face_sets.hpp"

#include <cmath>
#include <string>

#include "fcfv/error.hpp"

namespace fcfv {

BoundarySpec BoundarySpec::all(FaceTag tag) {
    BoundarySpec spec;
    spec.add([](const Vec3&, const Vec3&) { return true; }, tag);
    return spec;
}

BoundarySpec::Predicate BoundarySpec::plane(int axis, double value, double tol) {
    return [axis, value, tol](const Vec3& barycenter, const Vec3&) {
        return std::abs(barycenter[axis] - value) <= tol;
    };
}

FaceSets classify_faces(Mesh& mesh, const BoundarySpec& spec) {
    std::vector<int> unmatched;
    for (int f = 0; f < mesh.num_faces(); ++f) {
        Face& face = mesh.faces[f];
        if (!face.is_boundary()) {
            face.tag = FaceTag::Interior;
            continue;
        }
        bool matched = false;
        for (const auto& rule : spec.rules) {
            if (rule.matches(face.barycenter, face.normal)) {
                face.tag = rule.tag;
                matched = true;
                break;
            }
        }
        if (!matched) unmatched.push_back(f);
    }
    if (!unmatched.empty())
        throw ClassificationError(
            "classify_faces: " + std::to_string(unmatched.size()) + " untagged boundary faces (first: " +
                std::to_string(unmatched.front()) + ")",
            unmatched);
    return build_face_sets(mesh);
}

FaceSets build_face_sets(const Mesh& mesh) {
    std::vector<int> untagged;
    for (int f = 0; f < mesh.num_faces(); ++f) {
        const Face& face = mesh.faces[f];
        if (face.is_boundary() && face.tag == FaceTag::Interior) untagged.push_back(f);
        if (!face.is_boundary() && face.tag != FaceTag::Interior)
            throw ClassificationError("interior face " + std::to_string(f) + " carries a boundary tag", {f});
    }
    if (!untagged.empty())
        throw ClassificationError(
            "build_face_sets: " + std::to_string(untagged.size()) + " untagged boundary faces (first: " +
                std::to_string(untagged.front()) + ")",
            untagged);

    FaceSets sets;
    sets.dirichlet.resize(mesh.num_elements());
    sets.hybrid.resize(mesh.num_elements());
    sets.hybrid_index.assign(mesh.num_faces(), -1);

    for (int f = 0; f < mesh.num_faces(); ++f) {
        if (mesh.faces[f].tag == FaceTag::Dirichlet)
            ++sets.n_dirichlet_faces;
        else
            sets.hybrid_index[f] = sets.n_hybrid_faces++;
    }
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const auto& ef = mesh.elem_faces[e];
        for (int j = 0; j < static_cast<int>(ef.size()); ++j) {
            if (mesh.faces[ef[j]].tag == FaceTag::Dirichlet)
                sets.dirichlet[e].push_back(j);
            else
                sets.hybrid[e].push_back(j);
        }
    }
    return sets;
}

} // namespace fcfv
