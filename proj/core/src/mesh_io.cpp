#include "fcfv/mesh_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fcfv/error.hpp"

namespace fcfv {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-empty, non-comment line; throws at end of file.
    std::istringstream next(const char* what) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            return std::istringstream(line);
        }
        throw ImportError(std::string("unexpected end of file while reading ") + what, line_);
    }

    int line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

int expected_face_nodes(int nsd) { return nsd == 2 ? 2 : 3; }

} // namespace

Mesh import_mesh(std::istream& in) {
    LineReader reader(in);

    {
        auto header = reader.next("header");
        std::string magic;
        int version = 0;
        header >> magic >> version;
        if (magic != "fcfvmesh" || version != 1)
            throw ImportError("expected header 'fcfvmesh 1'", reader.line());
    }

    Mesh mesh;
    {
        auto line = reader.next("dim");
        std::string key;
        line >> key >> mesh.nsd;
        if (key != "dim" || (mesh.nsd != 2 && mesh.nsd != 3))
            throw ImportError("expected 'dim 2' or 'dim 3'", reader.line());
    }
    {
        auto line = reader.next("kind");
        std::string key, kind;
        line >> key >> kind;
        if (key != "kind") throw ImportError("expected 'kind <tri|quad|tet|hex>'", reader.line());
        try {
            mesh.kind = elem_kind_from_string(kind);
        } catch (const std::invalid_argument& err) {
            throw ImportError(err.what(), reader.line());
        }
        if (elem_dimension(mesh.kind) != mesh.nsd)
            throw ImportError("element kind does not match dim", reader.line());
    }

    int n_nodes = 0;
    {
        auto line = reader.next("nodes");
        std::string key;
        line >> key >> n_nodes;
        if (key != "nodes" || n_nodes <= 0) throw ImportError("expected 'nodes <count>'", reader.line());
    }
    mesh.nodes.reserve(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        auto line = reader.next("node coordinates");
        double x = 0, y = 0, z = 0;
        if (!(line >> x >> y) || (mesh.nsd == 3 && !(line >> z)))
            throw ImportError("malformed node line", reader.line());
        mesh.nodes.emplace_back(x, y, z);
    }

    int n_elements = 0;
    {
        auto line = reader.next("elements");
        std::string key;
        line >> key >> n_elements;
        if (key != "elements" || n_elements <= 0)
            throw ImportError("expected 'elements <count>'", reader.line());
    }
    const int nodes_per_elem = mesh.kind == ElemKind::Triangle      ? 3
                               : mesh.kind == ElemKind::Quadrilateral ? 4
                               : mesh.kind == ElemKind::Tetrahedron   ? 4
                                                                      : 8;
    mesh.elements.reserve(n_elements);
    for (int i = 0; i < n_elements; ++i) {
        auto line = reader.next("element connectivity");
        std::vector<int> conn(nodes_per_elem);
        for (int& n : conn) {
            if (!(line >> n) || n < 0 || n >= n_nodes)
                throw ImportError("malformed element line", reader.line());
        }
        mesh.elements.push_back(std::move(conn));
    }

    int n_boundary = 0;
    {
        auto line = reader.next("boundary");
        std::string key;
        line >> key >> n_boundary;
        if (key != "boundary" || n_boundary < 0)
            throw ImportError("expected 'boundary <count>'", reader.line());
    }

    build_topology(mesh);

    std::map<std::vector<int>, int> boundary_faces;
    for (int f = 0; f < mesh.num_faces(); ++f) {
        if (!mesh.faces[f].is_boundary()) continue;
        std::vector<int> key = mesh.faces[f].nodes;
        std::sort(key.begin(), key.end());
        boundary_faces.emplace(std::move(key), f);
    }

    for (int i = 0; i < n_boundary; ++i) {
        auto line = reader.next("boundary face");
        std::string tag_name;
        line >> tag_name;
        FaceTag tag;
        if (tag_name == "dirichlet") tag = FaceTag::Dirichlet;
        else if (tag_name == "neumann") tag = FaceTag::Neumann;
        else if (tag_name == "symmetry") tag = FaceTag::Symmetry;
        else throw ImportError("unknown boundary tag '" + tag_name + "'", reader.line());

        std::vector<int> key(expected_face_nodes(mesh.nsd) == 2 ? 2 : 0);
        if (mesh.nsd == 2) {
            if (!(line >> key[0] >> key[1])) throw ImportError("malformed boundary line", reader.line());
        } else {
            int n;
            while (line >> n) key.push_back(n);
            if (key.size() != 3 && key.size() != 4)
                throw ImportError("boundary face needs 3 or 4 nodes in 3D", reader.line());
        }
        std::sort(key.begin(), key.end());
        auto it = boundary_faces.find(key);
        if (it == boundary_faces.end())
            throw ImportError("boundary line does not match any boundary face", reader.line());
        mesh.faces[it->second].tag = tag;
    }

    check_mesh(mesh);
    {
        std::vector<int> untagged;
        for (int f = 0; f < mesh.num_faces(); ++f)
            if (mesh.faces[f].is_boundary() && mesh.faces[f].tag == FaceTag::Interior)
                untagged.push_back(f);
        if (!untagged.empty())
            throw ClassificationError("imported mesh has " + std::to_string(untagged.size()) +
                                          " untagged boundary faces (first: " +
                                          std::to_string(untagged.front()) + ")",
                                      untagged);
    }
    return mesh;
}

Mesh import_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ImportError("cannot open mesh file '" + path + "'", 0);
    return import_mesh(in);
}

void export_mesh(const Mesh& mesh, std::ostream& out) {
    out << "fcfvmesh 1\n";
    out << "dim " << mesh.nsd << "\n";
    out << "kind " << to_string(mesh.kind) << "\n";
    out << "nodes " << mesh.num_nodes() << "\n";
    char buf[96];
    for (const auto& p : mesh.nodes) {
        if (mesh.nsd == 2)
            std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x(), p.y());
        else
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p.x(), p.y(), p.z());
        out << buf;
    }
    out << "elements " << mesh.num_elements() << "\n";
    for (const auto& conn : mesh.elements) {
        for (std::size_t i = 0; i < conn.size(); ++i) out << (i ? " " : "") << conn[i];
        out << "\n";
    }
    int n_boundary = 0;
    for (const auto& face : mesh.faces)
        if (face.is_boundary()) ++n_boundary;
    out << "boundary " << n_boundary << "\n";
    for (const auto& face : mesh.faces) {
        if (!face.is_boundary()) continue;
        out << to_string(face.tag);
        for (int n : face.nodes) out << " " << n;
        out << "\n";
    }
}

void export_mesh_file(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    export_mesh(mesh, out);
    if (!out) throw Error("failed writing mesh to '" + path + "'");
}

} // namespace fcfv
