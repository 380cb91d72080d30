#include "fcfv/vtk.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "fcfv/error.hpp"

namespace fcfv {

namespace {

int vtk_cell_type(ElemKind kind) {
    switch (kind) {
        case ElemKind::Triangle: return 5;
        case ElemKind::Quadrilateral: return 9;
        case ElemKind::Tetrahedron: return 10;
        case ElemKind::Hexahedron: return 12;
    }
    return 0;
}

void write_double(std::ostream& out, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    out << buf;
}

} // namespace

void export_vtk(const Mesh& mesh, const std::vector<ElementSolution>& solutions, std::ostream& out) {
    if (static_cast<int>(solutions.size()) != mesh.num_elements())
        throw std::invalid_argument("export_vtk: one solution per element expected");

    out << "# vtk DataFile Version 3.0\n";
    out << "fcfv solution\n";
    out << "ASCII\n";
    out << "DATASET UNSTRUCTURED_GRID\n";

    out << "POINTS " << mesh.num_nodes() << " double\n";
    for (const auto& p : mesh.nodes) {
        write_double(out, p.x());
        out << ' ';
        write_double(out, p.y());
        out << ' ';
        write_double(out, p.z());
        out << '\n';
    }

    std::size_t list_size = 0;
    for (const auto& conn : mesh.elements) list_size += conn.size() + 1;
    out << "CELLS " << mesh.num_elements() << ' ' << list_size << '\n';
    for (const auto& conn : mesh.elements) {
        out << conn.size();
        for (int n : conn) out << ' ' << n;
        out << '\n';
    }
    out << "CELL_TYPES " << mesh.num_elements() << '\n';
    for (int e = 0; e < mesh.num_elements(); ++e) out << vtk_cell_type(mesh.kind) << '\n';

    out << "CELL_DATA " << mesh.num_elements() << '\n';
    out << "VECTORS displacement double\n";
    for (const auto& sol : solutions) {
        for (int k = 0; k < 3; ++k) {
            if (k) out << ' ';
            write_double(out, k < sol.displacement.size() ? sol.displacement[k] : 0.0);
        }
        out << '\n';
    }
    const int msd = mesh.num_elements() ? static_cast<int>(solutions.front().stress.size()) : 0;
    out << "FIELD CellFields 1\n";
    out << "stress " << msd << ' ' << mesh.num_elements() << " double\n";
    for (const auto& sol : solutions) {
        for (int k = 0; k < msd; ++k) {
            if (k) out << ' ';
            write_double(out, sol.stress[k]);
        }
        out << '\n';
    }
    out << "SCALARS von_mises double 1\n";
    out << "LOOKUP_TABLE default\n";
    for (const auto& sol : solutions) {
        write_double(out, sol.von_mises);
        out << '\n';
    }
}

void export_vtk_file(const Mesh& mesh, const std::vector<ElementSolution>& solutions,
                     const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    export_vtk(mesh, solutions, out);
    if (!out) throw Error("failed writing '" + path + "'");
}

} // namespace fcfv
