#!/usr/bin/env python3
"""Generates the plate-with-hole fixture meshes shipped under tests/fixtures.

Quarter model of a square plate with a circular hole: a mapped ring between
the hole arc and the outer square corner, radially graded towards the hole,
split into triangles. Boundary tags: symmetry on the two straight cut edges,
neumann on the hole and on the outer edges.
"""

import math
import os

HOLE_RADIUS = 1.0
EDGE = 4.0
GRADING = 1.7  # radial concentration towards the hole


def outer_point(phi):
    if phi <= math.pi / 4:
        return (EDGE, EDGE * math.tan(phi))
    return (EDGE * math.tan(math.pi / 2 - phi), EDGE)


def make_mesh(n_phi, n_s):
    nodes = []
    for j in range(n_s + 1):
        s = (j / n_s) ** GRADING
        for i in range(n_phi + 1):
            phi = 0.5 * math.pi * i / n_phi
            hx, hy = HOLE_RADIUS * math.cos(phi), HOLE_RADIUS * math.sin(phi)
            ox, oy = outer_point(phi)
            nodes.append(((1 - s) * hx + s * ox, (1 - s) * hy + s * oy))

    def node(i, j):
        return j * (n_phi + 1) + i

    elements = []
    for j in range(n_s):
        for i in range(n_phi):
            c0 = node(i, j)       # inner, phi_i
            c1 = node(i, j + 1)   # outer, phi_i
            c2 = node(i + 1, j + 1)
            c3 = node(i + 1, j)
            elements.append((c0, c1, c2))
            elements.append((c0, c2, c3))

    boundary = []
    for i in range(n_phi):
        boundary.append(("neumann", node(i, 0), node(i + 1, 0)))        # hole arc
        boundary.append(("neumann", node(i, n_s), node(i + 1, n_s)))    # outer edges
    for j in range(n_s):
        boundary.append(("symmetry", node(0, j), node(0, j + 1)))       # y = 0 cut
        boundary.append(("symmetry", node(n_phi, j), node(n_phi, j + 1)))  # x = 0 cut
    return nodes, elements, boundary


def write_mesh(path, nodes, elements, boundary):
    with open(path, "w") as out:
        out.write("fcfvmesh 1\ndim 2\nkind tri\n")
        out.write(f"nodes {len(nodes)}\n")
        for x, y in nodes:
            out.write(f"{x!r} {y!r}\n")
        out.write(f"elements {len(elements)}\n")
        for conn in elements:
            out.write(" ".join(str(n) for n in conn) + "\n")
        out.write(f"boundary {len(boundary)}\n")
        for tag, a, b in boundary:
            out.write(f"{tag} {a} {b}\n")


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    fixture_dir = os.path.join(here, "..", "tests", "fixtures")
    os.makedirs(fixture_dir, exist_ok=True)
    for level, (n_phi, n_s) in enumerate([(16, 8), (32, 16), (64, 32)], start=1):
        nodes, elements, boundary = make_mesh(n_phi, n_s)
        path = os.path.join(fixture_dir, f"kirsch_l{level}.msh")
        write_mesh(path, nodes, elements, boundary)
        print(f"{path}: {len(nodes)} nodes, {len(elements)} triangles")


if __name__ == "__main__":
    main()
