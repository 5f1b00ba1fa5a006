#pragma once

#include <array>
#include <string>
#include <vector>

#include "crosscap/surface.hpp"
#include "crosscap/triangulation.hpp"

namespace crosscap {

/// Tetrahedron edges in a fixed order: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
int edge_index(int v, int w);
std::array<int, 2> edge_vertices(int idx);

struct Corner {
    int tet = 0;
    int vertex = 0;
    bool operator==(const Corner& o) const { return tet == o.tet && vertex == o.vertex; }
    bool operator<(const Corner& o) const { return tet != o.tet ? tet < o.tet : vertex < o.vertex; }
};

struct EdgeMember {
    int tet = 0;
    int v0 = 0; // v0 < v1
    int v1 = 0;
    /// true when this edge's (v0 -> v1) direction is identified with the
    /// reverse of the class representative's canonical direction
    bool flipped = false;
};

struct FaceMember {
    int tet = 0;
    int face = 0;
    /// true when the identification with the representative reverses the
    /// orientation induced by ascending vertex order
    bool orientation_reversed = false;
};

/// The identified 0-, 1- and 2-skeleton of a triangulation. Members of every
/// class are sorted; the representative is the lexicographically least member.
struct Skeleton {
    std::vector<std::vector<Corner>> vertex_classes;
    std::vector<std::vector<EdgeMember>> edge_classes;
    std::vector<std::vector<FaceMember>> face_classes;

    /// per edge class: some member is identified with its own reversal
    std::vector<char> edge_reversed_self;

    // lookup: corner (tet,v) -> vertex class, (tet, edge idx) -> edge class,
    // (tet, face) -> face class
    std::vector<int> corner_class;       // 4 per tet
    std::vector<int> edge_class;         // 6 per tet
    std::vector<int> face_class;         // 4 per tet
    std::vector<int> directed_edge_rep;  // 12 per tet: union-find representative per directed edge

    int vertex_count() const { return static_cast<int>(vertex_classes.size()); }
    int edge_count() const { return static_cast<int>(edge_classes.size()); }
    int face_count() const { return static_cast<int>(face_classes.size()); }

    int vertex_class_of(int tet, int v) const { return corner_class[static_cast<size_t>(4 * tet + v)]; }
    int edge_class_of(int tet, int v, int w) const {
        return edge_class[static_cast<size_t>(6 * tet + edge_index(v, w))];
    }
    int face_class_of(int tet, int face) const { return face_class[static_cast<size_t>(4 * tet + face)]; }

    /// Whether the directed edge (v -> w) of `tet` agrees with the canonical
    /// direction of its class. Meaningless if the class is reversed-self.
    bool directed_edge_agrees(int tet, int v, int w) const;

    long long euler_characteristic(int tet_count) const {
        return static_cast<long long>(vertex_count()) - edge_count() + face_count() - tet_count;
    }
};

Skeleton compute_skeleton(const Triangulation& t);

struct ManifoldReport {
    bool closed = false;
    bool edges_valid = false;     // no edge identified with its own reversal
    bool links_valid = false;     // every vertex link is a 2-sphere
    bool is_manifold = false;     // closed && edges_valid && links_valid
    std::vector<int> bad_edge_classes;
    std::vector<int> bad_vertex_classes;
    std::vector<std::pair<int, int>> boundary_faces;
};

ManifoldReport check_closed_3_manifold(const Triangulation& t);
ManifoldReport check_closed_3_manifold(const Triangulation& t, const Skeleton& sk);

/// True iff every connected component admits a consistent orientation of its
/// tetrahedra (each gluing permutation must then be odd).
bool is_orientable(const Triangulation& t);

/// Link of one vertex class built from corner cross-sections: one triangular
/// cell per corner in the class, glued through the face gluings. Also used by
/// the manifold check.
PolygonComplex vertex_link_complex(const Triangulation& t, const Skeleton& sk, int vertex_class);

} // namespace crosscap
