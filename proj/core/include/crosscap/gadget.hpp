#pragma once

#include <array>
#include <string>
#include <vector>

#include "crosscap/sat.hpp"
#include "crosscap/surface.hpp"
#include "crosscap/triangulation.hpp"

namespace crosscap {

/// The reduction takes a One-in-Three SAT instance to a closed 3-manifold in
/// three steps: build a branched 2-complex whose pieces encode literals,
/// thicken it to a 3-manifold with boundary, and double that manifold. A
/// satisfying assignment selects pieces forming an embedded non-orientable
/// surface (the witness).

enum class PieceKind { ProjectivePlane, PositiveVariable, NegativeVariable };

/// One surface piece, triangulated on its own local vertex ids. `rims` lists
/// the boundary circles as oriented vertex triples (every rim here is the rim
/// of a removed triangle). Variable pieces are tori with holes; the plane
/// piece is a projective plane with holes.
struct Piece {
    PieceKind kind = PieceKind::ProjectivePlane;
    int variable = 0; // 1-based, for variable pieces
    std::string name;
    int vertex_count = 0;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 3>> rims;
};

/// A rim of a specific piece, attached to a branching circle.
struct PageAttachment {
    int piece = 0;
    int rim = 0;
};

/// A branching circle with its stored orientation (the plane piece's chart
/// orientation) and the pieces attached around it, plane piece first. All
/// non-plane rims are fused to the circle orientation-reversingly.
struct BranchingCircle {
    std::string label;                  // "u<i>" for variables, "c<j>" for clauses
    std::array<int, 3> vertices{};      // fused vertex ids, in circle orientation
    std::vector<PageAttachment> pages;
};

/// The branched 2-complex: pieces with their rims fused along the branching
/// circles. `triangles` lists every piece triangle on the fused vertex ids;
/// the per-piece local triangulations stay available for piece-level checks.
struct TwoComplex {
    SatInstance instance;
    std::vector<Piece> pieces;  // pieces[0] is the projective plane
    std::vector<BranchingCircle> circles;

    int vertex_count = 0;                       // fused ids
    std::vector<int> piece_vertex_base;         // offset of each piece's local ids
    std::vector<int> fused_vertex;              // (base + local) -> fused id
    std::vector<std::array<int, 3>> triangles;  // fused ids, pieces concatenated
    std::vector<int> triangle_piece;

    int fused(int piece, int local) const {
        return fused_vertex[static_cast<size_t>(piece_vertex_base[static_cast<size_t>(piece)] + local)];
    }
};

/// Builds the branched 2-complex for an instance: a projective plane with
/// n+m holes (circles u1..un, c1..cm), plus per variable a torus piece for
/// the literal and one for its negation, each attached to its variable
/// circle and to the clause circles where that literal occurs. Every ui
/// circle carries 3 pieces, every cj circle 4 (with multiplicity).
TwoComplex build_two_complex(const SatInstance& inst);

/// The witness surface for a satisfying assignment: the projective plane
/// piece plus the chosen variable piece per variable, which closes up along
/// every circle exactly when each clause has exactly one true literal.
struct AssignmentWitness {
    std::vector<bool> assignment;
    SurfaceTriangulation surface;
    long long euler_characteristic = 0;
    bool orientable = true;
};

/// Throws std::invalid_argument naming the first failing clause and its true
/// literal count if the assignment is not one-in-three satisfying.
AssignmentWitness witness_surface(const SatInstance& inst, const std::vector<bool>& assignment);

/// Thickening output: every piece triangle becomes a prism of 3 tetrahedra,
/// and a solid torus is laid around each branching circle joining the
/// attached slabs in a chosen cyclic order. `tet_piece` carries the piece
/// index per tetrahedron; core tetrahedra of circle c carry -1-c.
struct ThickenedComplex {
    Triangulation tri;
    std::vector<int> tet_piece;
};

ThickenedComplex thicken(const TwoComplex& complex);

/// `circle_page_order[c]` is a permutation of the page indices of circle c,
/// giving the cyclic arrangement of the attached pieces around it. Throws if
/// a permutation does not match the circle's page count.
ThickenedComplex thicken(const TwoComplex& complex,
                         const std::vector<std::vector<int>>& circle_page_order);

/// The full reduction: double of the thickened branched complex. Closed, and
/// a 3-manifold for every valid instance; tetrahedron count linear in
/// instance size.
Triangulation build_gadget(const SatInstance& inst);
Triangulation build_gadget(const SatInstance& inst,
                           const std::vector<std::vector<int>>& circle_page_order);

} // namespace crosscap
