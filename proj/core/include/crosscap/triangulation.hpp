#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crosscap/permutation.hpp"

namespace crosscap {

/// One side of a face gluing. Face `face` of the target tetrahedron is the
/// image of the source face under `perm`, so perm[source_face] == face.
struct Gluing {
    int tet = 0;
    int face = 0;
    Perm4 perm;

    bool operator==(const Gluing& o) const { return tet == o.tet && face == o.face && perm == o.perm; }
};

/// A generalized triangulation: abstract tetrahedra with faces glued in pairs
/// by vertex permutations. Faces are indexed 0..3 by their opposite vertex.
/// Unglued faces are boundary. Self-identifications of a tetrahedron with
/// itself through distinct faces are allowed.
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(int tets) : glue_(static_cast<size_t>(tets)) {}

    int tet_count() const { return static_cast<int>(glue_.size()); }

    const std::optional<Gluing>& gluing(int tet, int face) const {
        return glue_[static_cast<size_t>(tet)][static_cast<size_t>(face)];
    }

    /// Glues face `a` of tet `i` to face p[a] of tet `j`, and records the
    /// inverse gluing on the other side. Both slots must be free.
    void set_gluing(int i, int a, int j, const Perm4& p);

    /// Removes a gluing (both sides).
    void clear_gluing(int i, int a);

    bool is_closed() const;
    int boundary_face_count() const;

    /// Structural validity: indices in range and the involution holds
    /// (gluing(j, p[a]) maps back with the inverse permutation).
    /// Returns an empty string if valid, otherwise a description.
    std::string validate() const;

    bool operator==(const Triangulation& o) const { return glue_ == o.glue_; }

private:
    std::vector<std::array<std::optional<Gluing>, 4>> glue_;
};

/// Doubles a triangulation with boundary: two copies, each boundary face of
/// copy one glued to the same face of the mirror tetrahedron in copy two by
/// the identity vertex map. Throws std::invalid_argument if the input is
/// already closed.
Triangulation double_triangulation(const Triangulation& t);

/// Builds a triangulation from tetrahedra given as 4-tuples of point labels:
/// two tetrahedra sharing three labels are glued along that face with the
/// permutation induced by the labels. Throws std::invalid_argument on a
/// repeated label within a tetrahedron or a face shared by more than two.
Triangulation triangulation_from_tetrahedra(const std::vector<std::array<long long, 4>>& tets);

/// Text format:
///   tri <tet_count>
///   one line per tetrahedron with 4 whitespace-separated entries,
///   each  "-"  (boundary) or  "<target>:<p0><p1><p2><p3>".
/// Serialization is canonical; parse(serialize(t)) == t byte for byte.
std::string serialize_triangulation(const Triangulation& t);

/// Throws std::runtime_error with a line number on malformed input,
/// out-of-range indices, or non-involutive gluings.
Triangulation parse_triangulation(const std::string& text);

} // namespace crosscap
