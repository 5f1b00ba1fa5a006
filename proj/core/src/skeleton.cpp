#include "crosscap/skeleton.hpp"

#include <algorithm>
#include <stdexcept>

#include "crosscap/union_find.hpp"

namespace crosscap {

namespace {

constexpr std::array<std::array<int, 2>, 6> kEdgeVerts = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Index of the directed edge v -> w (v != w) within a tetrahedron, 0..11.
constexpr int dir_index(int v, int w) { return 3 * v + w - (w > v ? 1 : 0); }

/// Maps each UF root to a dense index in order of first appearance. Scanning
/// in lex order makes class ids ordered by their least member.
class ClassIndexer {
public:
    explicit ClassIndexer(int n) : index_(static_cast<size_t>(n), -1) {}
    int assign(int root) {
        int& slot = index_[static_cast<size_t>(root)];
        if (slot < 0) slot = next_++;
        return slot;
    }
    int count() const { return next_; }

private:
    std::vector<int> index_;
    int next_ = 0;
};

} // namespace

int edge_index(int v, int w) {
    if (v == w || v < 0 || v > 3 || w < 0 || w > 3) throw std::invalid_argument("edge_index: bad vertices");
    if (v > w) std::swap(v, w);
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[v][w];
}

std::array<int, 2> edge_vertices(int idx) {
    if (idx < 0 || idx > 5) throw std::invalid_argument("edge_vertices: bad index");
    return kEdgeVerts[static_cast<size_t>(idx)];
}

Skeleton compute_skeleton(const Triangulation& t) {
    const int n = t.tet_count();
    UnionFind corners(4 * n);
    UnionFind edges(6 * n);
    UnionFind dedges(12 * n);
    UnionFind faces(4 * n);

    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < 4; ++a) {
            const auto& g = t.gluing(i, a);
            if (!g) continue;
            const int j = g->tet;
            const Perm4& p = g->perm;
            faces.unite(4 * i + a, 4 * j + g->face);
            for (int v = 0; v < 4; ++v) {
                if (v == a) continue;
                corners.unite(4 * i + v, 4 * j + p[v]);
                for (int w = 0; w < 4; ++w) {
                    if (w == a || w == v) continue;
                    dedges.unite(12 * i + dir_index(v, w), 12 * j + dir_index(p[v], p[w]));
                    if (v < w) edges.unite(6 * i + edge_index(v, w), 6 * j + edge_index(p[v], p[w]));
                }
            }
        }
    }

    Skeleton sk;
    sk.corner_class.assign(static_cast<size_t>(4 * n), -1);
    sk.edge_class.assign(static_cast<size_t>(6 * n), -1);
    sk.face_class.assign(static_cast<size_t>(4 * n), -1);
    sk.directed_edge_rep.assign(static_cast<size_t>(12 * n), -1);

    ClassIndexer vidx(4 * n);
    for (int i = 0; i < n; ++i) {
        for (int v = 0; v < 4; ++v) {
            int c = vidx.assign(corners.find(4 * i + v));
            sk.corner_class[static_cast<size_t>(4 * i + v)] = c;
            if (c == static_cast<int>(sk.vertex_classes.size())) sk.vertex_classes.emplace_back();
            sk.vertex_classes[static_cast<size_t>(c)].push_back(Corner{i, v});
        }
    }

    for (int d = 0; d < 12 * n; ++d) sk.directed_edge_rep[static_cast<size_t>(d)] = dedges.find(d);

    ClassIndexer eidx(6 * n);
    for (int i = 0; i < n; ++i) {
        for (int e = 0; e < 6; ++e) {
            int c = eidx.assign(edges.find(6 * i + e));
            sk.edge_class[static_cast<size_t>(6 * i + e)] = c;
            auto [v0, v1] = kEdgeVerts[static_cast<size_t>(e)];
            if (c == static_cast<int>(sk.edge_classes.size())) {
                sk.edge_classes.emplace_back();
                sk.edge_reversed_self.push_back(
                    dedges.same(12 * i + dir_index(v0, v1), 12 * i + dir_index(v1, v0)) ? 1 : 0);
            }
            sk.edge_classes[static_cast<size_t>(c)].push_back(EdgeMember{i, v0, v1, false});
        }
    }
    // flip flags relative to the canonical (least-member) direction
    for (auto& cls : sk.edge_classes) {
        const EdgeMember& rep = cls.front();
        int canon = sk.directed_edge_rep[static_cast<size_t>(12 * rep.tet + dir_index(rep.v0, rep.v1))];
        for (auto& m : cls)
            m.flipped = sk.directed_edge_rep[static_cast<size_t>(12 * m.tet + dir_index(m.v0, m.v1))] != canon;
    }

    ClassIndexer fidx(4 * n);
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < 4; ++a) {
            int c = fidx.assign(faces.find(4 * i + a));
            sk.face_class[static_cast<size_t>(4 * i + a)] = c;
            bool reversed = false;
            if (c < static_cast<int>(sk.face_classes.size())) {
                // second member: compare against the representative through the
                // gluing permutation, as the parity of the map between
                // ascending vertex orders
                const FaceMember& rep = sk.face_classes[static_cast<size_t>(c)].front();
                const auto& g = t.gluing(rep.tet, rep.face);
                std::array<int, 3> img{};
                int k = 0;
                for (int v = 0; v < 4; ++v)
                    if (v != rep.face) img[static_cast<size_t>(k++)] = g->perm[v];
                int inversions = 0;
                for (int x = 0; x < 3; ++x)
                    for (int y = x + 1; y < 3; ++y)
                        if (img[static_cast<size_t>(x)] > img[static_cast<size_t>(y)]) ++inversions;
                reversed = inversions % 2 == 1;
            } else {
                sk.face_classes.emplace_back();
            }
            sk.face_classes[static_cast<size_t>(c)].push_back(FaceMember{i, a, reversed});
        }
    }

    return sk;
}

bool Skeleton::directed_edge_agrees(int tet, int v, int w) const {
    int c = edge_class_of(tet, v, w);
    const EdgeMember& rep = edge_classes[static_cast<size_t>(c)].front();
    int canon = directed_edge_rep[static_cast<size_t>(12 * rep.tet + dir_index(rep.v0, rep.v1))];
    return directed_edge_rep[static_cast<size_t>(12 * tet + dir_index(v, w))] == canon;
}

namespace {

struct LinkSide {
    int side;  // side index within the link triangle
    int start; // tetrahedron vertex at the side's start corner
    int end;   // tetrahedron vertex at the side's end corner
};

/// Link triangle of corner (tet, v): corners 0,1,2 are the vertices != v in
/// ascending order; the side within face a is the one joining the two corners
/// not equal to a.
LinkSide link_side(int v, int a) {
    std::array<int, 3> xs{};
    int k = 0;
    for (int u = 0; u < 4; ++u)
        if (u != v) xs[static_cast<size_t>(k++)] = u;
    if (a == xs[2]) return LinkSide{0, xs[0], xs[1]};
    if (a == xs[0]) return LinkSide{1, xs[1], xs[2]};
    return LinkSide{2, xs[2], xs[0]};
}

} // namespace

PolygonComplex vertex_link_complex(const Triangulation& t, const Skeleton& sk, int vertex_class) {
    const auto& members = sk.vertex_classes[static_cast<size_t>(vertex_class)];
    std::vector<int> cell_of(static_cast<size_t>(4 * t.tet_count()), -1);
    PolygonComplex pc;
    for (const Corner& c : members) cell_of[static_cast<size_t>(4 * c.tet + c.vertex)] = pc.add_cell(3);

    for (const Corner& c : members) {
        for (int a = 0; a < 4; ++a) {
            if (a == c.vertex) continue;
            const auto& g = t.gluing(c.tet, a);
            if (!g) continue;
            const int j = g->tet;
            const int b = g->face;
            // each unordered face pair once
            if (j < c.tet || (j == c.tet && b < a)) continue;
            LinkSide from = link_side(c.vertex, a);
            LinkSide to = link_side(g->perm[c.vertex], b);
            int other = cell_of[static_cast<size_t>(4 * j + g->perm[c.vertex])];
            pc.glue(PolygonComplex::SideRef{cell_of[static_cast<size_t>(4 * c.tet + c.vertex)], from.side},
                    PolygonComplex::SideRef{other, to.side}, g->perm[from.start] != to.start);
        }
    }
    return pc;
}

ManifoldReport check_closed_3_manifold(const Triangulation& t) {
    return check_closed_3_manifold(t, compute_skeleton(t));
}

ManifoldReport check_closed_3_manifold(const Triangulation& t, const Skeleton& sk) {
    ManifoldReport r;
    for (int i = 0; i < t.tet_count(); ++i)
        for (int a = 0; a < 4; ++a)
            if (!t.gluing(i, a)) r.boundary_faces.emplace_back(i, a);
    r.closed = r.boundary_faces.empty();

    for (int c = 0; c < sk.edge_count(); ++c)
        if (sk.edge_reversed_self[static_cast<size_t>(c)]) r.bad_edge_classes.push_back(c);
    r.edges_valid = r.bad_edge_classes.empty();

    for (int c = 0; c < sk.vertex_count(); ++c) {
        auto an = vertex_link_complex(t, sk, c).analyze();
        bool sphere = an.components.size() == 1 && an.components[0].closed && an.components[0].euler == 2;
        if (!sphere) r.bad_vertex_classes.push_back(c);
    }
    r.links_valid = r.bad_vertex_classes.empty();

    r.is_manifold = r.closed && r.edges_valid && r.links_valid;
    return r;
}

bool is_orientable(const Triangulation& t) {
    const int n = t.tet_count();
    // +1 / -1 once assigned; a gluing relates the two tetrahedra by
    // sigma(j) = -sign(p) * sigma(i): odd permutations preserve orientation
    std::vector<int> sigma(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (sigma[static_cast<size_t>(start)] != 0) continue;
        sigma[static_cast<size_t>(start)] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int a = 0; a < 4; ++a) {
                const auto& g = t.gluing(i, a);
                if (!g) continue;
                int want = -g->perm.sign() * sigma[static_cast<size_t>(i)];
                int& sj = sigma[static_cast<size_t>(g->tet)];
                if (sj == 0) {
                    sj = want;
                    stack.push_back(g->tet);
                } else if (sj != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace crosscap
