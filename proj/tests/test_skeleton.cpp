#include "doctest.h"

#include <array>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "crosscap/skeleton.hpp"
#include "crosscap/triangulation.hpp"
#include "json.hpp"
#include "support/census.hpp"

using namespace crosscap;

// ------------------------------------------------------------------------
// Reference partitions, computed with ordered containers and breadth-first
// search instead of the library's union-find. Deliberately unshared code.
// ------------------------------------------------------------------------

namespace {

using Node = std::array<int, 3>;
using Partition = std::set<std::set<Node>>;

Partition components(const std::set<Node>& nodes, const std::map<Node, std::vector<Node>>& adj) {
    Partition parts;
    std::set<Node> seen;
    for (const Node& start : nodes) {
        if (seen.count(start)) continue;
        std::set<Node> comp;
        std::vector<Node> queue{start};
        while (!queue.empty()) {
            Node x = queue.back();
            queue.pop_back();
            if (!comp.insert(x).second) continue;
            auto it = adj.find(x);
            if (it != adj.end()) queue.insert(queue.end(), it->second.begin(), it->second.end());
        }
        seen.insert(comp.begin(), comp.end());
        parts.insert(std::move(comp));
    }
    return parts;
}

struct NaiveSkeleton {
    Partition vertices;  // {tet, v, -1}
    Partition edges;     // {tet, v0, v1} with v0 < v1
    Partition directed;  // {tet, v, w}
    Partition faces;     // {tet, a, -1}
};

NaiveSkeleton naive_skeleton(const Triangulation& t) {
    std::set<Node> corners, uedges, dedges, faces;
    for (int i = 0; i < t.tet_count(); ++i) {
        for (int v = 0; v < 4; ++v) {
            corners.insert({i, v, -1});
            faces.insert({i, v, -1});
            for (int w = 0; w < 4; ++w) {
                if (v == w) continue;
                dedges.insert({i, v, w});
                if (v < w) uedges.insert({i, v, w});
            }
        }
    }

    std::map<Node, std::vector<Node>> adj_c, adj_u, adj_d, adj_f;
    auto link = [](std::map<Node, std::vector<Node>>& adj, Node a, Node b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int i = 0; i < t.tet_count(); ++i) {
        for (int a = 0; a < 4; ++a) {
            const auto& g = t.gluing(i, a);
            if (!g) continue;
            const int j = g->tet;
            const Perm4& p = g->perm;
            link(adj_f, {i, a, -1}, {j, p[a], -1});
            for (int v = 0; v < 4; ++v) {
                if (v == a) continue;
                link(adj_c, {i, v, -1}, {j, p[v], -1});
                for (int w = 0; w < 4; ++w) {
                    if (w == a || w == v) continue;
                    link(adj_d, {i, v, w}, {j, p[v], p[w]});
                    if (v < w)
                        link(adj_u, {i, v, w}, {j, std::min(p[v], p[w]), std::max(p[v], p[w])});
                }
            }
        }
    }

    return NaiveSkeleton{components(corners, adj_c), components(uedges, adj_u),
                         components(dedges, adj_d), components(faces, adj_f)};
}

Partition library_vertex_partition(const Skeleton& sk) {
    Partition out;
    for (const auto& cls : sk.vertex_classes) {
        std::set<Node> s;
        for (const Corner& c : cls) s.insert({c.tet, c.vertex, -1});
        out.insert(std::move(s));
    }
    return out;
}

Partition library_edge_partition(const Skeleton& sk) {
    Partition out;
    for (const auto& cls : sk.edge_classes) {
        std::set<Node> s;
        for (const EdgeMember& m : cls) s.insert({m.tet, m.v0, m.v1});
        out.insert(std::move(s));
    }
    return out;
}

Partition library_face_partition(const Skeleton& sk) {
    Partition out;
    for (const auto& cls : sk.face_classes) {
        std::set<Node> s;
        for (const FaceMember& m : cls) s.insert({m.tet, m.face, -1});
        out.insert(std::move(s));
    }
    return out;
}

/// Full agreement between the library skeleton and the reference partitions,
/// including direction flags.
void check_against_reference(const Triangulation& t) {
    Skeleton sk = compute_skeleton(t);
    NaiveSkeleton ref = naive_skeleton(t);

    CHECK(library_vertex_partition(sk) == ref.vertices);
    CHECK(library_edge_partition(sk) == ref.edges);
    CHECK(library_face_partition(sk) == ref.faces);

    std::map<Node, const std::set<Node>*> dclass;
    for (const auto& cls : ref.directed)
        for (const Node& d : cls) dclass[d] = &cls;

    for (size_t c = 0; c < sk.edge_classes.size(); ++c) {
        const auto& cls = sk.edge_classes[c];
        const EdgeMember& rep = cls.front();
        CHECK_FALSE(rep.flipped);
        // reversed-self flag: both directions of a member in one orbit
        bool reversed = dclass[{rep.tet, rep.v0, rep.v1}] == dclass[{rep.tet, rep.v1, rep.v0}];
        CHECK(static_cast<bool>(sk.edge_reversed_self[c]) == reversed);
        for (const EdgeMember& m : cls) {
            bool agrees = dclass[{m.tet, m.v0, m.v1}] == dclass[{rep.tet, rep.v0, rep.v1}];
            CHECK(m.flipped == !agrees);
            CHECK(sk.directed_edge_agrees(m.tet, m.v0, m.v1) == agrees);
            CHECK(sk.directed_edge_agrees(m.tet, m.v1, m.v0) ==
                  (dclass[{m.tet, m.v1, m.v0}] == dclass[{rep.tet, rep.v0, rep.v1}]));
        }
    }

    // lookup tables agree with the member lists
    for (size_t c = 0; c < sk.vertex_classes.size(); ++c)
        for (const Corner& m : sk.vertex_classes[c])
            CHECK(sk.vertex_class_of(m.tet, m.vertex) == static_cast<int>(c));
    for (size_t c = 0; c < sk.edge_classes.size(); ++c)
        for (const EdgeMember& m : sk.edge_classes[c])
            CHECK(sk.edge_class_of(m.tet, m.v0, m.v1) == static_cast<int>(c));
    for (size_t c = 0; c < sk.face_classes.size(); ++c)
        for (const FaceMember& m : sk.face_classes[c])
            CHECK(sk.face_class_of(m.tet, m.face) == static_cast<int>(c));
}

nlohmann::json load_expected() {
    std::ifstream in(std::string(CROSSCAP_TEST_DATA_DIR) + "/expected.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

} // namespace

TEST_CASE("edge index tables") {
    for (int e = 0; e < 6; ++e) {
        auto [v, w] = edge_vertices(e);
        CHECK(edge_index(v, w) == e);
        CHECK(edge_index(w, v) == e);
    }
    CHECK_THROWS_AS(edge_index(1, 1), std::invalid_argument);
}

TEST_CASE("skeleton of the lone tetrahedron") {
    Triangulation t(1);
    Skeleton sk = compute_skeleton(t);
    CHECK(sk.vertex_count() == 4);
    CHECK(sk.edge_count() == 6);
    CHECK(sk.face_count() == 4);
    CHECK(sk.euler_characteristic(1) == 1); // a ball
    check_against_reference(t);

    // each vertex link is one lone triangle: a disk
    for (int c = 0; c < 4; ++c) {
        auto an = vertex_link_complex(t, sk, c).analyze();
        REQUIRE(an.components.size() == 1);
        CHECK(an.components[0].euler == 1);
        CHECK_FALSE(an.components[0].closed);
        CHECK(an.components[0].boundary_cycles == 1);
    }

    ManifoldReport r = check_closed_3_manifold(t);
    CHECK_FALSE(r.closed);
    CHECK(r.edges_valid);
    CHECK_FALSE(r.links_valid);
    CHECK_FALSE(r.is_manifold);
    CHECK(r.boundary_faces.size() == 4);
}

TEST_CASE("doubled ball is a closed manifold with sphere links") {
    Triangulation d = double_triangulation(Triangulation(1));
    Skeleton sk = compute_skeleton(d);
    CHECK(sk.vertex_count() == 4);
    CHECK(sk.edge_count() == 6);
    CHECK(sk.face_count() == 4);
    CHECK(sk.euler_characteristic(2) == 0);
    check_against_reference(d);

    for (int c = 0; c < sk.vertex_count(); ++c) {
        auto an = vertex_link_complex(d, sk, c).analyze();
        REQUIRE(an.components.size() == 1);
        CHECK(an.components[0].closed);
        CHECK(an.components[0].euler == 2);
        CHECK(an.components[0].orientable);
    }

    ManifoldReport r = check_closed_3_manifold(d);
    CHECK(r.is_manifold);
    CHECK(is_orientable(d));
}

TEST_CASE("a gluing that reverses an edge is flagged") {
    // face 0 -> face 1 of the same tetrahedron via 1032: the directed edge
    // 2->3 maps to 3->2, so the edge {2,3} is identified with its reversal
    Triangulation t(1);
    t.set_gluing(0, 0, 0, Perm4::from_digits("1032"));
    check_against_reference(t);

    Skeleton sk = compute_skeleton(t);
    ManifoldReport r = check_closed_3_manifold(t, sk);
    CHECK_FALSE(r.edges_valid);
    REQUIRE(r.bad_edge_classes.size() >= 1);
    for (int c : r.bad_edge_classes) CHECK(sk.edge_reversed_self[static_cast<size_t>(c)] == 1);
    CHECK_FALSE(r.is_manifold);
}

TEST_CASE("orientation double cover sign rule") {
    // identity gluings (even) force opposite signs: consistent for the double
    Triangulation d = double_triangulation(Triangulation(1));
    CHECK(is_orientable(d));

    // two gluings between the same pair of tets with conflicting parities
    Triangulation t(2);
    t.set_gluing(0, 0, 1, Perm4::from_digits("0123")); // even: sigma(1) = -sigma(0)
    t.set_gluing(0, 1, 1, Perm4::from_digits("0132")); // odd:  sigma(1) = +sigma(0)
    CHECK_FALSE(is_orientable(t));
}

TEST_CASE("reference comparison across the one-tetrahedron census") {
    int total = 0;
    crosscap_tests::for_each_closed_candidate(1, [&](const Triangulation& t) {
        ++total;
        check_against_reference(t);
        CHECK(t.is_closed());
        CHECK(t.validate().empty());
    });
    CHECK(total == 108);
}

TEST_CASE("reference comparison across sampled two-tetrahedron candidates") {
    int total = 0;
    crosscap_tests::for_each_closed_candidate(2, [&](const Triangulation& t) {
        if (total++ % 293 != 0) return;
        check_against_reference(t);
    });
    CHECK(total == 136080);
}

TEST_CASE("census classification counts match the frozen reference") {
    nlohmann::json expected = load_expected();

    for (int n : {1, 2}) {
        const auto& e = expected["census"][n == 1 ? "tets1" : "tets2"];
        int total = 0, edges_valid = 0, manifolds = 0, orientable_manifolds = 0;
        std::set<std::string> manifold_strings;
        crosscap_tests::for_each_closed_candidate(n, [&](const Triangulation& t) {
            ++total;
            Skeleton sk = compute_skeleton(t);
            ManifoldReport r = check_closed_3_manifold(t, sk);
            if (r.edges_valid) ++edges_valid;
            if (r.is_manifold) {
                ++manifolds;
                if (is_orientable(t)) ++orientable_manifolds;
                if (n == 1) manifold_strings.insert(serialize_triangulation(t));
            }
            // every closed manifold triangulation is Euler characteristic 0
            if (r.is_manifold) CHECK(sk.euler_characteristic(n) == 0);
        });
        CHECK(total == e["candidates"].get<int>());
        CHECK(edges_valid == e["edges_valid"].get<int>());
        CHECK(manifolds == e["manifolds"].get<int>());
        CHECK(orientable_manifolds == e["orientable_manifolds"].get<int>());
        if (n == 1) {
            std::set<std::string> want;
            for (const auto& s : e["manifold_strings"]) want.insert(s.get<std::string>());
            CHECK(manifold_strings == want);
        }
    }
}

TEST_CASE("frozen reference cases: classification") {
    nlohmann::json expected = load_expected();
    for (const auto& [name, e] : expected["cases"].items()) {
        INFO("case ", name);
        Triangulation t = parse_triangulation(e["input"].get<std::string>());
        Skeleton sk = compute_skeleton(t);
        CHECK(t.tet_count() == e["tets"].get<int>());
        CHECK(t.is_closed() == e["closed"].get<bool>());
        CHECK(sk.vertex_count() == e["vertices"].get<int>());
        CHECK(sk.edge_count() == e["edges"].get<int>());
        CHECK(sk.face_count() == e["faces"].get<int>());
        CHECK(sk.euler_characteristic(t.tet_count()) == e["euler"].get<long long>());
        ManifoldReport r = check_closed_3_manifold(t, sk);
        CHECK(r.edges_valid == e["edges_valid"].get<bool>());
        CHECK(r.is_manifold == e["manifold"].get<bool>());
        CHECK(is_orientable(t) == e["orientable"].get<bool>());
        check_against_reference(t);

        if (e.contains("predouble_input")) {
            Triangulation pre = parse_triangulation(e["predouble_input"].get<std::string>());
            CHECK(double_triangulation(pre) == t);
        }
    }
}
