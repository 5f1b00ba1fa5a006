#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "crosscap/permutation.hpp"
#include "crosscap/triangulation.hpp"

using namespace crosscap;

namespace {

std::vector<Perm4> all_perms() {
    std::array<int, 4> d{0, 1, 2, 3};
    std::vector<Perm4> out;
    do {
        std::string s;
        for (int x : d) s += static_cast<char>('0' + x);
        out.push_back(Perm4::from_digits(s));
    } while (std::next_permutation(d.begin(), d.end()));
    return out;
}

} // namespace

TEST_CASE("Perm4 composition, inverse and sign over the whole group") {
    auto perms = all_perms();
    REQUIRE(perms.size() == 24);

    for (const auto& p : perms) {
        CHECK(p.after(Perm4::identity()) == p);
        CHECK(Perm4::identity().after(p) == p);
        CHECK(p.after(p.inverse()) == Perm4::identity());
        CHECK(p.inverse().after(p) == Perm4::identity());
        CHECK(p.inverse().sign() == p.sign());
    }
    for (const auto& p : perms) {
        for (const auto& q : perms) {
            const Perm4 pq = p.after(q);
            for (int x = 0; x < 4; ++x) CHECK(pq[x] == p[q[x]]);
            CHECK(pq.sign() == p.sign() * q.sign());
        }
    }

    int even = 0;
    for (const auto& p : perms)
        if (p.sign() == 1) ++even;
    CHECK(even == 12);

    CHECK(Perm4::from_digits("1032").sign() == 1);  // two transpositions
    CHECK(Perm4::from_digits("0132").sign() == -1); // one transposition
    CHECK_THROWS_AS(Perm4::from_digits("0123x"), std::invalid_argument);
    CHECK_THROWS_AS(Perm4::from_digits("0112"), std::invalid_argument);
    CHECK_THROWS_AS(Perm4::from_digits("012"), std::invalid_argument);
    CHECK_THROWS_AS(Perm4::from_digits("0124"), std::invalid_argument);
}

TEST_CASE("gluing bookkeeping") {
    Triangulation t(2);
    CHECK(t.tet_count() == 2);
    CHECK(t.boundary_face_count() == 8);
    CHECK_FALSE(t.is_closed());

    t.set_gluing(0, 0, 1, Perm4::from_digits("1023"));
    // face 0 of tet 0 -> face p[0] = 1 of tet 1
    REQUIRE(t.gluing(0, 0).has_value());
    CHECK(t.gluing(0, 0)->tet == 1);
    CHECK(t.gluing(0, 0)->face == 1);
    REQUIRE(t.gluing(1, 1).has_value());
    CHECK(t.gluing(1, 1)->tet == 0);
    CHECK(t.gluing(1, 1)->face == 0);
    CHECK(t.gluing(1, 1)->perm == Perm4::from_digits("1023").inverse());
    CHECK(t.boundary_face_count() == 6);
    CHECK(t.validate().empty());

    CHECK_THROWS_AS(t.set_gluing(0, 0, 1, Perm4::identity()), std::invalid_argument);
    CHECK_THROWS_AS(t.set_gluing(1, 0, 1, Perm4::identity()), std::invalid_argument);
    CHECK_THROWS_AS(t.set_gluing(0, 1, 2, Perm4::identity()), std::invalid_argument);

    t.clear_gluing(1, 1);
    CHECK_FALSE(t.gluing(0, 0).has_value());
    CHECK(t.boundary_face_count() == 8);

    // a tetrahedron may glue to itself through two distinct faces
    t.set_gluing(0, 0, 0, Perm4::from_digits("1023"));
    CHECK(t.gluing(0, 0)->face == 1);
    CHECK(t.gluing(0, 1)->face == 0);
    CHECK(t.validate().empty());
}

TEST_CASE("doubling a one-tetrahedron ball") {
    Triangulation ball(1);
    Triangulation d = double_triangulation(ball);
    CHECK(d.tet_count() == 2);
    CHECK(d.is_closed());
    CHECK(d.validate().empty());
    for (int a = 0; a < 4; ++a) {
        REQUIRE(d.gluing(0, a).has_value());
        CHECK(d.gluing(0, a)->tet == 1);
        CHECK(d.gluing(0, a)->perm == Perm4::identity());
    }
    CHECK_THROWS_AS(double_triangulation(d), std::invalid_argument);
}

TEST_CASE("doubling keeps interior gluings in both halves") {
    Triangulation t(2);
    t.set_gluing(0, 2, 1, Perm4::from_digits("0132")); // interior: face 2 of tet 0 to face 3 of tet 1
    Triangulation d = double_triangulation(t);
    CHECK(d.tet_count() == 4);
    CHECK(d.is_closed());
    CHECK(d.validate().empty());

    REQUIRE(d.gluing(0, 2).has_value());
    CHECK(d.gluing(0, 2)->tet == 1);
    REQUIRE(d.gluing(2, 2).has_value());
    CHECK(d.gluing(2, 2)->tet == 3);
    CHECK(d.gluing(2, 2)->perm == Perm4::from_digits("0132"));

    // the 6 boundary faces mirror to the copy with the identity
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 4; ++a)
            if (!t.gluing(i, a)) {
                REQUIRE(d.gluing(i, a).has_value());
                CHECK(d.gluing(i, a)->tet == i + 2);
                CHECK(d.gluing(i, a)->face == a);
                CHECK(d.gluing(i, a)->perm == Perm4::identity());
            }
}

TEST_CASE("serialize and parse round-trip") {
    Triangulation t(3);
    t.set_gluing(0, 0, 1, Perm4::from_digits("2103"));
    t.set_gluing(1, 1, 2, Perm4::from_digits("0321"));
    t.set_gluing(2, 2, 0, Perm4::from_digits("3012"));

    std::string text = serialize_triangulation(t);
    Triangulation back = parse_triangulation(text);
    CHECK(back == t);
    CHECK(serialize_triangulation(back) == text);
}

TEST_CASE("parsing a handwritten description") {
    // doubled one-tetrahedron ball
    std::string text = "tri 2\n"
                       "1:0123 1:0123 1:0123 1:0123\n"
                       "0:0123 0:0123 0:0123 0:0123\n";
    Triangulation t = parse_triangulation(text);
    CHECK(t.tet_count() == 2);
    CHECK(t.is_closed());
    CHECK(t == double_triangulation(Triangulation(1)));

    CHECK(parse_triangulation("tri 0\n").tet_count() == 0);
    CHECK(parse_triangulation("tri 1\n- - - -\n").boundary_face_count() == 4);
}

TEST_CASE("parse errors carry line numbers and reasons") {
    auto fails = [](const std::string& text, const std::string& needle) {
        try {
            parse_triangulation(text);
        } catch (const std::exception& e) {
            INFO("message: ", e.what());
            return std::string(e.what()).find(needle) != std::string::npos;
        }
        return false;
    };

    CHECK(fails("", "empty input"));
    CHECK(fails("hdr 1\n- - - -\n", "expected header"));
    CHECK(fails("tri 2\n- - - -\n", "missing line for tetrahedron 1"));
    CHECK(fails("tri 1\n- - -\n", "expected 4 entries"));
    CHECK(fails("tri 1\n- - - - -\n", "trailing tokens"));
    CHECK(fails("tri 1\n- - - -\nleftover\n", "trailing content"));
    CHECK(fails("tri 1\n- - - 0:0123\n", "glue a face to itself"));
    CHECK(fails("tri 2\n1:0123 - - -\n- - - -\n", "one-sided"));
    CHECK(fails("tri 2\n1:0123 - - -\n0:1023 - - -\n", "mirror"));
    CHECK(fails("tri 1\n- x - -\n", "malformed entry"));
    CHECK(fails("tri 1\n- 9:0123 - -\n", "out of range"));
    CHECK(fails("tri 1\n- 0:0103 - -\n", "not a permutation"));
    CHECK(fails("tri 1\nline 2", "line 2"));
}
