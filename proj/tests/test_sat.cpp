#include "doctest.h"

#include <fstream>
#include <random>
#include <string>

#include "crosscap/sat.hpp"
#include "json.hpp"

using namespace crosscap;

namespace {

nlohmann::json load_expected() {
    std::ifstream in(std::string(CROSSCAP_TEST_DATA_DIR) + "/expected.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

std::string bits_of(const std::vector<bool>& assignment) {
    std::string s;
    for (bool b : assignment) s += b ? '1' : '0';
    return s;
}

} // namespace

TEST_CASE("sat parsing accepts the documented format") {
    SatInstance inst = parse_sat("p o3sat 3 2\n1 -2 3\n-1 2 2\n");
    CHECK(inst.variable_count == 3);
    CHECK(inst.clause_count() == 2);
    CHECK(inst.clauses[0] == std::array<int, 3>{1, -2, 3});
    CHECK(inst.clauses[1] == std::array<int, 3>{-1, 2, 2});

    SUBCASE("blank lines and odd spacing are tolerated") {
        SatInstance same = parse_sat("\n  p o3sat 3 2\n\n 1  -2 3\n\n-1 2 2\n\n");
        CHECK(serialize_sat(same) == serialize_sat(inst));
    }
}

TEST_CASE("sat parse errors name the offending line") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse_sat(text);
            FAIL_CHECK("expected parse failure for: " << text);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    fails_with("", "empty input");
    fails_with("p cnf 2 1\n1 2 2\n", "expected header");
    fails_with("p o3sat 2 1 extra\n1 2 2\n", "trailing tokens");
    fails_with("p o3sat 0 1\n1 1 1\n", "at least one variable");
    fails_with("p o3sat 2 0\n", "at least one clause");
    fails_with("p o3sat 2 2\n1 2 2\n", "missing clause 2");
    fails_with("p o3sat 2 1\n1 2\n", "exactly 3 literals");
    fails_with("p o3sat 2 1\n1 2 2 1\n", "exactly 3 literals");
    fails_with("p o3sat 2 1\n1 0 2\n", "literal 0");
    fails_with("p o3sat 2 1\n1 3 2\n", "out of range");
    fails_with("p o3sat 2 1\n1 2 2\n1 1 1\n", "trailing content");
}

TEST_CASE("one-in-three semantics count repeated literals with multiplicity") {
    SatInstance inst = parse_sat("p o3sat 2 1\n1 2 2\n");
    CHECK(satisfies_one_in_three(inst, {true, false}));
    CHECK_FALSE(satisfies_one_in_three(inst, {false, true}));  // two true literals
    CHECK_FALSE(satisfies_one_in_three(inst, {true, true}));   // three
    CHECK_FALSE(satisfies_one_in_three(inst, {false, false})); // zero

    CHECK_THROWS_AS((void)satisfies_one_in_three(inst, {true}), std::invalid_argument);
}

TEST_CASE("brute-force solver returns the first assignment in counting order") {
    // variable 1 is the least significant bit of the counting order
    auto a = solve_one_in_three(parse_sat("p o3sat 3 1\n1 2 3\n"));
    REQUIRE(a.has_value());
    CHECK(bits_of(*a) == "100");

    CHECK_FALSE(solve_one_in_three(parse_sat("p o3sat 1 1\n1 1 1\n")).has_value());

    auto b = solve_one_in_three(parse_sat("p o3sat 1 1\n1 1 -1\n"));
    REQUIRE(b.has_value());
    CHECK(bits_of(*b) == "0");
}

TEST_CASE("solver agrees with the reference verdicts") {
    auto expected = load_expected();
    int satisfiable = 0;
    for (const auto& entry : expected["sat"]) {
        SatInstance inst = parse_sat(entry["text"].get<std::string>());
        auto found = solve_one_in_three(inst);
        CHECK(found.has_value() == entry["satisfiable"].get<bool>());
        if (found) {
            ++satisfiable;
            CHECK(satisfies_one_in_three(inst, *found));
            CHECK(bits_of(*found) == entry["assignment"].get<std::string>());
        }
        if (entry["solution_count"].get<int>() > 0) CHECK(found.has_value());
    }
    CHECK(satisfiable > 3); // the reference suite exercises both verdicts
}

TEST_CASE("serialize then parse is the identity on random instances") {
    std::mt19937 rng(404);
    for (int round = 0; round < 120; ++round) {
        SatInstance inst;
        inst.variable_count = 1 + static_cast<int>(rng() % 9);
        int m = 1 + static_cast<int>(rng() % 9);
        for (int j = 0; j < m; ++j) {
            std::array<int, 3> clause;
            for (int& lit : clause) {
                lit = 1 + static_cast<int>(rng() % inst.variable_count);
                if (rng() % 2) lit = -lit;
            }
            inst.clauses.push_back(clause);
        }

        std::string text = serialize_sat(inst);
        SatInstance back = parse_sat(text);
        CHECK(back.variable_count == inst.variable_count);
        CHECK(back.clauses == inst.clauses);
        CHECK(serialize_sat(back) == text);
    }
}

TEST_CASE("solver rejects oversized instances instead of spinning") {
    SatInstance inst;
    inst.variable_count = 25;
    inst.clauses.push_back({1, 2, 3});
    CHECK_THROWS_AS((void)solve_one_in_three(inst), std::invalid_argument);
}
