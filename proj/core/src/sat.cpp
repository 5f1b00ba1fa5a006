#include "crosscap/sat.hpp"

#include <sstream>
#include <stdexcept>

namespace crosscap {

namespace {

[[noreturn]] void sat_fail(int lineno, const std::string& what) {
    throw std::invalid_argument("sat parse error, line " + std::to_string(lineno) + ": " + what);
}

} // namespace

SatInstance parse_sat(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) sat_fail(lineno, "empty input");
    std::istringstream hs(header);
    std::string p, fmt;
    int n = 0, m = 0;
    if (!(hs >> p >> fmt >> n >> m) || p != "p" || fmt != "o3sat")
        sat_fail(lineno, "expected header 'p o3sat <variables> <clauses>'");
    std::string extra;
    if (hs >> extra) sat_fail(lineno, "trailing tokens after header");
    if (n < 1) sat_fail(lineno, "need at least one variable");
    if (m < 1) sat_fail(lineno, "need at least one clause");

    SatInstance inst;
    inst.variable_count = n;
    for (int j = 0; j < m; ++j) {
        std::string body;
        if (!next_line(body)) sat_fail(lineno, "missing clause " + std::to_string(j + 1));
        std::istringstream cs(body);
        std::array<int, 3> clause{};
        for (int s = 0; s < 3; ++s) {
            if (!(cs >> clause[s]))
                sat_fail(lineno, "clause must have exactly 3 literals");
            if (clause[s] == 0) sat_fail(lineno, "literal 0 is not allowed");
            if (clause[s] > n || clause[s] < -n)
                sat_fail(lineno, "variable index " + std::to_string(clause[s]) + " out of range");
        }
        if (cs >> extra) sat_fail(lineno, "clause must have exactly 3 literals");
        inst.clauses.push_back(clause);
    }
    std::string rest;
    if (next_line(rest)) sat_fail(lineno, "trailing content after last clause");
    return inst;
}

std::string serialize_sat(const SatInstance& inst) {
    std::ostringstream out;
    out << "p o3sat " << inst.variable_count << " " << inst.clause_count() << "\n";
    for (const auto& c : inst.clauses) out << c[0] << " " << c[1] << " " << c[2] << "\n";
    return out.str();
}

int clause_true_count(const std::array<int, 3>& clause, const std::vector<bool>& assignment) {
    int count = 0;
    for (int lit : clause) {
        bool value = assignment[static_cast<size_t>(std::abs(lit)) - 1];
        if (lit < 0) value = !value;
        if (value) ++count;
    }
    return count;
}

bool satisfies_one_in_three(const SatInstance& inst, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != inst.variable_count)
        throw std::invalid_argument("assignment length does not match variable count");
    for (const auto& c : inst.clauses)
        if (clause_true_count(c, assignment) != 1) return false;
    return true;
}

std::optional<std::vector<bool>> solve_one_in_three(const SatInstance& inst) {
    const int n = inst.variable_count;
    if (n > 24) throw std::invalid_argument("brute-force solver is limited to 24 variables");
    std::vector<bool> assignment(static_cast<size_t>(n));
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        for (int i = 0; i < n; ++i) assignment[static_cast<size_t>(i)] = (mask >> i) & 1u;
        if (satisfies_one_in_three(inst, assignment)) return assignment;
    }
    return std::nullopt;
}

} // namespace crosscap
