#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace crosscap {

/// A One-in-Three SAT instance: clauses of exactly three literals, where a
/// satisfying assignment makes exactly one literal per clause true. Literals
/// are nonzero signed variable indices (negative = negated), 1-based.
struct SatInstance {
    int variable_count = 0;
    std::vector<std::array<int, 3>> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

/// Text format, one instance per file:
///   p o3sat <variables> <clauses>
/// followed by one line per clause with exactly 3 signed integers.
/// Variables and clauses must both be at least 1.
SatInstance parse_sat(const std::string& text);
std::string serialize_sat(const SatInstance& inst);

/// Number of true literals in the clause under the assignment
/// (assignment[i] is the value of variable i+1).
int clause_true_count(const std::array<int, 3>& clause, const std::vector<bool>& assignment);

/// True iff every clause has exactly one true literal.
bool satisfies_one_in_three(const SatInstance& inst, const std::vector<bool>& assignment);

/// Exhaustive search, first satisfying assignment in counting order with
/// variable 1 as the least significant bit (so the all-false prefix is
/// preferred). Guarded to instances with at most 24 variables.
std::optional<std::vector<bool>> solve_one_in_three(const SatInstance& inst);

} // namespace crosscap
