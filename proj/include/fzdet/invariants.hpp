#pragma once

// Greatest (weakly) right/left invariant fuzzy quasi-orders and the
// corresponding membership checks.

#include <cstddef>
#include <functional>
#include <string_view>

#include "fzdet/automaton.hpp"

namespace fzdet {

struct Budget {
    std::size_t max_iterations = 10000;
    std::size_t max_family = 100000; // distinct sigma_u / tau_u vectors
    std::size_t max_states = 10000;  // distinct vectors in a determinization

    // Throws Error(semantic_error) if any limit is zero.
    void check() const;
};

enum class InvariantClass { ri, li, wri, wli };

std::string_view to_string(InvariantClass c);
InvariantClass parse_invariant_class(std::string_view text);

struct QuasiOrderReport {
    FuzzyRelation relation;
    bool reflexive = false;
    bool transitive = false;
    InvariantClass class_checked = InvariantClass::ri;
    bool holds = false;
    std::size_t iterations_used = 0; // fixpoint constructions: index s with phi_{s+1} = phi_s
    std::size_t family_size = 0;     // weak constructions: number of distinct vectors
};

// Called with (k, phi_k) for every iterate, starting at k = 1.
using IterateObserver = std::function<void(std::size_t, const FuzzyRelation&)>;

QuasiOrderReport greatest_right_invariant(const FuzzyAutomaton& a, const Budget& budget = {},
                                          const IterateObserver& observe = {});
QuasiOrderReport greatest_left_invariant(const FuzzyAutomaton& a, const Budget& budget = {},
                                         const IterateObserver& observe = {});
QuasiOrderReport greatest_weakly_right_invariant(const FuzzyAutomaton& a, const Budget& budget = {});
QuasiOrderReport greatest_weakly_left_invariant(const FuzzyAutomaton& a, const Budget& budget = {});
QuasiOrderReport greatest_quasi_order(const FuzzyAutomaton& a, InvariantClass c, const Budget& budget = {});

bool check_right_invariant(const FuzzyAutomaton& a, const FuzzyRelation& phi);
bool check_left_invariant(const FuzzyAutomaton& a, const FuzzyRelation& psi);
// Non-reflexive relations are rejected before the family is enumerated.
bool check_weakly_right_invariant(const FuzzyAutomaton& a, const FuzzyRelation& phi, const Budget& budget = {});
bool check_weakly_left_invariant(const FuzzyAutomaton& a, const FuzzyRelation& psi, const Budget& budget = {});
bool check_invariant(const FuzzyAutomaton& a, const FuzzyRelation& rel, InvariantClass c, const Budget& budget = {});

} // namespace fzdet
