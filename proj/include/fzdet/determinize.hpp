#pragma once

// Transition-tree determinizations: A_phi, A^psi (and their special cases
// Nerode / reverse Nerode), the children automaton, Brzozowski-type
// minimal determinization, and a Moore-style CDFA minimizer.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fzdet/automaton.hpp"
#include "fzdet/invariants.hpp"

namespace fzdet {

enum class Construction { phi, psi, children, brzozowski };
// identity is the crisp equality; custom uses DetMethod::relation.
enum class RelationSource { identity, ri, wri, li, wli, custom };

struct DetMethod {
    Construction construction = Construction::phi;
    RelationSource source = RelationSource::identity;
    std::optional<FuzzyRelation> relation;

    static DetMethod nerode() { return {Construction::phi, RelationSource::identity, {}}; }
    static DetMethod reverse_nerode() { return {Construction::psi, RelationSource::identity, {}}; }
    static DetMethod phi(RelationSource s) { return {Construction::phi, s, {}}; }
    static DetMethod psi(RelationSource s) { return {Construction::psi, s, {}}; }
    static DetMethod children(RelationSource s) { return {Construction::children, s, {}}; }
    static DetMethod brzozowski(RelationSource first = RelationSource::identity) {
        return {Construction::brzozowski, first, {}};
    }
    static DetMethod custom(Construction c, FuzzyRelation r) { return {c, RelationSource::custom, std::move(r)}; }

    // Command-line names: nerode, ri, wri, children-nerode, children-ri,
    // children-wri, reverse-nerode, li, wli, brzozowski, brzozowski-li,
    // brzozowski-wli. Custom methods render as "<construction>:custom".
    std::string name() const;
    static DetMethod parse(std::string_view text);
    // Whether the result recognizes the reversed language.
    bool reversed_language() const { return construction == Construction::psi; }

    friend bool operator==(const DetMethod&, const DetMethod&) = default;
};

struct DetResult {
    Cdfa cdfa;
    std::size_t states_created = 0; // tree vertices, closed leaves included
    std::size_t closure_checks = 0; // lookups of a new vector among existing states
    // Budget overruns throw BudgetExceeded, so returned results never set this.
    bool budget_hit = false;
    bool verified = true; // false when relation validation was bypassed
    DetMethod method;
};

struct DetOptions {
    std::size_t max_states = 10000;
    std::size_t max_family = 100000; // used while validating the relation
    bool validate = true;
};

// phi_eps = sigma∘phi, phi_ux = phi_u∘delta_x∘phi.
DetResult determinize_phi(const FuzzyAutomaton& a, const FuzzyRelation& phi, const DetOptions& opts = {});
DetResult nerode(const FuzzyAutomaton& a, std::size_t max_states = 10000);
// psi^eps = psi∘tau, psi^xu = psi∘delta_x∘psi^u. The result
// recognizes the reverse language.
DetResult determinize_psi(const FuzzyAutomaton& a, const FuzzyRelation& psi, const DetOptions& opts = {});
DetResult reverse_nerode(const FuzzyAutomaton& a, std::size_t max_states = 10000);
// Tuples of (successor vectors, terminal degree) of the phi tree, one state per tuple.
DetResult children(const FuzzyAutomaton& a, const FuzzyRelation& phi, const DetOptions& opts = {});
// first_stage: identity (plain double reversal), li or wli.
DetResult brzozowski(const FuzzyAutomaton& a, RelationSource first_stage = RelationSource::identity,
                     const Budget& budget = {});

Cdfa minimize_cdfa(const Cdfa& c);

DetResult run_method(const FuzzyAutomaton& a, const DetMethod& method, const Budget& budget = {});

// Distinct sigma_u (resp. tau_u) vectors in breadth-first discovery order.
// Throws BudgetExceeded("max_family") past max_family vectors.
std::vector<FuzzySet> sigma_family(const FuzzyAutomaton& a, std::size_t max_family);
std::vector<FuzzySet> tau_family(const FuzzyAutomaton& a, std::size_t max_family);

// "x²y" style rendering of a word for state labels.
std::string label_word(const std::vector<std::string>& alphabet, const Word& w);

} // namespace fzdet
