#pragma once

// Fuzzy automata and crisp-deterministic fuzzy automata (CDFA).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fzdet/fuzzrel.hpp"

namespace fzdet {

// Symbol indices into an alphabet; the empty word is the empty vector.
using Word = std::vector<std::size_t>;

// All words over m symbols of length <= maxlen, length first then lexicographic.
std::vector<Word> words_up_to(std::size_t m, std::size_t maxlen);

// Accepts "x y", "x,y", "xy" (greedy longest match on symbol names), and
// "" / "eps" / "ε" for the empty word. Throws unknown_symbol.
Word parse_word(const std::vector<std::string>& alphabet, std::string_view text);
std::string word_to_string(const std::vector<std::string>& alphabet, const Word& w);
Word reversed(Word w);

struct Violation {
    ErrorCode code;
    std::string message;
};

struct FuzzyAutomaton {
    Lattice lattice;
    std::vector<std::string> alphabet;
    FuzzySet sigma;
    std::vector<FuzzyRelation> delta; // delta[x] for alphabet[x]
    FuzzySet tau;
    std::vector<std::string> state_names; // empty, or one per state

    std::size_t size() const noexcept { return sigma.size(); }
    std::size_t symbol_index(std::string_view symbol) const;
    const FuzzyRelation& delta_of(std::string_view symbol) const { return delta[symbol_index(symbol)]; }
    Word word(std::string_view text) const { return parse_word(alphabet, text); }
    std::string state_name(std::size_t i) const;

    friend bool operator==(const FuzzyAutomaton&, const FuzzyAutomaton&) = default;
};

std::vector<Violation> validate(const FuzzyAutomaton& a);
// Throws Error(invalid_automaton, ...) listing every violation; the code of
// a single violation is kept when there is exactly one.
void require_valid(const FuzzyAutomaton& a);

FuzzyRelation delta_word(const FuzzyAutomaton& a, const Word& u);
FuzzySet sigma_u(const FuzzyAutomaton& a, const Word& u);
FuzzySet tau_u(const FuzzyAutomaton& a, const Word& u);
TruthValue language_degree(const FuzzyAutomaton& a, const Word& u);

FuzzyAutomaton reverse(const FuzzyAutomaton& a);

// States are the distinct rows of phi, each represented by its smallest
// index. Throws not_quasi_order.
FuzzyAutomaton afterset_automaton(const FuzzyAutomaton& a, const FuzzyRelation& phi);

struct Cdfa {
    Lattice lattice;
    std::vector<std::string> alphabet;
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> next; // next[state][symbol]
    std::size_t initial = 0;
    std::vector<TruthValue> term;
    // Vector that defined each state (for children automata: the vector of
    // the first tree vertex carrying the tuple) and the first word reaching it.
    std::vector<FuzzySet> provenance;
    std::vector<Word> witness;

    std::size_t size() const noexcept { return next.size(); }

    friend bool operator==(const Cdfa&, const Cdfa&) = default;
};

// Totality, initial in range, every state reachable.
std::vector<Violation> validate(const Cdfa& c);
TruthValue cdfa_eval(const Cdfa& c, const Word& u);
bool cdfa_isomorphic(const Cdfa& c1, const Cdfa& c2);

// Crisp transitions, sigma = indicator of the initial state, tau = term.
FuzzyAutomaton to_fuzzy_automaton(const Cdfa& c);

} // namespace fzdet
