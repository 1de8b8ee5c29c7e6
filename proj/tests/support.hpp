#pragma once

// Shared test helpers: fixture loading, brute-force oracles and a seeded
// random automaton generator. The oracles deliberately avoid the library's
// composition code.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fzdet/determinize.hpp"
#include "fzdet/io.hpp"

namespace fzt {

using namespace fzdet;

inline FuzzyAutomaton fixture(const std::string& name) {
    return load_automaton(std::string(FZDET_FIXTURES) + "/" + name + ".fza");
}

inline FuzzyRelation rel(const Lattice& l, const std::vector<std::vector<std::string>>& rows) {
    return FuzzyRelation::parse(l, rows);
}

inline FuzzySet set(const Lattice& l, const std::vector<std::string>& values) {
    return FuzzySet::parse(l, values);
}

// Degree of u as the supremum over all state paths of
// sigma(q0) ⊗ delta(q0,q1) ⊗ ... ⊗ tau(qk).
inline TruthValue path_degree(const FuzzyAutomaton& a, const Word& u) {
    const Lattice& l = a.lattice;
    const std::size_t n = a.size();
    TruthValue best = l.zero();
    std::vector<std::size_t> path(u.size() + 1, 0);
    for (;;) {
        TruthValue v = a.sigma[path[0]];
        for (std::size_t i = 0; i < u.size(); ++i) v = l.tensor(v, a.delta[u[i]](path[i], path[i + 1]));
        v = l.tensor(v, a.tau[path.back()]);
        best = l.join(best, v);
        std::size_t k = 0;
        while (k < path.size() && ++path[k] == n) path[k++] = 0;
        if (k == path.size()) break;
    }
    return best;
}

// Entry (i,j) of delta_u as the supremum over paths from i to j.
inline TruthValue path_relation(const FuzzyAutomaton& a, const Word& u, std::size_t i, std::size_t j) {
    const Lattice& l = a.lattice;
    if (u.empty()) return i == j ? l.one() : l.zero();
    const std::size_t n = a.size();
    TruthValue best = l.zero();
    std::vector<std::size_t> mid(u.size() - 1, 0);
    for (;;) {
        std::size_t prev = i;
        TruthValue v = l.one();
        for (std::size_t s = 0; s < u.size(); ++s) {
            std::size_t nxt = s + 1 < u.size() ? mid[s] : j;
            v = l.tensor(v, a.delta[u[s]](prev, nxt));
            prev = nxt;
        }
        best = l.join(best, v);
        std::size_t k = 0;
        while (k < mid.size() && ++mid[k] == n) mid[k++] = 0;
        if (k == mid.size()) break;
    }
    return best;
}

// Degrees of every word of words_up_to(m, maxlen), in that order, by
// extending prefix vectors with hand-written sup/tensor loops.
inline std::vector<TruthValue> all_degrees(const FuzzyAutomaton& a, std::size_t maxlen) {
    const Lattice& l = a.lattice;
    const std::size_t n = a.size(), m = a.alphabet.size();
    std::vector<std::vector<TruthValue>> prefix{a.sigma.values()};
    std::vector<std::size_t> length{0};
    std::vector<TruthValue> out;
    for (std::size_t idx = 0; idx < prefix.size(); ++idx) {
        TruthValue d = l.zero();
        for (std::size_t q = 0; q < n; ++q) d = l.join(d, l.tensor(prefix[idx][q], a.tau[q]));
        out.push_back(d);
        if (length[idx] == maxlen) continue;
        for (std::size_t x = 0; x < m; ++x) {
            std::vector<TruthValue> v(n, l.zero());
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) v[q] = l.join(v[q], l.tensor(prefix[idx][p], a.delta[x](p, q)));
            prefix.push_back(std::move(v));
            length.push_back(length[idx] + 1);
        }
    }
    return out;
}

inline FuzzyAutomaton random_automaton(std::mt19937_64& rng, const Lattice& l, std::size_t n, std::size_t m) {
    const TruthValue grid[] = {TruthValue::ratio(0), TruthValue::ratio(1, 2), TruthValue::ratio(1)};
    const bool boolean = l.kind().tag == LatticeTag::boolean;
    auto draw = [&] {
        if (boolean) return grid[2 * (rng() % 2)];
        return grid[rng() % 3];
    };
    auto vec = [&] {
        std::vector<TruthValue> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(draw());
        return FuzzySet(l, v);
    };
    FuzzyAutomaton a;
    a.lattice = l;
    for (std::size_t x = 0; x < m; ++x) a.alphabet.push_back(std::string(1, char('x' + x)));
    a.sigma = vec();
    a.tau = vec();
    for (std::size_t x = 0; x < m; ++x) {
        std::vector<TruthValue> e;
        for (std::size_t k = 0; k < n * n; ++k) e.push_back(draw());
        a.delta.emplace_back(l, n, n, e);
    }
    return a;
}

// Random quasi-order: transitive closure (in the max-tensor sense) of a
// random reflexive relation.
inline FuzzyRelation random_quasi_order(std::mt19937_64& rng, const Lattice& l, std::size_t n,
                                        const std::vector<TruthValue>& values) {
    std::vector<TruthValue> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.push_back(i == j ? l.one() : values[rng() % values.size()]);
    FuzzyRelation r(l, n, n, e);
    for (;;) {
        FuzzyRelation next = compose(r, r);
        if (next == r) return r;
        r = next;
    }
}

inline bool forward_equivalent(const FuzzyAutomaton& a, const Cdfa& c, std::size_t maxlen) {
    auto words = words_up_to(a.alphabet.size(), maxlen);
    auto degrees = all_degrees(a, maxlen);
    for (std::size_t i = 0; i < words.size(); ++i)
        if (!(cdfa_eval(c, words[i]) == degrees[i])) return false;
    return true;
}

inline bool reverse_equivalent(const FuzzyAutomaton& a, const Cdfa& c, std::size_t maxlen) {
    auto words = words_up_to(a.alphabet.size(), maxlen);
    auto degrees = all_degrees(a, maxlen);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    for (const auto& w : words)
        if (!(cdfa_eval(c, w) == degrees[index.at(reversed(w))])) return false;
    return true;
}

} // namespace fzt
