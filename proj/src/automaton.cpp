#include "fzdet/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

namespace fzdet {

std::vector<Word> words_up_to(std::size_t m, std::size_t maxlen) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= maxlen && m > 0; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (std::size_t x = 0; x < m; ++x) {
                Word w = out[i];
                w.push_back(x);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

Word parse_word(const std::vector<std::string>& alphabet, std::string_view text) {
    Word w;
    if (text == "eps" || text == "ε") return w;

    auto lookup_run = [&](std::string_view tok) {
        while (!tok.empty()) {
            std::size_t best = alphabet.size(), best_len = 0;
            for (std::size_t x = 0; x < alphabet.size(); ++x) {
                const auto& s = alphabet[x];
                if (s.size() > best_len && tok.starts_with(s)) {
                    best = x;
                    best_len = s.size();
                }
            }
            if (best == alphabet.size())
                throw Error(ErrorCode::unknown_symbol, "unknown symbol in word: '" + std::string(tok) + "'");
            w.push_back(best);
            tok.remove_prefix(best_len);
        }
    };

    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
        if (j > i) {
            auto tok = text.substr(i, j - i);
            auto exact = std::find(alphabet.begin(), alphabet.end(), tok);
            if (exact != alphabet.end())
                w.push_back(static_cast<std::size_t>(exact - alphabet.begin()));
            else
                lookup_run(tok);
        }
        i = j;
    }
    return w;
}

std::string word_to_string(const std::vector<std::string>& alphabet, const Word& w) {
    if (w.empty()) return "ε";
    bool single = std::all_of(alphabet.begin(), alphabet.end(), [](const auto& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !single) out += ' ';
        out += alphabet.at(w[i]);
    }
    return out;
}

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

std::size_t FuzzyAutomaton::symbol_index(std::string_view symbol) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), symbol);
    if (it == alphabet.end()) throw Error(ErrorCode::unknown_symbol, "unknown symbol '" + std::string(symbol) + "'");
    return static_cast<std::size_t>(it - alphabet.begin());
}

std::string FuzzyAutomaton::state_name(std::size_t i) const {
    if (i < state_names.size()) return state_names[i];
    return "a" + std::to_string(i + 1);
}

namespace {

void check_values(const Lattice& l, const std::vector<TruthValue>& values, const std::string& what,
                  std::vector<Violation>& out) {
    for (const auto& v : values)
        if (!l.contains(v)) {
            out.push_back({ErrorCode::carrier_violation,
                           what + ": value " + v.exact_string() + " is outside " + l.kind().name()});
            return;
        }
}

void check_set(const FuzzyAutomaton& a, const FuzzySet& f, const std::string& what, std::vector<Violation>& out) {
    if (f.size() != a.size())
        out.push_back({ErrorCode::dimension_mismatch,
                       what + " has length " + std::to_string(f.size()) + ", expected " + std::to_string(a.size())});
    if (f.size() && !(f.lattice() == a.lattice))
        out.push_back({ErrorCode::kind_mismatch, what + " is over " + f.lattice().kind().name()});
    check_values(a.lattice, f.values(), what, out);
}

} // namespace

std::vector<Violation> validate(const FuzzyAutomaton& a) {
    std::vector<Violation> out;
    std::size_t n = a.size();
    if (n == 0) out.push_back({ErrorCode::dimension_mismatch, "automaton has no states"});
    if (a.alphabet.empty()) out.push_back({ErrorCode::semantic_error, "alphabet is empty"});
    {
        std::unordered_set<std::string> seen;
        for (const auto& s : a.alphabet) {
            if (s.empty()) out.push_back({ErrorCode::semantic_error, "empty symbol name"});
            if (!seen.insert(s).second) out.push_back({ErrorCode::semantic_error, "duplicate symbol '" + s + "'"});
        }
    }
    check_set(a, a.sigma, "initial", out);
    check_set(a, a.tau, "terminal", out);
    if (a.delta.size() != a.alphabet.size())
        out.push_back({ErrorCode::semantic_error, std::to_string(a.delta.size()) + " transition relations for " +
                                                      std::to_string(a.alphabet.size()) + " symbols"});
    for (std::size_t x = 0; x < a.delta.size(); ++x) {
        const auto& d = a.delta[x];
        std::string what = "trans " + (x < a.alphabet.size() ? a.alphabet[x] : std::to_string(x));
        if (d.rows() != n || d.cols() != n)
            out.push_back({ErrorCode::dimension_mismatch, what + " is " + std::to_string(d.rows()) + "x" +
                                                              std::to_string(d.cols()) + ", expected " +
                                                              std::to_string(n) + "x" + std::to_string(n)});
        if (d.rows() && !(d.lattice() == a.lattice))
            out.push_back({ErrorCode::kind_mismatch, what + " is over " + d.lattice().kind().name()});
        for (std::size_t i = 0; i < d.rows(); ++i) check_values(a.lattice, d.row(i).values(), what, out);
    }
    if (!a.state_names.empty() && a.state_names.size() != n)
        out.push_back({ErrorCode::dimension_mismatch, std::to_string(a.state_names.size()) + " state names for " +
                                                          std::to_string(n) + " states"});
    return out;
}

void require_valid(const FuzzyAutomaton& a) {
    auto v = validate(a);
    if (v.empty()) return;
    std::string msg;
    for (const auto& e : v) {
        if (!msg.empty()) msg += "; ";
        msg += std::string(to_string(e.code)) + ": " + e.message;
    }
    throw Error(v.size() == 1 ? v.front().code : ErrorCode::invalid_automaton, msg);
}

FuzzyRelation delta_word(const FuzzyAutomaton& a, const Word& u) {
    FuzzyRelation r = FuzzyRelation::identity(a.lattice, a.size());
    for (auto x : u) {
        if (x >= a.delta.size()) throw Error(ErrorCode::unknown_symbol, "symbol index out of range");
        r = compose(r, a.delta[x]);
    }
    return r;
}

FuzzySet sigma_u(const FuzzyAutomaton& a, const Word& u) {
    FuzzySet f = a.sigma;
    for (auto x : u) {
        if (x >= a.delta.size()) throw Error(ErrorCode::unknown_symbol, "symbol index out of range");
        f = compose(f, a.delta[x]);
    }
    return f;
}

FuzzySet tau_u(const FuzzyAutomaton& a, const Word& u) {
    FuzzySet g = a.tau;
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
        if (*it >= a.delta.size()) throw Error(ErrorCode::unknown_symbol, "symbol index out of range");
        g = compose(a.delta[*it], g);
    }
    return g;
}

TruthValue language_degree(const FuzzyAutomaton& a, const Word& u) {
    return dot(sigma_u(a, u), a.tau);
}

FuzzyAutomaton reverse(const FuzzyAutomaton& a) {
    FuzzyAutomaton r = a;
    std::swap(r.sigma, r.tau);
    for (auto& d : r.delta) d = transpose(d);
    return r;
}

FuzzyAutomaton afterset_automaton(const FuzzyAutomaton& a, const FuzzyRelation& phi) {
    require_valid(a);
    if (phi.rows() != a.size() || phi.cols() != a.size())
        throw Error(ErrorCode::dimension_mismatch, "relation does not match the automaton's states");
    if (!is_quasi_order(phi)) throw Error(ErrorCode::not_quasi_order, "afterset automaton needs a quasi-order");

    RowPartition part = distinct_rows(phi);
    std::vector<std::size_t> rep;
    for (const auto& cls : part.classes) rep.push_back(cls.front());
    const std::size_t k = rep.size();
    const Lattice& l = a.lattice;

    auto restrict_set = [&](const FuzzySet& f) {
        std::vector<TruthValue> v;
        for (auto r : rep) v.push_back(f[r]);
        return FuzzySet(l, std::move(v));
    };

    FuzzyAutomaton out;
    out.lattice = l;
    out.alphabet = a.alphabet;
    out.sigma = restrict_set(compose(a.sigma, phi));
    out.tau = restrict_set(compose(phi, a.tau));
    for (const auto& d : a.delta) {
        FuzzyRelation full = compose(compose(phi, d), phi);
        std::vector<TruthValue> e;
        e.reserve(k * k);
        for (auto p : rep)
            for (auto q : rep) e.push_back(full(p, q));
        out.delta.emplace_back(l, k, k, std::move(e));
    }
    for (auto r : rep) out.state_names.push_back(a.state_name(r));
    return out;
}

std::vector<Violation> validate(const Cdfa& c) {
    std::vector<Violation> out;
    const std::size_t n = c.size();
    if (n == 0) {
        out.push_back({ErrorCode::dimension_mismatch, "cdfa has no states"});
        return out;
    }
    if (c.initial >= n) out.push_back({ErrorCode::dimension_mismatch, "initial state out of range"});
    if (c.term.size() != n) out.push_back({ErrorCode::dimension_mismatch, "term map size differs from state count"});
    for (const auto& t : c.term)
        if (!c.lattice.contains(t)) {
            out.push_back({ErrorCode::carrier_violation, "terminal degree outside the carrier"});
            break;
        }
    for (std::size_t s = 0; s < n; ++s) {
        if (c.next[s].size() != c.alphabet.size())
            out.push_back({ErrorCode::semantic_error, "state " + std::to_string(s) + " is not total"});
        for (auto t : c.next[s])
            if (t >= n) out.push_back({ErrorCode::dimension_mismatch, "transition target out of range"});
    }
    if (!out.empty()) return out;

    std::vector<bool> seen(n, false);
    std::deque<std::size_t> q{c.initial};
    seen[c.initial] = true;
    std::size_t visited = 0;
    while (!q.empty()) {
        auto s = q.front();
        q.pop_front();
        ++visited;
        for (auto t : c.next[s])
            if (!seen[t]) {
                seen[t] = true;
                q.push_back(t);
            }
    }
    if (visited != n)
        out.push_back({ErrorCode::semantic_error, std::to_string(n - visited) + " unreachable state(s)"});
    return out;
}

TruthValue cdfa_eval(const Cdfa& c, const Word& u) {
    std::size_t s = c.initial;
    for (auto x : u) {
        if (x >= c.alphabet.size()) throw Error(ErrorCode::unknown_symbol, "symbol index out of range");
        s = c.next[s][x];
    }
    return c.term[s];
}

bool cdfa_isomorphic(const Cdfa& c1, const Cdfa& c2) {
    if (!(c1.lattice == c2.lattice) || c1.alphabet != c2.alphabet || c1.size() != c2.size()) return false;
    const std::size_t none = c1.size();
    std::vector<std::size_t> fwd(c1.size(), none), bwd(c2.size(), none);
    std::deque<std::pair<std::size_t, std::size_t>> q{{c1.initial, c2.initial}};
    fwd[c1.initial] = c2.initial;
    bwd[c2.initial] = c1.initial;
    std::size_t matched = 1;
    while (!q.empty()) {
        auto [p, r] = q.front();
        q.pop_front();
        if (!(c1.term[p] == c2.term[r])) return false;
        for (std::size_t x = 0; x < c1.alphabet.size(); ++x) {
            auto p2 = c1.next[p][x], r2 = c2.next[r][x];
            if (fwd[p2] == none && bwd[r2] == none) {
                fwd[p2] = r2;
                bwd[r2] = p2;
                ++matched;
                q.emplace_back(p2, r2);
            } else if (fwd[p2] != r2 || bwd[r2] != p2) {
                return false;
            }
        }
    }
    return matched == c1.size();
}

FuzzyAutomaton to_fuzzy_automaton(const Cdfa& c) {
    const Lattice& l = c.lattice;
    const std::size_t n = c.size();
    FuzzyAutomaton a;
    a.lattice = l;
    a.alphabet = c.alphabet;
    a.sigma = FuzzySet::unit(l, n, c.initial);
    a.tau = FuzzySet(l, c.term);
    for (std::size_t x = 0; x < c.alphabet.size(); ++x) {
        std::vector<TruthValue> e(n * n, l.zero());
        for (std::size_t s = 0; s < n; ++s) e[s * n + c.next[s][x]] = l.one();
        a.delta.emplace_back(l, n, n, std::move(e));
    }
    a.state_names = c.labels;
    return a;
}

} // namespace fzdet
