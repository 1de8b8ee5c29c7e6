#include "fzdet/determinize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace fzdet {

namespace {

const char* const superscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(std::size_t n) {
    std::string digits = std::to_string(n), out;
    for (char c : digits) out += superscripts[c - '0'];
    return out;
}

bool is_identity(const FuzzyRelation& r) {
    return r.is_square() && r == FuzzyRelation::identity(r.lattice(), r.rows());
}

struct Tree {
    std::vector<FuzzySet> vectors;
    std::vector<std::vector<std::size_t>> next;
    std::vector<Word> words; // tree word of each vertex, in extension order
    std::size_t created = 0;
    std::size_t checks = 0;
};

// Breadth-first transition tree. extend(v, x) yields the child of v along x;
// each new word is the parent's word with x appended.
template <class Extend>
Tree build_tree(FuzzySet root, std::size_t m, std::size_t limit, const char* limit_name, Extend extend) {
    Tree t;
    std::unordered_map<FuzzySet, std::size_t> index;
    index.emplace(root, 0);
    t.vectors.push_back(std::move(root));
    t.words.emplace_back();
    t.created = 1;
    if (limit < 1) throw BudgetExceeded(limit_name, limit);

    for (std::size_t i = 0; i < t.vectors.size(); ++i) {
        std::vector<std::size_t> row;
        row.reserve(m);
        for (std::size_t x = 0; x < m; ++x) {
            FuzzySet child = extend(t.vectors[i], x);
            ++t.created;
            ++t.checks;
            auto it = index.find(child);
            if (it != index.end()) {
                row.push_back(it->second);
                continue;
            }
            if (t.vectors.size() >= limit) throw BudgetExceeded(limit_name, limit);
            std::size_t id = t.vectors.size();
            index.emplace(child, id);
            t.vectors.push_back(std::move(child));
            Word w = t.words[i];
            w.push_back(x);
            t.words.push_back(std::move(w));
            row.push_back(id);
        }
        t.next.push_back(std::move(row));
    }
    return t;
}

Tree phi_tree(const FuzzyAutomaton& a, const FuzzyRelation& phi, std::size_t limit, const char* limit_name) {
    bool crisp = is_identity(phi);
    FuzzySet root = crisp ? a.sigma : compose(a.sigma, phi);
    return build_tree(std::move(root), a.alphabet.size(), limit, limit_name,
                      [&](const FuzzySet& v, std::size_t x) {
                          FuzzySet s = compose(v, a.delta[x]);
                          return crisp ? s : compose(s, phi);
                      });
}

Tree psi_tree(const FuzzyAutomaton& a, const FuzzyRelation& psi, std::size_t limit, const char* limit_name) {
    bool crisp = is_identity(psi);
    FuzzySet root = crisp ? a.tau : compose(psi, a.tau);
    return build_tree(std::move(root), a.alphabet.size(), limit, limit_name,
                      [&](const FuzzySet& v, std::size_t x) {
                          FuzzySet s = compose(a.delta[x], v);
                          return crisp ? s : compose(psi, s);
                      });
}

void check_relation(const FuzzyAutomaton& a, const FuzzyRelation& r) {
    if (r.rows() != a.size() || r.cols() != a.size())
        throw Error(ErrorCode::dimension_mismatch, "relation does not match the automaton's states");
    if (!(r.lattice() == a.lattice)) throw Error(ErrorCode::kind_mismatch, "relation and automaton lattices differ");
}

void validate_phi(const FuzzyAutomaton& a, const FuzzyRelation& phi, const DetOptions& opts) {
    check_relation(a, phi);
    if (!opts.validate || is_identity(phi)) return;
    Budget b;
    b.max_family = opts.max_family;
    if (!check_weakly_right_invariant(a, phi, b))
        throw Error(ErrorCode::precondition_failed, "relation is not reflexive and weakly right invariant");
}

void validate_psi(const FuzzyAutomaton& a, const FuzzyRelation& psi, const DetOptions& opts) {
    check_relation(a, psi);
    if (!opts.validate || is_identity(psi)) return;
    Budget b;
    b.max_family = opts.max_family;
    if (!check_weakly_left_invariant(a, psi, b))
        throw Error(ErrorCode::precondition_failed, "relation is not reflexive and weakly left invariant");
}

Cdfa tree_to_cdfa(const FuzzyAutomaton& a, Tree& t, std::vector<TruthValue> term,
                  const std::string& prefix, bool reverse_labels) {
    Cdfa c;
    c.lattice = a.lattice;
    c.alphabet = a.alphabet;
    c.next = std::move(t.next);
    c.initial = 0;
    c.term = std::move(term);
    c.provenance = std::move(t.vectors);
    c.witness = std::move(t.words);
    for (const auto& w : c.witness)
        c.labels.push_back(prefix + label_word(a.alphabet, reverse_labels ? reversed(w) : w));
    return c;
}

} // namespace

std::string label_word(const std::vector<std::string>& alphabet, const Word& w) {
    if (w.empty()) return "ε";
    bool single = std::all_of(alphabet.begin(), alphabet.end(), [](const auto& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (i && !single) out += "·";
        out += alphabet.at(w[i]);
        if (j - i > 1) out += superscript(j - i);
        i = j;
    }
    return out;
}

std::string DetMethod::name() const {
    auto rel = [&](std::string_view crisp) -> std::string {
        switch (source) {
        case RelationSource::identity: return std::string(crisp);
        case RelationSource::ri: return "ri";
        case RelationSource::wri: return "wri";
        case RelationSource::li: return "li";
        case RelationSource::wli: return "wli";
        case RelationSource::custom: return "custom";
        }
        return "?";
    };
    switch (construction) {
    case Construction::phi: return source == RelationSource::custom ? "phi:custom" : rel("nerode");
    case Construction::psi: return source == RelationSource::custom ? "psi:custom" : rel("reverse-nerode");
    case Construction::children: return source == RelationSource::custom ? "children:custom" : "children-" + rel("nerode");
    case Construction::brzozowski: return source == RelationSource::identity ? "brzozowski" : "brzozowski-" + rel("");
    }
    return "?";
}

DetMethod DetMethod::parse(std::string_view text) {
    static const std::map<std::string, DetMethod, std::less<>> table = {
        {"nerode", nerode()},
        {"ri", phi(RelationSource::ri)},
        {"wri", phi(RelationSource::wri)},
        {"children-nerode", children(RelationSource::identity)},
        {"children-ri", children(RelationSource::ri)},
        {"children-wri", children(RelationSource::wri)},
        {"reverse-nerode", reverse_nerode()},
        {"li", psi(RelationSource::li)},
        {"wli", psi(RelationSource::wli)},
        {"brzozowski", brzozowski(RelationSource::identity)},
        {"brzozowski-li", brzozowski(RelationSource::li)},
        {"brzozowski-wli", brzozowski(RelationSource::wli)},
    };
    auto it = table.find(text);
    if (it == table.end()) throw Error(ErrorCode::syntax_error, "unknown method '" + std::string(text) + "'");
    return it->second;
}

DetResult determinize_phi(const FuzzyAutomaton& a, const FuzzyRelation& phi, const DetOptions& opts) {
    require_valid(a);
    validate_phi(a, phi, opts);
    bool crisp = is_identity(phi);
    Tree t = phi_tree(a, phi, opts.max_states, "max_states");

    std::vector<TruthValue> term;
    for (const auto& v : t.vectors) term.push_back(dot(v, a.tau));

    DetResult r;
    r.states_created = t.created;
    r.closure_checks = t.checks;
    r.verified = crisp || opts.validate;
    r.method = crisp ? DetMethod::nerode() : DetMethod::custom(Construction::phi, phi);
    r.cdfa = tree_to_cdfa(a, t, std::move(term), crisp ? "σ_" : "φ_", false);
    return r;
}

DetResult nerode(const FuzzyAutomaton& a, std::size_t max_states) {
    DetOptions o;
    o.max_states = max_states;
    return determinize_phi(a, FuzzyRelation::identity(a.lattice, a.size()), o);
}

DetResult determinize_psi(const FuzzyAutomaton& a, const FuzzyRelation& psi, const DetOptions& opts) {
    require_valid(a);
    validate_psi(a, psi, opts);
    bool crisp = is_identity(psi);
    Tree t = psi_tree(a, psi, opts.max_states, "max_states");

    std::vector<TruthValue> term;
    for (const auto& v : t.vectors) term.push_back(dot(a.sigma, v));

    DetResult r;
    r.states_created = t.created;
    r.closure_checks = t.checks;
    r.verified = crisp || opts.validate;
    r.method = crisp ? DetMethod::reverse_nerode() : DetMethod::custom(Construction::psi, psi);
    // The vector reached by reading w is tau_{reverse(w)}; label by that word.
    r.cdfa = tree_to_cdfa(a, t, std::move(term), crisp ? "τ_" : "ψ^", true);
    return r;
}

DetResult reverse_nerode(const FuzzyAutomaton& a, std::size_t max_states) {
    DetOptions o;
    o.max_states = max_states;
    return determinize_psi(a, FuzzyRelation::identity(a.lattice, a.size()), o);
}

DetResult children(const FuzzyAutomaton& a, const FuzzyRelation& phi, const DetOptions& opts) {
    DetResult base = determinize_phi(a, phi, opts);
    const Cdfa& src = base.cdfa;
    const std::size_t m = src.alphabet.size();

    // One class per distinct (children pointers, terminal degree) tuple.
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_pointers;
    std::vector<std::size_t> cls(src.size());
    std::vector<std::size_t> first; // representative vertex per class
    std::vector<std::pair<std::vector<std::size_t>, TruthValue>> tuples;
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto& candidates = by_pointers[src.next[i]];
        std::size_t found = first.size();
        for (auto c : candidates)
            if (tuples[c].second == src.term[i]) {
                found = c;
                break;
            }
        if (found == first.size()) {
            candidates.push_back(found);
            first.push_back(i);
            tuples.emplace_back(src.next[i], src.term[i]);
        }
        cls[i] = found;
    }

    // Renumber classes breadth-first from the root's class; edges come from
    // the first vertex of each class.
    const std::size_t none = first.size();
    std::vector<std::size_t> order, number(first.size(), none);
    number[cls[0]] = 0;
    order.push_back(cls[0]);
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::size_t x = 0; x < m; ++x) {
            std::size_t target = cls[src.next[first[order[k]]][x]];
            if (number[target] == none) {
                number[target] = order.size();
                order.push_back(target);
            }
        }

    Cdfa c;
    c.lattice = src.lattice;
    c.alphabet = src.alphabet;
    c.initial = 0;
    for (auto k : order) {
        std::size_t rep = first[k];
        std::vector<std::size_t> row;
        for (std::size_t x = 0; x < m; ++x) row.push_back(number[cls[src.next[rep][x]]]);
        c.next.push_back(std::move(row));
        c.term.push_back(src.term[rep]);
        c.labels.push_back(src.labels[rep] + "ᶜ");
        c.provenance.push_back(src.provenance[rep]);
        c.witness.push_back(src.witness[rep]);
    }

    DetResult r;
    r.cdfa = std::move(c);
    r.states_created = base.states_created;
    r.closure_checks = base.closure_checks + src.size();
    r.verified = base.verified;
    r.method = is_identity(phi) ? DetMethod::children(RelationSource::identity)
                                : DetMethod::custom(Construction::children, phi);
    return r;
}

DetResult brzozowski(const FuzzyAutomaton& a, RelationSource first_stage, const Budget& budget) {
    require_valid(a);
    budget.check();
    FuzzyRelation psi = FuzzyRelation::identity(a.lattice, a.size());
    switch (first_stage) {
    case RelationSource::identity: break;
    case RelationSource::li: psi = greatest_left_invariant(a, budget).relation; break;
    case RelationSource::wli: psi = greatest_weakly_left_invariant(a, budget).relation; break;
    default: throw Error(ErrorCode::semantic_error, "brzozowski first stage must be identity, li or wli");
    }
    DetOptions o;
    o.max_states = budget.max_states;
    o.max_family = budget.max_family;
    // Both relations are valid by construction.
    o.validate = false;
    DetResult stage1 = determinize_psi(a, psi, o);
    FuzzyAutomaton mid = to_fuzzy_automaton(stage1.cdfa);
    DetResult stage2 = determinize_psi(mid, FuzzyRelation::identity(mid.lattice, mid.size()), o);

    stage2.states_created += stage1.states_created;
    stage2.closure_checks += stage1.closure_checks;
    stage2.verified = true;
    stage2.method = DetMethod::brzozowski(first_stage);
    // Stage-2 words are already forward words of the original language.
    for (std::size_t s = 0; s < stage2.cdfa.size(); ++s)
        stage2.cdfa.labels[s] = "q" + std::to_string(s);
    return stage2;
}

Cdfa minimize_cdfa(const Cdfa& c) {
    const std::size_t n = c.size(), m = c.alphabet.size();
    // Initial blocks: exact terminal value, numbered by first occurrence.
    std::vector<std::size_t> block(n);
    {
        std::unordered_map<TruthValue, std::size_t> ids;
        for (std::size_t s = 0; s < n; ++s) block[s] = ids.try_emplace(c.term[s], ids.size()).first->second;
    }
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> sig_ids;
        std::vector<std::size_t> refined(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> sig{block[s]};
            for (std::size_t x = 0; x < m; ++x) sig.push_back(block[c.next[s][x]]);
            refined[s] = sig_ids.try_emplace(std::move(sig), sig_ids.size()).first->second;
        }
        std::size_t new_count = sig_ids.size();
        block = std::move(refined);
        if (new_count == count) break;
        count = new_count;
    }

    // Breadth-first numbering from the initial block.
    const std::size_t none = n;
    std::vector<std::size_t> number(count, none), rep;
    number[block[c.initial]] = 0;
    rep.push_back(c.initial);
    for (std::size_t k = 0; k < rep.size(); ++k)
        for (std::size_t x = 0; x < m; ++x) {
            std::size_t t = c.next[rep[k]][x];
            if (number[block[t]] == none) {
                number[block[t]] = rep.size();
                rep.push_back(t);
            }
        }

    Cdfa out;
    out.lattice = c.lattice;
    out.alphabet = c.alphabet;
    out.initial = 0;
    for (auto s : rep) {
        std::vector<std::size_t> row;
        for (std::size_t x = 0; x < m; ++x) row.push_back(number[block[c.next[s][x]]]);
        out.next.push_back(std::move(row));
        out.term.push_back(c.term[s]);
        if (s < c.labels.size()) out.labels.push_back(c.labels[s]);
        if (s < c.provenance.size()) out.provenance.push_back(c.provenance[s]);
        if (s < c.witness.size()) out.witness.push_back(c.witness[s]);
    }
    return out;
}

DetResult run_method(const FuzzyAutomaton& a, const DetMethod& method, const Budget& budget) {
    require_valid(a);
    budget.check();
    if (method.construction == Construction::brzozowski) return brzozowski(a, method.source, budget);

    DetOptions o;
    o.max_states = budget.max_states;
    o.max_family = budget.max_family;
    FuzzyRelation rel = FuzzyRelation::identity(a.lattice, a.size());
    switch (method.source) {
    case RelationSource::identity: break;
    case RelationSource::ri: rel = greatest_right_invariant(a, budget).relation; break;
    case RelationSource::wri: rel = greatest_weakly_right_invariant(a, budget).relation; break;
    case RelationSource::li: rel = greatest_left_invariant(a, budget).relation; break;
    case RelationSource::wli: rel = greatest_weakly_left_invariant(a, budget).relation; break;
    case RelationSource::custom:
        if (!method.relation) throw Error(ErrorCode::semantic_error, "custom method without a relation");
        rel = *method.relation;
        break;
    }
    // Constructed quasi-orders are valid by construction.
    if (method.source != RelationSource::custom) o.validate = false;

    DetResult r;
    switch (method.construction) {
    case Construction::phi: r = determinize_phi(a, rel, o); break;
    case Construction::psi: r = determinize_psi(a, rel, o); break;
    case Construction::children: r = children(a, rel, o); break;
    case Construction::brzozowski: break;
    }
    if (method.source != RelationSource::custom) r.verified = true;
    r.method = method;
    return r;
}

std::vector<FuzzySet> sigma_family(const FuzzyAutomaton& a, std::size_t max_family) {
    return phi_tree(a, FuzzyRelation::identity(a.lattice, a.size()), max_family, "max_family").vectors;
}

std::vector<FuzzySet> tau_family(const FuzzyAutomaton& a, std::size_t max_family) {
    return psi_tree(a, FuzzyRelation::identity(a.lattice, a.size()), max_family, "max_family").vectors;
}

} // namespace fzdet
