#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace fzt;

namespace {

const Lattice boolean{LatticeKind::boolean()};
const Lattice godel{LatticeKind::godel()};

const char* const finite_fixtures[] = {"e1", "e2", "e3", "e4", "e5"};

FuzzyRelation ri_of(const FuzzyAutomaton& a) { return greatest_right_invariant(a).relation; }
FuzzyRelation wri_of(const FuzzyAutomaton& a) { return greatest_weakly_right_invariant(a).relation; }

// Minimal size by brute force: number of distinct residual languages over
// words up to maxlen, each state's behaviour sampled on the same words.
std::size_t residual_count(const Cdfa& c, std::size_t maxlen) {
    auto words = words_up_to(c.alphabet.size(), maxlen);
    std::set<std::vector<std::string>> rows;
    for (std::size_t s = 0; s < c.size(); ++s) {
        std::vector<std::string> row;
        for (const auto& w : words) {
            std::size_t q = s;
            for (auto x : w) q = c.next[q][x];
            row.push_back(c.term[q].exact_string());
        }
        rows.insert(row);
    }
    return rows.size();
}

} // namespace

TEST_CASE("Nerode automaton") {
    auto e1 = fixture("e1");
    auto n = nerode(e1);
    CHECK(n.cdfa.size() == 7);
    CHECK(n.verified);
    CHECK_FALSE(n.budget_hit);
    CHECK(n.states_created == 1 + 7 * 2);
    CHECK(n.cdfa.labels[0] == "σ_ε");
    CHECK(n.cdfa.provenance[0] == e1.sigma);
    for (std::size_t s = 0; s < n.cdfa.size(); ++s) {
        CHECK(n.cdfa.provenance[s] == sigma_u(e1, n.cdfa.witness[s]));
        CHECK(n.cdfa.term[s] == dot(n.cdfa.provenance[s], e1.tau));
    }
    CHECK(validate(n.cdfa).empty());

    auto e5 = nerode(fixture("e5"));
    CHECK(e5.cdfa.size() == 3);
    CHECK(e5.cdfa.labels == std::vector<std::string>{"σ_ε", "σ_x", "σ_y"});

    CHECK_THROWS_AS(nerode(fixture("e6"), 1000), BudgetExceeded);
    try {
        nerode(fixture("e6"), 10);
    } catch (const BudgetExceeded& e) {
        CHECK(e.limit_name() == "max_states");
        CHECK(e.limit() == 10);
    }
}

TEST_CASE("labels compress repeated symbols") {
    std::vector<std::string> ab{"x", "y"};
    CHECK(label_word(ab, {}) == "ε");
    CHECK(label_word(ab, {0, 0, 1}) == "x²y");
    CHECK(label_word(ab, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}) == "y¹²");
    CHECK(label_word({"ab", "c"}, {0, 1}) == "ab·c");
}

TEST_CASE("determinization by a right invariant quasi-order") {
    auto e1 = fixture("e1");
    CHECK(determinize_phi(e1, ri_of(e1)).cdfa.size() == 5);
    CHECK(determinize_phi(e1, wri_of(e1)).cdfa.size() == 3);
    CHECK(cdfa_isomorphic(determinize_phi(e1, FuzzyRelation::identity(boolean, 3)).cdfa, nerode(e1).cdfa));

    auto e6 = fixture("e6");
    auto r = determinize_phi(e6, ri_of(e6));
    CHECK(r.cdfa.size() == 3);
    std::vector<std::string> terms;
    for (const auto& t : r.cdfa.term) terms.push_back(e6.lattice.format(t));
    CHECK(terms == std::vector<std::string>{"0", "0.5", "1"});
    CHECK(forward_equivalent(e6, r.cdfa, 8));

    // A relation that is not weakly right invariant is refused unless bypassed.
    auto full = FuzzyRelation::full(boolean, 3);
    try {
        determinize_phi(e1, full);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_failed);
    }
    DetOptions bypass;
    bypass.validate = false;
    auto unchecked = determinize_phi(e1, full, bypass);
    CHECK_FALSE(unchecked.verified);
    CHECK(unchecked.cdfa.size() == 1);
}

TEST_CASE("reverse Nerode automaton") {
    for (const std::string name : finite_fixtures) {
        CAPTURE(name);
        auto a = fixture(name);
        auto r = reverse_nerode(a);
        CHECK(r.method.reversed_language());
        CHECK(reverse_equivalent(a, r.cdfa, 6));
        for (std::size_t s = 0; s < r.cdfa.size(); ++s)
            CHECK(r.cdfa.provenance[s] == tau_u(a, reversed(r.cdfa.witness[s])));
        auto li = determinize_psi(a, greatest_left_invariant(a).relation);
        CHECK(reverse_equivalent(a, li.cdfa, 6));
        CHECK(li.cdfa.size() <= r.cdfa.size());
    }

    FuzzyAutomaton one;
    one.lattice = godel;
    one.alphabet = {"x", "y"};
    one.sigma = set(godel, {"0.5"});
    one.tau = set(godel, {"1"});
    one.delta = {rel(godel, {{"1"}}), rel(godel, {{"1"}})};
    CHECK(determinize_psi(one, FuzzyRelation::full(godel, 1)).cdfa.size() == 1);
}

TEST_CASE("children automaton") {
    auto e1 = fixture("e1");
    auto c = children(e1, FuzzyRelation::identity(boolean, 3));
    CHECK(c.cdfa.size() == 5);
    CHECK(cdfa_isomorphic(c.cdfa, determinize_phi(e1, ri_of(e1)).cdfa));
    CHECK(forward_equivalent(e1, c.cdfa, 6));

    auto e2 = fixture("e2");
    CHECK(nerode(e2).cdfa.size() == 7);
    CHECK(children(e2, FuzzyRelation::identity(boolean, 3)).cdfa.size() == 6);

    auto e4 = fixture("e4");
    CHECK(cdfa_isomorphic(children(e4, FuzzyRelation::identity(boolean, 3)).cdfa, nerode(e4).cdfa));

    for (const char* name : finite_fixtures) {
        auto a = fixture(name);
        auto id = FuzzyRelation::identity(a.lattice, a.size());
        auto base = children(a, id).cdfa.size();
        for (const auto& phi : {ri_of(a), wri_of(a)}) {
            auto ch = children(a, phi).cdfa;
            CHECK(ch.size() <= determinize_phi(a, phi).cdfa.size());
            CHECK(ch.size() <= base);
            CHECK(forward_equivalent(a, ch, 6));
        }
    }
}

TEST_CASE("Brzozowski construction gives the minimal automaton") {
    auto e4 = fixture("e4");
    auto b = brzozowski(e4);
    CHECK(b.cdfa.size() == 4);
    CHECK(forward_equivalent(e4, b.cdfa, 6));
    CHECK(minimize_cdfa(nerode(e4).cdfa).size() == 4);
    CHECK(residual_count(nerode(e4).cdfa, 6) == 4);

    CHECK(brzozowski(fixture("e1")).cdfa.size() == 3);

    for (const std::string name : finite_fixtures) {
        CAPTURE(name);
        auto a = fixture(name);
        auto plain = brzozowski(a);
        for (auto first : {RelationSource::li, RelationSource::wli}) {
            auto other = brzozowski(a, first);
            CHECK(cdfa_isomorphic(plain.cdfa, other.cdfa));
        }
        CHECK(cdfa_isomorphic(minimize_cdfa(plain.cdfa), plain.cdfa));
        CHECK(plain.cdfa.size() == residual_count(nerode(a).cdfa, 6));
        for (const char* m : {"nerode", "ri", "wri", "children-nerode", "children-ri", "children-wri"})
            CHECK(plain.cdfa.size() <= run_method(a, DetMethod::parse(m)).cdfa.size());
    }
    CHECK_THROWS_AS(brzozowski(e4, RelationSource::ri), Error);
}

TEST_CASE("minimization oracle") {
    for (const char* name : finite_fixtures) {
        auto a = fixture(name);
        auto n = nerode(a).cdfa;
        auto m = minimize_cdfa(n);
        CHECK(validate(m).empty());
        CHECK(cdfa_isomorphic(minimize_cdfa(m), m));
        for (const auto& w : words_up_to(2, 6)) CHECK(cdfa_eval(m, w) == cdfa_eval(n, w));
    }
}

TEST_CASE("structural properties on the fixtures") {
    for (const std::string name : finite_fixtures) {
        CAPTURE(name);
        auto a = fixture(name);
        auto n = nerode(a).cdfa;

        // Size monotonicity along Δ <= ri <= wri.
        auto ri = determinize_phi(a, ri_of(a)).cdfa;
        auto wri = determinize_phi(a, wri_of(a)).cdfa;
        CHECK(wri.size() <= ri.size());
        CHECK(ri.size() <= n.size());

        // A_φ for weakly right invariant φ is the Nerode automaton of A/φ.
        CHECK(cdfa_isomorphic(wri, nerode(afterset_automaton(a, wri_of(a))).cdfa));
        CHECK(cdfa_isomorphic(ri, nerode(afterset_automaton(a, ri_of(a))).cdfa));

        // Weakly left invariant quasi-orders leave forward determinization unchanged.
        auto wli = greatest_weakly_left_invariant(a).relation;
        CHECK(cdfa_isomorphic(nerode(afterset_automaton(a, wli)).cdfa, n));
        // ... and the reverse Nerode automaton of A/ψ is isomorphic to A^ψ.
        CHECK(cdfa_isomorphic(reverse_nerode(afterset_automaton(a, wli)).cdfa, determinize_psi(a, wli).cdfa));
    }
}

TEST_CASE("runs are deterministic") {
    auto a = fixture("e3");
    for (const char* m : {"nerode", "wri", "children-ri", "li", "brzozowski-wli"}) {
        auto r1 = run_method(a, DetMethod::parse(m));
        auto r2 = run_method(a, DetMethod::parse(m));
        CHECK(r1.cdfa == r2.cdfa);
        CHECK(r1.states_created == r2.states_created);
    }
}

TEST_CASE("method names") {
    for (const char* m : {"nerode", "ri", "wri", "children-nerode", "children-ri", "children-wri", "reverse-nerode",
                          "li", "wli", "brzozowski", "brzozowski-li", "brzozowski-wli"})
        CHECK(DetMethod::parse(m).name() == m);
    CHECK_THROWS_AS(DetMethod::parse("hopcroft"), Error);
    CHECK(DetMethod::custom(Construction::phi, FuzzyRelation::identity(boolean, 2)).name() == "phi:custom");
}

TEST_CASE("custom relations through run_method") {
    auto e1 = fixture("e1");
    auto m = DetMethod::custom(Construction::phi, wri_of(e1));
    auto r = run_method(e1, m);
    CHECK(r.cdfa.size() == 3);
    CHECK(r.verified);
    CHECK_THROWS_AS(run_method(e1, DetMethod::custom(Construction::phi, FuzzyRelation::full(boolean, 3))), Error);
}
