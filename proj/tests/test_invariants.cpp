#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "support.hpp"

using namespace fzt;

namespace {

const Lattice boolean{LatticeKind::boolean()};
const Lattice godel{LatticeKind::godel()};
const Lattice product{LatticeKind::product()};

const char* const fixtures[] = {"e1", "e2", "e3", "e4", "e5", "e6"};
const char* const finite_fixtures[] = {"e1", "e2", "e3", "e4", "e5"};

// Direct reading of the invariance inequalities, without the library checks.
bool oracle_ri(const FuzzyAutomaton& a, const FuzzyRelation& phi) {
    const Lattice& l = a.lattice;
    const std::size_t n = a.size();
    for (const auto& d : a.delta)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                TruthValue lhs = l.zero(), rhs = l.zero();
                for (std::size_t k = 0; k < n; ++k) {
                    lhs = l.join(lhs, l.tensor(phi(i, k), d(k, j)));
                    rhs = l.join(rhs, l.tensor(d(i, k), phi(k, j)));
                }
                if (!l.leq(lhs, rhs)) return false;
            }
    for (std::size_t i = 0; i < n; ++i) {
        TruthValue lhs = l.zero();
        for (std::size_t k = 0; k < n; ++k) lhs = l.join(lhs, l.tensor(phi(i, k), a.tau[k]));
        if (!l.leq(lhs, a.tau[i])) return false;
    }
    return true;
}

} // namespace

TEST_CASE("greatest right invariant quasi-order") {
    auto e1 = greatest_right_invariant(fixture("e1"));
    CHECK(e1.relation == rel(boolean, {{"1", "0", "0"}, {"0", "1", "1"}, {"0", "0", "1"}}));
    CHECK(e1.holds);
    CHECK(e1.reflexive);
    CHECK(e1.transitive);
    CHECK(e1.class_checked == InvariantClass::ri);

    CHECK(greatest_right_invariant(fixture("e2")).relation == FuzzyRelation::identity(boolean, 3));
    CHECK(greatest_right_invariant(fixture("e6")).relation ==
          rel(product, {{"1", "0", "0.5"}, {"1", "1", "1"}, {"1", "0", "1"}}));
}

TEST_CASE("iterates descend to the fixpoint") {
    for (const std::string name : fixtures) {
        CAPTURE(name);
        auto a = fixture(name);
        std::vector<FuzzyRelation> seen;
        auto r = greatest_right_invariant(a, {}, [&](std::size_t k, const FuzzyRelation& phi) {
            CHECK(k == seen.size() + 1);
            seen.push_back(phi);
        });
        REQUIRE(!seen.empty());
        CHECK(seen.front() == left_residual(a.tau, a.tau));
        CHECK(seen.back() == r.relation);
        CHECK(seen.size() == r.iterations_used);
        for (std::size_t k = 1; k < seen.size(); ++k) CHECK(leq(seen[k], seen[k - 1]));

        // On e6 the left chain is strictly decreasing forever; watch a prefix.
        std::vector<FuzzyRelation> left;
        Budget b;
        b.max_iterations = 50;
        try {
            greatest_left_invariant(a, b, [&](std::size_t, const FuzzyRelation& psi) { left.push_back(psi); });
        } catch (const BudgetExceeded&) {
            CHECK(name == "e6");
        }
        CHECK(left.front() == right_residual(a.sigma, a.sigma));
        for (std::size_t k = 1; k < left.size(); ++k) CHECK(leq(left[k], left[k - 1]));
    }
}

TEST_CASE("iteration budget") {
    Budget b;
    b.max_iterations = 1;
    // e5 needs several refinement steps.
    CHECK_THROWS_AS(greatest_right_invariant(fixture("e5"), b), BudgetExceeded);
    b.max_iterations = 0;
    CHECK_THROWS_AS(greatest_right_invariant(fixture("e5"), b), Error);
}

TEST_CASE("greatest left invariant is the transposed dual") {
    for (const std::string name : finite_fixtures) {
        CAPTURE(name);
        auto a = fixture(name);
        auto li = greatest_left_invariant(a);
        CHECK(li.holds);
        CHECK(is_quasi_order(li.relation));
        CHECK(leq(FuzzyRelation::identity(a.lattice, a.size()), li.relation));
        CHECK(li.relation == transpose(greatest_right_invariant(reverse(a)).relation));
    }

    FuzzyAutomaton flat;
    flat.lattice = godel;
    flat.alphabet = {"x"};
    flat.sigma = FuzzySet::ones(godel, 3);
    flat.tau = set(godel, {"0.5", "0", "1"});
    flat.delta = {FuzzyRelation::identity(godel, 3)};
    CHECK(greatest_left_invariant(flat).relation == FuzzyRelation::full(godel, 3));
}

TEST_CASE("left invariant iteration on e6 does not stabilise") {
    // psi_k(a2, a3) = 1/2^(k-1): a strictly descending chain.
    auto a = fixture("e6");
    std::vector<FuzzyRelation> seen;
    Budget b;
    b.max_iterations = 12;
    CHECK_THROWS_AS(greatest_left_invariant(a, b, [&](std::size_t, const FuzzyRelation& psi) { seen.push_back(psi); }),
                    BudgetExceeded);
    REQUIRE(seen.size() >= 6);
    for (std::size_t k = 1; k < 6; ++k) {
        CHECK(seen[k](1, 2) == TruthValue::ratio(1, 1LL << (k - 1)));
        CHECK(seen[k](2, 1) == TruthValue::ratio(1, 2));
    }
}

TEST_CASE("greatest weakly right invariant quasi-order") {
    auto e1 = greatest_weakly_right_invariant(fixture("e1"));
    CHECK(e1.relation == rel(boolean, {{"1", "0", "0"}, {"1", "1", "1"}, {"0", "0", "1"}}));
    CHECK(e1.holds);
    CHECK(e1.family_size == tau_family(fixture("e1"), 100).size());

    auto e3 = fixture("e3");
    auto expected = rel(boolean, {{"1", "0", "0"}, {"1", "1", "1"}, {"0", "0", "1"}});
    CHECK(greatest_weakly_right_invariant(e3).relation == expected);
    CHECK(greatest_right_invariant(e3).relation == expected);

    CHECK(greatest_weakly_right_invariant(fixture("e6")).relation ==
          rel(product, {{"1", "0", "0.5"}, {"1", "1", "1"}, {"1", "0", "1"}}));

    for (const char* name : fixtures) {
        auto a = fixture(name);
        auto w = greatest_weakly_right_invariant(a).relation;
        CHECK(leq(greatest_right_invariant(a).relation, w));
        CHECK(is_quasi_order(w));
        // phi∘tau_u = tau_u for every member of the family.
        for (const auto& t : tau_family(a, 1000)) CHECK(compose(w, t) == t);
    }
}

TEST_CASE("greatest weakly left invariant quasi-order") {
    for (const std::string name : finite_fixtures) {
        CAPTURE(name);
        auto a = fixture(name);
        auto w = greatest_weakly_left_invariant(a);
        CHECK(w.holds);
        CHECK(w.relation == transpose(greatest_weakly_right_invariant(reverse(a)).relation));
        CHECK(leq(greatest_left_invariant(a).relation, w.relation));
        for (const auto& s : sigma_family(a, 1000)) CHECK(compose(s, w.relation) == s);
    }

    FuzzyAutomaton one;
    one.lattice = godel;
    one.alphabet = {"x"};
    one.sigma = set(godel, {"0.5"});
    one.tau = set(godel, {"1"});
    one.delta = {rel(godel, {{"0.3"}})};
    CHECK(greatest_weakly_left_invariant(one).relation == FuzzyRelation::full(godel, 1));

    // The sigma_u family of e6 is infinite.
    Budget b;
    b.max_family = 50;
    CHECK_THROWS_AS(greatest_weakly_left_invariant(fixture("e6"), b), BudgetExceeded);
}

TEST_CASE("membership checks") {
    auto e1 = fixture("e1");
    auto id = FuzzyRelation::identity(boolean, 3);
    CHECK(check_right_invariant(e1, id));
    CHECK(check_left_invariant(e1, id));
    CHECK(check_weakly_right_invariant(e1, id));
    CHECK(check_weakly_left_invariant(e1, id));

    auto ri = greatest_right_invariant(e1).relation;
    CHECK(check_right_invariant(e1, ri));
    auto full = FuzzyRelation::full(boolean, 3);
    CHECK_FALSE(check_right_invariant(e1, full));
    CHECK_FALSE(oracle_ri(e1, full));
    CHECK_FALSE(check_left_invariant(e1, full));

    auto wri = greatest_weakly_right_invariant(e1).relation;
    CHECK(check_weakly_right_invariant(e1, wri));
    CHECK_FALSE(check_right_invariant(e1, wri));
    CHECK_FALSE(oracle_ri(e1, wri));

    auto zero_diag = rel(boolean, {{"0", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
    CHECK_FALSE(check_weakly_right_invariant(e1, zero_diag));
    CHECK_FALSE(check_weakly_left_invariant(e1, zero_diag));

    CHECK(check_invariant(e1, wri, InvariantClass::wri));
    CHECK_THROWS_AS(check_right_invariant(e1, FuzzyRelation::identity(boolean, 2)), Error);
}

TEST_CASE("constructed relations are the greatest") {
    std::mt19937_64 rng(99);
    for (const std::string name : fixtures) {
        CAPTURE(name);
        auto a = fixture(name);
        const Lattice& l = a.lattice;
        std::vector<TruthValue> values{l.zero(), l.one()};
        if (l.kind().tag != LatticeTag::boolean) values.push_back(TruthValue::ratio(1, 2));
        bool finite = name != "e6";

        auto ri = greatest_right_invariant(a).relation;
        std::optional<FuzzyRelation> li, wri, wli;
        if (finite) {
            li = greatest_left_invariant(a).relation;
            wri = greatest_weakly_right_invariant(a).relation;
            wli = greatest_weakly_left_invariant(a).relation;
        }
        int hits = 0;
        for (int round = 0; round < 100; ++round) {
            auto rho = random_quasi_order(rng, l, a.size(), values);
            if (oracle_ri(a, rho)) {
                ++hits;
                CHECK(leq(rho, ri));
            }
            if (finite) {
                if (check_left_invariant(a, rho)) CHECK(leq(rho, *li));
                if (check_weakly_right_invariant(a, rho)) CHECK(leq(rho, *wri));
                if (check_weakly_left_invariant(a, rho)) CHECK(leq(rho, *wli));
            }
        }
        CHECK(oracle_ri(a, ri));
        MESSAGE(name << ": " << hits << " sampled right invariant quasi-orders");
    }
}
