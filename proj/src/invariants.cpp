#include "fzdet/invariants.hpp"

#include "fzdet/determinize.hpp"

namespace fzdet {

void Budget::check() const {
    if (max_iterations == 0 || max_family == 0 || max_states == 0)
        throw Error(ErrorCode::semantic_error, "budget limits must be positive");
}

std::string_view to_string(InvariantClass c) {
    switch (c) {
    case InvariantClass::ri: return "ri";
    case InvariantClass::li: return "li";
    case InvariantClass::wri: return "wri";
    case InvariantClass::wli: return "wli";
    }
    return "?";
}

InvariantClass parse_invariant_class(std::string_view text) {
    if (text == "ri") return InvariantClass::ri;
    if (text == "li") return InvariantClass::li;
    if (text == "wri") return InvariantClass::wri;
    if (text == "wli") return InvariantClass::wli;
    throw Error(ErrorCode::syntax_error, "unknown quasi-order kind '" + std::string(text) + "'");
}

namespace {

void need_square_over(const FuzzyAutomaton& a, const FuzzyRelation& r) {
    if (r.rows() != a.size() || r.cols() != a.size())
        throw Error(ErrorCode::dimension_mismatch, "relation is " + std::to_string(r.rows()) + "x" +
                                                       std::to_string(r.cols()) + " on a " +
                                                       std::to_string(a.size()) + "-state automaton");
    if (!(r.lattice() == a.lattice)) throw Error(ErrorCode::kind_mismatch, "relation and automaton lattices differ");
}

// Shared fixpoint loop; refine computes the per-symbol meet factor.
template <class Refine>
QuasiOrderReport descend(const FuzzyAutomaton& a, FuzzyRelation current, InvariantClass cls, const Budget& budget,
                         const IterateObserver& observe, Refine refine) {
    std::size_t k = 1;
    if (observe) observe(k, current);
    for (;;) {
        FuzzyRelation next = current;
        for (const auto& d : a.delta) next = meet(next, refine(d, current));
        if (next == current) break;
        if (++k > budget.max_iterations) throw BudgetExceeded("max_iterations", budget.max_iterations);
        current = std::move(next);
        if (observe) observe(k, current);
    }
    QuasiOrderReport r;
    r.relation = std::move(current);
    r.class_checked = cls;
    r.iterations_used = k;
    r.reflexive = is_reflexive(r.relation);
    r.transitive = is_transitive(r.relation);
    return r;
}

} // namespace

QuasiOrderReport greatest_right_invariant(const FuzzyAutomaton& a, const Budget& budget,
                                          const IterateObserver& observe) {
    require_valid(a);
    budget.check();
    auto r = descend(a, left_residual(a.tau, a.tau), InvariantClass::ri, budget, observe,
                     [](const FuzzyRelation& d, const FuzzyRelation& phi) {
                         FuzzyRelation dp = compose(d, phi);
                         return left_residual(dp, dp);
                     });
    r.holds = check_right_invariant(a, r.relation);
    return r;
}

QuasiOrderReport greatest_left_invariant(const FuzzyAutomaton& a, const Budget& budget,
                                         const IterateObserver& observe) {
    require_valid(a);
    budget.check();
    auto r = descend(a, right_residual(a.sigma, a.sigma), InvariantClass::li, budget, observe,
                     [](const FuzzyRelation& d, const FuzzyRelation& psi) {
                         FuzzyRelation pd = compose(psi, d);
                         return right_residual(pd, pd);
                     });
    r.holds = check_left_invariant(a, r.relation);
    return r;
}

QuasiOrderReport greatest_weakly_right_invariant(const FuzzyAutomaton& a, const Budget& budget) {
    require_valid(a);
    budget.check();
    auto family = tau_family(a, budget.max_family);
    FuzzyRelation phi = FuzzyRelation::full(a.lattice, a.size());
    for (const auto& t : family) phi = meet(phi, left_residual(t, t));

    QuasiOrderReport r;
    r.class_checked = InvariantClass::wri;
    r.family_size = family.size();
    r.reflexive = is_reflexive(phi);
    r.transitive = is_transitive(phi);
    r.holds = r.reflexive;
    for (const auto& t : family) r.holds = r.holds && leq(compose(phi, t), t);
    r.relation = std::move(phi);
    return r;
}

QuasiOrderReport greatest_weakly_left_invariant(const FuzzyAutomaton& a, const Budget& budget) {
    require_valid(a);
    budget.check();
    auto family = sigma_family(a, budget.max_family);
    FuzzyRelation psi = FuzzyRelation::full(a.lattice, a.size());
    for (const auto& s : family) psi = meet(psi, right_residual(s, s));

    QuasiOrderReport r;
    r.class_checked = InvariantClass::wli;
    r.family_size = family.size();
    r.reflexive = is_reflexive(psi);
    r.transitive = is_transitive(psi);
    r.holds = r.reflexive;
    for (const auto& s : family) r.holds = r.holds && leq(compose(s, psi), s);
    r.relation = std::move(psi);
    return r;
}

QuasiOrderReport greatest_quasi_order(const FuzzyAutomaton& a, InvariantClass c, const Budget& budget) {
    switch (c) {
    case InvariantClass::ri: return greatest_right_invariant(a, budget);
    case InvariantClass::li: return greatest_left_invariant(a, budget);
    case InvariantClass::wri: return greatest_weakly_right_invariant(a, budget);
    case InvariantClass::wli: return greatest_weakly_left_invariant(a, budget);
    }
    throw Error(ErrorCode::semantic_error, "unknown invariant class");
}

bool check_right_invariant(const FuzzyAutomaton& a, const FuzzyRelation& phi) {
    need_square_over(a, phi);
    for (const auto& d : a.delta)
        if (!leq(compose(phi, d), compose(d, phi))) return false;
    return leq(compose(phi, a.tau), a.tau);
}

bool check_left_invariant(const FuzzyAutomaton& a, const FuzzyRelation& psi) {
    need_square_over(a, psi);
    for (const auto& d : a.delta)
        if (!leq(compose(d, psi), compose(psi, d))) return false;
    return leq(compose(a.sigma, psi), a.sigma);
}

bool check_weakly_right_invariant(const FuzzyAutomaton& a, const FuzzyRelation& phi, const Budget& budget) {
    need_square_over(a, phi);
    if (!is_reflexive(phi)) return false;
    for (const auto& t : tau_family(a, budget.max_family))
        if (!leq(compose(phi, t), t)) return false;
    return true;
}

bool check_weakly_left_invariant(const FuzzyAutomaton& a, const FuzzyRelation& psi, const Budget& budget) {
    need_square_over(a, psi);
    if (!is_reflexive(psi)) return false;
    for (const auto& s : sigma_family(a, budget.max_family))
        if (!leq(compose(s, psi), s)) return false;
    return true;
}

bool check_invariant(const FuzzyAutomaton& a, const FuzzyRelation& rel, InvariantClass c, const Budget& budget) {
    switch (c) {
    case InvariantClass::ri: return check_right_invariant(a, rel);
    case InvariantClass::li: return check_left_invariant(a, rel);
    case InvariantClass::wri: return check_weakly_right_invariant(a, rel, budget);
    case InvariantClass::wli: return check_weakly_left_invariant(a, rel, budget);
    }
    return false;
}

} // namespace fzdet
