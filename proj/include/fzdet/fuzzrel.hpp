#pragma once

// Dense fuzzy sets (vectors) and fuzzy relations (matrices) over a finite
// index set, with max-tensor compositions and residuals.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fzdet/lattice.hpp"

namespace fzdet {

class FuzzySet {
public:
    FuzzySet() = default;
    // Throws dimension_mismatch for an empty vector, incompatible_value for
    // entries outside the carrier.
    FuzzySet(Lattice lattice, std::vector<TruthValue> values);

    static FuzzySet constant(const Lattice& lattice, std::size_t n, const TruthValue& v);
    static FuzzySet zeros(const Lattice& lattice, std::size_t n) { return constant(lattice, n, lattice.zero()); }
    static FuzzySet ones(const Lattice& lattice, std::size_t n) { return constant(lattice, n, lattice.one()); }
    // Single 1 at position i, 0 elsewhere.
    static FuzzySet unit(const Lattice& lattice, std::size_t n, std::size_t i);
    static FuzzySet parse(const Lattice& lattice, const std::vector<std::string>& values);

    const Lattice& lattice() const noexcept { return lattice_; }
    std::size_t size() const noexcept { return values_.size(); }
    const TruthValue& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<TruthValue>& values() const noexcept { return values_; }

    std::size_t hash() const noexcept;
    std::string to_string() const; // "[0 1/2 1]"

    friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
        return a.lattice_ == b.lattice_ && a.values_ == b.values_;
    }

private:
    Lattice lattice_;
    std::vector<TruthValue> values_;
};

class FuzzyRelation {
public:
    FuzzyRelation() = default;
    // Row-major entries; rows, cols >= 1.
    FuzzyRelation(Lattice lattice, std::size_t rows, std::size_t cols, std::vector<TruthValue> entries);
    explicit FuzzyRelation(const std::vector<FuzzySet>& rows);

    static FuzzyRelation constant(const Lattice& lattice, std::size_t rows, std::size_t cols, const TruthValue& v);
    static FuzzyRelation identity(const Lattice& lattice, std::size_t n);
    static FuzzyRelation full(const Lattice& lattice, std::size_t n) { return constant(lattice, n, n, lattice.one()); }
    static FuzzyRelation parse(const Lattice& lattice, const std::vector<std::vector<std::string>>& rows);

    const Lattice& lattice() const noexcept { return lattice_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const TruthValue& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    FuzzySet row(std::size_t i) const;
    FuzzySet col(std::size_t j) const;

    std::string to_string() const; // one bracketed row per line

    friend bool operator==(const FuzzyRelation& a, const FuzzyRelation& b) {
        return a.lattice_ == b.lattice_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    Lattice lattice_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<TruthValue> entries_;
};

// (a∘b)(i,k) = sup_j a(i,j) ⊗ b(j,k)
FuzzyRelation compose(const FuzzyRelation& a, const FuzzyRelation& b);
FuzzySet compose(const FuzzySet& f, const FuzzyRelation& a);
FuzzySet compose(const FuzzyRelation& a, const FuzzySet& g);
TruthValue dot(const FuzzySet& f, const FuzzySet& g);

// (a\b)(i,j) = inf_k a(k,i) -> b(k,j)
FuzzyRelation right_residual(const FuzzyRelation& a, const FuzzyRelation& b);
// (b/a)(i,j) = inf_k a(j,k) -> b(i,k)
FuzzyRelation left_residual(const FuzzyRelation& b, const FuzzyRelation& a);
// (f\g)(i,j) = f(i) -> g(j)
FuzzyRelation right_residual(const FuzzySet& f, const FuzzySet& g);
// (g/f)(j,i) = f(i) -> g(j)
FuzzyRelation left_residual(const FuzzySet& g, const FuzzySet& f);

bool leq(const FuzzySet& a, const FuzzySet& b);
bool leq(const FuzzyRelation& a, const FuzzyRelation& b);
FuzzySet meet(const FuzzySet& a, const FuzzySet& b);
FuzzyRelation meet(const FuzzyRelation& a, const FuzzyRelation& b);
FuzzyRelation transpose(const FuzzyRelation& a);

bool is_reflexive(const FuzzyRelation& a);
bool is_transitive(const FuzzyRelation& a);
bool is_quasi_order(const FuzzyRelation& a);

struct RowPartition {
    std::size_t count = 0;
    std::vector<std::vector<std::size_t>> classes; // in order of first row index
    std::vector<std::size_t> class_of;             // row -> class
};

RowPartition distinct_rows(const FuzzyRelation& a);

} // namespace fzdet

template <>
struct std::hash<fzdet::FuzzySet> {
    std::size_t operator()(const fzdet::FuzzySet& v) const noexcept { return v.hash(); }
};
