#include "fzdet/fuzzrel.hpp"

#include <unordered_map>

namespace fzdet {

namespace {

void same_kind(const Lattice& a, const Lattice& b) {
    if (!(a == b))
        throw Error(ErrorCode::kind_mismatch, "lattice mismatch: " + a.kind().name() + " vs " + b.kind().name());
}

[[noreturn]] void dims(const std::string& what, std::size_t a, std::size_t b) {
    throw Error(ErrorCode::dimension_mismatch,
                what + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

void need_square(const FuzzyRelation& a, const char* what) {
    if (!a.is_square()) dims(std::string(what) + " needs a square relation", a.rows(), a.cols());
}

} // namespace

FuzzySet::FuzzySet(Lattice lattice, std::vector<TruthValue> values)
    : lattice_(lattice), values_(std::move(values)) {
    if (values_.empty()) throw Error(ErrorCode::dimension_mismatch, "fuzzy set over an empty index set");
    for (const auto& v : values_) lattice_.require(v);
}

FuzzySet FuzzySet::constant(const Lattice& lattice, std::size_t n, const TruthValue& v) {
    return FuzzySet(lattice, std::vector<TruthValue>(n, v));
}

FuzzySet FuzzySet::unit(const Lattice& lattice, std::size_t n, std::size_t i) {
    std::vector<TruthValue> v(n, lattice.zero());
    v.at(i) = lattice.one();
    return FuzzySet(lattice, std::move(v));
}

FuzzySet FuzzySet::parse(const Lattice& lattice, const std::vector<std::string>& values) {
    std::vector<TruthValue> v;
    v.reserve(values.size());
    for (const auto& s : values) v.push_back(lattice.parse_value(s));
    return FuzzySet(lattice, std::move(v));
}

std::size_t FuzzySet::hash() const noexcept {
    std::size_t h = values_.size();
    for (const auto& v : values_) h ^= v.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::string FuzzySet::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ' ';
        out += lattice_.format(values_[i]);
    }
    return out + "]";
}

FuzzyRelation::FuzzyRelation(Lattice lattice, std::size_t rows, std::size_t cols, std::vector<TruthValue> entries)
    : lattice_(lattice), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::dimension_mismatch, "fuzzy relation over an empty index set");
    if (entries_.size() != rows_ * cols_) dims("relation entries", entries_.size(), rows_ * cols_);
    for (const auto& v : entries_) lattice_.require(v);
}

FuzzyRelation::FuzzyRelation(const std::vector<FuzzySet>& rows) {
    if (rows.empty()) throw Error(ErrorCode::dimension_mismatch, "fuzzy relation over an empty index set");
    lattice_ = rows.front().lattice();
    rows_ = rows.size();
    cols_ = rows.front().size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        same_kind(lattice_, r.lattice());
        if (r.size() != cols_) dims("relation row", r.size(), cols_);
        entries_.insert(entries_.end(), r.values().begin(), r.values().end());
    }
}

FuzzyRelation FuzzyRelation::constant(const Lattice& lattice, std::size_t rows, std::size_t cols, const TruthValue& v) {
    return FuzzyRelation(lattice, rows, cols, std::vector<TruthValue>(rows * cols, v));
}

FuzzyRelation FuzzyRelation::identity(const Lattice& lattice, std::size_t n) {
    std::vector<TruthValue> e(n * n, lattice.zero());
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = lattice.one();
    return FuzzyRelation(lattice, n, n, std::move(e));
}

FuzzyRelation FuzzyRelation::parse(const Lattice& lattice, const std::vector<std::vector<std::string>>& rows) {
    std::vector<FuzzySet> r;
    r.reserve(rows.size());
    for (const auto& row : rows) r.push_back(FuzzySet::parse(lattice, row));
    return FuzzyRelation(r);
}

FuzzySet FuzzyRelation::row(std::size_t i) const {
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return FuzzySet(lattice_, std::vector<TruthValue>(first, first + static_cast<std::ptrdiff_t>(cols_)));
}

FuzzySet FuzzyRelation::col(std::size_t j) const {
    std::vector<TruthValue> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return FuzzySet(lattice_, std::move(v));
}

std::string FuzzyRelation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += row(i).to_string();
        out += '\n';
    }
    return out;
}

FuzzyRelation compose(const FuzzyRelation& a, const FuzzyRelation& b) {
    same_kind(a.lattice(), b.lattice());
    if (a.cols() != b.rows()) dims("compose", a.cols(), b.rows());
    const Lattice& l = a.lattice();
    std::vector<TruthValue> e;
    e.reserve(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < b.cols(); ++k) {
            TruthValue acc = l.zero();
            for (std::size_t j = 0; j < a.cols(); ++j) acc = l.join(acc, l.tensor(a(i, j), b(j, k)));
            e.push_back(std::move(acc));
        }
    return FuzzyRelation(l, a.rows(), b.cols(), std::move(e));
}

FuzzySet compose(const FuzzySet& f, const FuzzyRelation& a) {
    same_kind(f.lattice(), a.lattice());
    if (f.size() != a.rows()) dims("compose", f.size(), a.rows());
    const Lattice& l = a.lattice();
    std::vector<TruthValue> out;
    out.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        TruthValue acc = l.zero();
        for (std::size_t i = 0; i < f.size(); ++i) acc = l.join(acc, l.tensor(f[i], a(i, j)));
        out.push_back(std::move(acc));
    }
    return FuzzySet(l, std::move(out));
}

FuzzySet compose(const FuzzyRelation& a, const FuzzySet& g) {
    same_kind(a.lattice(), g.lattice());
    if (a.cols() != g.size()) dims("compose", a.cols(), g.size());
    const Lattice& l = a.lattice();
    std::vector<TruthValue> out;
    out.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        TruthValue acc = l.zero();
        for (std::size_t j = 0; j < g.size(); ++j) acc = l.join(acc, l.tensor(a(i, j), g[j]));
        out.push_back(std::move(acc));
    }
    return FuzzySet(l, std::move(out));
}

TruthValue dot(const FuzzySet& f, const FuzzySet& g) {
    same_kind(f.lattice(), g.lattice());
    if (f.size() != g.size()) dims("dot", f.size(), g.size());
    const Lattice& l = f.lattice();
    TruthValue acc = l.zero();
    for (std::size_t i = 0; i < f.size(); ++i) acc = l.join(acc, l.tensor(f[i], g[i]));
    return acc;
}

FuzzyRelation right_residual(const FuzzyRelation& a, const FuzzyRelation& b) {
    same_kind(a.lattice(), b.lattice());
    if (a.rows() != b.rows()) dims("right residual", a.rows(), b.rows());
    const Lattice& l = a.lattice();
    std::vector<TruthValue> e;
    e.reserve(a.cols() * b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            TruthValue acc = l.one();
            for (std::size_t k = 0; k < a.rows(); ++k) acc = l.meet(acc, l.residuum(a(k, i), b(k, j)));
            e.push_back(std::move(acc));
        }
    return FuzzyRelation(l, a.cols(), b.cols(), std::move(e));
}

FuzzyRelation left_residual(const FuzzyRelation& b, const FuzzyRelation& a) {
    same_kind(a.lattice(), b.lattice());
    if (a.cols() != b.cols()) dims("left residual", b.cols(), a.cols());
    const Lattice& l = a.lattice();
    std::vector<TruthValue> e;
    e.reserve(b.rows() * a.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) {
            TruthValue acc = l.one();
            for (std::size_t k = 0; k < a.cols(); ++k) acc = l.meet(acc, l.residuum(a(j, k), b(i, k)));
            e.push_back(std::move(acc));
        }
    return FuzzyRelation(l, b.rows(), a.rows(), std::move(e));
}

FuzzyRelation right_residual(const FuzzySet& f, const FuzzySet& g) {
    same_kind(f.lattice(), g.lattice());
    if (f.size() != g.size()) dims("right residual", f.size(), g.size());
    const Lattice& l = f.lattice();
    std::vector<TruthValue> e;
    e.reserve(f.size() * g.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) e.push_back(l.residuum(f[i], g[j]));
    return FuzzyRelation(l, f.size(), g.size(), std::move(e));
}

FuzzyRelation left_residual(const FuzzySet& g, const FuzzySet& f) {
    same_kind(f.lattice(), g.lattice());
    if (f.size() != g.size()) dims("left residual", g.size(), f.size());
    const Lattice& l = f.lattice();
    std::vector<TruthValue> e;
    e.reserve(f.size() * g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < f.size(); ++i) e.push_back(l.residuum(f[i], g[j]));
    return FuzzyRelation(l, g.size(), f.size(), std::move(e));
}

bool leq(const FuzzySet& a, const FuzzySet& b) {
    same_kind(a.lattice(), b.lattice());
    if (a.size() != b.size()) dims("leq", a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a.lattice().leq(a[i], b[i])) return false;
    return true;
}

bool leq(const FuzzyRelation& a, const FuzzyRelation& b) {
    same_kind(a.lattice(), b.lattice());
    if (a.rows() != b.rows() || a.cols() != b.cols()) dims("leq", a.rows() * a.cols(), b.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.lattice().leq(a(i, j), b(i, j))) return false;
    return true;
}

FuzzySet meet(const FuzzySet& a, const FuzzySet& b) {
    same_kind(a.lattice(), b.lattice());
    if (a.size() != b.size()) dims("meet", a.size(), b.size());
    std::vector<TruthValue> v;
    v.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v.push_back(a.lattice().meet(a[i], b[i]));
    return FuzzySet(a.lattice(), std::move(v));
}

FuzzyRelation meet(const FuzzyRelation& a, const FuzzyRelation& b) {
    same_kind(a.lattice(), b.lattice());
    if (a.rows() != b.rows() || a.cols() != b.cols()) dims("meet", a.rows() * a.cols(), b.rows() * b.cols());
    std::vector<TruthValue> e;
    e.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) e.push_back(a.lattice().meet(a(i, j), b(i, j)));
    return FuzzyRelation(a.lattice(), a.rows(), a.cols(), std::move(e));
}

FuzzyRelation transpose(const FuzzyRelation& a) {
    std::vector<TruthValue> e;
    e.reserve(a.rows() * a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) e.push_back(a(i, j));
    return FuzzyRelation(a.lattice(), a.cols(), a.rows(), std::move(e));
}

bool is_reflexive(const FuzzyRelation& a) {
    need_square(a, "is_reflexive");
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!a.lattice().is_one(a(i, i))) return false;
    return true;
}

bool is_transitive(const FuzzyRelation& a) {
    need_square(a, "is_transitive");
    return leq(compose(a, a), a);
}

bool is_quasi_order(const FuzzyRelation& a) {
    return is_reflexive(a) && is_transitive(a);
}

RowPartition distinct_rows(const FuzzyRelation& a) {
    RowPartition p;
    p.class_of.resize(a.rows());
    std::unordered_map<FuzzySet, std::size_t> seen;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto [it, fresh] = seen.try_emplace(a.row(i), p.classes.size());
        if (fresh) p.classes.emplace_back();
        p.classes[it->second].push_back(i);
        p.class_of[i] = it->second;
    }
    p.count = p.classes.size();
    return p;
}

} // namespace fzdet
