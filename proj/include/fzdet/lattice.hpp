#pragma once

// Truth-value algebra for the linearly ordered complete residuated lattices
// used throughout the library: Boolean, Goedel, product (Goguen),
// Lukasiewicz and the finite Lukasiewicz chain {a_0 < ... < a_n}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "fzdet/error.hpp"

namespace fzdet {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

enum class LatticeTag { boolean, godel, product, lukasiewicz, chain };

struct LatticeKind {
    LatticeTag tag = LatticeTag::boolean;
    std::uint32_t chain_n = 0; // only meaningful for chain

    static LatticeKind boolean() { return {LatticeTag::boolean, 0}; }
    static LatticeKind godel() { return {LatticeTag::godel, 0}; }
    static LatticeKind product() { return {LatticeTag::product, 0}; }
    static LatticeKind lukasiewicz() { return {LatticeTag::lukasiewicz, 0}; }
    static LatticeKind chain(std::uint32_t n);

    // "boolean", "godel", "product", "lukasiewicz" or "chain:<n>".
    static LatticeKind parse(std::string_view text);
    std::string name() const;

    friend bool operator==(const LatticeKind&, const LatticeKind&) = default;
};

// A truth degree: an exact rational in [0,1] for the interval structures,
// an index k in 0..n for chain(n). Which alternative is valid is decided by
// the Lattice the value is used with, not by the value itself.
class TruthValue {
public:
    struct ChainIndex {
        std::uint32_t k = 0;
        friend bool operator==(ChainIndex, ChainIndex) = default;
    };

    TruthValue() : value_(Rational(0)) {}
    explicit TruthValue(Rational r) : value_(std::move(r)) {}
    explicit TruthValue(ChainIndex idx) : value_(idx) {}

    static TruthValue ratio(long long num, long long den = 1) {
        return TruthValue(Rational(num, den));
    }
    static TruthValue index(std::uint32_t k) { return TruthValue(ChainIndex{k}); }

    bool is_index() const noexcept { return std::holds_alternative<ChainIndex>(value_); }
    const Rational& as_rational() const { return std::get<Rational>(value_); }
    std::uint32_t as_index() const { return std::get<ChainIndex>(value_).k; }

    std::size_t hash() const noexcept;

    // Exact equality; values of different representations are never equal.
    friend bool operator==(const TruthValue& a, const TruthValue& b) { return a.value_ == b.value_; }

    // Canonical "p/q" (or "a<k>") rendering, used for JSON and debugging.
    std::string exact_string() const;

private:
    std::variant<Rational, ChainIndex> value_;
};

class Lattice {
public:
    Lattice() = default;
    explicit Lattice(LatticeKind kind) : kind_(kind) {}

    const LatticeKind& kind() const noexcept { return kind_; }
    bool is_chain() const noexcept { return kind_.tag == LatticeTag::chain; }

    TruthValue zero() const;
    TruthValue one() const;

    bool contains(const TruthValue& x) const;
    // Throws Error(incompatible_value) unless x is in the carrier.
    void require(const TruthValue& x) const;

    bool leq(const TruthValue& x, const TruthValue& y) const;
    bool is_one(const TruthValue& x) const { return x == one(); }
    bool is_zero(const TruthValue& x) const { return x == zero(); }

    TruthValue meet(const TruthValue& x, const TruthValue& y) const;
    TruthValue join(const TruthValue& x, const TruthValue& y) const;
    TruthValue tensor(const TruthValue& x, const TruthValue& y) const;
    TruthValue residuum(const TruthValue& x, const TruthValue& y) const;
    TruthValue biresiduum(const TruthValue& x, const TruthValue& y) const;

    // Exact textual values: "0.25", "1/3", "1", and for chains "a3" or "3".
    // Decimals are converted digit by digit, never through floating point.
    // Throws Error(syntax_error) on malformed text and
    // Error(carrier_violation) when the value lies outside the carrier.
    TruthValue parse_value(std::string_view text) const;
    // Shortest exact rendering accepted by parse_value.
    std::string format(const TruthValue& x) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    LatticeKind kind_;
};

} // namespace fzdet

template <>
struct std::hash<fzdet::TruthValue> {
    std::size_t operator()(const fzdet::TruthValue& v) const noexcept { return v.hash(); }
};
