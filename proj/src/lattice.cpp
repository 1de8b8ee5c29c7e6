#include "fzdet/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace fzdet {

namespace {

bool parse_uint(std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational digits_to_rational(std::string_view digits) {
    boost::multiprecision::cpp_int v = 0;
    for (char c : digits) v = v * 10 + (c - '0');
    return Rational(v);
}

[[noreturn]] void syntax(std::string_view text, std::string_view why) {
    throw Error(ErrorCode::syntax_error, "invalid truth value '" + std::string(text) + "': " + std::string(why));
}

// Exact decimal rendering when the denominator is of the form 2^a 5^b.
std::optional<std::string> as_terminating_decimal(const Rational& r) {
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(r);
    cpp_int den = denominator(r);
    unsigned twos = 0, fives = 0;
    cpp_int d = den;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return std::nullopt;
    unsigned places = std::max(twos, fives);
    cpp_int scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    cpp_int scaled = num * (scale / den);
    std::string digits = scaled.str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - places);
    if (places) out += "." + digits.substr(digits.size() - places);
    return out;
}

} // namespace

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::incompatible_value: return "IncompatibleValue";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::kind_mismatch: return "KindMismatch";
    case ErrorCode::carrier_violation: return "CarrierViolation";
    case ErrorCode::unknown_symbol: return "UnknownSymbol";
    case ErrorCode::not_quasi_order: return "NotQuasiOrder";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::semantic_error: return "SemanticError";
    case ErrorCode::duplicate_section: return "DuplicateSection";
    case ErrorCode::invalid_automaton: return "InvalidAutomaton";
    }
    return "Error";
}

LatticeKind LatticeKind::chain(std::uint32_t n) {
    if (n < 1) throw Error(ErrorCode::semantic_error, "chain lattice needs n >= 1");
    return {LatticeTag::chain, n};
}

LatticeKind LatticeKind::parse(std::string_view text) {
    if (text == "boolean") return boolean();
    if (text == "godel") return godel();
    if (text == "product") return product();
    if (text == "lukasiewicz") return lukasiewicz();
    if (text.starts_with("chain:")) {
        std::uint64_t n = 0;
        if (!parse_uint(text.substr(6), n) || n > UINT32_MAX)
            throw Error(ErrorCode::syntax_error, "bad chain size in '" + std::string(text) + "'");
        return chain(static_cast<std::uint32_t>(n));
    }
    throw Error(ErrorCode::syntax_error, "unknown lattice '" + std::string(text) + "'");
}

std::string LatticeKind::name() const {
    switch (tag) {
    case LatticeTag::boolean: return "boolean";
    case LatticeTag::godel: return "godel";
    case LatticeTag::product: return "product";
    case LatticeTag::lukasiewicz: return "lukasiewicz";
    case LatticeTag::chain: return "chain:" + std::to_string(chain_n);
    }
    return "?";
}

std::size_t TruthValue::hash() const noexcept {
    if (is_index()) return std::hash<std::uint32_t>{}(as_index()) ^ 0x9e3779b97f4a7c15ull;
    return std::hash<Rational>{}(as_rational());
}

std::string TruthValue::exact_string() const {
    if (is_index()) return "a" + std::to_string(as_index());
    const Rational& r = as_rational();
    return numerator(r).str() + "/" + denominator(r).str();
}

TruthValue Lattice::zero() const {
    return is_chain() ? TruthValue::index(0) : TruthValue(Rational(0));
}

TruthValue Lattice::one() const {
    return is_chain() ? TruthValue::index(kind_.chain_n) : TruthValue(Rational(1));
}

bool Lattice::contains(const TruthValue& x) const {
    if (is_chain()) return x.is_index() && x.as_index() <= kind_.chain_n;
    if (x.is_index()) return false;
    const Rational& r = x.as_rational();
    if (kind_.tag == LatticeTag::boolean) return r == 0 || r == 1;
    return r >= 0 && r <= 1;
}

void Lattice::require(const TruthValue& x) const {
    if (!contains(x))
        throw Error(ErrorCode::incompatible_value,
                    "value " + x.exact_string() + " is not in the carrier of " + kind_.name());
}

bool Lattice::leq(const TruthValue& x, const TruthValue& y) const {
    require(x);
    require(y);
    if (is_chain()) return x.as_index() <= y.as_index();
    return x.as_rational() <= y.as_rational();
}

TruthValue Lattice::meet(const TruthValue& x, const TruthValue& y) const {
    return leq(x, y) ? x : y;
}

TruthValue Lattice::join(const TruthValue& x, const TruthValue& y) const {
    return leq(x, y) ? y : x;
}

TruthValue Lattice::tensor(const TruthValue& x, const TruthValue& y) const {
    require(x);
    require(y);
    switch (kind_.tag) {
    case LatticeTag::boolean:
    case LatticeTag::godel:
        return x.as_rational() <= y.as_rational() ? x : y;
    case LatticeTag::product:
        return TruthValue(x.as_rational() * y.as_rational());
    case LatticeTag::lukasiewicz: {
        Rational s = x.as_rational() + y.as_rational() - 1;
        return TruthValue(s > 0 ? s : Rational(0));
    }
    case LatticeTag::chain: {
        std::int64_t k = std::int64_t(x.as_index()) + y.as_index() - kind_.chain_n;
        return TruthValue::index(static_cast<std::uint32_t>(std::max<std::int64_t>(k, 0)));
    }
    }
    return zero();
}

TruthValue Lattice::residuum(const TruthValue& x, const TruthValue& y) const {
    require(x);
    require(y);
    switch (kind_.tag) {
    case LatticeTag::boolean:
    case LatticeTag::godel:
        return x.as_rational() <= y.as_rational() ? one() : y;
    case LatticeTag::product:
        if (x.as_rational() <= y.as_rational()) return one();
        return TruthValue(y.as_rational() / x.as_rational());
    case LatticeTag::lukasiewicz: {
        Rational s = 1 - x.as_rational() + y.as_rational();
        return TruthValue(s < 1 ? s : Rational(1));
    }
    case LatticeTag::chain: {
        std::uint64_t k = std::uint64_t(kind_.chain_n) - x.as_index() + y.as_index();
        return TruthValue::index(static_cast<std::uint32_t>(std::min<std::uint64_t>(k, kind_.chain_n)));
    }
    }
    return zero();
}

TruthValue Lattice::biresiduum(const TruthValue& x, const TruthValue& y) const {
    return meet(residuum(x, y), residuum(y, x));
}

TruthValue Lattice::parse_value(std::string_view text) const {
    if (text.empty()) syntax(text, "empty");

    TruthValue v;
    if (is_chain()) {
        std::string_view digits = text;
        if (digits.front() == 'a') digits.remove_prefix(1);
        std::uint64_t k = 0;
        if (!parse_uint(digits, k) || !all_digits(digits)) syntax(text, "expected a chain index");
        if (k > kind_.chain_n)
            throw Error(ErrorCode::carrier_violation,
                        "value '" + std::string(text) + "' is outside " + kind_.name());
        return TruthValue::index(static_cast<std::uint32_t>(k));
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto p = text.substr(0, slash), q = text.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) syntax(text, "expected p/q");
        Rational den = digits_to_rational(q);
        if (den == 0) syntax(text, "zero denominator");
        v = TruthValue(digits_to_rational(p) / den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || !all_digits(fp)) syntax(text, "expected a decimal");
        Rational scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        v = TruthValue(digits_to_rational(ip) + digits_to_rational(fp) / scale);
    } else {
        if (!all_digits(text)) syntax(text, "expected a number");
        v = TruthValue(digits_to_rational(text));
    }
    if (!contains(v))
        throw Error(ErrorCode::carrier_violation,
                    "value '" + std::string(text) + "' is outside " + kind_.name());
    return v;
}

std::string Lattice::format(const TruthValue& x) const {
    if (x.is_index()) return "a" + std::to_string(x.as_index());
    const Rational& r = x.as_rational();
    if (auto dec = as_terminating_decimal(r)) return *dec;
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace fzdet
