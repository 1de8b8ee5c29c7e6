#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fzdet/io.hpp"

namespace fzdet {

namespace {

enum Exit { ok = 0, usage = 1, invalid = 2, budget = 3 };

struct Options {
    std::string file;
    std::string method = "nerode";
    std::string kind = "ri";
    std::string format = "text";
    std::string out_path;
    std::string word;
    std::string methods = "nerode,ri,wri,children-nerode,brzozowski";
    std::size_t maxlen = 6;
    Budget budget;
};

bool is_json_path(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::syntax_error, "cannot write '" + o.out_path + "'");
    f << text;
}

double millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// True when c agrees with a (or with its reversal) on every word up to maxlen.
bool spot_check(const FuzzyAutomaton& a, const DetResult& r, std::size_t maxlen) {
    for (const auto& w : words_up_to(a.alphabet.size(), maxlen)) {
        Word src = r.method.reversed_language() ? reversed(w) : w;
        if (!(cdfa_eval(r.cdfa, w) == language_degree(a, src))) return false;
    }
    return true;
}

int cmd_determinize(const Options& o, std::ostream& out) {
    FuzzyAutomaton a = load_automaton(o.file);
    DetMethod m = DetMethod::parse(o.method);
    auto t0 = std::chrono::steady_clock::now();
    DetResult r = run_method(a, m, o.budget);
    double ms = millis_since(t0);

    std::string text;
    if (o.format == "json") {
        text = to_json(r, ms).dump(2) + "\n";
    } else if (o.format == "dot") {
        text = emit_dot(r.cdfa);
    } else {
        std::ostringstream s;
        s << "method: " << m.name() << '\n'
          << "input states: " << a.size() << '\n'
          << "states_created: " << r.states_created << '\n'
          << "closure_checks: " << r.closure_checks << '\n'
          << "reversed language: " << (m.reversed_language() ? "yes" : "no") << '\n'
          << emit_text(r.cdfa);
        text = s.str();
    }
    write_output(o, text, out);
    return ok;
}

int cmd_quasiorder(const Options& o, std::ostream& out) {
    FuzzyAutomaton a = load_automaton(o.file);
    InvariantClass c = parse_invariant_class(o.kind);
    QuasiOrderReport r = greatest_quasi_order(a, c, o.budget);
    RowPartition rows = distinct_rows(r.relation);

    std::string text;
    if (o.format == "json") {
        nlohmann::json j;
        j["kind"] = std::string(to_string(c));
        j["relation"] = to_json(r.relation);
        j["distinct_rows"] = rows.count;
        j["reflexive"] = r.reflexive;
        j["transitive"] = r.transitive;
        j["holds"] = r.holds;
        j["iterations"] = r.iterations_used;
        j["family_size"] = r.family_size;
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "kind: " << to_string(c) << '\n' << r.relation.to_string();
        s << "distinct rows: " << rows.count << '\n'
          << "reflexive: " << (r.reflexive ? "yes" : "no") << '\n'
          << "transitive: " << (r.transitive ? "yes" : "no") << '\n'
          << "invariant: " << (r.holds ? "yes" : "no") << '\n';
        if (c == InvariantClass::ri || c == InvariantClass::li)
            s << "iterations: " << r.iterations_used << '\n';
        else
            s << "family size: " << r.family_size << '\n';
        text = s.str();
    }
    write_output(o, text, out);
    return ok;
}

int cmd_eval(const Options& o, std::ostream& out) {
    if (is_json_path(o.file)) {
        std::ifstream in(o.file, std::ios::binary);
        if (!in) throw Error(ErrorCode::syntax_error, "cannot open '" + o.file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(ErrorCode::syntax_error, 0, o.file + ": " + e.what());
        }
        Cdfa c = cdfa_from_json(j);
        out << c.lattice.format(cdfa_eval(c, parse_word(c.alphabet, o.word))) << '\n';
        return ok;
    }
    FuzzyAutomaton a = load_automaton(o.file);
    out << a.lattice.format(language_degree(a, a.word(o.word))) << '\n';
    return ok;
}

int cmd_compare(const Options& o, std::ostream& out) {
    FuzzyAutomaton a = load_automaton(o.file);
    std::vector<std::string> names;
    {
        std::string item;
        std::istringstream in(o.methods);
        while (std::getline(in, item, ','))
            if (!item.empty()) names.push_back(item);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<DetMethod> methods;
    for (const auto& n : names) methods.push_back(DetMethod::parse(n));

    int code = ok;
    auto rows = nlohmann::json::array();
    std::ostringstream s;
    for (std::size_t i = 0; i < names.size(); ++i) {
        nlohmann::json row;
        row["method"] = names[i];
        auto t0 = std::chrono::steady_clock::now();
        try {
            DetResult r = run_method(a, methods[i], o.budget);
            bool eq = spot_check(a, r, o.maxlen);
            row["states"] = r.cdfa.size();
            row["equivalent"] = eq;
            row["reversed_language"] = methods[i].reversed_language();
            s << names[i] << ": states " << r.cdfa.size() << ", "
              << (eq ? "equivalent" : "NOT equivalent") << " <= " << o.maxlen
              << (methods[i].reversed_language() ? " (reverse language)" : "") << '\n';
        } catch (const BudgetExceeded& e) {
            row["budget_exceeded"] = e.limit_name();
            s << names[i] << ": " << e.what() << '\n';
            code = budget;
        }
        row["time_ms"] = millis_since(t0);
        rows.push_back(std::move(row));
    }
    write_output(o, o.format == "json" ? rows.dump(2) + "\n" : s.str(), out);
    return code;
}

int cmd_validate(const Options& o, std::ostream& out) {
    FuzzyAutomaton a = load_automaton(o.file);
    out << "ok: " << a.size() << " states, " << a.alphabet.size() << " symbols, " << a.lattice.kind().name() << '\n';
    return ok;
}

void add_budget(CLI::App* cmd, Options& o) {
    cmd->add_option("--max-states", o.budget.max_states, "Limit on distinct determinization vectors")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", o.budget.max_iterations, "Limit on fixpoint iterations")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-family", o.budget.max_family, "Limit on sigma_u / tau_u family size")
        ->check(CLI::PositiveNumber);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Determinization and state reduction of fuzzy finite automata", "fzdet"};
    app.require_subcommand(1);

    auto* det = app.add_subcommand("determinize", "Build a crisp-deterministic automaton");
    det->add_option("file", o.file, "Automaton (.fza)")->required();
    det->add_option("--method", o.method, "Construction")
        ->check(CLI::IsMember({"nerode", "ri", "wri", "children-nerode", "children-ri", "children-wri",
                               "reverse-nerode", "li", "wli", "brzozowski", "brzozowski-li", "brzozowski-wli"}));
    det->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    det->add_option("--out", o.out_path, "Write output to FILE");
    add_budget(det, o);

    auto* qo = app.add_subcommand("quasiorder", "Compute a greatest invariant fuzzy quasi-order");
    qo->add_option("file", o.file, "Automaton (.fza)")->required();
    qo->add_option("--kind", o.kind, "Invariance class")->check(CLI::IsMember({"ri", "li", "wri", "wli"}));
    qo->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    qo->add_option("--out", o.out_path, "Write output to FILE");
    add_budget(qo, o);

    auto* ev = app.add_subcommand("eval", "Degree of a word in an automaton (.fza) or emitted CDFA (.json)");
    ev->add_option("file", o.file, "Automaton")->required();
    ev->add_option("--word", o.word, "Word, e.g. xyx or \"x y x\"; empty for the empty word");

    auto* cmp = app.add_subcommand("compare", "Run several methods and check them against the source");
    cmp->add_option("file", o.file, "Automaton (.fza)")->required();
    cmp->add_option("--methods", o.methods, "Comma-separated method list");
    cmp->add_option("--maxlen", o.maxlen, "Longest word checked");
    cmp->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmp->add_option("--out", o.out_path, "Write output to FILE");
    add_budget(cmp, o);

    auto* val = app.add_subcommand("validate", "Parse and validate an automaton file");
    val->add_option("file", o.file, "Automaton (.fza)")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (det->parsed()) return cmd_determinize(o, out);
        if (qo->parsed()) return cmd_quasiorder(o, out);
        if (ev->parsed()) return cmd_eval(o, out);
        if (cmp->parsed()) return cmd_compare(o, out);
        if (val->parsed()) return cmd_validate(o, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return budget;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return invalid;
    }
    return usage;
}

} // namespace fzdet
