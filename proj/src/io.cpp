#include "fzdet/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace fzdet {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line l{number, {}};
        for (std::string tok; in >> tok;) l.tokens.push_back(tok);
        if (!l.tokens.empty()) lines.push_back(std::move(l));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
    throw ParseError(ErrorCode::syntax_error, line, msg);
}

[[noreturn]] void semantic(std::size_t line, const std::string& msg) {
    throw ParseError(ErrorCode::semantic_error, line, msg);
}

TruthValue parse_cell(const Lattice& l, const std::string& tok, std::size_t line) {
    try {
        return l.parse_value(tok);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::carrier_violation) semantic(line, std::string("carrier violation: ") + e.what());
        syntax(line, e.what());
    }
}

std::vector<TruthValue> parse_values(const Lattice& l, const Line& line, std::size_t first, std::size_t n,
                                     const std::string& what) {
    if (line.tokens.size() - first != n)
        semantic(line.number, what + " needs " + std::to_string(n) + " values, got " +
                                  std::to_string(line.tokens.size() - first));
    std::vector<TruthValue> v;
    for (std::size_t i = first; i < line.tokens.size(); ++i) v.push_back(parse_cell(l, line.tokens[i], line.number));
    return v;
}

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '<': out += "\\<"; break;
        case '>': out += "\\>"; break;
        case '{': out += "\\{"; break;
        case '}': out += "\\}"; break;
        case '|': out += "\\|"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

FuzzyAutomaton parse_automaton(std::string_view text) {
    static const char* const order[] = {"lattice", "states", "alphabet", "initial", "terminal"};
    auto lines = tokenize(text);
    FuzzyAutomaton a;
    std::size_t n = 0;
    std::size_t stage = 0; // number of header sections seen
    std::map<std::string, std::size_t> trans_seen;
    std::vector<std::optional<FuzzyRelation>> delta;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& key = line.tokens[0];

        bool header = false;
        for (std::size_t s = 0; s < 5; ++s)
            if (key == order[s]) {
                header = true;
                if (s < stage || !trans_seen.empty())
                    throw ParseError(ErrorCode::duplicate_section, line.number,
                                     s < stage ? "duplicate section '" + key + "'"
                                               : "section '" + key + "' after trans blocks");
                if (s > stage) syntax(line.number, "expected section '" + std::string(order[stage]) + "', got '" + key + "'");
            }

        if (key == "lattice") {
            if (line.tokens.size() != 2) syntax(line.number, "usage: lattice <kind>");
            try {
                a.lattice = Lattice(LatticeKind::parse(line.tokens[1]));
            } catch (const Error& e) {
                syntax(line.number, e.what());
            }
        } else if (key == "states") {
            std::uint64_t count = 0;
            if (line.tokens.size() < 2) syntax(line.number, "usage: states <n> [names]");
            try {
                std::size_t used = 0;
                count = std::stoull(line.tokens[1], &used);
                if (used != line.tokens[1].size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                syntax(line.number, "bad state count '" + line.tokens[1] + "'");
            }
            if (count == 0) semantic(line.number, "an automaton needs at least one state");
            n = count;
            if (line.tokens.size() > 2) {
                if (line.tokens.size() - 2 != n)
                    semantic(line.number, "expected " + std::to_string(n) + " state names");
                a.state_names.assign(line.tokens.begin() + 2, line.tokens.end());
            }
        } else if (key == "alphabet") {
            if (line.tokens.size() < 2) semantic(line.number, "alphabet is empty");
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                for (const auto& s : a.alphabet)
                    if (s == line.tokens[i]) semantic(line.number, "duplicate symbol '" + s + "'");
                a.alphabet.push_back(line.tokens[i]);
            }
            delta.assign(a.alphabet.size(), std::nullopt);
        } else if (key == "initial") {
            a.sigma = FuzzySet(a.lattice, parse_values(a.lattice, line, 1, n, "initial"));
        } else if (key == "terminal") {
            a.tau = FuzzySet(a.lattice, parse_values(a.lattice, line, 1, n, "terminal"));
        } else if (key == "trans") {
            if (stage < 5) syntax(line.number, "expected section '" + std::string(order[stage]) + "', got 'trans'");
            if (line.tokens.size() != 2) syntax(line.number, "usage: trans <symbol>");
            const std::string& sym = line.tokens[1];
            std::size_t x = a.alphabet.size();
            for (std::size_t i = 0; i < a.alphabet.size(); ++i)
                if (a.alphabet[i] == sym) x = i;
            if (x == a.alphabet.size())
                throw ParseError(ErrorCode::unknown_symbol, line.number, "unknown symbol '" + sym + "'");
            if (!trans_seen.emplace(sym, line.number).second)
                throw ParseError(ErrorCode::duplicate_section, line.number, "duplicate section 'trans " + sym + "'");
            std::vector<TruthValue> entries;
            for (std::size_t r = 0; r < n; ++r) {
                if (li + 1 >= lines.size() || lines[li + 1].tokens[0] == "trans")
                    semantic(li + 1 < lines.size() ? lines[li + 1].number : line.number,
                             "trans " + sym + " needs " + std::to_string(n) + " rows");
                const Line& row = lines[++li];
                auto v = parse_values(a.lattice, row, 0, n, "row " + std::to_string(r + 1) + " of trans " + sym);
                entries.insert(entries.end(), v.begin(), v.end());
            }
            delta[x] = FuzzyRelation(a.lattice, n, n, std::move(entries));
        } else {
            syntax(line.number, "unknown section '" + key + "'");
        }
        if (header) ++stage;
    }

    std::size_t last = lines.empty() ? 0 : lines.back().number;
    if (stage < 5) semantic(last, "missing section '" + std::string(order[stage]) + "'");
    for (std::size_t x = 0; x < delta.size(); ++x) {
        if (!delta[x]) semantic(last, "missing section 'trans " + a.alphabet[x] + "'");
        a.delta.push_back(std::move(*delta[x]));
    }
    auto violations = validate(a);
    if (!violations.empty()) semantic(0, violations.front().message);
    return a;
}

FuzzyAutomaton load_automaton(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::syntax_error, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_automaton(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.code(), 0, path + ": " + e.what());
    }
}

std::string serialize_automaton(const FuzzyAutomaton& a) {
    require_valid(a);
    const Lattice& l = a.lattice;
    std::ostringstream out;
    auto values = [&](const FuzzySet& f) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << l.format(f[i]);
        out << '\n';
    };
    out << "lattice " << l.kind().name() << '\n';
    out << "states " << a.size();
    for (const auto& s : a.state_names) out << ' ' << s;
    out << '\n';
    out << "alphabet";
    for (const auto& s : a.alphabet) out << ' ' << s;
    out << '\n';
    out << "initial ";
    values(a.sigma);
    out << "terminal ";
    values(a.tau);
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        out << "trans " << a.alphabet[x] << '\n';
        for (std::size_t i = 0; i < a.size(); ++i) values(a.delta[x].row(i));
    }
    return out.str();
}

std::string emit_dot(const Cdfa& c) {
    std::ostringstream out;
    out << "digraph cdfa {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=ellipse];\n";
    out << "  start [shape=point];\n";
    out << "  start -> s" << c.initial << ";\n";
    for (std::size_t s = 0; s < c.size(); ++s) {
        std::string label = s < c.labels.size() ? c.labels[s] : "q" + std::to_string(s);
        out << "  s" << s << " [label=\"" << escape(label) << "\\n" << escape(c.lattice.format(c.term[s]))
            << "\"];\n";
    }
    for (std::size_t s = 0; s < c.size(); ++s) {
        // Targets in order of their first symbol; symbols sharing a target merge.
        std::vector<std::pair<std::size_t, std::string>> edges;
        for (std::size_t x = 0; x < c.alphabet.size(); ++x) {
            std::size_t t = c.next[s][x];
            auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == t; });
            if (it == edges.end())
                edges.emplace_back(t, c.alphabet[x]);
            else
                it->second += "," + c.alphabet[x];
        }
        for (const auto& [t, label] : edges)
            out << "  s" << s << " -> s" << t << " [label=\"" << escape(label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_text(const Cdfa& c) {
    std::ostringstream out;
    out << "states: " << c.size() << '\n';
    out << "initial: " << c.initial << '\n';
    for (std::size_t s = 0; s < c.size(); ++s) {
        out << "  " << s << ' ' << (s < c.labels.size() ? c.labels[s] : "") << " term=" << c.lattice.format(c.term[s]);
        for (std::size_t x = 0; x < c.alphabet.size(); ++x) out << ' ' << c.alphabet[x] << "->" << c.next[s][x];
        if (s < c.provenance.size()) out << ' ' << c.provenance[s].to_string();
        out << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const Cdfa& c) {
    nlohmann::json j;
    j["lattice"] = c.lattice.kind().name();
    j["alphabet"] = c.alphabet;
    j["initial"] = c.initial;
    auto states = nlohmann::json::array();
    for (std::size_t s = 0; s < c.size(); ++s) {
        nlohmann::json st;
        st["id"] = s;
        if (s < c.labels.size()) st["label"] = c.labels[s];
        st["term"] = c.term[s].exact_string();
        st["next"] = c.next[s];
        if (s < c.witness.size()) st["witness"] = word_to_string(c.alphabet, c.witness[s]);
        if (s < c.provenance.size()) {
            auto v = nlohmann::json::array();
            for (const auto& t : c.provenance[s].values()) v.push_back(t.exact_string());
            st["vector"] = v;
        }
        states.push_back(std::move(st));
    }
    j["states"] = std::move(states);
    return j;
}

nlohmann::json to_json(const FuzzyRelation& r) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < r.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t k = 0; k < r.cols(); ++k) row.push_back(r(i, k).exact_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const DetResult& r, double millis) {
    nlohmann::json j;
    j["method"] = r.method.name();
    j["states"] = r.cdfa.size();
    j["states_created"] = r.states_created;
    j["closure_checks"] = r.closure_checks;
    j["budget_hit"] = r.budget_hit;
    j["verified"] = r.verified;
    j["reversed_language"] = r.method.reversed_language();
    j["time_ms"] = millis;
    j["cdfa"] = to_json(r.cdfa);
    return j;
}

Cdfa cdfa_from_json(const nlohmann::json& input) {
    const nlohmann::json& j = input.contains("cdfa") ? input.at("cdfa") : input;
    try {
        Cdfa c;
        c.lattice = Lattice(LatticeKind::parse(j.at("lattice").get<std::string>()));
        c.alphabet = j.at("alphabet").get<std::vector<std::string>>();
        c.initial = j.at("initial").get<std::size_t>();
        for (const auto& st : j.at("states")) {
            c.next.push_back(st.at("next").get<std::vector<std::size_t>>());
            c.term.push_back(c.lattice.parse_value(st.at("term").get<std::string>()));
            c.labels.push_back(st.value("label", std::string()));
        }
        auto v = validate(c);
        if (!v.empty()) throw ParseError(v.front().code, 0, v.front().message);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ErrorCode::syntax_error, 0, std::string("bad cdfa json: ") + e.what());
    }
}

} // namespace fzdet
