#include "sombor/report.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace sombor {

std::string current_utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string quoted(std::string_view s) { return "\"" + json_escape(s) + "\""; }

void append_invocation(std::string& out, const Invocation& inv) {
    out += "  \"invocation\": {\n    \"argv\": [";
    for (std::size_t i = 0; i < inv.argv.size(); ++i) {
        if (i) out += ", ";
        out += quoted(inv.argv[i]);
    }
    out += "]";
    if (inv.timestamp) out += ",\n    \"timestamp\": " + quoted(*inv.timestamp);
    out += "\n  }";
}

void append_opt_param(std::string& out, const char* key, const std::optional<double>& v,
                      bool& first) {
    if (!v) return;
    if (!first) out += ", ";
    first = false;
    out += std::string("\"") + key + "\": " + format_double(*v);
}

std::string opt_bool(const std::optional<bool>& b) {
    if (!b) return "null";
    return *b ? "true" : "false";
}

void append_check_row(std::string& out, const std::string& graph6, const CheckResult& r) {
    out += "    {\"graph\": " + quoted(graph6);
    out += ", \"theorem\": " + quoted(theorem_name(r.theorem));
    out += ", \"case\": " + std::to_string(r.case_index);
    std::string params;
    bool first = true;
    append_opt_param(params, "alpha", r.params.alpha, first);
    append_opt_param(params, "beta", r.params.beta, first);
    append_opt_param(params, "lambda", r.params.lambda, first);
    append_opt_param(params, "mu", r.params.mu, first);
    append_opt_param(params, "p", r.params.p, first);
    if (!params.empty()) out += ", " + params;
    const bool unmet = r.verdict == Verdict::hypothesis_unmet;
    out += ", \"lhs\": " + (unmet ? "null" : format_double(r.lhs));
    out += ", \"rhs\": " + (unmet ? "null" : format_double(r.rhs));
    out += ", \"slack\": " + (unmet ? "null" : format_double(r.slack));
    out += ", \"verdict\": " + quoted(verdict_name(r.verdict));
    out += ", \"tightness_predicted\": " + opt_bool(r.tightness_predicted);
    out += ", \"tightness_observed\": " + opt_bool(r.tightness_observed);
    out += std::string(", \"tightness_iff\": ") + (r.tightness_iff ? "true" : "false");
    out += std::string(", \"strict\": ") + (r.strict ? "true" : "false");
    out += ", \"note\": " + quoted(r.note);
    out += "}";
}

void append_suite_summary(std::string& out, const SuiteReport& report) {
    out += "  \"summary\": {\n";
    out += "    \"graphs\": " + std::to_string(report.graphs) + ",\n";
    out += "    \"rows\": " + std::to_string(report.rows.size()) + ",\n";
    out += "    \"verdicts\": {";
    const Verdict all[] = {Verdict::holds_strict, Verdict::tight, Verdict::violated,
                           Verdict::hypothesis_unmet};
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += ", ";
        out += quoted(verdict_name(all[i])) + ": " + std::to_string(report.count(all[i]));
    }
    out += "},\n";
    out += "    \"theorems\": [\n";
    for (std::size_t t = 0; t < kTheoremCatalog.size(); ++t) {
        const TheoremId id = kTheoremCatalog[t];
        out += "      {\"theorem\": " + quoted(theorem_name(id));
        for (Verdict v : all)
            out += ", " + quoted(verdict_name(v)) + ": " + std::to_string(report.count(id, v));
        out += "}";
        out += t + 1 < kTheoremCatalog.size() ? ",\n" : "\n";
    }
    out += "    ]\n  }";
}

const char* bool_csv(const std::optional<bool>& b) { return !b ? "" : (*b ? "true" : "false"); }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string suite_report_json(const SuiteReport& report, const Invocation& invocation) {
    std::string out = "{\n";
    append_invocation(out, invocation);
    out += ",\n";
    append_suite_summary(out, report);
    out += ",\n  \"rows\": [\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        append_check_row(out, report.rows[i].graph6, report.rows[i].result);
        out += i + 1 < report.rows.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string suite_report_csv(const SuiteReport& report) {
    std::string out =
        "graph,theorem,case,alpha,beta,lambda,mu,p,lhs,rhs,slack,verdict,"
        "tightness_predicted,tightness_observed,tightness_iff,strict,note\n";
    const auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : ""; };
    for (const SuiteRow& row : report.rows) {
        const CheckResult& r = row.result;
        const bool unmet = r.verdict == Verdict::hypothesis_unmet;
        out += row.graph6 + "," + std::string(theorem_name(r.theorem)) + "," +
               std::to_string(r.case_index) + "," + opt(r.params.alpha) + "," + opt(r.params.beta) +
               "," + opt(r.params.lambda) + "," + opt(r.params.mu) + "," + opt(r.params.p) + "," +
               (unmet ? "" : format_double(r.lhs)) + "," + (unmet ? "" : format_double(r.rhs)) +
               "," + (unmet ? "" : format_double(r.slack)) + "," +
               std::string(verdict_name(r.verdict)) + "," + bool_csv(r.tightness_predicted) + "," +
               bool_csv(r.tightness_observed) + "," + (r.tightness_iff ? "true" : "false") + "," +
               (r.strict ? "true" : "false") + "," + csv_escape(r.note) + "\n";
    }
    return out;
}

std::string suite_report_text(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite: " << report.graphs << " graphs, " << report.rows.size() << " rows\n";
    out << "  holds_strict " << report.count(Verdict::holds_strict) << ", tight "
        << report.count(Verdict::tight) << ", violated " << report.count(Verdict::violated)
        << ", hypothesis_unmet " << report.count(Verdict::hypothesis_unmet) << "\n";
    for (TheoremId id : kTheoremCatalog) {
        out << "  " << theorem_name(id) << ": holds_strict " << report.count(id, Verdict::holds_strict)
            << ", tight " << report.count(id, Verdict::tight) << ", violated "
            << report.count(id, Verdict::violated) << ", hypothesis_unmet "
            << report.count(id, Verdict::hypothesis_unmet) << "\n";
    }
    for (const SuiteRow& row : report.rows) {
        if (row.result.verdict != Verdict::violated) continue;
        out << "  VIOLATED " << row.graph6 << " " << theorem_name(row.result.theorem) << " case "
            << row.result.case_index << " lhs=" << format_double(row.result.lhs)
            << " rhs=" << format_double(row.result.rhs) << "\n";
    }
    return out.str();
}

namespace {

void append_spec(std::string& out, const IndexSpec& spec) {
    out += "\"index\": " + quoted(spec.name());
    if (spec.uses_alpha()) out += ", \"alpha\": " + format_double(spec.alpha);
    if (spec.uses_beta()) out += ", \"beta\": " + format_double(spec.beta);
}

}  // namespace

std::string compute_report_json(const std::vector<ComputeRow>& rows, const Invocation& invocation) {
    std::string out = "{\n";
    append_invocation(out, invocation);
    out += ",\n  \"summary\": {\"rows\": " + std::to_string(rows.size()) + "},\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += "    {\"graph\": " + quoted(rows[i].graph6) + ", ";
        append_spec(out, rows[i].index);
        out += ", \"value\": " + format_double(rows[i].value);
        if (!rows[i].note.empty()) out += ", \"note\": " + quoted(rows[i].note);
        out += "}";
        out += i + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string compute_report_csv(const std::vector<ComputeRow>& rows) {
    std::string out = "graph,index,alpha,beta,value,note\n";
    for (const ComputeRow& r : rows) {
        out += r.graph6 + "," + r.index.name() + "," +
               (r.index.uses_alpha() ? format_double(r.index.alpha) : "") + "," +
               (r.index.uses_beta() ? format_double(r.index.beta) : "") + "," +
               format_double(r.value) + "," + csv_escape(r.note) + "\n";
    }
    return out;
}

std::string compute_report_text(const std::vector<ComputeRow>& rows) {
    std::ostringstream out;
    for (const ComputeRow& r : rows) {
        out << r.graph6 << "  " << r.index.name();
        if (r.index.uses_alpha()) out << " alpha=" << format_double(r.index.alpha);
        if (r.index.uses_beta()) out << " beta=" << format_double(r.index.beta);
        out << "  " << format_double(r.value);
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
    }
    return out.str();
}

std::string extremal_report_json(const ExtremalReport& report, const Invocation& invocation) {
    std::string out = "{\n";
    append_invocation(out, invocation);
    out += ",\n  \"summary\": {";
    out += "\"n\": " + std::to_string(report.cls.n);
    out += ", \"class\": " + quoted(class_kind_name(report.cls.kind));
    out += ", ";
    append_spec(out, report.index);
    out += std::string(", \"direction\": ") + (report.maximize ? "\"max\"" : "\"min\"");
    out += ", \"optimum\": " + format_double(report.optimum);
    out += ", \"optimizers\": " + std::to_string(report.optimizers.size());
    if (report.theorem) {
        out += ", \"theorem_claim\": " + quoted(report.theorem->claim);
        out += std::string(", \"theorem_matched\": ") + (report.theorem->matched ? "true" : "false");
    }
    out += "},\n  \"rows\": [\n";
    for (std::size_t i = 0; i < report.optimizers.size(); ++i) {
        out += "    {\"graph\": " + quoted(report.optimizers[i]) +
               ", \"value\": " + format_double(report.optimum) + "}";
        out += i + 1 < report.optimizers.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string extremal_report_text(const ExtremalReport& report) {
    std::ostringstream out;
    out << (report.maximize ? "max " : "min ") << report.index.name();
    if (report.index.uses_alpha()) out << " alpha=" << format_double(report.index.alpha);
    if (report.index.uses_beta()) out << " beta=" << format_double(report.index.beta);
    out << " over " << class_kind_name(report.cls.kind) << " n=" << report.cls.n << ": optimum "
        << format_double(report.optimum) << "\n";
    for (const std::string& g6 : report.optimizers) out << "  " << g6 << "\n";
    if (report.theorem)
        out << "  claim " << report.theorem->claim << ": "
            << (report.theorem->matched ? "matched" : "MISMATCH") << "\n";
    return out.str();
}

namespace {

double parse_number(const std::string& token, int lineno) {
    const auto bad = [&] {
        return ParseError("grid: line " + std::to_string(lineno) + ": bad number '" + token + "'");
    };
    const auto parse_plain = [&](const std::string& s) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (...) {
            throw bad();
        }
        if (pos != s.size()) throw bad();
        return v;
    };
    if (const auto slash = token.find('/'); slash != std::string::npos) {
        const double num = parse_plain(token.substr(0, slash));
        const double den = parse_plain(token.substr(slash + 1));
        if (den == 0.0) throw bad();
        return num / den;
    }
    return parse_plain(token);
}

}  // namespace

ParameterGrid parse_grid(std::string_view text) {
    ParameterGrid grid = ParameterGrid::defaults();
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool seen[5] = {false, false, false, false, false};
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key)) continue;
        if (!key.empty() && key.back() == ':') key.pop_back();
        else {
            std::string colon;
            if (!(fields >> colon) || colon != ":")
                throw ParseError("grid: line " + std::to_string(lineno) + ": expected 'symbol: values'");
        }
        std::vector<double>* slot = nullptr;
        int idx = -1;
        if (key == "alpha") { slot = &grid.alpha; idx = 0; }
        else if (key == "beta") { slot = &grid.beta; idx = 1; }
        else if (key == "lambda") { slot = &grid.lambda; idx = 2; }
        else if (key == "mu") { slot = &grid.mu; idx = 3; }
        else if (key == "p") { slot = &grid.p; idx = 4; }
        else throw ParseError("grid: line " + std::to_string(lineno) + ": unknown symbol '" + key + "'");
        if (seen[idx]) throw ParseError("grid: line " + std::to_string(lineno) + ": duplicate symbol '" + key + "'");
        seen[idx] = true;
        slot->clear();
        std::string token;
        while (fields >> token) slot->push_back(parse_number(token, lineno));
        if (slot->empty())
            throw ParseError("grid: line " + std::to_string(lineno) + ": no values for '" + key + "'");
    }
    return grid;
}

ParameterGrid load_grid_from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid(buf.str());
}

std::string grid_to_text(const ParameterGrid& grid) {
    const auto list = [](const char* key, const std::vector<double>& v) {
        std::string out = key;
        out += ":";
        for (double x : v) out += " " + format_double(x);
        return out + "\n";
    };
    return list("alpha", grid.alpha) + list("beta", grid.beta) + list("lambda", grid.lambda) +
           list("mu", grid.mu) + list("p", grid.p);
}

}  // namespace sombor
