#include "nullvar/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace nullvar {

using nlohmann::ordered_json;

namespace {

std::string number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) return v;
            if constexpr (std::is_same_v<T, double>) return number(v);
            if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        },
        c);
}

ordered_json jsonCell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            // JSON has no inf/nan
            if constexpr (std::is_same_v<T, double>) return std::isfinite(v) ? ordered_json(v) : ordered_json(number(v));
            else return ordered_json(v);
        },
        c);
}

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string aligned(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream s;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            s << r[i];
            if (i + 1 < r.size()) s << std::string(w[i] - r[i].size() + 2, ' ');
        }
        s << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto n : w) rule.push_back(std::string(n, '-'));
    line(rule);
    for (const auto& r : rows) line(r);
    return s.str();
}

ordered_json provenanceJson(const std::vector<std::pair<std::string, std::string>>& p) {
    ordered_json o = ordered_json::object();
    for (const auto& [k, v] : p) o[k] = v;
    return o;
}

}  // namespace

Format parseFormat(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "csv") return Format::Csv;
    if (s == "json-shaped" || s == "json") return Format::Json;
    throw std::invalid_argument("unknown format \"" + s + "\" (table, csv, json-shaped)");
}

std::string toolkitVersion() { return "nullvar 1.0.0"; }

std::string render(const Table& t, Format f) {
    std::ostringstream s;
    if (f == Format::Json) {
        ordered_json o;
        if (!t.title.empty()) o["title"] = t.title;
        o["provenance"] = provenanceJson(t.provenance);
        o["rows"] = ordered_json::array();
        for (const auto& r : t.rows) {
            ordered_json row = ordered_json::object();
            for (std::size_t i = 0; i < t.columns.size() && i < r.size(); ++i) row[t.columns[i]] = jsonCell(r[i]);
            o["rows"].push_back(row);
        }
        return o.dump(2) + "\n";
    }
    if (f == Format::Csv) {
        for (const auto& [k, v] : t.provenance) s << "# " << k << "=" << v << '\n';
        for (std::size_t i = 0; i < t.columns.size(); ++i) s << (i ? "," : "") << csvField(t.columns[i]);
        s << '\n';
        for (const auto& r : t.rows) {
            for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << csvField(text(r[i]));
            s << '\n';
        }
        return s.str();
    }
    if (!t.title.empty()) s << t.title << '\n';
    for (const auto& [k, v] : t.provenance) s << "  " << k << ": " << v << '\n';
    if (!t.title.empty() || !t.provenance.empty()) s << '\n';
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : t.rows) {
        rows.emplace_back();
        for (const auto& c : r) rows.back().push_back(text(c));
    }
    s << aligned(t.columns, rows);
    return s.str();
}

int VerificationReport::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [](const SubjectCheck& c) { return c.check.applicable && !c.check.pass; }));
}

std::string render(const VerificationReport& r, Format f) {
    Table all;
    all.title = "suite " + r.suite;
    all.provenance = r.provenance;
    all.columns = {"subject", "check", "lhs", "relation", "rhs", "margin", "tolerance", "applicable", "pass"};
    for (const auto& sc : r.checks) {
        const Check& c = sc.check;
        all.rows.push_back({sc.subject, c.name, c.lhs, c.relation, c.rhs, c.margin, c.tolerance, c.applicable, c.pass});
    }
    if (f == Format::Json) {
        auto o = ordered_json::parse(render(all, f));
        o["suite"] = r.suite;
        o["notes"] = r.notes;
        o["failures"] = r.failures();
        o["pass"] = r.pass();
        return o.dump(2) + "\n";
    }
    if (f == Format::Csv) return render(all, f);

    // one line per check name, in order of first appearance
    struct Group {
        int count = 0, applicable = 0, failed = 0;
        double minMargin = std::numeric_limits<double>::infinity();
        std::string worst;
    };
    std::vector<std::string> order;
    std::map<std::string, Group> groups;
    for (const auto& sc : r.checks) {
        auto [it, fresh] = groups.try_emplace(sc.check.name);
        if (fresh) order.push_back(sc.check.name);
        Group& g = it->second;
        ++g.count;
        if (!sc.check.applicable) continue;
        ++g.applicable;
        if (!sc.check.pass) ++g.failed;
        if (sc.check.margin < g.minMargin) g.minMargin = sc.check.margin, g.worst = sc.subject;
    }
    Table summary;
    summary.title = all.title;
    summary.provenance = r.provenance;
    summary.columns = {"check", "count", "applicable", "failed", "min margin", "at"};
    for (const auto& name : order) {
        const Group& g = groups[name];
        summary.rows.push_back({name, std::int64_t(g.count), std::int64_t(g.applicable), std::int64_t(g.failed),
                                g.applicable ? Cell(g.minMargin) : Cell(std::string("-")), g.worst});
    }
    std::ostringstream s;
    s << render(summary, Format::Table);
    if (r.failures() > 0) {
        Table bad;
        bad.columns = all.columns;
        for (std::size_t i = 0; i < r.checks.size(); ++i)
            if (r.checks[i].check.applicable && !r.checks[i].check.pass) bad.rows.push_back(all.rows[i]);
        s << "\nfailing checks\n" << render(bad, Format::Table);
    }
    for (const auto& n : r.notes) s << "note: " << n << '\n';
    s << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, " << r.failures() << " failed)\n";
    return s.str();
}

}  // namespace nullvar
