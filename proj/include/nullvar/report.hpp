#pragma once

// Tabular output and verification reports in three formats.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nullvar/check.hpp"

namespace nullvar {

enum class Format { Table, Csv, Json };

/// "table", "csv" or "json-shaped"; throws std::invalid_argument otherwise.
Format parseFormat(const std::string& s);

using Cell = std::variant<std::string, double, std::int64_t, bool>;

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// key/value lines emitted ahead of the rows (seeds, resolutions, version)
    std::vector<std::pair<std::string, std::string>> provenance;
};

/// Doubles are written with 12 significant digits, so identical inputs give
/// byte-identical output.
std::string render(const Table& t, Format f);

struct SubjectCheck {
    std::string subject;  ///< the domain or construction the check refers to
    Check check;
};

struct VerificationReport {
    std::string suite;
    std::vector<SubjectCheck> checks;
    std::vector<std::pair<std::string, std::string>> provenance;
    std::vector<std::string> notes;

    void add(const std::string& subject, Check c) { checks.push_back({subject, std::move(c)}); }
    void add(const std::string& subject, const std::vector<Check>& cs) {
        for (const auto& c : cs) add(subject, c);
    }
    int failures() const;
    bool pass() const { return failures() == 0; }
};

/// Table format groups checks by name (count, failures, smallest margin) and
/// lists every failing check; csv and json-shaped list all checks.
std::string render(const VerificationReport& r, Format f);

std::string toolkitVersion();

}  // namespace nullvar
