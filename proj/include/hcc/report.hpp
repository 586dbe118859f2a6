// Job reports: a fixed field order, exact rationals as strings, no timing, so
// identical inputs give byte-identical output.  Text form is a list of
// "key: value" lines; JSON form follows docs/report.schema.json.
#pragma once

#include "hcc/exactla.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hcc {

inline constexpr const char* kEngineVersion = "hcs 1.0.0";

struct Verdict {
    std::string check;
    bool pass = true;
    std::string detail;
};

struct ReportCochain {
    std::string name;
    std::size_t degree = 0;
    std::string complex;  // which complex the coordinates belong to
    Vec coords;           // ambient coordinates, (m, x_0, .., x_n) order
};

struct Report {
    std::string command;
    std::string file;
    std::map<std::string, std::string> job;    // echoed arguments
    std::map<std::string, std::string> flags;  // max_degree, budget, seed
    std::vector<Verdict> verdicts;
    std::map<std::string, std::vector<std::size_t>> dims;  // e.g. "HC" -> per degree
    std::vector<ReportCochain> cochains;
    std::map<std::string, std::string> conventions;  // interpretation flags in force
    std::vector<std::string> notes;
    std::optional<std::string> error;
    int exit_code = 0;

    void add(const std::string& check, bool pass, const std::string& detail = "");
    bool all_pass() const;
};

std::string to_json(const Report& r);
std::string to_text(const Report& r);

/// Interpretation flags shared by every report.
std::map<std::string, std::string> standard_conventions();

}  // namespace hcc
