#include "hcc/report.hpp"

#include <json.hpp>

namespace hcc {

using nlohmann::ordered_json;

void Report::add(const std::string& check, bool pass, const std::string& detail) {
    verdicts.push_back({check, pass, detail});
}

bool Report::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

std::map<std::string, std::string> standard_conventions() {
    return {
        {"algebras", "all algebras and coalgebras are taken unital / counital"},
        {"cotrace_sign", "the sign (-1)^{deg θ(1) deg θ(2)} is applied per homogeneous summand of the graded coproduct"},
        {"coalgebra_calculus",
         "Ω C realized as the graded dual of the universal calculus of C*, gated by the DG-coalgebra axioms"},
        {"kind_b_traces", "kind-B traces are functionals on Ω B"},
        {"twists",
         "kind A: S^-1(m(-1)), kind B: b(-1) untwisted, kind C: m·h = S(h)m (defaults; alternatives are reported when "
         "selected)"},
        {"degree_zero", "degree-0 traces vanish on the adjoined unit"},
        {"cup_degrees", "degrees are reported in both orderings: (p from B, q from A) and (p from A, q from B)"},
    };
}

namespace {

ordered_json coords_json(const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

std::string coords_text(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
    return out + "]";
}

}  // namespace

std::string to_json(const Report& r) {
    ordered_json j;
    j["engine"] = kEngineVersion;
    j["command"] = r.command;
    j["file"] = r.file;
    j["job"] = r.job;
    j["flags"] = r.flags;
    j["verdicts"] = ordered_json::array();
    for (const auto& v : r.verdicts) j["verdicts"].push_back({{"check", v.check}, {"pass", v.pass}, {"detail", v.detail}});
    j["dims"] = r.dims;
    j["cochains"] = ordered_json::array();
    for (const auto& c : r.cochains)
        j["cochains"].push_back(
            {{"name", c.name}, {"degree", c.degree}, {"complex", c.complex}, {"coords", coords_json(c.coords)}});
    j["conventions"] = r.conventions;
    j["notes"] = r.notes;
    j["error"] = r.error ? ordered_json(*r.error) : ordered_json(nullptr);
    j["exit_code"] = r.exit_code;
    return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
    std::string out;
    auto line = [&](const std::string& k, const std::string& v) { out += k + ": " + v + "\n"; };
    line("engine", kEngineVersion);
    line("command", r.command);
    if (!r.file.empty()) line("file", r.file);
    for (const auto& [k, v] : r.job) line("job." + k, v);
    for (const auto& [k, v] : r.flags) line("flag." + k, v);
    if (r.error) line("error", *r.error);
    for (const auto& v : r.verdicts)
        line(std::string(v.pass ? "PASS " : "FAIL ") + v.check, v.detail.empty() ? "-" : v.detail);
    for (const auto& [k, d] : r.dims) {
        std::string s;
        for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
        line("dims." + k, s);
    }
    for (const auto& c : r.cochains)
        line("cochain " + c.name, "degree " + std::to_string(c.degree) + " in " + c.complex + " " + coords_text(c.coords));
    for (const auto& [k, v] : r.conventions) line("convention." + k, v);
    for (const auto& n : r.notes) line("note", n);
    line("exit", std::to_string(r.exit_code));
    return out;
}

}  // namespace hcc
