#include "hcc/specfile.hpp"

#include "hcc/fixtures.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace hcc {

using nlohmann::json;

// ---------------------------------------------------------------- schema

namespace {

const std::vector<StructureSchema>& schemas() {
    static const std::vector<StructureSchema> all = {
        {"hopf",
         {"space"},
         {{"mult", {"self", "self"}, {"self"}},
          {"unit", {}, {"self"}},
          {"comult", {"self"}, {"self", "self"}},
          {"counit", {"self"}, {}},
          {"antipode", {"self"}, {"self"}}}},
        {"algebra", {"space"}, {{"mult", {"self", "self"}, {"self"}}, {"unit", {}, {"self"}}}},
        {"coalgebra", {"space"}, {{"comult", {"self"}, {"self", "self"}}, {"counit", {"self"}, {}}}},
        {"action", {"hopf", "space"}, {{"act", {"hopf", "self"}, {"self"}}}},
        {"coaction", {"hopf", "space"}, {{"coact", {"self"}, {"hopf", "self"}}}},
        {"sayd",
         {"hopf", "space"},
         {{"action", {"hopf", "self"}, {"self"}}, {"coaction", {"self"}, {"hopf", "self"}}}},
        {"modular_pair", {"hopf"}, {{"delta", {"hopf"}, {}}, {"sigma", {}, {"hopf"}}}},
        {"coalgebra_action",
         {"coalgebra_bundle", "algebra_bundle"},
         {{"act", {"coalgebra_bundle", "algebra_bundle"}, {"algebra_bundle"}}}},
        {"coinvariant_unit", {"bundle"}, {{"element", {}, {"bundle"}}}},
        {"functional", {"bundle"}, {{"values", {"bundle"}, {}}}},
        // Inputs are (coefficient, carrier^(degree+1)); expanded per structure.
        {"cochain", {"bundle"}, {{"values", {"coeffs", "bundle"}, {}}}},
    };
    return all;
}

const std::map<std::string, std::vector<std::string>>& bundle_refs() {
    static const std::map<std::string, std::vector<std::string>> refs = {
        {"A", {"action", "algebra", "coeffs", "hopf"}},
        {"B", {"algebra", "coaction", "coeffs", "hopf"}},
        {"C", {"action", "coalgebra", "coeffs", "hopf"}},
    };
    return refs;
}

const std::map<std::string, std::vector<std::string>>& job_args() {
    static const std::map<std::string, std::vector<std::string>> args = {
        {"verify", {}},
        {"hc", {"bundle", "max_degree"}},
        {"cup1", {"phi", "psi"}},
        {"cup2", {"action", "psi", "x"}},
        {"homotopy", {"max_degree", "u"}},
    };
    return args;
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

std::string pointer_escape(const std::string& token) {
    std::string out;
    for (char c : token) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

// ---------------------------------------------------------------- positioned parsing

// Input iterator over a string that counts consumed bytes, so that the SAX
// callbacks can note where each value ends.
struct CountingIterator {
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    const char* p = nullptr;
    std::size_t* consumed = nullptr;

    reference operator*() const { return *p; }
    CountingIterator& operator++() {
        ++p;
        ++*consumed;
        return *this;
    }
    CountingIterator operator++(int) {
        CountingIterator old = *this;
        ++*this;
        return old;
    }
    bool operator==(const CountingIterator& o) const { return p == o.p; }
    bool operator!=(const CountingIterator& o) const { return p != o.p; }
};

std::string line_column(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c == '\n') {
            ++line;
            col = 1;
        } else if ((c & 0xC0) != 0x80) {
            ++col;  // count code points, not continuation bytes
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class PositionedBuilder {
public:
    PositionedBuilder(const std::string& text, std::size_t* consumed) : text_(text), consumed_(consumed) {}

    json root;
    std::map<std::string, std::size_t> positions;

    bool null() { return place(json(nullptr)); }
    bool boolean(bool v) { return place(json(v)); }
    bool number_integer(json::number_integer_t v) { return place(json(v)); }
    bool number_unsigned(json::number_unsigned_t v) { return place(json(v)); }
    bool number_float(json::number_float_t v, const std::string&) { return place(json(v)); }
    bool string(std::string& v) { return place(json(v)); }
    bool binary(json::binary_t& v) { return place(json(v)); }
    bool start_object(std::size_t) {
        open(json::object());
        return true;
    }
    bool end_object() {
        close();
        return true;
    }
    bool start_array(std::size_t) {
        open(json::array());
        return true;
    }
    bool end_array() {
        close();
        return true;
    }
    bool key(std::string& k) {
        json& obj = *stack_.back().node;
        const std::string ptr = stack_.back().pointer + "/" + pointer_escape(k);
        if (obj.contains(k))
            throw SpecParseError(line_column(text_, *consumed_) + " (" + ptr + ")", "duplicate key '" + k + "'");
        key_ = k;
        positions[ptr] = *consumed_;
        return true;
    }
    bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
        std::string msg = ex.what();
        // Strip nlohmann's own "[json.exception.parse_error.101] parse error at line .., column ..: " prefix.
        if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
        throw SpecParseError(line_column(text_, position == 0 ? 0 : position - 1), "malformed JSON: " + msg);
    }

private:
    struct Frame {
        json* node;
        std::string pointer;
    };

    std::string child_pointer() const {
        const Frame& top = stack_.back();
        if (top.node->is_array()) return top.pointer + "/" + std::to_string(top.node->size());
        return top.pointer + "/" + pointer_escape(key_);
    }

    json* insert(json v, std::string& ptr) {
        if (stack_.empty()) {
            root = std::move(v);
            ptr = "";
            return &root;
        }
        ptr = child_pointer();
        json& top = *stack_.back().node;
        if (top.is_array()) {
            top.push_back(std::move(v));
            return &top.back();
        }
        top[key_] = std::move(v);
        return &top[key_];
    }

    bool place(json v) {
        std::string ptr;
        insert(std::move(v), ptr);
        positions.emplace(ptr, *consumed_);
        return true;
    }
    void open(json v) {
        std::string ptr;
        json* node = insert(std::move(v), ptr);
        positions.emplace(ptr, *consumed_);
        stack_.push_back({node, ptr});
    }
    void close() { stack_.pop_back(); }

    const std::string& text_;
    std::size_t* consumed_;
    std::vector<Frame> stack_;
    std::string key_;
};

// Location string for a JSON pointer, falling back to the nearest ancestor with a position.
class Locator {
public:
    Locator(const std::string* text, const std::map<std::string, std::size_t>* positions)
        : text_(text), positions_(positions) {}

    std::string operator()(const std::string& ptr) const {
        const std::string shown = ptr.empty() ? "/" : ptr;
        if (!text_ || !positions_) return shown;
        std::string p = ptr;
        while (true) {
            auto it = positions_->find(p);
            if (it != positions_->end()) return line_column(*text_, it->second == 0 ? 0 : it->second - 1) + " (" + shown + ")";
            if (p.empty()) return shown;
            p = p.substr(0, p.rfind('/'));
        }
    }

private:
    const std::string* text_;
    const std::map<std::string, std::size_t>* positions_;
};

// ---------------------------------------------------------------- JSON -> document

void require_keys(const json& obj, const std::string& ptr, const std::vector<std::string>& allowed,
                  const std::vector<std::string>& required, const Locator& loc) {
    if (!obj.is_object()) throw SpecParseError(loc(ptr), "expected an object");
    for (const auto& [k, v] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw SpecParseError(loc(ptr + "/" + pointer_escape(k)),
                                 "unknown key '" + k + "' (allowed: " + join(allowed) + ")");
    for (const auto& k : required)
        if (!obj.contains(k)) throw SpecParseError(loc(ptr), "missing key '" + k + "'");
}

std::string get_string(const json& v, const std::string& ptr, const Locator& loc) {
    if (!v.is_string()) throw SpecParseError(loc(ptr), "expected a string");
    return v.get<std::string>();
}

std::vector<std::string> get_labels(const json& v, const std::string& ptr, const Locator& loc) {
    if (!v.is_array()) throw SpecParseError(loc(ptr), "expected an array of labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_string(v[i], ptr + "/" + std::to_string(i), loc));
    return out;
}

SpecTable get_table(const json& v, const std::string& ptr, const Locator& loc) {
    if (!v.is_array()) throw SpecParseError(loc(ptr), "expected an array of entries");
    SpecTable out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string ep = ptr + "/" + std::to_string(i);
        require_keys(v[i], ep, {"inputs", "output", "value"}, {"inputs", "output", "value"}, loc);
        SpecEntry e;
        e.inputs = get_labels(v[i]["inputs"], ep + "/inputs", loc);
        e.output = get_labels(v[i]["output"], ep + "/output", loc);
        const std::string text = get_string(v[i]["value"], ep + "/value", loc);
        try {
            e.value = parse_rational(text);
        } catch (const ParseError& err) {
            throw SpecParseError(loc(ep + "/value"), err.what());
        }
        out.push_back(std::move(e));
    }
    return out;
}

SpecDocument from_json(const json& root, const Locator& loc) {
    require_keys(root, "", {"bundles", "field", "jobs", "spaces", "structures"}, {"field", "spaces"}, loc);
    SpecDocument doc;
    doc.field = get_string(root["field"], "/field", loc);
    if (doc.field != "Q") throw SpecParseError(loc("/field"), "field must be \"Q\"");

    const json& spaces = root["spaces"];
    if (!spaces.is_object()) throw SpecParseError(loc("/spaces"), "expected an object");
    for (const auto& [name, labels] : spaces.items()) {
        const std::string ptr = "/spaces/" + pointer_escape(name);
        auto ls = get_labels(labels, ptr, loc);
        if (ls.empty()) throw SpecParseError(loc(ptr), "space '" + name + "' has no basis labels");
        std::set<std::string> seen;
        for (std::size_t i = 0; i < ls.size(); ++i)
            if (!seen.insert(ls[i]).second)
                throw SpecParseError(loc(ptr + "/" + std::to_string(i)), "duplicate basis label '" + ls[i] + "'");
        doc.spaces[name] = std::move(ls);
    }

    if (root.contains("structures")) {
        const json& st = root["structures"];
        if (!st.is_object()) throw SpecParseError(loc("/structures"), "expected an object");
        for (const auto& [name, def] : st.items()) {
            const std::string ptr = "/structures/" + pointer_escape(name);
            if (!def.is_object()) throw SpecParseError(loc(ptr), "expected an object");
            if (!def.contains("type")) throw SpecParseError(loc(ptr), "missing key 'type'");
            const std::string type = get_string(def["type"], ptr + "/type", loc);
            const StructureSchema* schema = nullptr;
            for (const auto& s : schemas())
                if (s.type == type) schema = &s;
            if (!schema)
                throw SpecParseError(loc(ptr + "/type"),
                                     "unknown structure type '" + type + "' (known: " + join(structure_types()) + ")");
            std::vector<std::string> allowed{"type"}, required{"type"};
            for (const auto& r : schema->refs) allowed.push_back(r), required.push_back(r);
            for (const auto& t : schema->tables) allowed.push_back(t.name), required.push_back(t.name);
            if (type == "cochain") allowed.push_back("degree"), required.push_back("degree");
            require_keys(def, ptr, allowed, required, loc);
            StructureDef sd;
            sd.type = type;
            for (const auto& r : schema->refs) sd.refs[r] = get_string(def[r], ptr + "/" + r, loc);
            for (const auto& t : schema->tables) sd.tables[t.name] = get_table(def[t.name], ptr + "/" + t.name, loc);
            if (type == "cochain") {
                if (!def["degree"].is_number_unsigned())
                    throw SpecParseError(loc(ptr + "/degree"), "degree must be a non-negative integer");
                sd.degree = def["degree"].get<std::size_t>();
            }
            doc.structures[name] = std::move(sd);
        }
    }

    if (root.contains("bundles")) {
        const json& bs = root["bundles"];
        if (!bs.is_object()) throw SpecParseError(loc("/bundles"), "expected an object");
        for (const auto& [name, def] : bs.items()) {
            const std::string ptr = "/bundles/" + pointer_escape(name);
            if (!def.is_object()) throw SpecParseError(loc(ptr), "expected an object");
            if (!def.contains("kind")) throw SpecParseError(loc(ptr), "missing key 'kind'");
            const std::string kind = get_string(def["kind"], ptr + "/kind", loc);
            auto it = bundle_refs().find(kind);
            if (it == bundle_refs().end()) throw SpecParseError(loc(ptr + "/kind"), "kind must be \"A\", \"B\" or \"C\"");
            std::vector<std::string> allowed = it->second;
            allowed.push_back("kind");
            require_keys(def, ptr, allowed, allowed, loc);
            BundleDef bd;
            bd.kind = kind;
            for (const auto& r : it->second) bd.refs[r] = get_string(def[r], ptr + "/" + r, loc);
            doc.bundles[name] = std::move(bd);
        }
    }

    if (root.contains("jobs")) {
        const json& js = root["jobs"];
        if (!js.is_array()) throw SpecParseError(loc("/jobs"), "expected an array");
        for (std::size_t i = 0; i < js.size(); ++i) {
            const std::string ptr = "/jobs/" + std::to_string(i);
            if (!js[i].is_object() || !js[i].contains("command"))
                throw SpecParseError(loc(ptr), "a job needs a 'command'");
            JobDef jd;
            jd.command = get_string(js[i]["command"], ptr + "/command", loc);
            auto it = job_args().find(jd.command);
            if (it == job_args().end())
                throw SpecParseError(loc(ptr + "/command"), "unknown command '" + jd.command + "'");
            std::vector<std::string> allowed = it->second;
            allowed.push_back("command");
            require_keys(js[i], ptr, allowed, {"command"}, loc);
            for (const auto& a : it->second)
                if (js[i].contains(a)) jd.args[a] = get_string(js[i][a], ptr + "/" + a, loc);
            doc.jobs.push_back(std::move(jd));
        }
    }
    return doc;
}

// ---------------------------------------------------------------- references and canonical order

// Space names used by a structure's table slots.
class SpaceResolver {
public:
    SpaceResolver(const SpecDocument& doc, const Locator& loc) : doc_(doc), loc_(loc) {}

    const StructureDef& structure(const std::string& name, const std::string& ptr,
                                  const std::vector<std::string>& types) const {
        auto it = doc_.structures.find(name);
        if (it == doc_.structures.end())
            throw SpecResolutionError(loc_(ptr), "undefined structure '" + name + "'");
        if (std::find(types.begin(), types.end(), it->second.type) == types.end())
            throw SpecResolutionError(loc_(ptr), "structure '" + name + "' has type '" + it->second.type +
                                                     "', expected " + join(types));
        return it->second;
    }

    const BundleDef& bundle(const std::string& name, const std::string& ptr) const {
        auto it = doc_.bundles.find(name);
        if (it == doc_.bundles.end()) throw SpecResolutionError(loc_(ptr), "undefined bundle '" + name + "'");
        return it->second;
    }

    void require_space(const std::string& name, const std::string& ptr) const {
        if (!doc_.spaces.count(name)) throw SpecResolutionError(loc_(ptr), "undefined space '" + name + "'");
    }

    std::string hopf_space(const std::string& hopf, const std::string& ptr) const {
        return structure(hopf, ptr, {"hopf"}).refs.at("space");
    }

    std::string carrier_space(const std::string& bundle_name, const std::string& ptr) const {
        const BundleDef& b = bundle(bundle_name, ptr);
        const std::string bp = "/bundles/" + pointer_escape(bundle_name);
        if (b.kind == "C") return structure(b.refs.at("coalgebra"), bp + "/coalgebra", {"coalgebra"}).refs.at("space");
        return structure(b.refs.at("algebra"), bp + "/algebra", {"algebra"}).refs.at("space");
    }

    std::string coeff_space(const std::string& bundle_name, const std::string& ptr) const {
        const BundleDef& b = bundle(bundle_name, ptr);
        const std::string bp = "/bundles/" + pointer_escape(bundle_name);
        const StructureDef& m = structure(b.refs.at("coeffs"), bp + "/coeffs", {"sayd", "modular_pair"});
        if (m.type == "modular_pair") return "";  // one-dimensional, label "1"
        return m.refs.at("space");
    }

    /// Space of a slot named in a table signature.
    std::string slot(const std::string& struct_name, const StructureDef& def, const std::string& slot_name) const {
        const std::string ptr = "/structures/" + pointer_escape(struct_name);
        if (slot_name == "self") return def.refs.at("space");
        if (slot_name == "hopf") return hopf_space(def.refs.at("hopf"), ptr + "/hopf");
        if (slot_name == "coeffs") return coeff_space(def.refs.at("bundle"), ptr + "/bundle");
        return carrier_space(def.refs.at(slot_name), ptr + "/" + slot_name);
    }

    std::vector<std::string> labels(const std::string& space) const {
        if (space.empty()) return {"1"};
        return doc_.spaces.at(space);
    }

private:
    const SpecDocument& doc_;
    const Locator& loc_;
};

// Checks references and orders each table canonically.
void canonicalize(SpecDocument& doc, const Locator& loc) {
    SpaceResolver res(doc, loc);
    for (auto& [name, def] : doc.structures) {
        const std::string ptr = "/structures/" + pointer_escape(name);
        const StructureSchema& schema = structure_schema(def.type);
        for (const auto& r : schema.refs) {
            const std::string& target = def.refs.at(r);
            const std::string rp = ptr + "/" + r;
            if (r == "space")
                res.require_space(target, rp);
            else if (r == "hopf")
                res.structure(target, rp, {"hopf"});
            else
                res.bundle(target, rp);
        }
        for (const auto& sig : schema.tables) {
            std::vector<std::string> in_spaces, out_spaces;
            if (def.type == "cochain") {
                in_spaces.push_back(res.slot(name, def, "coeffs"));
                for (std::size_t k = 0; k <= *def.degree; ++k) in_spaces.push_back(res.slot(name, def, "bundle"));
            } else {
                for (const auto& s : sig.inputs) in_spaces.push_back(res.slot(name, def, s));
            }
            for (const auto& s : sig.output) out_spaces.push_back(res.slot(name, def, s));

            SpecTable& table = def.tables.at(sig.name);
            const std::string tp = ptr + "/" + sig.name;
            std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;  // (indices, original position)
            for (std::size_t i = 0; i < table.size(); ++i) {
                const SpecEntry& e = table[i];
                const std::string ep = tp + "/" + std::to_string(i);
                if (e.inputs.size() != in_spaces.size())
                    throw SpecParseError(loc(ep + "/inputs"), "expected " + std::to_string(in_spaces.size()) + " input labels");
                if (e.output.size() != out_spaces.size())
                    throw SpecParseError(loc(ep + "/output"), "expected " + std::to_string(out_spaces.size()) + " output labels");
                std::vector<std::size_t> key;
                auto resolve = [&](const std::string& label, const std::string& space, const std::string& lp) {
                    const auto ls = res.labels(space);
                    auto it = std::find(ls.begin(), ls.end(), label);
                    if (it == ls.end())
                        throw SpecResolutionError(loc(lp), "undefined label '" + label + "' in space '" +
                                                               (space.empty() ? std::string("k") : space) + "'");
                    key.push_back(static_cast<std::size_t>(it - ls.begin()));
                };
                for (std::size_t k = 0; k < e.inputs.size(); ++k)
                    resolve(e.inputs[k], in_spaces[k], ep + "/inputs/" + std::to_string(k));
                for (std::size_t k = 0; k < e.output.size(); ++k)
                    resolve(e.output[k], out_spaces[k], ep + "/output/" + std::to_string(k));
                keyed.emplace_back(std::move(key), i);
            }
            std::stable_sort(keyed.begin(), keyed.end());
            SpecTable sorted;
            for (std::size_t i = 0; i < keyed.size(); ++i) {
                if (i > 0 && keyed[i].first == keyed[i - 1].first)
                    throw SpecParseError(loc(tp + "/" + std::to_string(keyed[i].second)), "duplicate entry");
                const SpecEntry& e = table[keyed[i].second];
                if (e.value != 0) sorted.push_back(e);
            }
            table = std::move(sorted);
        }
    }

    for (const auto& [name, def] : doc.bundles) {
        const std::string ptr = "/bundles/" + pointer_escape(name);
        const std::string hopf = def.refs.at("hopf");
        res.structure(hopf, ptr + "/hopf", {"hopf"});
        const bool kind_c = def.kind == "C";
        res.structure(def.refs.at(kind_c ? "coalgebra" : "algebra"), ptr + (kind_c ? "/coalgebra" : "/algebra"),
                      {kind_c ? "coalgebra" : "algebra"});
        const std::string carrier = res.carrier_space(name, ptr);
        const std::string sym = def.kind == "B" ? "coaction" : "action";
        const StructureDef& s = res.structure(def.refs.at(sym), ptr + "/" + sym, {sym});
        if (s.refs.at("hopf") != hopf)
            throw SpecResolutionError(loc(ptr + "/" + sym), sym + " '" + def.refs.at(sym) + "' is over Hopf algebra '" +
                                                                s.refs.at("hopf") + "', bundle uses '" + hopf + "'");
        if (s.refs.at("space") != carrier)
            throw SpecResolutionError(loc(ptr + "/" + sym), sym + " '" + def.refs.at(sym) + "' acts on space '" +
                                                                s.refs.at("space") + "', carrier is '" + carrier + "'");
        const StructureDef& m = res.structure(def.refs.at("coeffs"), ptr + "/coeffs", {"sayd", "modular_pair"});
        if (m.refs.at("hopf") != hopf)
            throw SpecResolutionError(loc(ptr + "/coeffs"), "coefficients '" + def.refs.at("coeffs") +
                                                                "' are over Hopf algebra '" + m.refs.at("hopf") + "'");
    }

    for (std::size_t i = 0; i < doc.jobs.size(); ++i) {
        const std::string ptr = "/jobs/" + std::to_string(i);
        for (const auto& [arg, value] : doc.jobs[i].args) {
            const std::string ap = ptr + "/" + arg;
            if (arg == "bundle")
                res.bundle(value, ap);
            else if (arg == "max_degree") {
                if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }))
                    throw SpecParseError(loc(ap), "max_degree must be a non-negative integer string");
            } else if (arg == "phi" || arg == "psi" || arg == "x")
                res.structure(value, ap, {"cochain"});
            else if (arg == "action")
                res.structure(value, ap, {"coalgebra_action"});
            else if (arg == "u")
                res.structure(value, ap, {"coinvariant_unit"});
        }
    }
}

// Two-space indented JSON where arrays of scalars and objects without nested
// containers stay on one line.
bool is_flat(const json& v) {
    if (!v.is_structured()) return true;
    for (const auto& x : v)
        if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) { return !y.is_structured(); })))
            return false;
    return true;
}

void print(const json& v, std::string& out, std::size_t indent) {
    if (is_flat(v) && !(v.is_object() && indent == 0)) {
        out += v.dump();
        return;
    }
    const std::string pad(indent + 2, ' ');
    const bool obj = v.is_object();
    out += obj ? "{\n" : "[\n";
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        out += pad;
        if (obj) out += json(it.key()).dump() + ": ";
        print(*it, out, indent + 2);
        out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + (obj ? "}" : "]");
}

json to_json(const SpecTable& t) {
    json arr = json::array();
    for (const auto& e : t) arr.push_back({{"inputs", e.inputs}, {"output", e.output}, {"value", to_string(e.value)}});
    return arr;
}

}  // namespace

const StructureSchema& structure_schema(const std::string& type) {
    for (const auto& s : schemas())
        if (s.type == type) return s;
    throw SpecParseError("", "unknown structure type '" + type + "' (known: " + join(structure_types()) + ")");
}

std::vector<std::string> structure_types() {
    std::vector<std::string> out;
    for (const auto& s : schemas()) out.push_back(s.type);
    return out;
}

SpecDocument parse_spec(const std::string& text) {
    std::size_t consumed = 0;
    PositionedBuilder builder(text, &consumed);
    CountingIterator first{text.data(), &consumed}, last{text.data() + text.size(), &consumed};
    json::sax_parse(first, last, &builder);
    Locator loc(&text, &builder.positions);
    SpecDocument doc = from_json(builder.root, loc);
    canonicalize(doc, loc);
    return doc;
}

SpecDocument parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecParseError(path, "cannot read file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_spec(ss.str());
    } catch (const SpecParseError& e) {
        throw SpecParseError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    } catch (const SpecResolutionError& e) {
        throw SpecResolutionError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

std::string serialize_spec(const SpecDocument& doc) {
    json root;
    root["field"] = doc.field;
    root["spaces"] = json::object();
    for (const auto& [name, labels] : doc.spaces) root["spaces"][name] = labels;
    root["structures"] = json::object();
    for (const auto& [name, def] : doc.structures) {
        json s;
        s["type"] = def.type;
        for (const auto& [k, v] : def.refs) s[k] = v;
        for (const auto& [k, t] : def.tables) s[k] = to_json(t);
        if (def.degree) s["degree"] = *def.degree;
        root["structures"][name] = std::move(s);
    }
    root["bundles"] = json::object();
    for (const auto& [name, def] : doc.bundles) {
        json b;
        b["kind"] = def.kind;
        for (const auto& [k, v] : def.refs) b[k] = v;
        root["bundles"][name] = std::move(b);
    }
    root["jobs"] = json::array();
    for (const auto& job : doc.jobs) {
        json j;
        j["command"] = job.command;
        for (const auto& [k, v] : job.args) j[k] = v;
        root["jobs"].push_back(std::move(j));
    }
    std::string out;
    print(root, out, 0);
    return out + "\n";
}

// ---------------------------------------------------------------- resolution

namespace {

std::size_t dims_product(const std::vector<const Space*>& ss) {
    std::size_t n = 1;
    for (const Space* s : ss) n *= s->dim();
    return n;
}

std::size_t flat(const std::vector<std::string>& labels, const std::vector<const Space*>& ss) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < ss.size(); ++k) idx = idx * ss[k]->dim() + ss[k]->index_of(labels[k]);
    return idx;
}

const Space& scalar_space() {
    static const Space k("k", {"1"});
    return k;
}

}  // namespace

template <class T>
const T& ResolvedSpec::lookup(const std::map<std::string, T>& m, const std::string& name, const char* what) const {
    auto it = m.find(name);
    if (it == m.end()) throw SpecResolutionError(name, std::string("no ") + what + " named '" + name + "'");
    return it->second;
}

ResolvedSpec::ResolvedSpec(const SpecDocument& doc) : doc_(doc) {
    for (const auto& [name, labels] : doc_.spaces) spaces_[name] = Space(name, labels);

    auto def_of = [&](const std::string& name) -> const StructureDef& { return doc_.structures.at(name); };
    auto space_ref = [&](const StructureDef& d) -> const Space& { return spaces_.at(d.refs.at("space")); };
    auto hopf_space = [&](const StructureDef& d) -> const Space& { return space_ref(def_of(d.refs.at("hopf"))); };
    auto to_matrix = [&](const SpecTable& t, const std::vector<const Space*>& in, const std::vector<const Space*>& out) {
        Matrix m(dims_product(out), dims_product(in));
        for (const auto& e : t) m(flat(e.output, out), flat(e.inputs, in)) += e.value;
        return m;
    };

    for (const auto& [name, d] : doc_.structures) {
        if (d.type != "hopf") continue;
        const Space& s = space_ref(d);
        Algebra alg(s, to_matrix(d.tables.at("mult"), {&s, &s}, {&s}), to_matrix(d.tables.at("unit"), {}, {&s}).col(0));
        Coalgebra coalg(s, to_matrix(d.tables.at("comult"), {&s}, {&s, &s}), to_matrix(d.tables.at("counit"), {&s}, {}).row(0));
        hopfs_[name] = std::make_shared<const Hopf>(std::move(alg), std::move(coalg),
                                                    to_matrix(d.tables.at("antipode"), {&s}, {&s}));
    }
    for (const auto& [name, d] : doc_.structures) {
        if (d.type == "algebra") {
            const Space& s = space_ref(d);
            algebras_[name] = Algebra(s, to_matrix(d.tables.at("mult"), {&s, &s}, {&s}),
                                      to_matrix(d.tables.at("unit"), {}, {&s}).col(0));
        } else if (d.type == "coalgebra") {
            const Space& s = space_ref(d);
            coalgebras_[name] = Coalgebra(s, to_matrix(d.tables.at("comult"), {&s}, {&s, &s}),
                                          to_matrix(d.tables.at("counit"), {&s}, {}).row(0));
        } else if (d.type == "action" || d.type == "coaction" || d.type == "sayd") {
            const Space& s = space_ref(d);
            const Space& h = hopf_space(d);
            const HopfPtr hp = hopfs_.at(d.refs.at("hopf"));
            const std::string act_key = d.type == "action" ? "act" : "action";
            const std::string coact_key = d.type == "coaction" ? "coact" : "coaction";
            std::optional<Action> act;
            std::optional<Coaction> coact;
            if (d.tables.count(act_key)) act = Action(hp, s, to_matrix(d.tables.at(act_key), {&h, &s}, {&s}));
            if (d.tables.count(coact_key)) coact = Coaction(hp, s, to_matrix(d.tables.at(coact_key), {&s}, {&h, &s}));
            if (d.type == "action") actions_[name] = *act;
            if (d.type == "coaction") coactions_[name] = *coact;
            if (d.type == "sayd") sayds_[name] = SAYD{*act, *coact};
        } else if (d.type == "modular_pair") {
            const Space& h = hopf_space(d);
            pairs_[name] = ModularPair{to_matrix(d.tables.at("delta"), {&h}, {}).row(0),
                                       to_matrix(d.tables.at("sigma"), {}, {&h}).col(0)};
        }
    }

    for (const auto& [name, bd] : doc_.bundles) {
        SymmetryBundle b;
        b.name = name;
        b.kind = bd.kind == "A" ? Kind::A : bd.kind == "B" ? Kind::B : Kind::C;
        b.hopf = hopfs_.at(bd.refs.at("hopf"));
        if (b.kind == Kind::C)
            b.coalgebra = coalgebras_.at(bd.refs.at("coalgebra"));
        else
            b.algebra = algebras_.at(bd.refs.at("algebra"));
        if (b.kind == Kind::B)
            b.coaction = coactions_.at(bd.refs.at("coaction"));
        else
            b.action = actions_.at(bd.refs.at("action"));
        const std::string& m = bd.refs.at("coeffs");
        b.coeffs = def_of(m).type == "sayd" ? sayds_.at(m) : modular_pair_module(b.hopf, pairs_.at(m));
        bundles_[name] = std::move(b);
    }

    for (const auto& [name, d] : doc_.structures) {
        if (d.type == "coalgebra_action") {
            const Space& c = bundles_.at(d.refs.at("coalgebra_bundle")).carrier_space();
            const Space& a = bundles_.at(d.refs.at("algebra_bundle")).carrier_space();
            coalgebra_actions_[name] = CoalgebraAction{to_matrix(d.tables.at("act"), {&c, &a}, {&a})};
        } else if (d.type == "coinvariant_unit") {
            const Space& b = bundles_.at(d.refs.at("bundle")).carrier_space();
            elements_[name] = to_matrix(d.tables.at("element"), {}, {&b}).col(0);
        } else if (d.type == "functional") {
            const Space& b = bundles_.at(d.refs.at("bundle")).carrier_space();
            functionals_[name] = to_matrix(d.tables.at("values"), {&b}, {}).row(0);
        } else if (d.type == "cochain") {
            const SymmetryBundle& b = bundles_.at(d.refs.at("bundle"));
            const Space& m = b.coeffs.action.carrier.dim() ? b.coeffs.action.carrier : scalar_space();
            std::vector<const Space*> in{&m};
            for (std::size_t k = 0; k <= *d.degree; ++k) in.push_back(&b.carrier_space());
            cochains_[name] = Cochain{d.refs.at("bundle"), *d.degree, to_matrix(d.tables.at("values"), in, {}).row(0)};
        }
    }
}

const Space& ResolvedSpec::space(const std::string& name) const { return lookup(spaces_, name, "space"); }
HopfPtr ResolvedSpec::hopf(const std::string& name) const { return lookup(hopfs_, name, "Hopf algebra"); }
const Algebra& ResolvedSpec::algebra(const std::string& name) const { return lookup(algebras_, name, "algebra"); }
const Coalgebra& ResolvedSpec::coalgebra(const std::string& name) const { return lookup(coalgebras_, name, "coalgebra"); }
const Action& ResolvedSpec::action(const std::string& name) const { return lookup(actions_, name, "action"); }
const Coaction& ResolvedSpec::coaction(const std::string& name) const { return lookup(coactions_, name, "coaction"); }
const SAYD& ResolvedSpec::sayd(const std::string& name) const { return lookup(sayds_, name, "SAYD module"); }
const ModularPair& ResolvedSpec::modular_pair(const std::string& name) const {
    return lookup(pairs_, name, "modular pair");
}
const SymmetryBundle& ResolvedSpec::bundle(const std::string& name) const { return lookup(bundles_, name, "bundle"); }
const CoalgebraAction& ResolvedSpec::coalgebra_action(const std::string& name) const {
    return lookup(coalgebra_actions_, name, "coalgebra action");
}
const Vec& ResolvedSpec::element(const std::string& name) const { return lookup(elements_, name, "coinvariant unit"); }
const Vec& ResolvedSpec::functional(const std::string& name) const { return lookup(functionals_, name, "functional"); }
const ResolvedSpec::Cochain& ResolvedSpec::cochain(const std::string& name) const {
    return lookup(cochains_, name, "cochain");
}

std::vector<std::string> ResolvedSpec::names_of(const std::string& type) const {
    std::vector<std::string> out;
    for (const auto& [name, d] : doc_.structures)
        if (d.type == type) out.push_back(name);
    return out;
}

std::vector<std::string> ResolvedSpec::bundle_names() const {
    std::vector<std::string> out;
    for (const auto& [name, b] : bundles_) out.push_back(name);
    return out;
}

// ---------------------------------------------------------------- builder

std::string SpecBuilder::add_space(const Space& s, const std::string& name) {
    for (const auto& [n, labels] : doc_.spaces)
        if (labels == s.basis_labels && (n == name || n.rfind(name, 0) == 0)) return n;
    std::string use = name;
    for (int k = 2; doc_.spaces.count(use); ++k) use = name + std::to_string(k);
    doc_.spaces[use] = s.basis_labels;
    return use;
}

const std::vector<std::string>& SpecBuilder::labels(const std::string& space) const {
    static const std::vector<std::string> scalar{"1"};
    if (space.empty()) return scalar;
    return doc_.spaces.at(space);
}

SpecTable SpecBuilder::table(const Matrix& m, const std::vector<std::string>& in_spaces,
                             const std::vector<std::string>& out_spaces) const {
    auto dims_of = [&](const std::vector<std::string>& ss) {
        std::vector<std::size_t> d;
        for (const auto& s : ss) d.push_back(labels(s).size());
        return d;
    };
    const auto din = dims_of(in_spaces), dout = dims_of(out_spaces);
    auto names = [&](std::size_t idx, const std::vector<std::size_t>& dims, const std::vector<std::string>& ss) {
        std::vector<std::string> out(ss.size());
        for (std::size_t k = ss.size(); k-- > 0;) {
            out[k] = labels(ss[k])[idx % dims[k]];
            idx /= dims[k];
        }
        return out;
    };
    SpecTable t;
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m(r, c) != 0) t.push_back({names(c, din, in_spaces), names(r, dout, out_spaces), m(r, c)});
    return t;
}

std::string SpecBuilder::add_hopf(const std::string& name, const Hopf& h) {
    const std::string s = add_space(h.space(), h.space().name);
    StructureDef d;
    d.type = "hopf";
    d.refs["space"] = s;
    d.tables["mult"] = table(h.algebra.mult, {s, s}, {s});
    d.tables["unit"] = table(Matrix::column(h.algebra.unit), {}, {s});
    d.tables["comult"] = table(h.coalgebra.comult, {s}, {s, s});
    d.tables["counit"] = table(Matrix::from_rows({h.coalgebra.counit}, h.coalgebra.counit.size()), {s}, {});
    d.tables["antipode"] = table(h.antipode, {s}, {s});
    doc_.structures[name] = std::move(d);
    return name;
}

std::string SpecBuilder::add_algebra(const std::string& name, const Algebra& a) {
    const std::string s = add_space(a.space, a.space.name);
    StructureDef d;
    d.type = "algebra";
    d.refs["space"] = s;
    d.tables["mult"] = table(a.mult, {s, s}, {s});
    d.tables["unit"] = table(Matrix::column(a.unit), {}, {s});
    doc_.structures[name] = std::move(d);
    return name;
}

std::string SpecBuilder::add_coalgebra(const std::string& name, const Coalgebra& c) {
    const std::string s = add_space(c.space, c.space.name);
    StructureDef d;
    d.type = "coalgebra";
    d.refs["space"] = s;
    d.tables["comult"] = table(c.comult, {s}, {s, s});
    d.tables["counit"] = table(Matrix::from_rows({c.counit}, c.counit.size()), {s}, {});
    doc_.structures[name] = std::move(d);
    return name;
}

std::string SpecBuilder::add_action(const std::string& name, const std::string& hopf, const Action& a) {
    const std::string s = add_space(a.carrier, a.carrier.name);
    const std::string hs = doc_.structures.at(hopf).refs.at("space");
    StructureDef d;
    d.type = "action";
    d.refs = {{"hopf", hopf}, {"space", s}};
    d.tables["act"] = table(a.act, {hs, s}, {s});
    doc_.structures[name] = std::move(d);
    return name;
}

std::string SpecBuilder::add_coaction(const std::string& name, const std::string& hopf, const Coaction& c) {
    const std::string s = add_space(c.carrier, c.carrier.name);
    const std::string hs = doc_.structures.at(hopf).refs.at("space");
    StructureDef d;
    d.type = "coaction";
    d.refs = {{"hopf", hopf}, {"space", s}};
    d.tables["coact"] = table(c.coact, {s}, {hs, s});
    doc_.structures[name] = std::move(d);
    return name;
}

std::string SpecBuilder::add_sayd(const std::string& name, const std::string& hopf, const SAYD& m) {
    const std::string s = add_space(m.action.carrier, m.action.carrier.name);
    const std::string hs = doc_.structures.at(hopf).refs.at("space");
    StructureDef d;
    d.type = "sayd";
    d.refs = {{"hopf", hopf}, {"space", s}};
    d.tables["action"] = table(m.action.act, {hs, s}, {s});
    d.tables["coaction"] = table(m.coaction.coact, {s}, {hs, s});
    doc_.structures[name] = std::move(d);
    return name;
}

std::string SpecBuilder::add_bundle(const std::string& name, const SymmetryBundle& b) {
    const std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(b.hopf.get()));
    std::string hopf;
    if (auto it = hopf_by_ptr_.find(key); it != hopf_by_ptr_.end()) {
        hopf = it->second;
    } else {
        hopf = add_hopf(b.hopf->space().name, *b.hopf);
        hopf_by_ptr_[key] = hopf;
    }
    BundleDef d;
    d.kind = kind_name(b.kind);
    d.refs["hopf"] = hopf;
    d.refs["coeffs"] = add_sayd(name + "/M", hopf, b.coeffs);
    if (b.kind == Kind::C)
        d.refs["coalgebra"] = add_coalgebra(name + "/coalgebra", *b.coalgebra);
    else
        d.refs["algebra"] = add_algebra(name + "/algebra", *b.algebra);
    if (b.kind == Kind::B)
        d.refs["coaction"] = add_coaction(name + "/coaction", hopf, *b.coaction);
    else
        d.refs["action"] = add_action(name + "/action", hopf, *b.action);
    doc_.bundles[name] = std::move(d);
    bundles_[name] = b;
    return name;
}

std::string SpecBuilder::space_of_bundle_carrier(const std::string& bundle) const {
    const BundleDef& d = doc_.bundles.at(bundle);
    return doc_.structures.at(d.refs.at(d.kind == "C" ? "coalgebra" : "algebra")).refs.at("space");
}

std::string SpecBuilder::add_coalgebra_action(const std::string& name, const std::string& coalgebra_bundle,
                                              const std::string& algebra_bundle, const CoalgebraAction& act) {
    const std::string c = space_of_bundle_carrier(coalgebra_bundle), a = space_of_bundle_carrier(algebra_bundle);
    StructureDef d;
    d.type = "coalgebra_action";
    d.refs = {{"coalgebra_bundle", coalgebra_bundle}, {"algebra_bundle", algebra_bundle}};
    d.tables["act"] = table(act.pairing, {c, a}, {a});
    doc_.structures[name] = std::move(d);
    return name;
}

std::string SpecBuilder::add_element(const std::string& name, const std::string& bundle, const Vec& v) {
    StructureDef d;
    d.type = "coinvariant_unit";
    d.refs["bundle"] = bundle;
    d.tables["element"] = table(Matrix::column(v), {}, {space_of_bundle_carrier(bundle)});
    doc_.structures[name] = std::move(d);
    return name;
}

std::string SpecBuilder::add_functional(const std::string& name, const std::string& bundle, const Vec& v) {
    StructureDef d;
    d.type = "functional";
    d.refs["bundle"] = bundle;
    d.tables["values"] = table(Matrix::from_rows({v}, v.size()), {space_of_bundle_carrier(bundle)}, {});
    doc_.structures[name] = std::move(d);
    return name;
}

std::string SpecBuilder::add_cochain(const std::string& name, const std::string& bundle, std::size_t degree,
                                     const Vec& v) {
    const BundleDef& bd = doc_.bundles.at(bundle);
    std::vector<std::string> in{doc_.structures.at(bd.refs.at("coeffs")).refs.at("space")};
    for (std::size_t k = 0; k <= degree; ++k) in.push_back(space_of_bundle_carrier(bundle));
    StructureDef d;
    d.type = "cochain";
    d.refs["bundle"] = bundle;
    d.degree = degree;
    d.tables["values"] = table(Matrix::from_rows({v}, v.size()), in, {});
    doc_.structures[name] = std::move(d);
    return name;
}

SpecDocument SpecBuilder::document() const {
    SpecDocument doc = doc_;
    canonicalize(doc, Locator(nullptr, nullptr));
    return doc;
}

SpecDocument fixture_document(const FixtureBundle& f) {
    SpecBuilder b;
    auto hopf = [&] { return b.add_hopf(f.hopf->space().name, *f.hopf); };
    switch (f.type) {
        case FixtureType::Hopf: b.add_hopf(f.name, *f.hopf); break;
        case FixtureType::Algebra: b.add_algebra(f.name, *f.algebra); break;
        case FixtureType::Coalgebra: b.add_coalgebra(f.name, *f.coalgebra); break;
        case FixtureType::Action: b.add_action(f.name, hopf(), *f.action); break;
        case FixtureType::Coaction: b.add_coaction(f.name, hopf(), *f.coaction); break;
        case FixtureType::SAYD: b.add_sayd(f.name, hopf(), *f.sayd); break;
        case FixtureType::Bundle: b.add_bundle(f.name, *f.bundle); break;
    }
    return b.document();
}

}  // namespace hcc
