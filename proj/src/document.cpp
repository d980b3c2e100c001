#include "origami/document.hpp"

#include <json.hpp>

#include <set>

namespace origami {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

void reject_unknown_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) fail(where + "/" + key, "unknown key");
    }
}

const json& require_key(const json& obj, const std::string& where, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where.empty() ? "/" : where, "missing key '" + key + "'");
    return *it;
}

const json& require_array(const json& value, const std::string& where, std::size_t size) {
    if (!value.is_array()) fail(where, "expected an array");
    if (value.size() != size) {
        fail(where, "expected " + std::to_string(size) + " entries, found " + std::to_string(value.size()));
    }
    return value;
}

Permutation read_permutation(const json& root, const std::string& key, std::size_t n) {
    const std::string where = "/" + key;
    const json& arr = require_array(require_key(root, "", key), where, n);
    Permutation out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& v = arr[i];
        const std::string at = where + "/" + std::to_string(i);
        if (!v.is_number_integer()) fail(at, "expected an integer");
        const auto x = v.get<long long>();
        if (x < 0 || static_cast<unsigned long long>(x) >= n) {
            fail(at, "entry " + std::to_string(x) + " out of range [0, " + std::to_string(n) + ")");
        }
        out[i] = static_cast<Dart>(x);
    }
    return out;
}

std::vector<double> read_reals(const json& block, const std::string& where, const std::string& key, std::size_t n) {
    const json& arr = require_array(require_key(block, where, key), where + "/" + key, n);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!arr[i].is_number()) fail(where + "/" + key + "/" + std::to_string(i), "expected a number");
        out[i] = arr[i].get<double>();
    }
    return out;
}

template <class Enum, std::size_t N>
std::vector<Enum> read_enums(const json& block, const std::string& where, const std::string& key, std::size_t n,
                             const Enum (&values)[N]) {
    const json& arr = require_array(require_key(block, where, key), where + "/" + key, n);
    std::vector<Enum> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string at = where + "/" + key + "/" + std::to_string(i);
        if (!arr[i].is_string()) fail(at, "expected a string");
        const auto s = arr[i].get<std::string>();
        bool found = false;
        for (Enum e : values) {
            if (s == to_string(e)) {
                out[i] = e;
                found = true;
            }
        }
        if (!found) fail(at, "unknown value '" + s + "'");
    }
    return out;
}

constexpr EdgeColor kColors[] = {EdgeColor::blue, EdgeColor::green, EdgeColor::red};
constexpr FaceShade kShades[] = {FaceShade::white, FaceShade::black};
constexpr VertexLabel kLabels[] = {VertexLabel::zero, VertexLabel::one, VertexLabel::infinity};

template <class Enum>
json names(const std::vector<Enum>& values) {
    json arr = json::array();
    for (Enum e : values) arr.push_back(to_string(e));
    return arr;
}

}  // namespace

DessinDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("syntax error (byte ") + std::to_string(e.byte) + "): " + e.what());
    }
    if (!root.is_object()) fail("/", "expected an object");
    reject_unknown_keys(root, "", {"format_version", "n_darts", "rho0", "rho1", "metric", "colors"});

    const json& version = require_key(root, "", "format_version");
    if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
        fail("/format_version", "expected \"" + std::string(kFormatVersion) + "\"");
    }
    const json& count = require_key(root, "", "n_darts");
    if (!count.is_number_integer() || count.get<long long>() <= 0) fail("/n_darts", "expected a positive integer");
    const auto n = static_cast<std::size_t>(count.get<long long>());

    Permutation rho0 = read_permutation(root, "rho0", n);
    Permutation rho1 = read_permutation(root, "rho1", n);
    DessinDocument doc{Dessin(std::move(rho0), std::move(rho1)), std::nullopt, std::nullopt};

    if (auto it = root.find("metric"); it != root.end()) {
        if (!it->is_object()) fail("/metric", "expected an object");
        reject_unknown_keys(*it, "/metric", {"lengths", "angles"});
        doc.metric = MetricData{read_reals(*it, "/metric", "lengths", n), read_reals(*it, "/metric", "angles", n)};
    }

    if (auto it = root.find("colors"); it != root.end()) {
        if (!it->is_object()) fail("/colors", "expected an object");
        reject_unknown_keys(*it, "/colors", {"edge_color", "face_shade", "vertex_label"});
        // orbit counts are only defined for a valid dessin; otherwise take
        // the arrays as given and leave the mismatch to validation
        std::size_t ne = 0, nf = 0, nv = 0;
        const bool valid = is_valid(doc.dessin);
        if (valid) {
            CellStructure cs(doc.dessin);
            nv = cs.count(CellKind::vertex);
            ne = cs.count(CellKind::edge);
            nf = cs.count(CellKind::face);
        } else {
            auto size_of = [&](const char* key) {
                auto f = it->find(key);
                return f != it->end() && f->is_array() ? f->size() : 0;
            };
            ne = size_of("edge_color");
            nf = size_of("face_shade");
            nv = size_of("vertex_label");
        }
        doc.colors = ColorBlock{read_enums(*it, "/colors", "edge_color", ne, kColors),
                                read_enums(*it, "/colors", "face_shade", nf, kShades),
                                read_enums(*it, "/colors", "vertex_label", nv, kLabels)};
    }
    return doc;
}

std::string serialize_document(const DessinDocument& doc) {
    const auto& d = doc.dessin;
    std::string out = "{\n";
    out += "  \"format_version\": " + json(kFormatVersion).dump() + ",\n";
    out += "  \"n_darts\": " + std::to_string(d.n_darts()) + ",\n";
    out += "  \"rho0\": " + json(d.rho0()).dump() + ",\n";
    out += "  \"rho1\": " + json(d.rho1()).dump();
    if (doc.metric) {
        out += ",\n  \"metric\": {\n";
        out += "    \"lengths\": " + json(doc.metric->lengths).dump() + ",\n";
        out += "    \"angles\": " + json(doc.metric->angles).dump() + "\n  }";
    }
    if (doc.colors) {
        out += ",\n  \"colors\": {\n";
        out += "    \"edge_color\": " + names(doc.colors->edge_color).dump() + ",\n";
        out += "    \"face_shade\": " + names(doc.colors->face_shade).dump() + ",\n";
        out += "    \"vertex_label\": " + names(doc.colors->vertex_label).dump() + "\n  }";
    }
    out += "\n}\n";
    return out;
}

DessinDocument make_document(const Dessin& d) { return {d, std::nullopt, std::nullopt}; }

DessinDocument make_document(const TricoloredDessin& t) {
    return {t.base, std::nullopt, ColorBlock{t.edge_color, t.face_shade, t.vertex_label}};
}

TricoloredDessin tricolored_from(const DessinDocument& doc) {
    if (!doc.colors) throw ParseError("/colors: document has no colors block");
    return {doc.dessin, doc.colors->edge_color, doc.colors->face_shade, doc.colors->vertex_label};
}

}  // namespace origami
