#include "energeia/io_json.hpp"

#include "energeia/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace energeia {

using nlohmann::json;

std::string simplex_key(const Simplex& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.v[i]);
    }
    return out + "]";
}

Simplex simplex_from_key(const std::string& key) {
    json j = json::parse(key, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw IoError("bad simplex key '" + key + "'");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw IoError("bad simplex key '" + key + "'");
        v.push_back(x.get<int>());
    }
    return make_simplex(v);
}

json geometry_to_json(const Geometry& g) {
    json sets = json::array();
    for (const auto& s : g.simplices) sets.push_back(s.v);
    return json{{"schema", kSchemaTag}, {"sets", sets}};
}

Geometry geometry_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array())
        throw IoError("geometry object needs a \"sets\" array");
    if (j.contains("schema") && j["schema"] != kSchemaTag)
        throw IoError("unknown schema tag");
    std::vector<std::vector<int>> sets;
    for (const auto& arr : j["sets"]) {
        if (!arr.is_array()) throw IoError("each set must be an integer array");
        std::vector<int> s;
        for (const auto& x : arr) {
            if (!x.is_number_integer()) throw IoError("vertex labels must be integers");
            s.push_back(x.get<int>());
        }
        sets.push_back(std::move(s));
    }
    return parse_geometry(sets);
}

namespace {

json quat_rat_json(const Quaternion<Rat>& q) {
    return json{{"w", rat_to_string(q.w)},
                {"x", rat_to_string(q.x)},
                {"y", rat_to_string(q.y)},
                {"z", rat_to_string(q.z)}};
}

json quat_dbl_json(const Quaternion<double>& q) {
    return json{{"w", q.w}, {"x", q.x}, {"y", q.y}, {"z", q.z}};
}

Rat rat_field(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_string())
        throw IoError(std::string("expected string field \"") + name + "\"");
    return parse_rational(j[name].get<std::string>());
}

double num_field(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number())
        throw IoError(std::string("expected numeric field \"") + name + "\"");
    return j[name].get<double>();
}

} // namespace

json value_to_json(const RingValue& v) {
    switch (v.id) {
        case RingId::Rational:
            return rat_to_string(std::get<Rat>(v.v));
        case RingId::Gaussian: {
            const auto& g = std::get<Gaussian>(v.v);
            return json{{"re", rat_to_string(g.re)}, {"im", rat_to_string(g.im)}};
        }
        case RingId::Complex64: {
            const auto& c = std::get<std::complex<double>>(v.v);
            return json{{"re", c.real()}, {"im", c.imag()}};
        }
        case RingId::QuaternionRat:
            return quat_rat_json(std::get<Quaternion<Rat>>(v.v));
        case RingId::Quaternion64:
            return quat_dbl_json(std::get<Quaternion<double>>(v.v));
        case RingId::Octonion: {
            auto comps = std::get<Octonion>(v.v).components();
            return json(comps);
        }
        case RingId::Poly: {
            const auto& p = std::get<Poly>(v.v);
            json terms = json::array();
            for (const auto& t : p.terms) {
                json vars = json::array();
                for (uint32_t id : t.mono) vars.push_back(poly_var_name(id));
                terms.push_back(json::array({rat_to_string(t.coeff), vars}));
            }
            return terms;
        }
        case RingId::Free: {
            const auto& f = std::get<FreeElt>(v.v);
            json terms = json::array();
            for (const auto& t : f.terms) {
                json word = json::array();
                for (int32_t id : t.word)
                    word.push_back(id > 0 ? free_gen_name(id) : free_gen_name(-id) + "*");
                terms.push_back(json::array({t.coeff, word}));
            }
            return terms;
        }
    }
    throw IoError("unknown ring payload");
}

RingValue value_from_json(RingId ring, const json& j) {
    RingValue v;
    v.id = ring;
    switch (ring) {
        case RingId::Rational:
            if (!j.is_string()) throw IoError("rational values are strings \"p/q\"");
            v.v = parse_rational(j.get<std::string>());
            return v;
        case RingId::Gaussian:
            v.v = Gaussian{rat_field(j, "re"), rat_field(j, "im")};
            return v;
        case RingId::Complex64:
            v.v = std::complex<double>(num_field(j, "re"), num_field(j, "im"));
            return v;
        case RingId::QuaternionRat:
            v.v = Quaternion<Rat>{rat_field(j, "w"), rat_field(j, "x"), rat_field(j, "y"),
                                  rat_field(j, "z")};
            return v;
        case RingId::Quaternion64:
            v.v = Quaternion<double>{num_field(j, "w"), num_field(j, "x"), num_field(j, "y"),
                                     num_field(j, "z")};
            return v;
        case RingId::Octonion: {
            if (!j.is_array() || j.size() != 8)
                throw IoError("octonion values are arrays of 8 numbers");
            std::array<double, 8> comps{};
            for (size_t i = 0; i < 8; ++i) {
                if (!j[i].is_number()) throw IoError("octonion components must be numbers");
                comps[i] = j[i].get<double>();
            }
            v.v = Octonion::from_components(comps);
            return v;
        }
        case RingId::Poly: {
            if (!j.is_array()) throw IoError("poly values are arrays of [coeff, vars] terms");
            Poly p;
            for (const auto& t : j) {
                if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array())
                    throw IoError("poly term must be [\"coeff\", [vars...]]");
                Poly term = Poly::constant(parse_rational(t[0].get<std::string>()));
                for (const auto& name : t[1]) {
                    if (!name.is_string()) throw IoError("poly variables must be strings");
                    term = term * Poly::variable(name.get<std::string>());
                }
                p = p + term;
            }
            v.v = std::move(p);
            return v;
        }
        case RingId::Free: {
            if (!j.is_array()) throw IoError("free values are arrays of [coeff, word] terms");
            FreeElt f;
            for (const auto& t : j) {
                if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() ||
                    !t[1].is_array())
                    throw IoError("free term must be [coeff, [tokens...]]");
                FreeElt term = FreeElt::constant(t[0].get<long long>());
                for (const auto& tok : t[1]) {
                    if (!tok.is_string()) throw IoError("free word tokens must be strings");
                    std::string name = tok.get<std::string>();
                    bool starred = !name.empty() && name.back() == '*';
                    if (starred) name.pop_back();
                    FreeElt gen = FreeElt::generator(name);
                    term = term * (starred ? gen.conj() : gen);
                }
                f = f + term;
            }
            v.v = std::move(f);
            return v;
        }
    }
    throw IoError("unknown ring tag");
}

json energy_to_json(const Geometry& g, const EnergyAssignment& h) {
    if (h.values.size() != g.size()) throw ShapeError("assignment does not match the geometry");
    json hv = json::object();
    for (size_t i = 0; i < g.size(); ++i)
        hv[simplex_key(g.simplices[i])] = value_to_json(h.values[i]);
    return json{{"schema", kSchemaTag}, {"ring", ring_json_tag(h.ring)}, {"h", hv}};
}

EnergyAssignment energy_from_json(const Geometry& g, const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("h") || !j["h"].is_object())
        throw IoError("energy object needs \"ring\" and \"h\"");
    if (j.contains("schema") && j["schema"] != kSchemaTag) throw IoError("unknown schema tag");
    std::string tag = j["ring"].get<std::string>();
    // The "quaternion" tag covers both payloads; pick by component encoding.
    RingId ring;
    if (tag == "quaternion") {
        bool exact = false;
        for (const auto& [key, val] : j["h"].items()) {
            (void)key;
            exact = val.is_object() && val.contains("w") && val["w"].is_string();
            break;
        }
        ring = exact ? RingId::QuaternionRat : RingId::Quaternion64;
    } else {
        ring = ring_from_name(tag);
    }
    EnergyAssignment h;
    h.ring = ring;
    h.values.reserve(g.size());
    for (const auto& s : g.simplices) {
        std::string key = simplex_key(s);
        if (!j["h"].contains(key)) throw IoError("missing energy value for " + key);
        h.values.push_back(value_from_json(ring, j["h"][key]));
    }
    if (j["h"].size() != g.size()) throw IoError("energy map has extra entries");
    return h;
}

json matrix_to_json(const SquareMatrix& m) {
    json index = json::array();
    for (const auto& s : m.index) index.push_back(s.v);
    json rows = json::array();
    for (size_t i = 0; i < m.n; ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.n; ++j) row.push_back(value_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"schema", kSchemaTag},
                {"kind", "matrix"},
                {"ring", ring_json_tag(m.ring)},
                {"n", m.n},
                {"index", index},
                {"entries", rows}};
}

std::string matrix_to_csv(const SquareMatrix& m) {
    std::ostringstream out;
    for (size_t i = 0; i < m.n; ++i) {
        for (size_t j = 0; j < m.n; ++j) {
            if (j) out << ",";
            out << rv_str(m.at(i, j));
        }
        out << "\n";
    }
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw IoError("invalid JSON in '" + path + "'");
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("short write to '" + path + "'");
}

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw IoError("empty complex literal");
    // Split at the last +/- that is not an exponent sign and not leading.
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto parse_part = [](std::string part, bool imag_unit) -> double {
        if (imag_unit) {
            if (part.empty() || part == "+") return 1.0;
            if (part == "-") return -1.0;
        }
        size_t used = 0;
        double v = std::stod(part, &used);
        if (used != part.size()) throw IoError("bad numeric literal '" + part + "'");
        return v;
    };
    try {
        if (s.back() == 'i' || s.back() == 'I') {
            s.pop_back();
            if (split == std::string::npos)
                return {0.0, parse_part(s, true)};
            return {parse_part(s.substr(0, split), false), parse_part(s.substr(split), true)};
        }
        if (split != std::string::npos)
            throw IoError("complex literal '" + text + "' must end in i");
        return {parse_part(s, false), 0.0};
    } catch (const std::invalid_argument&) {
        throw IoError("bad complex literal '" + text + "'");
    } catch (const std::out_of_range&) {
        throw IoError("complex literal out of range '" + text + "'");
    }
}

} // namespace energeia
