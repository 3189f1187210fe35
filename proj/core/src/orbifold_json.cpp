#include "orbtop/orbifold_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace orbtop {

namespace {

using Json = nlohmann::ordered_json;

Json rat_vec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rat& q : v) out.push_back(rat_str(q));
    return out;
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field '" + key + "' in " + where);
    return *it;
}

std::string string_field(const Json& j, const std::string& key, const std::string& where) {
    const Json& f = field(j, key, where);
    if (!f.is_string()) throw SchemaError("field '" + key + "' in " + where + " must be a string");
    return f.get<std::string>();
}

Int int_field(const Json& j, const std::string& key, const std::string& where) {
    const Json& f = field(j, key, where);
    if (f.is_number_integer()) return Int(f.get<long>());
    if (f.is_string()) return parse_int(f.get<std::string>());
    throw SchemaError("field '" + key + "' in " + where + " must be an integer or string");
}

RatVec rat_vec_field(const Json& j, const std::string& key, const std::string& where) {
    const Json& f = field(j, key, where);
    if (!f.is_array()) throw SchemaError("field '" + key + "' in " + where + " must be an array");
    RatVec v;
    for (const Json& e : f) {
        if (e.is_number_integer())
            v.emplace_back(Rat(Int(e.get<long>())));
        else if (e.is_string())
            v.push_back(parse_rat(e.get<std::string>()));
        else
            throw SchemaError("entries of '" + key + "' in " + where +
                              " must be integers or 'p/q' strings");
    }
    return v;
}

}  // namespace

std::string orbifold_to_json_text(const SeifertBundle& bundle) {
    const OrbifoldModel& model = bundle.base;
    Json j;
    j["schema"] = 1;
    j["basis"] = Json::array();
    for (const auto& v : model.basis)
        j["basis"].push_back(Json{{"label", v.label}, {"integral", v.integral}});
    j["gram"] = Json::array();
    for (std::size_t i = 0; i < model.b2(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < model.b2(); ++k)
            row.push_back(rat_str(model.intersection.at(i, k)));
        j["gram"].push_back(row);
    }
    j["surfaces"] = Json::array();
    for (const auto& s : model.surfaces) {
        j["surfaces"].push_back(Json{{"label", s.label},
                                     {"genus", int_str(s.genus)},
                                     {"m", int_str(s.multiplicity)},
                                     {"j", int_str(s.local_invariant)},
                                     {"b", int_str(s.b)},
                                     {"class", rat_vec_to_json(s.homology_class)}});
    }
    j["points"] = Json::array();
    for (const auto& p : model.points) {
        Json incident = Json::array();
        for (const auto& label : p.incident_surfaces) incident.push_back(label);
        j["points"].push_back(Json{{"label", p.label},
                                   {"m", int_str(p.action.m)},
                                   {"j1", int_str(p.action.j1)},
                                   {"j2", int_str(p.action.j2)},
                                   {"incident", incident}});
    }
    Json flags;
    flags["b1_zero"] = model.b1_zero;
    flags["w2_zero"] = model.w2_zero;
    flags["canonical_class"] =
        model.canonical_class ? rat_vec_to_json(*model.canonical_class) : Json(nullptr);
    j["flags"] = flags;
    j["c1B"] = rat_vec_to_json(bundle.background_class);
    return j.dump(2) + "\n";
}

SeifertBundle parse_orbifold(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("top level must be an object");
    Int schema = int_field(j, "schema", "top level");
    if (schema != 1) throw SchemaError("unsupported schema version " + int_str(schema));

    OrbifoldModel model;
    const Json& basis = field(j, "basis", "top level");
    if (!basis.is_array()) throw SchemaError("'basis' must be an array");
    for (const Json& b : basis) {
        BasisVector v;
        v.label = string_field(b, "label", "basis entry");
        const Json& integral = field(b, "integral", "basis entry");
        if (!integral.is_boolean()) throw SchemaError("'integral' must be a boolean");
        v.integral = integral.get<bool>();
        model.basis.push_back(v);
    }

    const Json& gram = field(j, "gram", "top level");
    if (!gram.is_array() || gram.size() != model.basis.size())
        throw SchemaError("'gram' must be a " + std::to_string(model.basis.size()) + "-row array");
    SymmetricForm form(model.basis.size());
    for (std::size_t i = 0; i < model.basis.size(); ++i) {
        if (!gram[i].is_array() || gram[i].size() != model.basis.size())
            throw SchemaError("'gram' row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < model.basis.size(); ++k) {
            const Json& e = gram[i][k];
            if (e.is_number_integer())
                form.at(i, k) = Rat(Int(e.get<long>()));
            else if (e.is_string())
                form.at(i, k) = parse_rat(e.get<std::string>());
            else
                throw SchemaError("'gram' entries must be integers or 'p/q' strings");
        }
    }
    for (std::size_t i = 0; i < form.dim(); ++i)
        for (std::size_t k = i + 1; k < form.dim(); ++k)
            if (form.at(i, k) != form.at(k, i)) throw SchemaError("'gram' is not symmetric");
    model.intersection = form;

    const Json& surfaces = field(j, "surfaces", "top level");
    if (!surfaces.is_array()) throw SchemaError("'surfaces' must be an array");
    for (const Json& s : surfaces) {
        IsotropySurface surf;
        surf.label = string_field(s, "label", "surface entry");
        surf.genus = int_field(s, "genus", "surface " + surf.label);
        surf.multiplicity = int_field(s, "m", "surface " + surf.label);
        surf.local_invariant = int_field(s, "j", "surface " + surf.label);
        surf.b = int_field(s, "b", "surface " + surf.label);
        surf.homology_class = rat_vec_field(s, "class", "surface " + surf.label);
        model.surfaces.push_back(std::move(surf));
    }

    const Json& points = field(j, "points", "top level");
    if (!points.is_array()) throw SchemaError("'points' must be an array");
    for (const Json& p : points) {
        SingularPoint point;
        point.label = string_field(p, "label", "point entry");
        point.action.m = int_field(p, "m", "point " + point.label);
        point.action.j1 = int_field(p, "j1", "point " + point.label);
        point.action.j2 = int_field(p, "j2", "point " + point.label);
        const Json& incident = field(p, "incident", "point " + point.label);
        if (!incident.is_array()) throw SchemaError("'incident' must be an array of labels");
        for (const Json& label : incident) {
            if (!label.is_string()) throw SchemaError("'incident' entries must be strings");
            point.incident_surfaces.push_back(label.get<std::string>());
        }
        model.points.push_back(std::move(point));
    }

    const Json& flags = field(j, "flags", "top level");
    const Json& b1 = field(flags, "b1_zero", "flags");
    const Json& w2 = field(flags, "w2_zero", "flags");
    if (!b1.is_boolean() || !w2.is_boolean())
        throw SchemaError("'b1_zero' and 'w2_zero' must be booleans");
    model.b1_zero = b1.get<bool>();
    model.w2_zero = w2.get<bool>();
    if (flags.contains("canonical_class") && !flags["canonical_class"].is_null())
        model.canonical_class = rat_vec_field(flags, "canonical_class", "flags");

    SeifertBundle bundle;
    bundle.background_class = j.contains("c1B") ? rat_vec_field(j, "c1B", "top level")
                                                : RatVec(model.basis.size(), Rat(0));
    if (bundle.background_class.size() != model.basis.size())
        throw SchemaError("'c1B' has the wrong dimension");
    bundle.base = std::move(model);
    bundle.base.validate();
    return bundle;
}

SeifertBundle load_orbifold(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_orbifold(buffer.str());
}

void save_orbifold(const SeifertBundle& bundle, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << orbifold_to_json_text(bundle);
}

}  // namespace orbtop
