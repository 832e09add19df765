#include "nscurve/json_io.hpp"

#include "nscurve/error.hpp"

#include <sstream>

namespace nscurve {

namespace {

int print_level(const TowerScalar& x) { return std::max(1, level_of(x)); }

int print_level(const ProjPoint& P) {
    int lv = 1;
    for (int i = 0; i < 3; ++i) lv = std::max(lv, level_of(P[i]));
    return lv;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string scalar_text(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorKind::InvalidParameters, std::string("missing field '") + key + "'");
    const Json& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorKind::InvalidParameters, std::string("field '") + key + "' must be a string");
}

} // namespace

Json to_json(const SemigroupData& sg) {
    Json j;
    j["values"] = sg.values;
    j["truncation"] = sg.truncation;
    j["scale"] = sg.scale;
    j["multiplicity"] = sg.multiplicity;
    j["gaps"] = sg.gaps;
    j["delta"] = sg.delta;
    j["conductor"] = sg.conductor;
    j["minimal_generators"] = sg.minimal_generators;
    j["closed"] = sg.closed;
    return j;
}

Json to_json(const InvariantsReport& r) {
    const int lv = print_level(r.point);
    Json j;
    j["point"] = format_point(r.point, lv);
    j["level"] = lv;
    j["p"] = r.p;
    j["singular"] = r.singular;
    j["degree_of_point"] = r.degree_of_point;
    j["delta"] = r.delta;
    j["conductor"] = r.conductor;
    j["semigroup"] = to_json(r.semigroup);
    j["semigroup_K"] = to_json(r.semigroup_K);
    j["d_levels"] = r.d_levels;
    j["level_point_degrees"] = r.level_point_degrees;
    j["embedding_dimension"] = r.embedding_dimension;
    j["regularity"] = regularity_name(r.regularity);
    Json checks = Json::object();
    for (const auto& c : r.checks) checks[c.name] = c.ok;
    j["checks"] = checks;
    j["all_checks_pass"] = r.all_checks_pass();
    return j;
}

Json to_json(const FamilyMember& m) {
    Json j;
    j["family"] = family_name(m.tag);
    j["t1"] = format_scalar(m.t1, 1);
    j["t2"] = format_scalar(m.t2, 1);
    j["a"] = format_scalar(m.a, 0);
    j["A"] = format_scalar(m.abc[0], 1);
    j["B"] = format_scalar(m.abc[1], 1);
    j["C"] = format_scalar(m.abc[2], 1);
    return j;
}

Json to_json(const ProjMap& T) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int k = 0; k < 3; ++k) row.push_back(format_scalar(T(i, k), print_level(T(i, k))));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const EquivalenceResult& e) {
    Json j;
    j["verdict"] = verdict_name(e.verdict);
    if (e.witness) {
        Json w;
        w["map"] = to_json(e.witness->map);
        Json params = Json::object();
        for (const auto& [name, value] : e.witness->parameters) params[name] = format_scalar(value, print_level(value));
        w["parameters"] = params;
        j["witness"] = w;
    }
    return j;
}

Json to_json(const MemberVerification& v) {
    Json j;
    Json reports = Json::array();
    for (const auto& r : v.reports) reports.push_back(to_json(r));
    j["reports"] = reports;
    j["geometric_genus"] = v.geometric_genus;
    j["probe_points"] = v.probe_points;
    j["probe_extra_singular"] = v.probe_extra_singular;
    Json checks = Json::object();
    for (const auto& c : v.checks) checks[c.name] = c.ok;
    j["checks"] = checks;
    j["all_pass"] = v.all_pass();
    return j;
}

Json to_json(const IdealPresentation& I) {
    Json j;
    j["level"] = I.level;
    Json gens = Json::array();
    for (const auto& g : I.generators) gens.push_back(format_poly(g, std::max(1, I.level)));
    j["generators"] = gens;
    return j;
}

FamilyMember member_from_json(const Json& j, int max_level) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidParameters, "member must be a JSON object");
    const Family tag = parse_family(scalar_text(j, "family"));
    ParseContext ctx;
    ctx.level = 1;
    ctx.max_level = max_level;
    const bool has_params = j.contains("t1") || j.contains("t2") || j.contains("a");
    const bool has_abc = j.contains("A") || j.contains("B") || j.contains("C");
    std::array<TowerScalar, 3> abc;
    if (has_abc)
        abc = {parse_scalar(scalar_text(j, "A"), ctx), parse_scalar(scalar_text(j, "B"), ctx),
               parse_scalar(scalar_text(j, "C"), ctx)};
    if (!has_params) {
        if (!has_abc) throw Error(ErrorKind::InvalidParameters, "member needs t1, t2, a or A, B, C");
        return member_from_abc(tag, abc, max_level);
    }
    FamilyMember m = make_member(tag, parse_scalar(scalar_text(j, "t1"), ctx), parse_scalar(scalar_text(j, "t2"), ctx),
                                 parse_scalar(scalar_text(j, "a"), ctx), max_level);
    if (has_abc && m.abc != abc) throw Error(ErrorKind::InvalidParameters, "A, B, C do not match t1, t2, a");
    return m;
}

IdealPresentation parse_ideal(const std::string& text, const ParseContext& ctx) {
    ParseContext local = ctx;
    IdealPresentation I;
    std::vector<std::string> pieces;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (first && s.rfind("level", 0) == 0) {
            std::string rest = trim(s.substr(5));
            const auto semi = rest.find(';');
            std::string num = trim(rest.substr(0, semi));
            try {
                std::size_t used = 0;
                local.level = std::stoi(num, &used);
                if (used != num.size() || local.level < 0) throw std::invalid_argument(num);
            } catch (const std::logic_error&) {
                throw ParseError(1, 7, "expected a level number after 'level'");
            }
            first = false;
            if (semi == std::string::npos) continue;
            s = trim(rest.substr(semi + 1));
            if (s.empty()) continue;
        }
        first = false;
        std::size_t start = 0;
        while (start <= s.size()) {
            const auto semi = s.find(';', start);
            std::string g = trim(s.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
            if (!g.empty()) pieces.push_back(g);
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
    }
    if (pieces.empty()) throw ParseError(1, 1, "no generators given");
    int level = 0;
    for (const auto& g : pieces) {
        HomPoly f = parse_poly(g, local).reduced();
        for (const auto& [e, c] : f.terms()) level = std::max(level, level_of(c));
        I.generators.push_back(f);
    }
    I.level = level;
    if (level > 1) throw Error(ErrorKind::InvalidArgument, "ideal generators must have coefficients of level at most 1");
    return I;
}

} // namespace nscurve
