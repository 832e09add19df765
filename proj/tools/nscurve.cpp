// Command line front end. Exit codes: 0 success, 1 input error,
// 2 failed check, 3 not equivalent or not invariant.

#include "nscurve/descent.hpp"
#include "nscurve/error.hpp"
#include "nscurve/families.hpp"
#include "nscurve/invariants.hpp"
#include "nscurve/json_io.hpp"
#include "nscurve/parse.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace nscurve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailedCheck = 2;
constexpr int kExitNegative = 3;

struct RunConfig {
    int p = 3;
    int max_level = kDefaultMaxLevel;
    int truncation = kDefaultTruncation;
    int span_degree = kDefaultSpanDegree;
    std::uint64_t seed = 0;
    bool json = false;
    int jobs = 1;

    Settings settings() const {
        Settings s;
        s.max_level = max_level;
        s.truncation = truncation;
        s.span_degree = span_degree;
        return s;
    }

    ParseContext parse_context() const {
        ParseContext ctx;
        ctx.p = p;
        ctx.max_level = max_level;
        return ctx;
    }
};

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_p3(const RunConfig& cfg, const char* what) {
    if (cfg.p != 3) throw Error(ErrorKind::InvalidArgument, std::string(what) + " is only available for p = 3");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void print_semigroup(const char* label, const SemigroupData& sg) {
    std::cout << label << ": scale " << sg.scale << ", generators {" << join_ints(sg.minimal_generators)
              << "}, gaps {" << join_ints(sg.gaps) << "}, conductor " << sg.conductor << "\n";
}

void print_report(const InvariantsReport& r) {
    const Json j = to_json(r);
    std::cout << "point: " << j["point"].get<std::string>() << "\n"
              << "singular: " << (r.singular ? "yes" : "no") << "\n"
              << "degree of point: " << r.degree_of_point << "\n"
              << "delta: " << r.delta << "\n"
              << "conductor: " << r.conductor << "\n";
    print_semigroup("semigroup", r.semigroup);
    print_semigroup("semigroup over K", r.semigroup_K);
    std::cout << "differential degrees: " << join_ints(r.d_levels) << "\n"
              << "level point degrees: " << join_ints(r.level_point_degrees) << "\n"
              << "embedding dimension: " << r.embedding_dimension << "\n"
              << "regularity: " << regularity_name(r.regularity) << "\n";
    for (const auto& c : r.checks) std::cout << "check " << c.name << ": " << (c.ok ? "pass" : "FAIL") << "\n";
}

// A member is given as a JSON file, inline JSON, or "TAG,t1,t2,a".
FamilyMember read_member(const std::string& arg, const RunConfig& cfg) {
    std::string text = arg;
    if (std::ifstream probe(arg); probe.good()) text = read_file(arg);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw Error(ErrorKind::InvalidParameters, std::string("malformed member JSON: ") + e.what());
        }
        return member_from_json(j, cfg.max_level);
    }
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 4) throw Error(ErrorKind::InvalidParameters, "member must be TAG,t1,t2,a or a JSON object");
    ParseContext ctx = cfg.parse_context();
    return make_member(parse_family(parts[0]), parse_scalar(parts[1], ctx), parse_scalar(parts[2], ctx),
                       parse_scalar(parts[3], ctx), cfg.max_level);
}

// ---- invariants ------------------------------------------------------

struct InvariantsArgs {
    std::string curve;
    std::string curve_file;
    std::string member;
    std::string point;
    int chart = -1;
};

int cmd_invariants(const InvariantsArgs& a, const RunConfig& cfg) {
    const Settings s = cfg.settings();
    ParseContext ctx = cfg.parse_context();
    HomPoly curve;
    std::vector<ProjPoint> points;
    if (!a.member.empty()) {
        require_p3(cfg, "member input");
        const FamilyMember m = read_member(a.member, cfg);
        curve = equation(m);
        if (a.point.empty())
            for (const auto& P : singular_points(m)) points.push_back(P);
    } else {
        std::string text = a.curve_file.empty() ? a.curve : read_file(a.curve_file);
        if (text.empty()) throw Error(ErrorKind::InvalidArgument, "give --curve, --curve-file or --member");
        // A `level m` header also fixes r in the point.
        std::istringstream in(text);
        std::string word;
        if (in >> word && word == "level") {
            int m = 0;
            if (in >> m) ctx.level = m;
        }
        curve = parse_poly(text, ctx);
    }
    if (!a.point.empty()) points.push_back(parse_point(a.point, ctx));
    if (points.empty()) throw Error(ErrorKind::InvalidArgument, "give --point");
    if (a.chart >= 0)
        for (const auto& P : points)
            if (P[a.chart].is_zero())
                throw Error(ErrorKind::InvalidArgument, "point does not lie in chart " + std::to_string(a.chart));

    std::vector<InvariantsReport> reports;
    for (const auto& P : points) reports.push_back(full_report(curve, P, s));
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.all_checks_pass();

    if (cfg.json) {
        if (reports.size() == 1) {
            print_json(to_json(reports.front()));
        } else {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            print_json(arr);
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << "\n";
            print_report(reports[i]);
        }
    }
    return ok ? kExitOk : kExitFailedCheck;
}

// ---- family ----------------------------------------------------------

struct FamilyArgs {
    std::string tag, t1, t2, a;
};

int cmd_family(const FamilyArgs& a, const RunConfig& cfg) {
    require_p3(cfg, "family");
    const ParseContext ctx = cfg.parse_context();
    const FamilyMember m = make_member(parse_family(a.tag), parse_scalar(a.t1, ctx), parse_scalar(a.t2, ctx),
                                       parse_scalar(a.a, ctx), cfg.max_level);
    const HomPoly f = equation(m);
    const auto sing = singular_points(m);
    if (cfg.json) {
        Json j = to_json(m);
        j["equation"] = format_poly(f, 0);
        j["singular_points"] = Json::array({format_point(sing[0], 1), format_point(sing[1], 1)});
        print_json(j);
    } else {
        const Json j = to_json(m);
        for (const char* k : {"family", "t1", "t2", "a", "A", "B", "C"})
            std::cout << k << ": " << j[k].get<std::string>() << "\n";
        std::cout << "equation: " << format_poly(f, 0) << "\n"
                  << "singular points: " << format_point(sing[0], 1) << " " << format_point(sing[1], 1) << "\n";
    }
    return kExitOk;
}

// ---- equiv -----------------------------------------------------------

struct EquivArgs {
    std::string first, second;
};

int cmd_equiv(const EquivArgs& a, const RunConfig& cfg) {
    require_p3(cfg, "equiv");
    const FamilyMember m1 = read_member(a.first, cfg);
    const FamilyMember m2 = read_member(a.second, cfg);
    const EquivalenceResult e = are_equivalent(m1, m2, cfg.max_level);
    if (cfg.json) {
        print_json(to_json(e));
    } else if (e.verdict == EquivalenceVerdict::Equivalent) {
        const Json j = to_json(e);
        std::cout << "equivalent\nmap:\n";
        for (const auto& row : j["witness"]["map"])
            std::cout << "  [" << row[0].get<std::string>() << ", " << row[1].get<std::string>() << ", "
                      << row[2].get<std::string>() << "]\n";
        for (const auto& [k, v] : j["witness"]["parameters"].items())
            std::cout << k << ": " << v.get<std::string>() << "\n";
    } else {
        std::cout << (e.verdict == EquivalenceVerdict::NotEquivalent ? "not equivalent" : "different family") << "\n";
    }
    return e.verdict == EquivalenceVerdict::Equivalent ? kExitOk : kExitNegative;
}

// ---- descend ---------------------------------------------------------

struct DescendArgs {
    std::string ideal, ideal_file, direction;
};

int cmd_descend(const DescendArgs& a, const RunConfig& cfg) {
    require_p3(cfg, "descend");
    const std::string text = a.ideal_file.empty() ? a.ideal : read_file(a.ideal_file);
    if (text.empty()) throw Error(ErrorKind::InvalidArgument, "give --ideal or --ideal-file");
    const IdealPresentation I = parse_ideal(text, cfg.parse_context());
    if (a.direction == "check") {
        const bool inv = is_invariant(I);
        if (cfg.json) {
            Json j;
            j["direction"] = "check";
            j["invariant"] = inv;
            print_json(j);
        } else {
            std::cout << (inv ? "true" : "false") << "\n";
        }
        return inv ? kExitOk : kExitNegative;
    }
    const IdealPresentation out = a.direction == "descend" ? descend(I) : extend(I);
    if (cfg.json) {
        Json j;
        j["direction"] = a.direction;
        const Json body = to_json(out);
        for (const auto& [k, v] : body.items()) j[k] = v;
        print_json(j);
    } else {
        std::cout << "level " << out.level << "\n";
        for (const auto& g : out.generators) std::cout << format_poly(g, std::max(1, out.level)) << "\n";
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------

struct VerifyArgs {
    std::string tag;
    int samples = 20;
};

int cmd_verify(const VerifyArgs& a, const RunConfig& cfg) {
    require_p3(cfg, "verify");
    const Family tag = parse_family(a.tag);
    const Settings s = cfg.settings();

    // Sampling is sequential so the parameter list depends only on the seed.
    std::mt19937_64 rng(cfg.seed);
    std::vector<FamilyMember> members;
    for (int i = 0; i < a.samples; ++i) members.push_back(sample_member(tag, rng, cfg.max_level));

    struct Outcome {
        std::optional<MemberVerification> v;
        std::string error;
    };
    std::vector<Outcome> outcomes(members.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < members.size();) {
            try {
                outcomes[i].v = verify_member(members[i], s);
            } catch (const Error& e) {
                outcomes[i].error = e.what();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(members.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<std::string> check_order;
    std::map<std::string, int> passed;
    int members_passed = 0;
    for (const auto& o : outcomes) {
        if (!o.v) continue;
        for (const auto& c : o.v->checks) {
            if (!passed.count(c.name)) check_order.push_back(c.name), passed[c.name] = 0;
            passed[c.name] += c.ok ? 1 : 0;
        }
    }
    for (const auto& o : outcomes) members_passed += (o.v && o.v->all_pass()) ? 1 : 0;
    const int n = static_cast<int>(members.size());

    if (cfg.json) {
        Json j;
        j["family"] = family_name(tag);
        j["samples"] = n;
        j["seed"] = cfg.seed;
        Json conf;
        conf["p"] = cfg.p;
        conf["max_level"] = cfg.max_level;
        conf["truncation"] = cfg.truncation;
        conf["span_degree"] = cfg.span_degree;
        j["config"] = conf;
        Json list = Json::array();
        for (std::size_t i = 0; i < members.size(); ++i) {
            Json m = to_json(members[i]);
            const Outcome& o = outcomes[i];
            m["all_pass"] = o.v && o.v->all_pass();
            Json failed = Json::array();
            if (o.v) {
                for (const auto& c : o.v->checks)
                    if (!c.ok) failed.push_back(c.name);
                m["geometric_genus"] = o.v->geometric_genus;
            } else {
                m["error"] = o.error;
            }
            m["failed_checks"] = failed;
            list.push_back(m);
        }
        j["members"] = list;
        Json counts = Json::object();
        for (const auto& name : check_order) counts[name] = passed[name];
        j["checks"] = counts;
        j["passed"] = members_passed;
        print_json(j);
    } else {
        std::cout << "family " << family_name(tag) << ", " << n << " samples, seed " << cfg.seed << "\n\n";
        std::size_t w = 5;
        for (const auto& name : check_order) w = std::max(w, name.size());
        std::cout << std::left << std::setw(static_cast<int>(w)) << "check" << "  passed\n";
        for (const auto& name : check_order)
            std::cout << std::left << std::setw(static_cast<int>(w)) << name << "  " << passed[name] << "/" << n << "\n";
        for (std::size_t i = 0; i < members.size(); ++i) {
            const Outcome& o = outcomes[i];
            if (o.v && o.v->all_pass()) continue;
            const Json m = to_json(members[i]);
            std::cout << "FAIL sample " << i << " (t1=" << m["t1"].get<std::string>() << ", t2="
                      << m["t2"].get<std::string>() << ", a=" << m["a"].get<std::string>() << ")";
            if (!o.v) std::cout << ": " << o.error;
            std::cout << "\n";
        }
        std::cout << "\n" << members_passed << "/" << n << " members pass all checks\n";
    }
    return members_passed == n ? kExitOk : kExitFailedCheck;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidParameters:
    case ErrorKind::ParseError:
    case ErrorKind::PointNotOnCurve:
    case ErrorKind::LevelOverflow:
    case ErrorKind::DivisionByZero: return kExitInput;
    case ErrorKind::NotInvariant: return kExitNegative;
    default: return kExitFailedCheck;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants, descent and quartic families over F_3(t)"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    if (const char* env = std::getenv("NSCURVE_MAX_LEVEL")) {
        try {
            std::size_t used = 0;
            cfg.max_level = std::stoi(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::logic_error&) {
            std::cerr << "error: NSCURVE_MAX_LEVEL must be an integer\n";
            return kExitInput;
        }
    }
    app.add_option("--p", cfg.p, "Characteristic")->capture_default_str();
    app.add_option("--max-level", cfg.max_level, "Deepest tower level (env NSCURVE_MAX_LEVEL)")
        ->capture_default_str();
    app.add_option("--trunc", cfg.truncation, "Initial series truncation")->capture_default_str();
    app.add_option("--span-degree", cfg.span_degree, "Degree bound for coordinate ring spans")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized sampling")->capture_default_str();
    app.add_flag("--json", cfg.json, "Print JSON instead of text");
    app.add_option("--jobs", cfg.jobs, "Worker threads for verify")->capture_default_str();

    InvariantsArgs inv;
    auto* c_inv = app.add_subcommand("invariants", "Invariants of a curve at a point");
    c_inv->add_option("--curve", inv.curve, "Curve as a homogeneous form");
    c_inv->add_option("--curve-file", inv.curve_file, "File holding the curve")->check(CLI::ExistingFile);
    c_inv->add_option("--member", inv.member, "Family member (JSON file, JSON, or TAG,t1,t2,a)");
    c_inv->add_option("--point", inv.point, "Point as (a:b:c)");
    c_inv->add_option("--chart", inv.chart, "Require the point to lie in this affine chart")
        ->check(CLI::Range(0, 2));

    FamilyArgs fam;
    auto* c_fam = app.add_subcommand("family", "Build a family member");
    c_fam->add_option("--family", fam.tag, "C0, C1 or C2")->required();
    c_fam->add_option("--t1", fam.t1, "First parameter")->required();
    c_fam->add_option("--t2", fam.t2, "Second parameter")->required();
    c_fam->add_option("--a", fam.a, "Scale parameter in K")->required();

    EquivArgs eq;
    auto* c_eq = app.add_subcommand("equiv", "Decide equivalence of two members");
    c_eq->add_option("first", eq.first, "First member")->required();
    c_eq->add_option("second", eq.second, "Second member")->required();

    DescendArgs ds;
    auto* c_ds = app.add_subcommand("descend", "Descend, extend or test an ideal");
    c_ds->add_option("--ideal", ds.ideal, "Generators separated by ';'");
    c_ds->add_option("--ideal-file", ds.ideal_file, "File with one generator per line")->check(CLI::ExistingFile);
    c_ds->add_option("--direction", ds.direction, "descend, extend or check")
        ->check(CLI::IsMember({"descend", "extend", "check"}))
        ->default_val("check");

    VerifyArgs vf;
    auto* c_vf = app.add_subcommand("verify", "Verify sampled family members");
    c_vf->add_option("--family", vf.tag, "C0, C1 or C2")->required();
    c_vf->add_option("--samples", vf.samples, "Number of members")->capture_default_str()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (!is_prime(cfg.p)) throw Error(ErrorKind::InvalidArgument, "--p must be prime");
        if (cfg.max_level < 1 || cfg.truncation < 1 || cfg.span_degree < 1 || cfg.jobs < 1)
            throw Error(ErrorKind::InvalidArgument, "bounds must be positive");
        if (*c_inv) return cmd_invariants(inv, cfg);
        if (*c_fam) return cmd_family(fam, cfg);
        if (*c_eq) return cmd_equiv(eq, cfg);
        if (*c_ds) return cmd_descend(ds, cfg);
        if (*c_vf) return cmd_verify(vf, cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailedCheck;
    }
    return kExitOk;
}
