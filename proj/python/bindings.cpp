// Python extension: a thin layer over the library. Structured results
// cross the boundary as JSON text and are decoded in the package.

#include "nscurve/descent.hpp"
#include "nscurve/error.hpp"
#include "nscurve/families.hpp"
#include "nscurve/invariants.hpp"
#include "nscurve/json_io.hpp"
#include "nscurve/parse.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace nscurve;

namespace {

Settings make_settings(int max_level, int truncation, int span_degree) {
    Settings s;
    s.max_level = max_level;
    s.truncation = truncation;
    s.span_degree = span_degree;
    return s;
}

FamilyMember member_arg(const std::string& json_text, int max_level) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::InvalidParameters, std::string("malformed member JSON: ") + e.what());
    }
    return member_from_json(j, max_level);
}

std::string ideal_text(const IdealPresentation& I) {
    std::string out = "level " + std::to_string(I.level) + "\n";
    for (const auto& g : I.generators) out += format_poly(g, std::max(1, I.level)) + "\n";
    return out;
}

} // namespace

PYBIND11_MODULE(_nscurve, m) {
    m.doc() = "Invariants, descent and quartic families over F_3(t)";

    // Held for the life of the process; the translator may run at any time.
    static auto* exc_type = new py::object(py::exception<Error>(m, "NscurveError"));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object value = (*exc_type)(e.what());
            value.attr("kind") = error_kind_name(e.kind());
            PyErr_SetObject(exc_type->ptr(), value.ptr());
        }
    });

    m.attr("DEFAULT_MAX_LEVEL") = kDefaultMaxLevel;
    m.attr("DEFAULT_TRUNCATION") = kDefaultTruncation;
    m.attr("DEFAULT_SPAN_DEGREE") = kDefaultSpanDegree;

    m.def(
        "invariants_json",
        [](const std::string& curve, const std::string& point, int max_level, int truncation, int span_degree) {
            ParseContext ctx;
            ctx.max_level = max_level;
            const HomPoly f = parse_poly(curve, ctx);
            const ProjPoint P = parse_point(point, ctx);
            py::gil_scoped_release release;
            return to_json(full_report(f, P, make_settings(max_level, truncation, span_degree))).dump();
        },
        py::arg("curve"), py::arg("point"), py::arg("max_level") = kDefaultMaxLevel,
        py::arg("truncation") = kDefaultTruncation, py::arg("span_degree") = kDefaultSpanDegree);

    m.def(
        "make_member_json",
        [](const std::string& family, const std::string& t1, const std::string& t2, const std::string& a,
           int max_level) {
            ParseContext ctx;
            ctx.max_level = max_level;
            return to_json(make_member(parse_family(family), parse_scalar(t1, ctx), parse_scalar(t2, ctx),
                                       parse_scalar(a, ctx), max_level))
                .dump();
        },
        py::arg("family"), py::arg("t1"), py::arg("t2"), py::arg("a"), py::arg("max_level") = kDefaultMaxLevel);

    m.def(
        "equation",
        [](const std::string& member, int max_level) { return format_poly(equation(member_arg(member, max_level)), 0); },
        py::arg("member"), py::arg("max_level") = kDefaultMaxLevel);

    m.def(
        "singular_points",
        [](const std::string& member, int max_level) {
            std::vector<std::string> out;
            for (const auto& P : singular_points(member_arg(member, max_level))) out.push_back(format_point(P, 1));
            return out;
        },
        py::arg("member"), py::arg("max_level") = kDefaultMaxLevel);

    m.def(
        "are_equivalent_json",
        [](const std::string& first, const std::string& second, int max_level) {
            const FamilyMember a = member_arg(first, max_level), b = member_arg(second, max_level);
            py::gil_scoped_release release;
            return to_json(are_equivalent(a, b, max_level)).dump();
        },
        py::arg("first"), py::arg("second"), py::arg("max_level") = kDefaultMaxLevel);

    m.def(
        "verify_member_json",
        [](const std::string& member, int max_level, int truncation, int span_degree) {
            const FamilyMember fm = member_arg(member, max_level);
            py::gil_scoped_release release;
            return to_json(verify_member(fm, make_settings(max_level, truncation, span_degree))).dump();
        },
        py::arg("member"), py::arg("max_level") = kDefaultMaxLevel, py::arg("truncation") = kDefaultTruncation,
        py::arg("span_degree") = kDefaultSpanDegree);

    m.def(
        "sample_members_json",
        [](const std::string& family, int count, std::uint64_t seed, int max_level) {
            std::mt19937_64 rng(seed);
            const Family tag = parse_family(family);
            Json out = Json::array();
            for (int i = 0; i < count; ++i) out.push_back(to_json(sample_member(tag, rng, max_level)));
            return out.dump();
        },
        py::arg("family"), py::arg("count"), py::arg("seed"), py::arg("max_level") = kDefaultMaxLevel);

    m.def(
        "is_invariant", [](const std::string& ideal) { return is_invariant(parse_ideal(ideal)); }, py::arg("ideal"));
    m.def(
        "descend", [](const std::string& ideal) { return ideal_text(descend(parse_ideal(ideal))); }, py::arg("ideal"));
    m.def(
        "extend", [](const std::string& ideal) { return ideal_text(extend(parse_ideal(ideal))); }, py::arg("ideal"));
}
