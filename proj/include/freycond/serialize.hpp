#pragma once

// Canonical JSON: sorted keys, rationals as "num/den", polynomials as
// coefficient arrays lowest degree first, field elements as
// {"k", "modulus", "bits"}.

#include <nlohmann/json.hpp>

#include "freycond/classifier.hpp"
#include "freycond/frey_families.hpp"
#include "freycond/gf2k.hpp"
#include "freycond/pipelines.hpp"
#include "freycond/rational.hpp"

namespace freycond::json {

using Json = nlohmann::json;

inline Json rat(const Rat& q) { return q.num().get_str() + "/" + q.den().get_str(); }

inline Rat rat_from(const Json& j) {
    if (!j.is_string()) fail(ErrorKind::Usage, "rational must be a \"num/den\" string");
    return Rat::parse(j.get<std::string>());
}

inline Json poly(const Poly<Rat>& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rat(c));
    return a;
}

inline Poly<Rat> poly_from(const Json& j) {
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(rat_from(e));
    return Poly<Rat>(std::move(c));
}

inline Json gf2(const GF2Elem& e) {
    return Json{{"k", e.field_degree()}, {"modulus", e.modulus()}, {"bits", e.bits()}};
}

inline GF2Elem gf2_from(const Json& j) {
    const int k = j.at("k").get<int>();
    const auto mod = j.at("modulus").get<std::uint32_t>();
    if ((k == 1) != (mod == 0) || (k > 1 && gf2::bit_degree(mod) != k))
        fail(ErrorKind::FieldMismatch, "k does not match the modulus");
    return GF2Elem(mod, j.at("bits").get<std::uint32_t>());
}

inline Json gf2_poly(const GF2Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(gf2(c));
    return a;
}

inline GF2Poly gf2_poly_from(const Json& j) {
    std::vector<GF2Elem> c;
    for (const auto& e : j) c.push_back(gf2_from(e));
    return GF2Poly(std::move(c));
}

inline Json strings(const std::vector<std::string>& v) { return Json(v); }

inline Json fiber(const SpecialFiber& F) {
    return Json{{"Q", gf2_poly(F.Q)}, {"P", gf2_poly(F.P)}, {"genus", F.g}, {"equation", to_string(F)}};
}

inline Json point(const PointReport& p) {
    return Json{{"patch", p.patch == Patch::Affine ? "affine" : "infinity"},
                {"x", gf2(p.x)},
                {"y", gf2(p.y)},
                {"x_text", format_gf2(p.x)},
                {"y_text", format_gf2(p.y)},
                {"field_degree", p.field_degree},
                {"kind", std::string(to_string(p.kind))}};
}

inline Json pipeline(const PipelineResult& r) {
    Json pts = Json::array();
    for (const auto& p : r.points) pts.push_back(point(p));
    Json j{{"label", r.label},
           {"r", r.r},
           {"parameter", r.parameter},
           {"model", r.model},
           {"model_Q", strings(r.model_Q)},
           {"model_P", strings(r.model_P)},
           {"integral", r.integral},
           {"disc_valuation", r.disc_valuation},
           {"unit_discriminant", r.unit_discriminant},
           {"factor_law_holds", r.factor_law_holds},
           {"fiber", fiber(r.fiber)},
           {"fiber_type", std::string(to_string(r.fiber_type.kind))},
           {"nodes", r.fiber_type.nodes},
           {"non_semistable", r.fiber_type.non_semistable},
           {"points", pts},
           {"base_defined", r.base_defined},
           {"field_of_definition", r.field_of_definition},
           {"documented_mismatches", strings(r.mismatches)}};
    if (r.label == "odd-good") {
        j["twist"] = r.twist;
        j["z"] = rat(r.z);
        j["s"] = rat(r.s);
    }
    return j;
}

inline Json exponent(const std::optional<int>& e) { return e ? Json(*e) : Json("not_covered"); }

inline Json conductor(const ConductorReport& c, const Json& oracle = nullptr) {
    return Json{{"signature", std::string(to_string(c.signature))},
                {"r", c.signature == Signature::P35 ? Json(nullptr) : Json(c.r)},
                {"t", rat(c.t)},
                {"case", c.case_label},
                {"conductor_exponent", exponent(c.exponent)},
                {"inertial_type", c.inertial_type.empty() ? Json(nullptr) : Json(c.inertial_type)},
                {"source", c.source},
                {"mode", std::string(to_string(c.mode))},
                {"oracle", oracle}};
}

inline Json cross_validation(const CrossValidation& cv) {
    return Json{{"printed_exponent", exponent(cv.printed.exponent)},
                {"oracle_mode_exponent", exponent(cv.oracle_mode.exponent)},
                {"construction_exponent", cv.oracle_exponent},
                {"agree", cv.agree},
                {"witness", cv.witness},
                {"witness_model", cv.witness_model},
                {"conflict", cv.conflict.empty() ? Json(nullptr) : Json(cv.conflict)}};
}

inline Json identities(const IdentityReport& rep) {
    return Json{{"r", rep.r},
                {"h", poly(rep.h)},
                {"f", poly(rep.f)},
                {"recurrence_matches_definition", rep.recurrence_matches_definition},
                {"f_plus_2_factorization", rep.plus_identity},
                {"f_minus_2_printed_factorization", rep.minus_printed_holds},
                {"f_minus_2_square_factor_is_h", rep.minus_factor_is_h},
                {"f_minus_2_square_factor", poly(rep.minus_square_factor)},
                {"f_squared_minus_4_factorization", rep.product_identity},
                {"degrees", rep.degrees_ok},
                {"endpoint_values", rep.endpoint_values},
                {"h_irreducible_mod", rep.irreducible_mod ? Json(*rep.irreducible_mod) : Json(nullptr)}};
}

inline Json closed_form(const ClosedFormReport& rep) {
    return Json{{"family", std::string(to_string(rep.family))},
                {"r", rep.r},
                {"method", rep.method},
                {"computed", rep.computed},
                {"printed", rep.printed},
                {"printed_matches", rep.printed_matches},
                {"computed_form_matches", rep.computed_form_matches}};
}

/// Canonical rendering; parse(render(j)) renders identically.
inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace freycond::json
