#include "holm/serialize.hpp"

namespace holm {

using nlohmann::json;

json to_json(const EPoint& p) {
    if (p.is_infinity()) return json{{"infinity", true}};
    return json{{"x", p.x().str()}, {"y", p.y().str()}};
}

json to_json(const HPoint& p) { return json{{"x", p.x.str()}, {"y", p.y.str()}}; }

json to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

json to_json(const CurvePoly& p) { return json{{"f", to_json(p.f)}, {"g", to_json(p.g)}}; }

json to_json(const LemmaReport& r) {
    json j{
        {"lemma", r.lemma_id},
        {"point", to_json(r.point)},
        {"prime", to_string(r.prime)},
        {"valuation_multiple", r.valuation_multiple},
        {"witness_multiple", r.multiple_used},
        {"valuation", r.observed_valuation ? json(r.observed_valuation->str()) : json(nullptr)},
        {"relation", to_string(r.relation)},
        {"claimed", r.claimed},
        {"witness", to_json(r.witness)},
        {"witness_non_integral",
         r.witness_non_integral ? json(*r.witness_non_integral) : json(nullptr)},
        {"notes", r.notes},
        {"verdict", to_string(r.verdict)},
    };
    return j;
}

json to_json(const TorsionCertificate& c) {
    json candidates = json::array();
    for (const auto& ev : c.candidates) {
        const auto& r = ev.report;
        candidates.push_back(json{
            {"point", to_json(ev.point)},
            {"lemma", r.lemma_id},
            {"prime", to_string(r.prime)},
            {"witness_multiple", r.multiple_used},
            {"witness_x", r.witness.is_infinity() ? json(nullptr) : json(r.witness.x().str())},
            {"witness_non_integral",
             r.witness_non_integral ? json(*r.witness_non_integral) : json(nullptr)},
            {"valuation_multiple", r.valuation_multiple},
            {"valuation",
             r.observed_valuation ? json(r.observed_valuation->str()) : json(nullptr)},
            {"verdict", to_string(r.verdict)},
            {"order_upto", ev.order ? json(*ev.order) : json(nullptr)},
            {"findings", ev.findings},
        });
    }
    return json{
        {"params", {{"k", to_string(c.params.k())}, {"l", to_string(c.params.l())}}},
        {"a", to_string(c.curve.a())},
        {"b", to_string(c.curve.b())},
        {"discriminant", to_string(c.discriminant)},
        {"max_order", c.max_order},
        {"candidates", std::move(candidates)},
        {"conclusion", to_string(c.conclusion)},
    };
}

EPoint epoint_from_json(const json& j) {
    if (j.contains("infinity") && j.at("infinity").get<bool>()) return EPoint::infinity();
    return EPoint::affine(Rational::parse(j.at("x").get<std::string>()),
                          Rational::parse(j.at("y").get<std::string>()));
}

HPoint hpoint_from_json(const json& j) {
    return {Rational::parse(j.at("x").get<std::string>()),
            Rational::parse(j.at("y").get<std::string>())};
}

}  // namespace holm
