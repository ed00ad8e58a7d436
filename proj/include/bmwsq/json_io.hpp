#pragma once

// JSON renderings: Laurent polynomials as {exponent: exact-coefficient}
// maps, rational functions and cyclotomic numbers as tagged objects.

#include <json.hpp>

#include "cyclotomic.hpp"
#include "images.hpp"
#include "squares.hpp"

namespace bmwsq {

using nlohmann::json;

inline json to_json(const LaurentPoly& p) {
    json j = json::object();
    for (auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.str();
    return j;
}

inline json to_json(const RationalFunction& f) {
    if (auto p = f.as_laurent()) return to_json(*p);
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline json to_json(const Cyclotomic& c) {
    json coords = json::object();
    for (size_t i = 0; i < c.coords().size(); ++i)
        if (c.coords()[i] != 0) coords[std::to_string(i)] = c.coords()[i].str();
    return json{{"conductor", c.conductor()}, {"coords", coords}};
}

inline json to_json(const GroupDescriptor& g) {
    json j;
    j["kind"] = [&] {
        switch (g.kind) {
            case GroupDescriptor::Kind::Trivial: return "trivial";
            case GroupDescriptor::Kind::PSp: return "PSp";
            case GroupDescriptor::Kind::PSpSemidirect: return "PSp_semidirect";
            case GroupDescriptor::Kind::A5: return "A5";
            case GroupDescriptor::Kind::A5xPSU: return "A5_x_PSU";
            case GroupDescriptor::Kind::PSU: return "PSU";
            case GroupDescriptor::Kind::PSUxPSU: return "PSU_x_PSU";
        }
        return "?";
    }();
    j["description"] = g.to_string();
    j["case"] = g.case_index;
    if (g.kind == GroupDescriptor::Kind::PSp || g.kind == GroupDescriptor::Kind::PSpSemidirect)
        j["n"] = g.n;
    if (g.kind == GroupDescriptor::Kind::PSpSemidirect) j["rank"] = g.rank;
    if (g.d1) j["d1"] = g.d1;
    if (g.d2) j["d2"] = g.d2;
    if (g.order)
        j["order"] = g.order->str();
    else
        j["order"] = nullptr;
    return j;
}

inline json to_json(const DimAudit& a) {
    json blocks = json::array();
    for (auto& r : a.rows)
        blocks.push_back(json{{"label", r.nu.to_string()},
                              {"source", r.source},
                              {"dim", r.dim_block.str()},
                              {"osc", r.dim_osc.str()}});
    return json{{"osc_total", a.osc_total.str()},
                {"formula_total", a.formula_total.str()},
                {"decomposition_total", a.decomposition_total.str()},
                {"consistent", a.consistent()},
                {"blocks", blocks}};
}

inline json report_to_json(const std::vector<std::pair<std::string, bool>>& rep) {
    json j = json::object();
    for (auto& [name, ok] : rep) j[name] = ok;
    return j;
}

} // namespace bmwsq
