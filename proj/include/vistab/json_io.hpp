#pragma once

#include "vistab/irreps.hpp"
#include "vistab/partition.hpp"
#include "vistab/qpoly.hpp"
#include "vistab/rational.hpp"
#include "vistab/vi_module.hpp"
#include "vistab/virtual_rep.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace vistab {

using json = nlohmann::json;

// JSON conventions, used verbatim by the CLI:
//   Partition        -> array of parts, e.g. [3,1]; empty partition -> []
//   IrrepLabel       -> object symbol -> partition, e.g. {"iota":[2,1],"c(2,0)":[1]}
//   VirtualRep       -> {"level": n, "terms": [{"label": {...}, "mult": "12"}]}
//   QPoly            -> coefficients low-to-high as exact rational strings,
//                       e.g. T^2 - 3/2 -> ["-3/2","0","1"]
//   StabilityReport  -> {"q", "generators", "onset", "weight", "stable",
//                        "dim_poly_T"}
// Multiplicities and dimensions are decimal strings: they outgrow 64-bit
// integers quickly and JSON numbers would lose them.

inline json partition_to_json(const Partition& p) {
    json a = json::array();
    for (int x : p.parts())
        a.push_back(x);
    return a;
}

inline Partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("partition_from_json: expected an array, got " + j.dump());
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument("partition_from_json: non-integer part in " + j.dump());
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

inline json label_to_json(const IrrepLabel& mu) {
    json o = json::object();
    for (const auto& [sym, part] : mu.support())
        o[sym.to_string()] = partition_to_json(part);
    return o;
}

inline IrrepLabel label_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("label_from_json: expected an object, got " + j.dump());
    IrrepLabel::Support s;
    for (const auto& [key, val] : j.items())
        s.emplace(CuspidalSymbol::parse(key), partition_from_json(val));
    return IrrepLabel(std::move(s));
}

inline json vr_to_json(const VirtualRep& v) {
    json terms = json::array();
    for (const auto& [mu, c] : v.terms())
        terms.push_back({{"label", label_to_json(mu)}, {"mult", c.str()}});
    return json{{"level", v.level()}, {"terms", terms}};
}

inline VirtualRep vr_from_json(const json& j) {
    if (!j.is_object() || !j.contains("level") || !j.contains("terms"))
        throw std::invalid_argument("vr_from_json: expected {\"level\", \"terms\"}");
    VirtualRep v(j.at("level").get<int>());
    for (const auto& t : j.at("terms"))
        v.add_term(label_from_json(t.at("label")), Int(t.at("mult").get<std::string>()));
    return v;
}

inline json qpoly_to_json(const QPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs())
        a.push_back(rat_to_string(c));
    return a;
}

inline QPoly qpoly_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("qpoly_from_json: expected an array, got " + j.dump());
    std::vector<Rat> coeffs;
    for (const auto& c : j)
        coeffs.push_back(rat_from_string(c.get<std::string>()));
    return QPoly(std::move(coeffs));
}

inline json report_to_json(const StabilityReport& rep) {
    json stable = json::array();
    for (const auto& [lam, c] : rep.stable)
        stable.push_back({{"label", label_to_json(lam)}, {"mult", c.str()}});
    return json{{"q", static_cast<long long>(rep.q)},
                {"generators", rep.generators},
                {"onset", rep.onset},
                {"weight", rep.weight},
                {"stable", stable},
                {"dim_poly_T", qpoly_to_json(rep.dim_poly)}};
}

inline StabilityReport report_from_json(const json& j) {
    StabilityReport rep;
    rep.q = Int(j.at("q").get<long long>());
    rep.generators = j.at("generators").get<std::vector<int>>();
    rep.onset = j.at("onset").get<int>();
    rep.weight = j.at("weight").get<int>();
    for (const auto& t : j.at("stable"))
        rep.stable[label_from_json(t.at("label"))] = Int(t.at("mult").get<std::string>());
    rep.dim_poly = qpoly_from_json(j.at("dim_poly_T"));
    return rep;
}

}  // namespace vistab
