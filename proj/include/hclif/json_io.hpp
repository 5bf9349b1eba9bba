#pragma once

// JSON views of the report types.  All numeric payloads are emitted as exact
// strings (rationals and root expressions can exceed machine range), and key
// order is fixed so identical inputs serialize to identical bytes.

#include <json.hpp>
#include <string>
#include <vector>

#include "char_series.hpp"
#include "clifford.hpp"
#include "cyclotomic.hpp"
#include "hilbert.hpp"
#include "moduli.hpp"

namespace hclif {

using Json = nlohmann::ordered_json;

inline std::string to_string(const Heis& h) {
    return "(" + std::to_string(h.r) + "," + std::to_string(h.s) + "," + std::to_string(h.t) + ")";
}

inline Json json_coords(const std::vector<CycNum>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

inline Json json_point(const ModuliPoint& pt) { return json_coords(normalize(pt).a); }

inline Json json_points(const std::vector<ModuliPoint>& pts) {
    Json arr = Json::array();
    for (const auto& pt : pts) arr.push_back(json_point(pt));
    return arr;
}

inline Json json_series(const HilbertSeries& hs) {
    Json j;
    j["display"] = to_string(hs);
    Json numer = Json::array();
    for (const auto& c : hs.numer) numer.push_back(c.str());
    j["numerator"] = numer;
    j["denominator_power"] = hs.denom_pow;
    return j;
}

inline Json json_locus(const LocusAnalysis& an) {
    Json j;
    j["empty"] = an.dim == -1;
    j["dimension"] = an.dim;
    j["degree"] = an.degree.str();
    j["series"] = json_series(an.series);
    j["pure_powers"] = an.pure_powers;
    Json pts = Json::array();
    for (const auto& z : an.verified_points) pts.push_back(json_coords(z));
    j["verified_points"] = pts;
    Json lines = Json::array();
    for (const auto& [u, v] : an.coordinate_lines) lines.push_back(Json::array({u, v}));
    j["coordinate_lines"] = lines;
    return j;
}

inline Json json_char_series(const CharacterSeries& cs) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < cs.reps.size(); ++i) {
        Json row;
        row["class"] = to_string(cs.reps[i]);
        Json coeff = Json::array();
        for (const auto& c : cs.coeff[i]) coeff.push_back(to_string(c));
        row["coefficients"] = coeff;
        rows.push_back(row);
    }
    Json j;
    j["p"] = cs.p;
    j["max_degree"] = cs.upto;
    j["rows"] = rows;
    return j;
}

inline Json json_duality(const DualityResult& d) {
    Json j;
    j["generator"] = to_string(d.generator);
    j["fixed_points"] = json_points(d.fixed_points);
    j["hyperplane_normal"] = json_coords(d.hyperplane_normal);
    return j;
}

}  // namespace hclif
