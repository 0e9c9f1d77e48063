#include "cell24/reports.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace cell24 {

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex;
    for (int i = 15; i >= 0; --i) out << ((h >> (i * 4)) & 0xf);
    return out.str();
}

namespace {

std::int64_t to_i64(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("report value exceeds 64 bits");
    return x.get_si();
}

} // namespace

Json rational_json(const Rational& r) {
    return Json{{"num", to_i64(r.numerator())}, {"den", to_i64(r.denominator())}};
}

Rational rational_from_json(const Json& j) {
    return Rational(Int(j.at("num").get<std::int64_t>()), Int(j.at("den").get<std::int64_t>()));
}

Json verification_json(const VerificationReport& rep) {
    Json cusps = Json::array();
    for (auto [vertex, complete] : rep.cusp_complete)
        cusps.push_back(Json{{"cycle", vertex + 1}, {"complete", complete}});
    Json cycles = Json::array();
    for (const RidgeCycle& c : rep.ridge_cycles)
        cycles.push_back(Json{{"length", c.flags.size()}, {"pass", c.pass()}});
    return Json{{"proper", rep.proper},       {"ridge_ok", rep.ridge_ok},
                {"orientable", rep.orientable}, {"cusps_complete", cusps},
                {"ridge_cycles", cycles},     {"overall", rep.overall()},
                {"detail", rep.detail}};
}

Json census_json(const std::vector<CensusEntry>& census) {
    Json out = Json::array();
    for (const CensusEntry& e : census)
        out.push_back(Json{{"cycle", e.least_vertex + 1},
                           {"size", e.size},
                           {"type", flat_type_name(e.cls.type)},
                           {"handedness", e.cls.handedness},
                           {"over_base_cycle", e.base_cycle_least + 1}});
    return out;
}

std::vector<CensusEntry> census_from_json(const Json& j) {
    std::vector<CensusEntry> out;
    for (const Json& e : j) {
        CensusEntry c;
        c.least_vertex = e.at("cycle").get<int>() - 1;
        c.size = e.at("size").get<int>();
        std::string t = e.at("type").get<std::string>();
        c.cls.type = FlatType(t.at(1) - '0');
        c.cls.handedness = e.at("handedness").get<int>();
        c.cls.orientable = true;
        c.base_cycle_least = e.at("over_base_cycle").get<int>() - 1;
        out.push_back(c);
    }
    return out;
}

Json homology_json(const HomologyProfile& prof) {
    Json out = Json::array();
    for (size_t d = 0; d < prof.degrees.size(); ++d) {
        Json tors = Json::array();
        for (const Int& t : prof.degrees[d].torsion) tors.push_back(to_i64(t));
        out.push_back(Json{{"dim", d}, {"rank", prof.degrees[d].rank}, {"torsion", tors}});
    }
    return out;
}

HomologyProfile homology_from_json(const Json& j) {
    HomologyProfile prof;
    prof.degrees.resize(j.size());
    for (const Json& e : j) {
        HomologyDegree deg;
        deg.rank = e.at("rank").get<int>();
        for (const Json& t : e.at("torsion")) deg.torsion.push_back(Int(t.get<std::int64_t>()));
        prof.degrees.at(e.at("dim").get<size_t>()) = deg;
    }
    return prof;
}

Json geography_json(const GeographyReport& rep) {
    return Json{{"degree", rep.degree},
                {"chi", rep.chi},
                {"cusps", census_json(rep.cusps)},
                {"sigma_signed", to_i64(rep.sigma_signed)},
                {"sigma_abs", to_i64(rep.sigma_abs)},
                {"slope_num", to_i64(rep.slope.numerator())},
                {"slope_den", to_i64(rep.slope.denominator())},
                {"volume_pi2_coeff", rational_json(rep.volume_pi2_coeff)},
                {"cusp_count", rep.cusp_count},
                {"bounds_ok", rep.bounds_ok}};
}

GeographyReport geography_from_json(const Json& j) {
    GeographyReport rep;
    rep.degree = j.at("degree").get<int>();
    rep.chi = j.at("chi").get<int>();
    rep.cusps = census_from_json(j.at("cusps"));
    rep.sigma_signed = Int(j.at("sigma_signed").get<std::int64_t>());
    rep.sigma_abs = Int(j.at("sigma_abs").get<std::int64_t>());
    rep.slope = Rational(Int(j.at("slope_num").get<std::int64_t>()),
                         Int(j.at("slope_den").get<std::int64_t>()));
    rep.volume_pi2_coeff = rational_from_json(j.at("volume_pi2_coeff"));
    rep.cusp_count = j.at("cusp_count").get<int>();
    rep.bounds_ok = j.at("bounds_ok").get<bool>();
    return rep;
}

Json envelope(const std::string& command, const std::string& input_bytes, Json payload) {
    return Json{{"command", command},
                {"input_digest", content_digest(input_bytes)},
                {"tool_version", kToolVersion},
                {"payload", std::move(payload)}};
}

} // namespace cell24
