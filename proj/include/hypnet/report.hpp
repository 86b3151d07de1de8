#ifndef HYPNET_REPORT_HPP
#define HYPNET_REPORT_HPP

#include <boost/crc.hpp>

#include <cstdio>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypnet/graph.hpp"
#include "hypnet/half_int.hpp"
#include "hypnet/rational.hpp"

namespace hypnet {

inline constexpr const char* version = "0.1.0";

using Json = nlohmann::ordered_json;

// "crc32:" followed by eight lowercase hex digits of the raw input bytes.
inline std::string input_digest(std::string_view bytes)
{
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
    return std::string("crc32:") + buf;
}

// Exact value as "p/q" (or "p") with a decimal approximation alongside.
inline Json to_json(const Rational& r)
{
    Json j;
    j["exact"] = rational_str(r);
    j["approx"] = to_double(r);
    return j;
}

inline Json to_json(HalfInt h) { return to_json(to_rational(h)); }

// Inverse of rational_str.
inline Rational parse_rational(const std::string& s)
{
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InputError("bad rational '" + s + "'");
    }
}

inline Rational rational_from_json(const Json& j)
{
    return parse_rational(j.is_object() ? j.at("exact").get<std::string>() : j.get<std::string>());
}

inline Json report_header(const Graph& g, std::string_view input_bytes)
{
    Json j;
    j["tool"] = "hypnet";
    j["version"] = version;
    j["input"] = {{"digest", input_digest(input_bytes)}, {"n", g.n()}, {"m", g.m()}};
    return j;
}

inline Json labels_json(const Graph& g, const std::vector<Vertex>& vs)
{
    Json a = Json::array();
    for (Vertex v : vs)
        a.push_back(g.label(v));
    return a;
}

} // namespace hypnet

#endif
