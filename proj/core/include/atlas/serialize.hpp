#pragma once
/// @file serialize.hpp
/// Canonical JSON encodings for the library's value types.
///
/// The encodings are part of the public interface (reports, table emission,
/// chart-parameter files) and are kept byte-stable: object keys are emitted
/// in fixed insertion order via nlohmann::ordered_json.
///
///   Rational   ↦ [p, q]                       (q > 0, gcd(|p|, q) = 1)
///   ExtScalar  ↦ {"a":{"re":[p,q],"im":[p,q]},"b":{"re":[p,q],"im":[p,q]}}
///   Spinor     ↦ array of 2ⁿ ExtScalar

#include "json.hpp"

#include "atlas/clifford.hpp"
#include "atlas/scalar.hpp"

namespace atlas {

using Json = nlohmann::ordered_json;

inline void to_json(Json& j, const Rational& r) { j = Json::array({r.num(), r.den()}); }

inline void from_json(const Json& j, Rational& r) {
    if (!j.is_array() || j.size() != 2)
        throw std::domain_error("rational JSON must be a two-element array [p, q]");
    r = Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

inline void to_json(Json& j, const ExtScalar& x) {
    j = Json{{"a", Json{{"re", Json(x.a_re)}, {"im", Json(x.a_im)}}},
             {"b", Json{{"re", Json(x.b_re)}, {"im", Json(x.b_im)}}}};
}

inline void from_json(const Json& j, ExtScalar& x) {
    x.a_re = j.at("a").at("re").get<Rational>();
    x.a_im = j.at("a").at("im").get<Rational>();
    x.b_re = j.at("b").at("re").get<Rational>();
    x.b_im = j.at("b").at("im").get<Rational>();
}

}  // namespace atlas

// Spinor has no default constructor, so it plugs in via adl_serializer.
namespace nlohmann {

template <>
struct adl_serializer<atlas::Spinor> {
    template <typename BasicJsonType>
    static void to_json(BasicJsonType& j, const atlas::Spinor& psi) {
        j = BasicJsonType::array();
        for (std::size_t c = 0; c < psi.size(); ++c) j.push_back(atlas::Json(psi[c]));
    }

    template <typename BasicJsonType>
    static atlas::Spinor from_json(const BasicJsonType& j) {
        if (!j.is_array()) throw std::domain_error("spinor JSON must be an array of scalars");
        int n = 0;
        while ((std::size_t(1) << n) < j.size()) ++n;
        if ((std::size_t(1) << n) != j.size())
            throw std::domain_error("spinor JSON length must be a power of two");
        atlas::Spinor psi(n);
        for (std::size_t c = 0; c < j.size(); ++c)
            psi[c] = j[c].template get<atlas::ExtScalar>();
        return psi;
    }
};

}  // namespace nlohmann
