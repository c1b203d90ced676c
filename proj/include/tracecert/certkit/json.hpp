#pragma once

// Certificate interchange. Polynomials are written in the text grammar and
// rationals as "p/q" strings so documents stay exact.

#include <nlohmann/json.hpp>

#include "tracecert/certkit/certificate.hpp"
#include "tracecert/certkit/commutative.hpp"
#include "tracecert/ncpoly/parse.hpp"

namespace tracecert::certkit {

using json = nlohmann::json;

namespace detail {

template <class F>
auto json_field(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what(), 0);
    }
}

inline Rational rational_field(const json& j, const char* key) {
    const json& v = j.at(key);
    if (v.is_number_integer()) return Rational(v.get<long>());
    return parse_rational(v.get<std::string>());
}

}  // namespace detail

inline json to_json(const Certificate& c) {
    json terms = json::array(), comms = json::array();
    for (const auto& t : c.terms)
        terms.push_back({{"gen", t.gen}, {"lambda", to_string(t.lambda)}, {"g", ncpoly::format(t.g)}});
    for (const auto& k : c.commutators) comms.push_back({{"p", ncpoly::format(k.p)}, {"q", ncpoly::format(k.q)}});
    return {{"n", c.n},
            {"target", ncpoly::format(c.target)},
            {"epsilon", to_string(c.epsilon)},
            {"terms", std::move(terms)},
            {"commutators", std::move(comms)}};
}

inline Certificate certificate_from_json(const json& j) {
    return detail::json_field("certificate", [&] {
        Certificate c;
        c.n = j.at("n").get<int>();
        if (c.n < 0) throw DomainError("certificate: negative n");
        c.target = ncpoly::parse(j.at("target").get<std::string>(), c.n);
        c.epsilon = detail::rational_field(j, "epsilon");
        for (const auto& t : j.at("terms"))
            c.terms.push_back({t.at("gen").get<int>(), detail::rational_field(t, "lambda"),
                               ncpoly::parse(t.at("g").get<std::string>(), c.n)});
        if (j.contains("commutators"))
            for (const auto& k : j.at("commutators"))
                c.commutators.push_back(
                    {ncpoly::parse(k.at("p").get<std::string>(), c.n), ncpoly::parse(k.at("q").get<std::string>(), c.n)});
        return c;
    });
}

inline json to_json(const CommutativeCertificate& c) {
    auto list = [](const std::vector<ScaledSquare>& v) {
        json out = json::array();
        for (const auto& s : v) out.push_back({{"lambda", to_string(s.lambda)}, {"poly", ncpoly::format(s.poly)}});
        return out;
    };
    return {{"target", ncpoly::format(c.target)},
            {"epsilon", to_string(c.epsilon)},
            {"p", list(c.p)},
            {"q", list(c.q)},
            {"r", list(c.r)}};
}

inline CommutativeCertificate commutative_certificate_from_json(const json& j) {
    return detail::json_field("commutative certificate", [&] {
        auto poly = [](const json& v) { return ncpoly::parse_commutative(v.get<std::string>(), 2); };
        auto list = [&](const char* key) {
            std::vector<ScaledSquare> out;
            if (j.contains(key))
                for (const auto& s : j.at(key)) out.push_back({detail::rational_field(s, "lambda"), poly(s.at("poly"))});
            return out;
        };
        CommutativeCertificate c;
        c.target = poly(j.at("target"));
        c.epsilon = detail::rational_field(j, "epsilon");
        c.p = list("p");
        c.q = list("q");
        c.r = list("r");
        return c;
    });
}

}  // namespace tracecert::certkit
