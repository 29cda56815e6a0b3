#include "qsu2/serialization.hpp"

#include <json.hpp>

namespace qsu2 {

namespace {

using nlohmann::json;

json poly_to_json(const Polynomial& p)
{
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        arr.push_back(p.coeff(i).get_str());
    }
    return arr;
}

Polynomial poly_from_json(const json& arr)
{
    Polynomial p;
    for (size_t i = 0; i < arr.size(); ++i) {
        Int c(arr[i].get<std::string>());
        p = p + Polynomial::monomial(c, static_cast<int>(i));
    }
    return p;
}

json scalar_to_json(const ExactScalar& s)
{
    return json{{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}};
}

ExactScalar scalar_from_json(const json& j)
{
    return ExactScalar(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace

std::string to_json(const AlgebraElement& x)
{
    json terms = json::array();
    for (const auto& [m, c] : x.terms()) {
        json t;
        t["diag"] = m.diag;
        t["b"] = m.b;
        t["c"] = m.c;
        t["num"] = poly_to_json(c.num());
        t["den"] = poly_to_json(c.den());
        terms.push_back(std::move(t));
    }
    json root{{"schema_version", kSchemaVersion}, {"algebra", "coordinate"}, {"terms", terms}};
    return root.dump();
}

std::string to_json(const UElement& x)
{
    json terms = json::array();
    for (const auto& [m, c] : x.terms()) {
        json t;
        t["f"] = m.f;
        t["k"] = m.k;
        t["e"] = m.e;
        t["num"] = poly_to_json(c.num());
        t["den"] = poly_to_json(c.den());
        terms.push_back(std::move(t));
    }
    json root{{"schema_version", kSchemaVersion}, {"algebra", "enveloping"}, {"terms", terms}};
    return root.dump();
}

AlgebraElement algebra_element_from_json(const std::string& text)
{
    json root = json::parse(text);
    AlgebraElement x;
    for (const auto& t : root.at("terms")) {
        MonomialA m{t.at("diag").get<int>(), t.at("b").get<int>(), t.at("c").get<int>()};
        x.add_term(m, scalar_from_json(t));
    }
    return x;
}

UElement u_element_from_json(const std::string& text)
{
    json root = json::parse(text);
    UElement x;
    for (const auto& t : root.at("terms")) {
        MonomialU m{t.at("f").get<int>(), t.at("k").get<long>(), t.at("e").get<int>()};
        x.add_term(m, scalar_from_json(t));
    }
    return x;
}

}  // namespace qsu2
