#include "qring/serialize.hpp"

#include <json.hpp>

#include "qring/errors.hpp"

namespace qring {

namespace {

using Json = nlohmann::json;

std::string rational_str(const Rational& v) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(v);
    if (boost::multiprecision::denominator(v) != 1) {
        os << "/" << boost::multiprecision::denominator(v);
    }
    return os.str();
}

Rational rational_from_str(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(s);
        const Rational den{s.substr(slash + 1)};
        if (den == 0) throw ParseError("zero denominator in coefficient", 0);
        return Rational(s.substr(0, slash)) / den;
    } catch (const std::runtime_error&) {
        throw ParseError("malformed coefficient '" + s + "'", 0);
    }
}

Json scalar_to_json(const Scalar& s) {
    Json terms = Json::array();
    for (const auto& [exps, coeff] : s.terms()) {
        terms.push_back({{"exponents", exps}, {"coeff", rational_str(coeff)}});
    }
    return terms;
}

Scalar scalar_from_json(const Json& j, const ParamSpacePtr& space) {
    if (!j.is_array()) throw ParseError("scalar must be an array of terms", 0);
    Scalar out = Scalar::zero(space);
    for (const auto& term : j) {
        const auto exps = term.at("exponents").get<std::vector<int>>();
        const Rational coeff = rational_from_str(term.at("coeff").get<std::string>());
        out += Scalar::term(space, coeff, exps);
    }
    return out;
}

std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Generic: return "generic";
        case AlgebraKind::QuantumAffine: return "quantum-affine";
        case AlgebraKind::QuantumMatrices: return "quantum-matrices";
        case AlgebraKind::Tensor: return "tensor";
    }
    return "generic";
}

AlgebraKind kind_from_name(const std::string& s) {
    if (s == "generic") return AlgebraKind::Generic;
    if (s == "quantum-affine") return AlgebraKind::QuantumAffine;
    if (s == "quantum-matrices") return AlgebraKind::QuantumMatrices;
    if (s == "tensor") return AlgebraKind::Tensor;
    throw ParseError("unknown algebra kind '" + s + "'", 0);
}

}  // namespace

std::string presentation_to_json(const PresentationPtr& p, int indent) {
    if (!p) throw Error("missing presentation");
    Json j;
    j["format"] = "qring-presentation";
    j["version"] = 1;

    Json params;
    params["names"] = p->params()->names();
    Json squares = Json::array();
    for (const auto& [squared, root] : p->params()->square_aliases()) {
        squares.push_back({{"squared", squared}, {"root", root}});
    }
    params["squares"] = squares;
    j["params"] = params;

    j["generators"] = p->gens();
    j["kind"] = kind_name(p->kind());
    j["n"] = p->n();
    j["weights"] = p->weights();

    Json rules = Json::array();
    const int ng = static_cast<int>(p->num_gens());
    for (int u = 1; u < ng; ++u) {
        for (int v = 0; v < u; ++v) {
            const StraighteningRule& r = p->rule(u, v);
            Json corrections = Json::array();
            for (const auto& c : r.corrections) {
                corrections.push_back(
                    {{"coeff", scalar_to_json(c.coeff)}, {"monomial", c.monomial}});
            }
            rules.push_back({{"u", u},
                             {"v", v},
                             {"lead", scalar_to_json(r.lead)},
                             {"corrections", corrections}});
        }
    }
    j["rules"] = rules;
    return j.dump(indent);
}

PresentationPtr presentation_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
    try {
        if (j.value("format", "") != "qring-presentation") {
            throw ParseError("not a qring-presentation document", 0);
        }
        const auto& jp = j.at("params");
        std::map<std::string, std::string> aliases;
        if (jp.contains("squares")) {
            for (const auto& sq : jp.at("squares")) {
                aliases[sq.at("squared").get<std::string>()] =
                    sq.at("root").get<std::string>();
            }
        }
        ParamSpacePtr space = std::make_shared<const ParamSpace>(
            ParamSpace::with_square_roots(jp.at("names").get<std::vector<std::string>>(),
                                          aliases));

        auto gens = j.at("generators").get<std::vector<std::string>>();
        auto weights = j.value("weights", std::vector<std::vector<int>>{});
        const AlgebraKind kind = kind_from_name(j.value("kind", "generic"));
        const int n = j.value("n", 0);

        const std::size_t ng = gens.size();
        std::vector<StraighteningRule> rules(ng * (ng - 1) / 2);
        std::vector<bool> seen(rules.size(), false);
        for (const auto& jr : j.at("rules")) {
            const int u = jr.at("u").get<int>();
            const int v = jr.at("v").get<int>();
            if (u <= v || v < 0 || u >= static_cast<int>(ng)) {
                throw ParseError("rule pair out of range", 0);
            }
            const std::size_t idx = static_cast<std::size_t>(u) * (u - 1) / 2 + v;
            if (seen[idx]) throw ParseError("duplicate rule for a generator pair", 0);
            seen[idx] = true;
            StraighteningRule r;
            r.lead = scalar_from_json(jr.at("lead"), space);
            for (const auto& jc : jr.value("corrections", Json::array())) {
                r.corrections.push_back(
                    {scalar_from_json(jc.at("coeff"), space),
                     jc.at("monomial").get<std::vector<int>>()});
            }
            rules[idx] = std::move(r);
        }
        for (bool s : seen) {
            if (!s) throw ParseError("missing rule for a generator pair", 0);
        }
        return AlgebraPresentation::create(std::move(space), std::move(gens),
                                           std::move(rules), std::move(weights), kind, n);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("schema error: ") + e.what(), 0);
    }
}

}  // namespace qring
