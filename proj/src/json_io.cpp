#include "faa/json_io.hpp"

#include <string>

namespace faa {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key, const char* what)
{
    if (!j.is_object()) {
        throw json_format_error(std::string(what) + " must be a JSON object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw json_format_error(std::string(what) + " is missing \"" + key + "\"");
    }
    return *it;
}

unsigned unsigned_from_json(const json& j, const char* what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw json_format_error(std::string(what) + " must be a non-negative integer");
    }
    const auto v = j.get<unsigned long long>();
    if (v > 1'000'000) {
        throw json_format_error(std::string(what) + " is too large");
    }
    return static_cast<unsigned>(v);
}

std::vector<Rational> rationals_from_json(const json& j, const char* what)
{
    if (!j.is_array()) {
        throw json_format_error(std::string(what) + " must be an array");
    }
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        out.push_back(rational_from_json(item));
    }
    return out;
}

} // namespace

json to_json(const Rational& x)
{
    return x.to_string();
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const rational_parse_error& err) {
            throw json_format_error(err.what());
        }
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw json_format_error("rational must be a string like \"p/q\" or an integer, got " + j.dump());
}

json to_json(const DerivativeSequence& seq)
{
    json j = json::object();
    if (seq.base) {
        j["base"] = to_json(*seq.base);
    }
    json derivs = json::array();
    for (const auto& d : seq.derivs) {
        derivs.push_back(to_json(d));
    }
    j["derivs"] = std::move(derivs);
    return j;
}

DerivativeSequence derivative_sequence_from_json(const json& j)
{
    DerivativeSequence seq;
    seq.derivs = rationals_from_json(member(j, "derivs", "derivative sequence"), "\"derivs\"");
    if (const auto it = j.find("base"); it != j.end() && !it->is_null()) {
        seq.base = rational_from_json(*it);
    }
    return seq;
}

json to_json(const MultiplicityVector& mvec)
{
    return json{{"n", mvec.order()}, {"m", mvec.multiplicities()}};
}

MultiplicityVector multiplicity_vector_from_json(const json& j)
{
    const unsigned n = unsigned_from_json(member(j, "n", "multiplicity vector"), "\"n\"");
    const json& m = member(j, "m", "multiplicity vector");
    if (!m.is_array()) {
        throw json_format_error("\"m\" must be an array");
    }
    std::vector<unsigned> counts;
    for (const auto& item : m) {
        counts.push_back(unsigned_from_json(item, "multiplicity"));
    }
    try {
        return MultiplicityVector(n, std::move(counts));
    } catch (const std::invalid_argument& err) {
        throw json_format_error(err.what());
    }
}

json to_json(const Jet& jet)
{
    json coeffs = json::array();
    for (const auto& c : jet.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return json{{"order", jet.order()}, {"coeffs", std::move(coeffs)}};
}

Jet jet_from_json(const json& j)
{
    const unsigned order = unsigned_from_json(member(j, "order", "jet"), "\"order\"");
    auto coeffs = rationals_from_json(member(j, "coeffs", "jet"), "\"coeffs\"");
    if (coeffs.size() != static_cast<std::size_t>(order) + 1) {
        throw json_format_error("jet of order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                                " coefficients, got " + std::to_string(coeffs.size()));
    }
    return Jet(std::move(coeffs));
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw json_format_error(err.what());
    }
}

} // namespace faa
