#pragma once

#include <string_view>

#include <json.hpp>

#include "faa/composition.hpp"
#include "faa/partitions.hpp"
#include "faa/rational.hpp"
#include "faa/series.hpp"

namespace faa {

/// Malformed JSON input for one of the wire forms below.
class json_format_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Rationals travel as canonical strings ("3/2", "-4"). Plain JSON integers are
// accepted on input.
nlohmann::json to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

// {"base": "1/2", "derivs": ["2", "3", "-1/4"]}, base optional.
nlohmann::json to_json(const DerivativeSequence& seq);
DerivativeSequence derivative_sequence_from_json(const nlohmann::json& j);

// {"n": 4, "m": [2, 1, 0, 0]}
nlohmann::json to_json(const MultiplicityVector& mvec);
MultiplicityVector multiplicity_vector_from_json(const nlohmann::json& j);

// {"order": 3, "coeffs": ["1", "2", "3/2", "0"]}
nlohmann::json to_json(const Jet& jet);
Jet jet_from_json(const nlohmann::json& j);

/// Parses text and wraps nlohmann's exceptions in json_format_error.
nlohmann::json parse_json(std::string_view text);

} // namespace faa
