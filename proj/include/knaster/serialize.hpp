#pragma once

// Canonical text format: UTF-8 JSON, two-space indent, fields in a fixed
// order, words as strings over {0,1} with coordinate 0 leftmost, leaf lists
// sorted lexicographically. print(parse(text)) == text for canonical text.

#include "knaster/arrange.hpp"
#include "knaster/chainlab.hpp"
#include "knaster/poset.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace knaster {

using Json = nlohmann::ordered_json;

/// Malformed input. The message names the location: line/column for
/// syntax errors, a JSON pointer for schema errors.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json condition_to_json(const Condition& p);
Condition condition_from_json(const Json& j, const std::string& where = "");
std::string print_condition(const Condition& p);
Condition parse_condition(std::string_view text);

Json chain_to_json(const Chain& c);
std::string print_chain(const Chain& c);
Chain parse_chain(std::string_view text);

Json certificate_to_json(const ArrangementCertificate& cert);
std::string print_certificate(const ArrangementCertificate& cert);
ArrangementCertificate parse_certificate(std::string_view text);

}  // namespace knaster
