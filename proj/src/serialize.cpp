#include "knaster/serialize.hpp"

#include <algorithm>
#include <charconv>

namespace knaster {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

void require_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
      schema_error(where, "unexpected field '" + key + "'");
    }
  }
}

std::uint64_t as_unsigned(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) schema_error(where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

Label parse_label(const std::string& text, const std::string& where) {
  Label out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || out < 0 || std::to_string(out) != text) {
    schema_error(where, "'" + text + "' is not a canonical non-negative integer label");
  }
  return out;
}

Word as_word(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a bit string");
  try {
    return Word::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema_error(where, e.what());
  }
}

Json words_to_json(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const Word& w : ws) out.push_back(w.to_string());
  return out;
}

std::vector<Word> words_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of bit strings");
  std::vector<Word> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_word(j[i], where + "/" + std::to_string(i)));
  return out;
}

}  // namespace

Json condition_to_json(const Condition& p) {
  Json j;
  j["u"] = p.u;
  j["n"] = p.n;
  j["m_star"] = p.m_star;
  Json eta = Json::object();
  for (const auto& [a, w] : p.eta) eta[std::to_string(a)] = w.to_string();
  j["eta"] = eta;
  Json trees = Json::array();
  for (const FiniteTree& t : p.trees) trees.push_back(words_to_json({t.leaves().begin(), t.leaves().end()}));
  j["trees"] = trees;
  Json mu = Json::array();
  for (const auto& [key, data] : p.mu) {
    Json entry;
    entry["pair"] = {key.lo, key.hi};
    entry["rho"] = data.rho.to_string();
    entry["ell"] = data.ell;
    mu.push_back(entry);
  }
  j["mu"] = mu;
  Json K = Json::object();
  for (const auto& [a, k] : p.K) K[std::to_string(a)] = k;
  j["K"] = K;
  return j;
}

Condition condition_from_json(const Json& j, const std::string& where) {
  require_keys(j, {"u", "n", "m_star", "eta", "trees", "mu", "K"}, where);
  Condition p;

  const Json& u = field(j, "u", where);
  if (!u.is_array()) schema_error(where + "/u", "expected an array of labels");
  for (std::size_t i = 0; i < u.size(); ++i) {
    p.u.push_back(static_cast<Label>(as_unsigned(u[i], where + "/u/" + std::to_string(i))));
  }
  p.n = as_unsigned(field(j, "n", where), where + "/n");
  p.m_star = as_unsigned(field(j, "m_star", where), where + "/m_star");

  const Json& eta = field(j, "eta", where);
  if (!eta.is_object()) schema_error(where + "/eta", "expected an object");
  for (const auto& [key, value] : eta.items()) {
    const std::string at = where + "/eta/" + key;
    p.eta.emplace(parse_label(key, at), as_word(value, at));
  }

  const Json& trees = field(j, "trees", where);
  if (!trees.is_array()) schema_error(where + "/trees", "expected an array of leaf lists");
  for (std::size_t m = 0; m < trees.size(); ++m) {
    const std::string at = where + "/trees/" + std::to_string(m);
    const std::vector<Word> leaves = words_from_json(trees[m], at);
    if (leaves.empty()) schema_error(at, "empty tree");
    const std::size_t height = leaves.front().size();
    try {
      p.trees.emplace_back(height, std::set<Word>(leaves.begin(), leaves.end()));
    } catch (const std::invalid_argument& e) {
      schema_error(at, e.what());
    }
    if (p.trees.back().leaves().size() != leaves.size()) schema_error(at, "duplicate leaf");
  }

  const Json& mu = field(j, "mu", where);
  if (!mu.is_array()) schema_error(where + "/mu", "expected an array");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const std::string at = where + "/mu/" + std::to_string(i);
    require_keys(mu[i], {"pair", "rho", "ell"}, at);
    const Json& pair = field(mu[i], "pair", at);
    if (!pair.is_array() || pair.size() != 2) schema_error(at + "/pair", "expected two labels");
    const auto a = static_cast<Label>(as_unsigned(pair[0], at + "/pair/0"));
    const auto b = static_cast<Label>(as_unsigned(pair[1], at + "/pair/1"));
    if (a >= b) schema_error(at + "/pair", "pair must be strictly increasing");
    const bool fresh = p.mu.emplace(LabelPair{a, b}, PairData{as_word(field(mu[i], "rho", at), at + "/rho"),
                                                              as_unsigned(field(mu[i], "ell", at), at + "/ell")})
                           .second;
    if (!fresh) schema_error(at, "duplicate pair");
  }

  const Json& K = field(j, "K", where);
  if (!K.is_object()) schema_error(where + "/K", "expected an object");
  for (const auto& [key, value] : K.items()) {
    const std::string at = where + "/K/" + key;
    p.K.emplace(parse_label(key, at), as_unsigned(value, at));
  }
  return p;
}

std::string print_condition(const Condition& p) { return condition_to_json(p).dump(2) + "\n"; }

Condition parse_condition(std::string_view text) { return condition_from_json(parse_text(text)); }

Json chain_to_json(const Chain& c) {
  Json stages = Json::array();
  for (const Condition& p : c.stages) stages.push_back(condition_to_json(p));
  Json j;
  j["stages"] = stages;
  return j;
}

std::string print_chain(const Chain& c) { return chain_to_json(c).dump(2) + "\n"; }

Chain parse_chain(std::string_view text) {
  const Json j = parse_text(text);
  require_keys(j, {"stages"}, "");
  const Json& stages = field(j, "stages", "");
  if (!stages.is_array() || stages.empty()) schema_error("/stages", "expected a nonempty array of conditions");
  Chain c;
  for (std::size_t i = 0; i < stages.size(); ++i) c.stages.push_back(condition_from_json(stages[i], "/stages/" + std::to_string(i)));
  return c;
}

Json certificate_to_json(const ArrangementCertificate& cert) {
  Json j;
  j["members"] = words_to_json(cert.members);
  j["arrangement"] = words_to_json({cert.arrangement.begin(), cert.arrangement.end()});
  j["origin"] = cert.origin;
  return j;
}

std::string print_certificate(const ArrangementCertificate& cert) { return certificate_to_json(cert).dump(2) + "\n"; }

ArrangementCertificate parse_certificate(std::string_view text) {
  const Json j = parse_text(text);
  require_keys(j, {"members", "arrangement", "origin"}, "");
  ArrangementCertificate cert;
  cert.members = words_from_json(field(j, "members", ""), "/members");
  const std::vector<Word> quad = words_from_json(field(j, "arrangement", ""), "/arrangement");
  if (quad.size() != 4) schema_error("/arrangement", "expected four words");
  std::copy(quad.begin(), quad.end(), cert.arrangement.begin());
  const Json& origin = field(j, "origin", "");
  if (!origin.is_string()) schema_error("/origin", "expected a string");
  cert.origin = origin.get<std::string>();
  return cert;
}

}  // namespace knaster
