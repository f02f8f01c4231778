#include "adjmono/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace adjmono {

namespace {

using nlohmann::json;

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Exponent parse_monomial(const std::string& text, const std::vector<std::string>& variables) {
  Exponent e(variables.size(), 0);
  std::size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string factor = trim(text.substr(pos, star == std::string::npos ? star : star - pos));
    pos = star == std::string::npos ? text.size() + 1 : star + 1;
    if (factor.empty())
      throw std::invalid_argument("malformed monomial '" + text + "'");
    any = true;
    if (factor == "1") continue;

    std::string name = factor;
    Int exp = 1;
    std::size_t caret = factor.find('^');
    if (caret != std::string::npos) {
      name = trim(factor.substr(0, caret));
      std::string digits = trim(factor.substr(caret + 1));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
            return std::isdigit(c);
          }))
        throw std::invalid_argument("malformed exponent in monomial '" + text +
                                    "' (exponents must be non-negative integers)");
      try {
        exp = std::stoll(digits);
      } catch (const std::out_of_range&) {
        throw std::invalid_argument("exponent out of range in monomial '" + text + "'");
      }
    }
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end())
      throw std::invalid_argument("unknown variable '" + name + "' in monomial '" + text + "'");
    std::size_t idx = static_cast<std::size_t>(it - variables.begin());
    e[idx] = checked_add(e[idx], exp);
  }
  if (!any) throw std::invalid_argument("empty monomial");
  return e;
}

}  // namespace

IdealDocument parse_ideal_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed ideal document: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("variables") || !doc.contains("generators"))
    throw std::invalid_argument(
        "ideal document must be an object with 'variables' and 'generators'");

  std::vector<std::string> variables;
  if (!doc["variables"].is_array() || doc["variables"].empty())
    throw std::invalid_argument("'variables' must be a non-empty array of names");
  for (const auto& v : doc["variables"]) {
    if (!v.is_string() || !valid_identifier(v.get<std::string>()))
      throw std::invalid_argument("variable names must be identifiers");
    variables.push_back(v.get<std::string>());
  }
  for (std::size_t i = 0; i < variables.size(); ++i)
    for (std::size_t k = i + 1; k < variables.size(); ++k)
      if (variables[i] == variables[k])
        throw std::invalid_argument("duplicate variable '" + variables[i] + "'");

  if (!doc["generators"].is_array() || doc["generators"].empty())
    throw std::invalid_argument("'generators' must be a non-empty array");
  std::vector<Exponent> gens;
  for (const auto& g : doc["generators"]) {
    if (g.is_string()) {
      gens.push_back(parse_monomial(g.get<std::string>(), variables));
    } else if (g.is_array()) {
      if (g.size() != variables.size())
        throw std::invalid_argument("generator vector length differs from the variable count");
      Exponent e;
      for (const auto& x : g) {
        if (!x.is_number_integer())
          throw std::invalid_argument("exponents must be integers");
        Int v = x.get<Int>();
        if (v < 0) throw std::invalid_argument("negative exponent in generator");
        e.push_back(v);
      }
      gens.push_back(std::move(e));
    } else {
      throw std::invalid_argument("generators must be exponent vectors or monomial strings");
    }
  }
  const int dim = static_cast<int>(variables.size());
  return {std::move(variables), MonomialIdeal(dim, std::move(gens))};
}

MonomialIdeal parse_ideal(const std::string& json_text) {
  return parse_ideal_document(json_text).ideal;
}

std::string monomial_string(const std::vector<std::string>& variables, const Exponent& e) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables[j];
    if (e[j] > 1) out += "^" + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

std::string ideal_to_json(const std::vector<std::string>& variables,
                          const MonomialIdeal& ideal) {
  json doc;
  doc["variables"] = variables;
  doc["generators"] = json::array();
  for (const auto& g : ideal.generators()) doc["generators"].push_back(g);
  return doc.dump(2);
}

std::string ideal_to_text(const std::vector<std::string>& variables,
                          const MonomialIdeal& ideal) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += monomial_string(variables, ideal.generators()[i]);
  }
  return out + ")";
}

}  // namespace adjmono
