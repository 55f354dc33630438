#include "sallylab/spec.hpp"

#include <cctype>
#include <limits>

#include <json.hpp>

#include "sallylab/errors.hpp"

namespace sallylab {

using nlohmann::json;

MonomialIdeal IdealSpec::q_ideal() const { return MonomialIdeal(dim, q); }

MonomialIdeal IdealSpec::ideal() const {
  std::vector<Monomial> gens = q;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return MonomialIdeal(dim, std::move(gens));
}

namespace {

std::optional<std::size_t> variable_index(std::string_view name, std::size_t dim) {
  static constexpr std::string_view kShort[] = {"x", "y", "z", "w"};
  if (dim <= 4)
    for (std::size_t i = 0; i < dim; ++i)
      if (name == kShort[i]) return i;
  if (name.size() >= 2 && name[0] == 'x') {
    std::size_t value = 0;
    for (char ch : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value > dim) return std::nullopt;
    }
    if (value >= 1) return value - 1;
  }
  return std::nullopt;
}

Monomial exponent_vector(const json& node, std::size_t dim, const std::string& path) {
  if (node.is_string()) {
    try {
      return parse_monomial(node.get<std::string>(), dim);
    } catch (const ParseError& err) {
      throw ParseError(path + ": " + err.what());
    }
  }
  if (!node.is_array()) throw ParseError(path + ": expected an exponent array or monomial string");
  if (node.size() != dim)
    throw ValidationError(path + ": dimension mismatch, expected " + std::to_string(dim) +
                          " exponents, got " + std::to_string(node.size()));
  std::vector<Exponent> exps;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto& v = node[i];
    const std::string where = path + "[" + std::to_string(i) + "]";
    if (!v.is_number_integer()) throw ParseError(where + ": expected an integer exponent");
    if (v.is_number_unsigned()) {
      const auto u = v.get<std::uint64_t>();
      if (u > std::numeric_limits<Exponent>::max())
        throw ValidationError(where + ": exponent too large");
      exps.push_back(static_cast<Exponent>(u));
    } else {
      const auto s = v.get<std::int64_t>();
      if (s < 0) throw ValidationError(where + ": negative exponent " + std::to_string(s));
      if (s > static_cast<std::int64_t>(std::numeric_limits<Exponent>::max()))
        throw ValidationError(where + ": exponent too large");
      exps.push_back(static_cast<Exponent>(s));
    }
  }
  return Monomial(std::span<const Exponent>(exps));
}

std::vector<Monomial> exponent_list(const json& doc, const char* field, std::size_t dim,
                                    bool required) {
  if (!doc.contains(field)) {
    if (required) throw ParseError(std::string("missing field '") + field + "'");
    return {};
  }
  const json& node = doc.at(field);
  if (!node.is_array()) throw ParseError(std::string("field '") + field + "': expected an array");
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(exponent_vector(node[i], dim, std::string(field) + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t dim) {
  if (dim == 0) throw ParseError("monomial in zero variables");
  std::vector<Exponent> exps(dim, 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("monomial '" + std::string(text) + "' at offset " + std::to_string(pos) +
                      ": " + what);
  };

  skip_space();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_space();
    if (pos != text.size()) throw fail("unexpected trailing input");
    return Monomial(std::span<const Exponent>(exps));
  }
  while (true) {
    skip_space();
    const std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected a variable");
    const auto var = variable_index(text.substr(start, pos - start), dim);
    if (!var) throw fail("unknown variable '" + std::string(text.substr(start, pos - start)) + "'");
    skip_space();
    std::uint64_t power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_space();
      const std::size_t digits = pos;
      power = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        power = power * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (power > std::numeric_limits<Exponent>::max()) throw fail("exponent too large");
        ++pos;
      }
      if (digits == pos) throw fail("expected an exponent");
    }
    const std::uint64_t total = std::uint64_t{exps[*var]} + power;
    if (total > std::numeric_limits<Exponent>::max()) throw fail("exponent too large");
    exps[*var] = static_cast<Exponent>(total);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw fail("expected '*'");
    ++pos;
  }
  return Monomial(std::span<const Exponent>(exps));
}

IdealSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(err.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected a JSON object");
  if (!doc.contains("dim")) throw ParseError("missing field 'dim'");
  const json& dim_node = doc.at("dim");
  if (!dim_node.is_number_integer()) throw ParseError("field 'dim': expected an integer");
  if (dim_node.get<std::int64_t>() < 1) throw ValidationError("field 'dim': must be at least 1");

  IdealSpec spec;
  spec.dim = dim_node.get<std::size_t>();
  spec.q = exponent_list(doc, "Q", spec.dim, true);
  spec.extra = exponent_list(doc, "extra", spec.dim, false);
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw ParseError("field 'label': expected a string");
    spec.label = doc.at("label").get<std::string>();
  }

  if (spec.q.size() != spec.dim)
    throw ValidationError("field 'Q': expected " + std::to_string(spec.dim) +
                          " pure powers, got " + std::to_string(spec.q.size()) + " entries");
  std::vector<bool> seen(spec.dim, false);
  for (std::size_t i = 0; i < spec.q.size(); ++i) {
    const auto var = spec.q[i].pure_power_variable();
    if (!var)
      throw ValidationError("field 'Q[" + std::to_string(i) + "]': " + to_string(spec.q[i]) +
                            " is not a pure power of a variable");
    if (seen[*var])
      throw ValidationError("field 'Q': two pure powers of " + variable_name(*var, spec.dim));
    seen[*var] = true;
  }
  return spec;
}

std::string render_spec(const IdealSpec& spec) {
  auto vectors = [](const std::vector<Monomial>& ms) {
    json arr = json::array();
    for (const auto& m : ms) {
      json v = json::array();
      for (Exponent e : m.exponents()) v.push_back(e);
      arr.push_back(std::move(v));
    }
    return arr;
  };
  nlohmann::ordered_json doc;
  doc["dim"] = spec.dim;
  doc["Q"] = vectors(spec.q);
  doc["extra"] = vectors(spec.extra);
  if (spec.label) doc["label"] = *spec.label;
  return doc.dump();
}

}  // namespace sallylab
