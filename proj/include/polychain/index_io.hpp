#ifndef POLYCHAIN_INDEX_IO_HPP
#define POLYCHAIN_INDEX_IO_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polychain/index.hpp"
#include "polychain/rational.hpp"

namespace polychain {

namespace detail {

inline double parse_decimal(const std::string& text) {
  double v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v))
    throw ParseError("malformed decimal '" + text + "'");
  return v;
}

inline std::string scalar_text(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  throw ParseError("value for pair (" + key + ") must be a string or number");
}

}  // namespace detail

/// Reads an index definition:
///
///   {"name": "...", "mode": "rational" | "float", "eps": 1e-9,
///    "values": {"2,2": "8", "2,3": "8", ..., "4,4": "512/27"}}
///
/// Rational values are "[sign]p[/q]"; float values are decimal literals.
inline AnyIndex load_custom_index(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("index document must be an object");
  if (!doc.contains("name") || !doc["name"].is_string()) throw ParseError("field 'name' absent");
  const std::string name = doc["name"].get<std::string>();
  const std::string mode = doc.value("mode", std::string("rational"));
  if (mode != "rational" && mode != "float") throw ParseError("unknown mode '" + mode + "'");
  if (!doc.contains("values") || !doc["values"].is_object()) throw ParseError("field 'values' absent");
  const auto& values = doc["values"];

  for (const auto& [key, _] : values.items()) {
    bool known = false;
    for (DegreePair p : kDegreePairs) known = known || key == to_string(p);
    if (!known) throw ParseError("unexpected pair key '" + key + "' (expected a,b with 2<=a<=b<=4)");
  }
  auto text_of = [&](DegreePair p) {
    const std::string key = to_string(p);
    if (!values.contains(key)) throw ParseError("pair (" + key + ") absent");
    return detail::scalar_text(values[key], key);
  };

  if (mode == "rational") {
    if (doc.contains("eps")) throw ParseError("'eps' only applies to float mode");
    RationalIndex f{name, {}, {}};
    for (DegreePair p : kDegreePairs) f.values[p.index()] = parse_rational(text_of(p));
    return f;
  }

  FloatIndex f{name, {}, {}};
  if (doc.contains("eps")) {
    const auto& e = doc["eps"];
    double eps = e.is_string() ? detail::parse_decimal(e.get<std::string>())
                 : e.is_number() ? e.get<double>()
                                 : throw ParseError("'eps' must be a number");
    if (eps < 0) throw ParseError("negative eps");
    f.tolerance.eps = eps;
  }
  for (DegreePair p : kDegreePairs) f.values[p.index()] = detail::parse_decimal(text_of(p));
  return f;
}

inline AnyIndex load_custom_index(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("index document is not valid JSON: ") + e.what());
  }
  return load_custom_index(doc);
}

inline AnyIndex load_custom_index_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open index file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_custom_index(std::string_view(ss.str()));
}

inline nlohmann::json to_document(const AnyIndex& any) {
  nlohmann::json doc;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f.values[0])>;
        doc["name"] = f.name;
        nlohmann::json values = nlohmann::json::object();
        for (DegreePair p : kDegreePairs) {
          if constexpr (std::is_same_v<T, Rational>) {
            values[to_string(p)] = to_string(f(p));
          } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", f(p));
            values[to_string(p)] = buf;
          }
        }
        if constexpr (std::is_same_v<T, Rational>) {
          doc["mode"] = "rational";
        } else {
          doc["mode"] = "float";
          doc["eps"] = f.tolerance.eps;
        }
        doc["values"] = values;
      },
      any);
  return doc;
}

}  // namespace polychain

#endif  // POLYCHAIN_INDEX_IO_HPP
