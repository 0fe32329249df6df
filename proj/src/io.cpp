#include "sqpack/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sqpack::io {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_field(const json& j, const std::string& field) {
  if (!j.is_string())
    throw ParseError(field + ": expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(field + ": " + e.what());
  }
}

long long int_field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + "." + key + ": missing");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  return v.get<long long>();
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + "." + key + ": missing");
  return obj.at(key);
}

void check_version(const json& doc, const std::string& where) {
  long long v = int_field(doc, "format_version", where);
  if (v != kFormatVersion)
    throw ParseError(where + ".format_version: unsupported version " + std::to_string(v));
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
}

std::string direction_name(Direction d) { return to_string(d); }

Direction direction_from(const std::string& s, const std::string& where) {
  if (s == "from-below") return Direction::FromBelow;
  if (s == "from-above") return Direction::FromAbove;
  throw ParseError(where + ": unknown direction \"" + s + "\"");
}

json claim_to_json(const LimitClaim& claim) {
  json w = json::array();
  for (const auto& [b, bound] : claim.witness)
    w.push_back(json::array({b, rational_to_json(bound)}));
  return json{{"n", claim.n},
              {"c", claim.c},
              {"direction", direction_name(claim.direction)},
              {"value", rational_to_json(claim.value)},
              {"witness", std::move(w)}};
}

LimitClaim claim_from_json(const json& j, const std::string& where) {
  LimitClaim claim;
  claim.n = int_field(j, "n", where);
  claim.c = int_field(j, "c", where);
  const json& dir = member(j, "direction", where);
  if (!dir.is_string()) throw ParseError(where + ".direction: expected a string");
  claim.direction = direction_from(dir.get<std::string>(), where + ".direction");
  claim.value = rational_field(member(j, "value", where), where + ".value");
  const json& w = member(j, "witness", where);
  if (!w.is_array()) throw ParseError(where + ".witness: expected an array");
  for (std::size_t i = 0; i < w.size(); ++i) {
    const json& entry = w.at(i);
    std::string at = where + ".witness[" + std::to_string(i) + "]";
    if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number_integer())
      throw ParseError(at + ": expected [b, bound]");
    claim.witness.emplace_back(entry.at(0).get<long long>(),
                               rational_field(entry.at(1), at + "[1]"));
  }
  return claim;
}

}  // namespace

std::string serialize_packing(const Packing& p) {
  json squares = json::array();
  for (const Square& s : p.squares)
    squares.push_back(json{{"x", rational_to_json(s.x)},
                           {"y", rational_to_json(s.y)},
                           {"side", rational_to_json(s.side)}});
  json doc{{"format_version", kFormatVersion},
           {"label", p.label},
           {"squares", std::move(squares)}};
  return doc.dump(2) + "\n";
}

Packing parse_packing(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("document: expected an object");
  check_version(doc, "document");
  Packing p;
  const json& label = member(doc, "label", "document");
  if (!label.is_string()) throw ParseError("document.label: expected a string");
  p.label = label.get<std::string>();
  const json& squares = member(doc, "squares", "document");
  if (!squares.is_array()) throw ParseError("document.squares: expected an array");
  for (std::size_t i = 0; i < squares.size(); ++i) {
    const json& js = squares.at(i);
    std::string at = "squares[" + std::to_string(i) + "]";
    if (!js.is_object()) throw ParseError(at + ": expected an object");
    Square s;
    s.x = rational_field(member(js, "x", at), at + ".x");
    s.y = rational_field(member(js, "y", at), at + ".y");
    s.side = rational_field(member(js, "side", at), at + ".side");
    p.squares.push_back(std::move(s));
  }
  return p;
}

std::string serialize_certificate(const BoundCertificate& cert) {
  json steps = json::array();
  for (const BoundStep& s : cert.steps)
    steps.push_back(json{{"n", s.n},
                         {"a", s.a},
                         {"b", s.b},
                         {"premise_n", s.premise_n},
                         {"premise_value", rational_to_json(s.premise_value)},
                         {"resulting_bound", rational_to_json(s.resulting_bound)}});
  json doc{{"format_version", kFormatVersion},
           {"target", json{{"k", cert.k}, {"c", cert.c}}},
           {"assumed_premise", cert.assumed_c},
           {"steps", std::move(steps)},
           {"final_bound", rational_to_json(cert.final_bound)}};
  if (!cert.limits.empty()) {
    doc["limit_claim"] = claim_to_json(cert.limits.back());
    if (cert.limits.size() > 1) {
      json hops = json::array();
      for (std::size_t i = 0; i + 1 < cert.limits.size(); ++i)
        hops.push_back(claim_to_json(cert.limits[i]));
      doc["intermediate_claims"] = std::move(hops);
    }
  }
  return doc.dump(2) + "\n";
}

BoundCertificate parse_certificate(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("document: expected an object");
  check_version(doc, "document");

  BoundCertificate cert;
  const json& target = member(doc, "target", "document");
  if (!target.is_object()) throw ParseError("document.target: expected an object");
  cert.k = int_field(target, "k", "target");
  cert.c = int_field(target, "c", "target");
  cert.assumed_c = int_field(doc, "assumed_premise", "document");
  cert.final_bound = rational_field(member(doc, "final_bound", "document"), "final_bound");

  const json& steps = member(doc, "steps", "document");
  if (!steps.is_array()) throw ParseError("document.steps: expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const json& js = steps.at(i);
    std::string at = "steps[" + std::to_string(i) + "]";
    if (!js.is_object()) throw ParseError(at + ": expected an object");
    BoundStep s;
    s.n = int_field(js, "n", at);
    s.a = int_field(js, "a", at);
    s.b = int_field(js, "b", at);
    s.premise_n = int_field(js, "premise_n", at);
    s.premise_value = rational_field(member(js, "premise_value", at), at + ".premise_value");
    s.resulting_bound =
        rational_field(member(js, "resulting_bound", at), at + ".resulting_bound");
    cert.steps.push_back(std::move(s));
  }

  if (doc.contains("intermediate_claims")) {
    const json& hops = doc.at("intermediate_claims");
    if (!hops.is_array()) throw ParseError("document.intermediate_claims: expected an array");
    for (std::size_t i = 0; i < hops.size(); ++i)
      cert.limits.push_back(
          claim_from_json(hops.at(i), "intermediate_claims[" + std::to_string(i) + "]"));
  }
  if (doc.contains("limit_claim"))
    cert.limits.push_back(claim_from_json(doc.at("limit_claim"), "limit_claim"));
  return cert;
}

namespace {

// Fixed-point decimal with enough digits for >= 12 significant figures even
// for tiny values.
std::string svg_number(const Rational& value) {
  if (value.is_zero()) return "0";
  int digits = 18;
  int e = floor_log10_abs(value);
  if (e < 0) digits = std::max(digits, 12 - e);
  return value.to_decimal_string(digits);
}

}  // namespace

std::string packing_svg(const Packing& p) {
  const Rational scale(1000);
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n"
      << "  <path d=\"M 0 0 L 1000 0 L 1000 1000 L 0 1000 Z\" fill=\"none\" "
         "stroke=\"#808080\" stroke-width=\"1\"/>\n";
  for (const Square& s : p.squares) {
    Rational w = s.side * scale;
    Rational x = s.x * scale;
    Rational y = (Rational(1) - s.y - s.side) * scale;  // flip so origin is bottom-left
    svg << "  <rect x=\"" << svg_number(x) << "\" y=\"" << svg_number(y) << "\" width=\""
        << svg_number(w) << "\" height=\"" << svg_number(w)
        << "\" fill=\"none\" stroke=\"#1f64a0\" stroke-width=\"1\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace sqpack::io
