#pragma once

#include <stdexcept>
#include <string>

#include "sqpack/bounds.hpp"
#include "sqpack/geometry.hpp"

namespace sqpack::io {

/// Thrown on malformed documents; the message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

// Packing documents. Rationals travel as strings ("10/3"), never as floats,
// and serialize(parse(serialize(x))) == serialize(x) byte for byte.
std::string serialize_packing(const Packing& p);
Packing parse_packing(const std::string& text);

// Certificate documents.
std::string serialize_certificate(const BoundCertificate& cert);
BoundCertificate parse_certificate(const std::string& text);

/// Unit square on a 1000x1000 viewBox, y axis flipped so the packing origin
/// is bottom-left. One <rect> per square, attributes rendered from the exact
/// rationals with at least 12 significant digits.
std::string packing_svg(const Packing& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sqpack::io
