#pragma once

// Private helpers shared by io.cpp and catalog.cpp.

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace pexc::detail {

using ojson = nlohmann::ordered_json;

/// Numbers up to 2^53, decimal strings above.
template <class J>
J json_uint(std::uint64_t x) {
  if (x <= (std::uint64_t{1} << 53)) return J(x);
  return J(std::to_string(x));
}

template <class J>
J sizes_json(const std::map<std::uint64_t, std::uint64_t>& sizes) {
  J out = J::object();
  for (auto [s, m] : sizes) out[std::to_string(s)] = json_uint<J>(m);
  return out;
}

/// Pretty print with arrays of scalars kept on one line.
std::string dump_compact(const ojson& j, int indent = 2);
std::string dump_compact(const nlohmann::json& j, int indent = 2);

/// Parses text, turning parse errors into ParseError with line and column.
nlohmann::json parse_json(const std::string& text, const std::string& what);

std::uint64_t as_uint(const nlohmann::json& j, const std::string& what);

}  // namespace pexc::detail
