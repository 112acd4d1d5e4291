#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pexc/matrix_group.hpp"
#include "pexc/perm_group.hpp"

namespace pexc {

// ---------------------------------------------------------------------------
// Group files
//
//   {"dim": d, "field": {"degree": a, "p": p, "poly": [...]},
//    "frobenius": [e_0, ...], "generators": [[[row], ...], ...], "label": "..."}
//
// Entries are integer field encodings, rows are row-major.  "frobenius" and
// "label" are optional on input; write_group_file always emits them, with keys
// sorted, so a file it wrote parses and re-writes to the same bytes.

MatGroup parse_group_file(const std::string& text);
std::string write_group_file(const MatGroup& g);
MatGroup load_group_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Permutation files
//
//   {"label": "...", "degree": n, "base": 0 | 1, "generators": [...],
//    "order": N, "provenance": "..."}
//
// Each generator is either an image array or a list of cycles (arrays of
// arrays).  The order is recomputed at load time and must match.

struct PermFile {
  PermGroup group;
  std::uint64_t order = 0;
  std::string provenance;
};
PermFile parse_perm_file(const std::string& text);
PermFile load_perm_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Reports

struct FieldInfo {
  std::uint32_t p = 2;
  unsigned degree = 1;
  std::vector<std::uint32_t> poly;
  static FieldInfo of(const Field& f) { return {f.characteristic(), f.degree(), f.poly()}; }
};

struct OrbitReport {
  std::string label;
  FieldInfo field;
  std::size_t dim = 0;
  std::optional<std::uint64_t> order;
  OrbitPartition orbits;
  std::optional<PexcVerdict> verdict;
  bool half_transitive = false;
  bool transitive = false;
  std::optional<double> elapsed_ms;
};

/// Computes everything but elapsed_ms.  The order is skipped when skip_order is set.
OrbitReport make_orbit_report(const MatGroup& g, std::optional<std::uint32_t> p, const Limits& lim,
                              bool skip_order = false);
std::string orbit_report_json(const OrbitReport& r);
std::string orbit_report_table(const OrbitReport& r);
std::string subset_report_json(const SubsetOrbitReport& r, const std::string& label);
std::string subset_report_table(const SubsetOrbitReport& r, const std::string& label);

/// "{1:1, 40:2}"-style rendering of a size multiset.
std::string format_sizes(const std::map<std::uint64_t, std::uint64_t>& sizes);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace pexc
