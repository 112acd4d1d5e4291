#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pexc/errors.hpp"
#include "pexc/matrix_group.hpp"

namespace pexc {

/// A verified orbit profile differs from the expected one.
class MismatchedProfile : public Error {
 public:
  using Error::Error;
};

/// One named example: a construction recipe plus the orbit profile it must produce.
struct CatalogEntry {
  std::string name;
  std::string recipe;  // JSON object text, interpreted by Catalog::build
  std::uint32_t p = 2;
  std::size_t dim = 0;  // over GF(p), after blow-up
  std::map<std::uint64_t, std::uint64_t> expected_sizes;
  std::optional<std::uint64_t> expected_order;
  std::optional<PexcStatus> expected_status;
  std::string provenance;  // "stated" (published value) or "derived" (computed here)
  std::string claim;       // the statement the expected profile reproduces
  std::vector<std::string> checks;
  std::optional<std::string> normal_in;  // an entry containing this group as a normal subgroup
  std::string notes;
  bool optional = false;  // skipped by verify --all unless its data is present
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string name;
  std::string label;
  std::uint32_t p = 0;
  std::size_t dim = 0;
  std::uint64_t order = 0;
  std::optional<std::uint64_t> expected_order;
  std::map<std::uint64_t, std::uint64_t> sizes, expected_sizes;
  std::map<std::uint64_t, std::int64_t> diff;  // computed minus expected multiplicity, nonzero only
  PexcVerdict verdict;
  std::optional<PexcStatus> expected_status;
  bool irreducible = false;
  bool half_transitive = false;
  bool transitive = false;
  std::vector<CheckResult> checks;
  std::optional<double> elapsed_ms;

  bool profile_match() const { return diff.empty(); }
  bool pass() const;
};

class Catalog {
 public:
  /// Reads every *.json under data_dir/catalog; permutation data comes from data_dir/perm.
  static Catalog load(const std::filesystem::path& data_dir);
  /// Directory baked in at build time, or the PEXC_DATA_DIR compile definition.
  static std::filesystem::path default_data_dir();

  std::vector<std::string> names() const;
  const CatalogEntry& get(const std::string& name) const;
  const std::filesystem::path& data_dir() const { return dir_; }

  /// The group of an entry, written over GF(p).
  MatGroup build(const CatalogEntry& e, const Limits& lim = {}) const;
  MatGroup build(const std::string& name, const Limits& lim = {}) const { return build(get(name), lim); }
  /// A builtin construction from a recipe object (JSON text).
  MatGroup build_recipe(const std::string& recipe_json, const Limits& lim = {}) const;

  VerifyReport verify(const std::string& name, const Limits& lim = {}, bool timing = false) const;
  /// Entries verified concurrently; reports are returned in name order.
  std::vector<VerifyReport> verify_all(const Limits& lim = {}, bool timing = false, unsigned threads = 0) const;

 private:
  std::filesystem::path dir_;
  std::map<std::string, CatalogEntry> entries_;
};

std::string verify_report_json(const std::vector<VerifyReport>& reports);
std::string verify_report_table(const std::vector<VerifyReport>& reports);
std::string catalog_list_json(const Catalog& c);
std::string catalog_list_table(const Catalog& c);

}  // namespace pexc
