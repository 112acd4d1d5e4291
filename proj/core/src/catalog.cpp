#include "pexc/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "json_util.hpp"
#include "pexc/constructions.hpp"
#include "pexc/errors.hpp"
#include "pexc/io.hpp"

#ifndef PEXC_DATA_DIR
#define PEXC_DATA_DIR "data"
#endif

namespace pexc {

using detail::as_uint;
using nlohmann::json;

namespace {

std::optional<PexcStatus> parse_status(const std::string& s) {
  for (auto st : {PexcStatus::P_EXCEPTIONAL, PexcStatus::ORDER_NOT_DIVISIBLE_BY_P, PexcStatus::BAD_ORBIT})
    if (s == to_string(st)) return st;
  return std::nullopt;
}

ExtraspecialVariant parse_variant(const std::string& s) {
  if (s == "plus") return ExtraspecialVariant::Plus;
  if (s == "minus") return ExtraspecialVariant::Minus;
  if (s == "odd") return ExtraspecialVariant::OddExponentR;
  if (s == "sym4circ") return ExtraspecialVariant::Sym4Circ;
  throw ParseError("unknown extraspecial variant \"" + s + "\"");
}

CatalogEntry parse_entry(const json& j, const std::string& file) {
  CatalogEntry e;
  auto need = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw ParseError(file + ": missing key \"" + key + "\"");
    return j[key];
  };
  e.name = need("name").get<std::string>();
  e.recipe = need("recipe").dump();
  e.p = static_cast<std::uint32_t>(as_uint(need("p"), "p"));
  e.dim = as_uint(need("dim"), "dim");
  for (auto it = need("expected_orbit_sizes").begin(); it != j["expected_orbit_sizes"].end(); ++it)
    e.expected_sizes[std::stoull(it.key())] = as_uint(it.value(), "expected_orbit_sizes");
  if (j.contains("expected_order")) e.expected_order = as_uint(j["expected_order"], "expected_order");
  if (j.contains("expected_status")) {
    e.expected_status = parse_status(j["expected_status"].get<std::string>());
    if (!e.expected_status) throw ParseError(file + ": bad expected_status");
  }
  e.provenance = j.value("provenance", std::string("derived"));
  e.claim = j.value("claim", std::string());
  if (j.contains("checks"))
    for (const auto& c : j["checks"]) e.checks.push_back(c.get<std::string>());
  if (j.contains("normal_in")) e.normal_in = j["normal_in"].get<std::string>();
  e.notes = j.value("notes", std::string());
  e.optional = j.value("optional", false);
  return e;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool VerifyReport::pass() const {
  if (!profile_match()) return false;
  if (expected_order && *expected_order != order) return false;
  if (expected_status && *expected_status != verdict.status) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::filesystem::path Catalog::default_data_dir() { return PEXC_DATA_DIR; }

Catalog Catalog::load(const std::filesystem::path& data_dir) {
  Catalog c;
  c.dir_ = data_dir;
  const auto cat = data_dir / "catalog";
  if (!std::filesystem::is_directory(cat)) throw ParseError("catalog directory not found: " + cat.string());
  std::vector<std::filesystem::path> files;
  for (const auto& de : std::filesystem::directory_iterator(cat))
    if (de.path().extension() == ".json") files.push_back(de.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    CatalogEntry e = parse_entry(detail::parse_json(read_text_file(f), f.string()), f.string());
    const std::string name = e.name;
    if (!c.entries_.emplace(name, std::move(e)).second) throw ParseError("duplicate catalog entry " + name);
  }
  return c;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [n, e] : entries_) out.push_back(n);
  return out;
}

const CatalogEntry& Catalog::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnknownEntry("unknown catalog entry \"" + name + "\"");
  return it->second;
}

// ---------------------------------------------------------------------------
// Recipes

namespace {

struct Built {
  MatGroup group;
  std::optional<MatGroup> sibling;  // other constituent of a split
  std::optional<MatGroup> inner;    // wreath pieces
  std::optional<PermGroup> top;
};

PermGroup perm_source(const std::filesystem::path& dir, const std::string& name) {
  static const std::regex family("([AS])([0-9]+)");
  std::smatch m;
  if (std::regex_match(name, m, family)) {
    const std::size_t n = std::stoul(m[2]);
    return m[1] == "A" ? alternating_group(n) : symmetric_group(n);
  }
  return load_perm_file(dir / "perm" / (name + ".json")).group;
}

Built build_impl(const std::filesystem::path& dir, const json& r, const Limits& lim) {
  const std::string kind = r.at("kind").get<std::string>();
  auto u = [&](const char* key) { return as_uint(r.at(key), key); };

  if (kind == "general_linear")
    return {general_linear(u("n"), Field::of_order(static_cast<std::uint32_t>(u("q")))).blown_up(), {}, {}, {}};
  if (kind == "special_linear")
    return {special_linear(u("n"), Field::of_order(static_cast<std::uint32_t>(u("q")))).blown_up(), {}, {}, {}};
  if (kind == "gamma_l1") {
    GammaL1Spec s;
    s.p = static_cast<std::uint32_t>(u("p"));
    s.d = static_cast<unsigned>(u("d"));
    s.s = static_cast<unsigned>(u("s"));
    s.j = u("j");
    s.include_full_frobenius = r.value("full_frobenius", false);
    return {gamma_l1(s), {}, {}, {}};
  }
  if (kind == "torus")
    return {torus_group(static_cast<std::uint32_t>(u("q")), r.value("frobenius", false)).blown_up(), {}, {}, {}};
  if (kind == "c4_pair") return {c4_pair_group(static_cast<std::uint32_t>(u("q"))).blown_up(), {}, {}, {}};
  if (kind == "singer_tensor") return {singer_tensor_group(r.at("variant").get<std::string>()), {}, {}, {}};
  if (kind == "sl2_5")
    return {sl2_5_in_gl4_3(static_cast<std::uint32_t>(u("scalar_order")), lim.seed), {}, {}, {}};
  if (kind == "extraspecial") {
    ExtraspecialSpec s;
    s.r = static_cast<std::uint32_t>(u("r"));
    s.m = static_cast<unsigned>(u("m"));
    s.variant = parse_variant(r.at("variant").get<std::string>());
    s.q = static_cast<std::uint32_t>(u("q"));
    return {extraspecial_normalizer_subgroup(s, r.value("top", std::string("none"))).blown_up(), {}, {}, {}};
  }
  if (kind == "deleted_module") {
    const PermGroup h = perm_source(dir, r.at("perm").get<std::string>());
    const MatGroup full = deleted_permutation_module(h, Field::make(static_cast<std::uint32_t>(u("p"))));
    const std::string which = r.value("constituent", std::string("full"));
    const bool z = r.value("scalars", false);
    auto fix = [&](const MatGroup& m) { return z ? with_scalars(m) : m; };
    if (which == "full") return {fix(full), {}, {}, {}};
    const SplitResult sp = split_constituent(full, lim);
    if (sp.irreducible) throw InvalidArgument("deleted module of " + h.label() + " is irreducible; no " + which);
    if (which == "sub") return {fix(*sp.sub), fix(*sp.quot), {}, {}};
    if (which == "quot") return {fix(*sp.quot), fix(*sp.sub), {}, {}};
    throw ParseError("constituent must be full, sub or quot");
  }
  if (kind == "wreath") {
    const Built in = build_impl(dir, r.at("inner"), lim);
    const PermGroup top = perm_source(dir, r.at("top").get<std::string>());
    return {wreath(in.group, top, false, lim), {}, in.group, top};
  }
  if (kind == "group_file") return {load_group_file(dir / "groups" / r.at("file").get<std::string>()).blown_up(), {}, {}, {}};
  throw ParseError("unknown recipe kind \"" + kind + "\"");
}

Built build_entry(const std::filesystem::path& dir, const CatalogEntry& e, const Limits& lim) {
  Built b = build_impl(dir, json::parse(e.recipe), lim);
  b.group = b.group.with_label(e.name);
  return b;
}

}  // namespace

MatGroup Catalog::build(const CatalogEntry& e, const Limits& lim) const { return build_entry(dir_, e, lim).group; }

MatGroup Catalog::build_recipe(const std::string& recipe_json, const Limits& lim) const {
  return build_impl(dir_, detail::parse_json(recipe_json, "recipe"), lim).group;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

CheckResult check_invariant_subspaces(const MatGroup& g, std::uint32_t q, const Limits& lim) {
  CheckResult c{"invariant_subspaces", true, ""};
  const Field f = Field::of_order(q);
  const auto [u1, u2] = c4_pair_invariant_subspaces(q);
  for (const Matrix* u : {&u1, &u2}) {
    std::vector<std::uint64_t> span;
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        const Vec v = vec_add(f, vec_scale(f, u->row(0), static_cast<Elem>(a)), vec_scale(f, u->row(1), static_cast<Elem>(b)));
        span.push_back(vec_index(f, v));
      }
    std::sort(span.begin(), span.end());
    // Over GF(q) and over GF(p) the index of a vector is the same integer.
    if (orbit_of(g, span.front(), lim) != span) {
      c.pass = false;
      c.detail = "a 2-dimensional invariant subspace is not a single orbit plus zero";
    }
  }
  if (c.pass) c.detail = "both subspaces are orbits of size " + std::to_string(std::uint64_t{q} * q - 1);
  return c;
}

}  // namespace

VerifyReport Catalog::verify(const std::string& name, const Limits& lim, bool timing) const {
  const auto t0 = std::chrono::steady_clock::now();
  const CatalogEntry& e = get(name);
  const Built b = build_entry(dir_, e, lim);
  const MatGroup& g = b.group;

  VerifyReport r;
  r.name = e.name;
  r.label = g.label();
  r.p = e.p;
  r.dim = g.prime_dim();
  r.expected_order = e.expected_order;
  r.expected_status = e.expected_status;
  r.expected_sizes = e.expected_sizes;
  const auto& part = g.orbits(lim);
  r.sizes = part.sizes;
  r.order = g.order(lim);
  r.verdict = is_p_exceptional(g, e.p, lim);
  r.irreducible = is_irreducible(g, lim);
  r.half_transitive = is_half_transitive(g, lim);
  r.transitive = is_transitive_nonzero(g, lim);

  std::set<std::uint64_t> keys;
  for (auto [s, m] : r.sizes) keys.insert(s);
  for (auto [s, m] : r.expected_sizes) keys.insert(s);
  for (auto s : keys) {
    const auto a = r.sizes.count(s) ? r.sizes.at(s) : 0;
    const auto x = r.expected_sizes.count(s) ? r.expected_sizes.at(s) : 0;
    if (a != x) r.diff[s] = static_cast<std::int64_t>(a) - static_cast<std::int64_t>(x);
  }

  r.checks.push_back({"dimension", r.dim == e.dim,
                      "dimension " + std::to_string(r.dim) + " over GF(" + std::to_string(e.p) + ")"});
  {
    std::uint64_t sum = 0;
    bool divides = true;
    for (auto [s, m] : r.sizes) {
      sum += s * m;
      divides = divides && r.order % s == 0;
    }
    const bool conserved = sum == ipow(e.p, r.dim) && sum == part.total;
    r.checks.push_back({"orbit_sum", conserved, "sizes sum to " + std::to_string(sum)});
    r.checks.push_back({"sizes_divide_order", divides, ""});
  }

  const json recipe = json::parse(e.recipe);
  for (const auto& c : e.checks) {
    if (c == "constituents_agree") {
      const bool ok = b.sibling && b.sibling->orbits(lim).sizes == r.sizes;
      r.checks.push_back({c, ok, b.sibling ? "other constituent " + format_sizes(b.sibling->orbits(lim).sizes) : "no split"});
    } else if (c == "sibling_is_dual") {
      bool ok = false;
      std::string detail = "no split";
      if (b.sibling) {
        const auto& other = b.sibling->orbits(lim).sizes;
        ok = dual_module(g).orbits(lim).sizes == other;
        detail = "other constituent " + format_sizes(other) + (ok ? " matches" : " differs from") + " the dual module";
      }
      r.checks.push_back({c, ok, detail});
    } else if (c == "sibling_not_p_exceptional") {
      bool ok = false;
      std::string detail = "no split";
      if (b.sibling) {
        const auto v = is_p_exceptional(*b.sibling, e.p, lim);
        ok = v.status == PexcStatus::BAD_ORBIT;
        detail = std::string("other constituent ") + to_string(v.status) + " " + format_sizes(b.sibling->orbits(lim).sizes);
      }
      r.checks.push_back({c, ok, detail});
    } else if (c == "invariant_subspaces") {
      r.checks.push_back(check_invariant_subspaces(g, static_cast<std::uint32_t>(as_uint(recipe.at("q"), "q")), lim));
    } else if (c == "wreath_formula") {
      const bool ok = b.inner && check_wreath_orbit_formula(g, *b.inner, *b.top, lim);
      r.checks.push_back({c, ok, ""});
    } else if (c == "p_residual") {
      // O^{p'}(G) is normal in G, so it inherits p-exceptionality.
      const MatGroup res = p_residual(g, e.p, lim);
      const auto v = is_p_exceptional(res, e.p, lim);
      const bool ok = !r.verdict.ok() || v.ok();
      r.checks.push_back({c, ok, "O^p'(G) has order " + std::to_string(res.order(lim)) + ", " + to_string(v.status)});
    } else {
      throw ParseError(e.name + ": unknown check \"" + c + "\"");
    }
  }

  if (e.normal_in) {
    const MatGroup big = build(*e.normal_in, lim);
    const bool normal = is_normal_subgroup(g, big, lim);
    const auto vbig = is_p_exceptional(big, e.p, lim);
    // A normal subgroup of order divisible by p inherits p-exceptionality.
    const bool inherits = !vbig.ok() || r.order % e.p != 0 || r.verdict.ok();
    r.checks.push_back({"normal_subgroup_heredity", normal && inherits,
                        std::string(normal ? "normal in " : "NOT normal in ") + *e.normal_in + " (" +
                            to_string(vbig.status) + ")"});
  }

  if (timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<VerifyReport> Catalog::verify_all(const Limits& lim, bool timing, unsigned threads) const {
  std::vector<std::string> todo;
  for (const auto& [n, e] : entries_) {
    if (e.optional) {
      const json r = json::parse(e.recipe);
      if (r.value("kind", "") == "group_file" && !std::filesystem::exists(dir_ / "groups" / r.value("file", "")))
        continue;
    }
    todo.push_back(n);
  }
  std::vector<std::optional<VerifyReport>> out(todo.size());
  std::vector<std::exception_ptr> errs(todo.size());
  if (threads == 0) threads = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) {
      try {
        out[i] = verify(todo[i], lim, timing);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::vector<VerifyReport> reports;
  for (std::size_t i = 0; i < todo.size(); ++i) {
    if (errs[i]) std::rethrow_exception(errs[i]);
    reports.push_back(std::move(*out[i]));
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Output

std::string verify_report_json(const std::vector<VerifyReport>& reports) {
  using detail::ojson;
  using detail::json_uint;
  ojson arr = ojson::array();
  bool all = true;
  for (const auto& r : reports) {
    ojson j;
    j["name"] = r.name;
    j["pass"] = r.pass();
    j["p"] = r.p;
    j["dim"] = r.dim;
    j["order"] = json_uint<ojson>(r.order);
    j["expected_order"] = r.expected_order ? json_uint<ojson>(*r.expected_order) : ojson(nullptr);
    j["orbit_sizes"] = detail::sizes_json<ojson>(r.sizes);
    j["expected_orbit_sizes"] = detail::sizes_json<ojson>(r.expected_sizes);
    ojson d = ojson::object();
    for (auto [s, m] : r.diff) d[std::to_string(s)] = m;
    j["diff"] = std::move(d);
    ojson v;
    v["status"] = to_string(r.verdict.status);
    v["witness"] = r.verdict.witness ? json_uint<ojson>(*r.verdict.witness) : ojson(nullptr);
    v["witness_size"] = r.verdict.witness_size ? json_uint<ojson>(*r.verdict.witness_size) : ojson(nullptr);
    j["verdict"] = std::move(v);
    j["expected_status"] = r.expected_status ? ojson(to_string(*r.expected_status)) : ojson(nullptr);
    j["irreducible"] = r.irreducible;
    j["half_transitive"] = r.half_transitive;
    j["transitive"] = r.transitive;
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
      ojson cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    all = all && r.pass();
    arr.push_back(std::move(j));
  }
  ojson top;
  top["pass"] = all;
  top["entries"] = std::move(arr);
  return detail::dump_compact(top);
}

std::string verify_report_table(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass() ? "PASS " : "FAIL ") << r.name << "  order " << r.order << "  " << format_sizes(r.sizes) << "  "
       << to_string(r.verdict.status);
    if (r.elapsed_ms) os << "  " << static_cast<std::uint64_t>(*r.elapsed_ms) << " ms";
    os << "\n";
    if (!r.profile_match()) os << "     expected " << format_sizes(r.expected_sizes) << "\n";
    if (r.expected_order && *r.expected_order != r.order) os << "     expected order " << *r.expected_order << "\n";
    if (r.expected_status && *r.expected_status != r.verdict.status)
      os << "     expected " << to_string(*r.expected_status) << "\n";
    for (const auto& c : r.checks)
      if (!c.pass) os << "     check " << c.name << " failed: " << c.detail << "\n";
  }
  return os.str();
}

std::string catalog_list_json(const Catalog& c) {
  using detail::ojson;
  ojson arr = ojson::array();
  for (const auto& n : c.names()) {
    const auto& e = c.get(n);
    ojson j;
    j["name"] = e.name;
    j["p"] = e.p;
    j["dim"] = e.dim;
    j["expected_orbit_sizes"] = detail::sizes_json<ojson>(e.expected_sizes);
    j["provenance"] = e.provenance;
    j["claim"] = e.claim;
    j["optional"] = e.optional;
    arr.push_back(std::move(j));
  }
  return detail::dump_compact(arr);
}

std::string catalog_list_table(const Catalog& c) {
  std::ostringstream os;
  for (const auto& n : c.names()) {
    const auto& e = c.get(n);
    os << e.name << std::string(e.name.size() < 28 ? 28 - e.name.size() : 1, ' ') << "GF(" << e.p << ")^" << e.dim
       << "  " << format_sizes(e.expected_sizes) << "  [" << e.provenance << "]" << (e.optional ? " optional" : "")
       << "\n";
  }
  return os.str();
}

}  // namespace pexc
