#include "pexc/io.hpp"

#include <fstream>
#include <sstream>

#include "json_util.hpp"
#include "pexc/errors.hpp"

namespace pexc {

namespace detail {

namespace {

template <class J>
bool is_flat(const J& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

template <class J>
void dump_rec(const J& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  if (j.is_array()) {
    if (j.empty() || is_flat(j)) {
      out += j.dump();
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump_rec(j[i], indent, depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + J(it.key()).dump() + ": ";
      dump_rec(it.value(), indent, depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_compact(const ojson& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out + "\n";
}

std::string dump_compact(const nlohmann::json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out + "\n";
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

std::uint64_t as_uint(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return std::stoull(s);
  }
  throw ParseError(what + ": expected a nonnegative integer");
}

}  // namespace detail

using detail::as_uint;
using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Group files

MatGroup parse_group_file(const std::string& text) {
  const json j = detail::parse_json(text, "group file");
  if (!j.is_object()) throw ParseError("group file: top level must be an object");
  for (const char* key : {"dim", "field", "generators"})
    if (!j.contains(key)) throw ParseError(std::string("group file: missing key \"") + key + "\"");

  const json& jf = j["field"];
  if (!jf.is_object() || !jf.contains("p")) throw ParseError("group file: field needs \"p\"");
  const auto p = static_cast<std::uint32_t>(as_uint(jf["p"], "field.p"));
  const unsigned degree = jf.contains("degree") ? static_cast<unsigned>(as_uint(jf["degree"], "field.degree")) : 1;
  Field f = Field::make(p, degree);
  if (jf.contains("poly")) {
    std::vector<std::uint32_t> poly;
    for (const auto& c : jf["poly"]) poly.push_back(static_cast<std::uint32_t>(as_uint(c, "field.poly")));
    if (poly.size() != degree + 1) throw ParseError("group file: poly must have degree+1 coefficients");
    f = Field::with_poly(p, poly);
  }

  const std::size_t dim = as_uint(j["dim"], "dim");
  const json& jg = j["generators"];
  if (!jg.is_array() || jg.empty()) throw ParseError("group file: generators must be a nonempty array");
  std::vector<unsigned> frob(jg.size(), 0);
  if (j.contains("frobenius")) {
    const json& je = j["frobenius"];
    if (!je.is_array() || je.size() != jg.size())
      throw ParseError("group file: frobenius must have one entry per generator");
    for (std::size_t i = 0; i < je.size(); ++i) frob[i] = static_cast<unsigned>(as_uint(je[i], "frobenius"));
  }
  std::vector<SemiMatrix> gens;
  for (std::size_t g = 0; g < jg.size(); ++g) {
    const std::string where = "generator " + std::to_string(g);
    const json& m = jg[g];
    if (!m.is_array() || m.size() != dim) throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
    Matrix mat(f, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (!m[r].is_array() || m[r].size() != dim)
        throw ParseError(where + ", row " + std::to_string(r) + ": expected " + std::to_string(dim) + " entries");
      for (std::size_t c = 0; c < dim; ++c) {
        const auto x = as_uint(m[r][c], where);
        if (!f.valid(static_cast<Elem>(x)) || x > f.order())
          throw ParseError(where + ", row " + std::to_string(r) + ": entry " + std::to_string(x) +
                           " is not an element of " + f.describe());
        mat.set(r, c, static_cast<Elem>(x));
      }
    }
    gens.emplace_back(std::move(mat), frob[g] % f.degree());
  }
  const std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  return MatGroup(f, dim, std::move(gens), label);
}

std::string write_group_file(const MatGroup& g) {
  // nlohmann::json objects keep keys sorted, which fixes the canonical order.
  json j;
  j["dim"] = g.dim();
  j["field"] = {{"p", g.field().characteristic()}, {"degree", g.field().degree()}, {"poly", g.field().poly()}};
  json frob = json::array(), gens = json::array();
  for (const auto& s : g.generators()) {
    frob.push_back(s.frob);
    json m = json::array();
    for (std::size_t r = 0; r < s.mat.rows(); ++r) m.push_back(s.mat.row(r));
    gens.push_back(std::move(m));
  }
  j["frobenius"] = std::move(frob);
  j["generators"] = std::move(gens);
  j["label"] = g.label();
  return detail::dump_compact(j);
}

MatGroup load_group_file(const std::filesystem::path& path) {
  try {
    return parse_group_file(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Permutation files

PermFile parse_perm_file(const std::string& text) {
  const json j = detail::parse_json(text, "permutation file");
  for (const char* key : {"degree", "generators", "order"})
    if (!j.contains(key)) throw ParseError(std::string("permutation file: missing key \"") + key + "\"");
  const std::size_t n = as_uint(j["degree"], "degree");
  const std::uint32_t base = j.contains("base") ? static_cast<std::uint32_t>(as_uint(j["base"], "base")) : 0;
  if (base > 1) throw ParseError("permutation file: base must be 0 or 1");
  auto point = [&](const json& x) {
    const auto v = as_uint(x, "point");
    if (v < base || v - base >= n) throw ParseError("permutation file: point " + std::to_string(v) + " out of range");
    return static_cast<std::uint32_t>(v - base);
  };
  std::vector<Perm> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) throw ParseError("permutation file: generator must be an array");
    if (!g.empty() && g[0].is_array()) {
      std::vector<std::vector<std::uint32_t>> cycles;
      for (const auto& c : g) {
        cycles.emplace_back();
        for (const auto& x : c) cycles.back().push_back(point(x));
      }
      gens.push_back(PermGroup::from_cycles(n, cycles));
    } else {
      Perm pm;
      for (const auto& x : g) pm.push_back(point(x));
      if (pm.size() != n || !perm_is_valid(pm)) throw ParseError("permutation file: image array is not a permutation");
      gens.push_back(std::move(pm));
    }
  }
  const std::string label = j.value("label", std::string());
  PermFile out{PermGroup(n, std::move(gens), label), as_uint(j["order"], "order"), j.value("provenance", std::string())};
  const std::uint64_t computed = perm_order(out.group);
  if (computed != out.order)
    throw ParseError("permutation file " + label + ": order assertion failed (computed " + std::to_string(computed) +
                     ", stated " + std::to_string(out.order) + ")");
  return out;
}

PermFile load_perm_file(const std::filesystem::path& path) {
  try {
    return parse_perm_file(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

std::string format_sizes(const std::map<std::uint64_t, std::uint64_t>& sizes) {
  std::string out = "{";
  bool first = true;
  for (auto [s, m] : sizes) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(s);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out + "}";
}

OrbitReport make_orbit_report(const MatGroup& g, std::optional<std::uint32_t> p, const Limits& lim, bool skip_order) {
  OrbitReport r;
  r.label = g.label();
  r.field = FieldInfo::of(g.field());
  r.dim = g.dim();
  r.orbits = g.orbits(lim);
  if (!skip_order || p) r.order = g.order(lim);
  if (p) r.verdict = is_p_exceptional(g, *p, lim);
  r.half_transitive = is_half_transitive(g, lim);
  r.transitive = is_transitive_nonzero(g, lim);
  return r;
}

namespace {

detail::ojson field_json(const FieldInfo& f) {
  detail::ojson j;
  j["p"] = f.p;
  j["degree"] = f.degree;
  j["poly"] = f.poly;
  return j;
}

std::string field_name(const FieldInfo& f) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f.degree; ++i) q *= f.p;
  return "GF(" + std::to_string(q) + ")";
}

}  // namespace

std::string orbit_report_json(const OrbitReport& r) {
  using detail::ojson;
  ojson j;
  j["label"] = r.label;
  j["field"] = field_json(r.field);
  j["dim"] = r.dim;
  j["order"] = r.order ? detail::json_uint<ojson>(*r.order) : ojson(nullptr);
  j["total"] = detail::json_uint<ojson>(r.orbits.total);
  j["num_orbits"] = r.orbits.num_orbits();
  j["orbit_sizes"] = detail::sizes_json<ojson>(r.orbits.sizes);
  if (r.verdict) {
    j["p"] = r.verdict->p;
    ojson v;
    v["status"] = to_string(r.verdict->status);
    v["witness"] = r.verdict->witness ? detail::json_uint<ojson>(*r.verdict->witness) : ojson(nullptr);
    v["witness_size"] = r.verdict->witness_size ? detail::json_uint<ojson>(*r.verdict->witness_size) : ojson(nullptr);
    j["verdict"] = std::move(v);
  } else {
    j["p"] = nullptr;
    j["verdict"] = nullptr;
  }
  j["half_transitive"] = r.half_transitive;
  j["transitive"] = r.transitive;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return detail::dump_compact(j);
}

std::string orbit_report_table(const OrbitReport& r) {
  std::ostringstream os;
  os << "label            " << r.label << "\n"
     << "field            " << field_name(r.field) << "\n"
     << "dim              " << r.dim << "\n"
     << "order            " << (r.order ? std::to_string(*r.order) : "-") << "\n"
     << "orbits           " << r.orbits.num_orbits() << " on " << r.orbits.total << " vectors\n"
     << "orbit sizes      " << format_sizes(r.orbits.sizes) << "\n";
  if (r.verdict) {
    os << "verdict (p=" << r.verdict->p << ")    " << to_string(r.verdict->status);
    if (r.verdict->witness) os << "  witness " << *r.verdict->witness << " (orbit size " << *r.verdict->witness_size << ")";
    os << "\n";
  }
  os << "half-transitive  " << (r.half_transitive ? "yes" : "no") << "\n"
     << "transitive       " << (r.transitive ? "yes" : "no") << "\n";
  if (r.elapsed_ms) os << "elapsed ms       " << *r.elapsed_ms << "\n";
  return os.str();
}

std::string subset_report_json(const SubsetOrbitReport& r, const std::string& label) {
  using detail::ojson;
  ojson j;
  j["label"] = label;
  j["p"] = r.p;
  j["order"] = detail::json_uint<ojson>(r.order);
  ojson levels = ojson::array();
  for (const auto& lv : r.levels) levels.push_back(detail::sizes_json<ojson>(lv));
  j["levels"] = std::move(levels);
  j["concealed"] = r.concealed;
  j["witness"] = r.witness ? detail::json_uint<ojson>(*r.witness) : ojson(nullptr);
  j["witness_size"] = r.witness_size ? detail::json_uint<ojson>(*r.witness_size) : ojson(nullptr);
  return detail::dump_compact(j);
}

std::string subset_report_table(const SubsetOrbitReport& r, const std::string& label) {
  std::ostringstream os;
  os << "label      " << label << "\n"
     << "order      " << r.order << "\n"
     << "p          " << r.p << "\n";
  for (std::size_t k = 0; k < r.levels.size(); ++k) os << "k=" << k << (k < 10 ? "        " : "       ") << format_sizes(r.levels[k]) << "\n";
  os << "concealed  " << (r.concealed ? "yes" : "no") << "\n";
  if (r.witness) os << "witness    mask " << *r.witness << " (orbit size " << *r.witness_size << ")\n";
  return os.str();
}

}  // namespace pexc
