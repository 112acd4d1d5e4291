// pexc: orbit and p-exceptionality checks for finite linear groups.
//
// Exit codes: 0 success, 1 a verified profile did not match, 2 usage or data error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pexc/catalog.hpp"
#include "pexc/constructions.hpp"
#include "pexc/errors.hpp"
#include "pexc/io.hpp"
#include "pexc/jordan.hpp"

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t max_vectors = std::uint64_t{1} << 22;
  std::uint64_t max_elements = 1000000;
  std::string format = "json";
  std::string out;
  std::string data_dir;
  bool timing = false;
  unsigned threads = 0;

  pexc::Limits limits() const { return {max_vectors, max_elements, seed}; }
  pexc::Catalog catalog() const {
    return pexc::Catalog::load(data_dir.empty() ? pexc::Catalog::default_data_dir() : std::filesystem::path(data_dir));
  }
};

struct GroupSource {
  std::string file, entry, recipe;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw pexc::ParseError("cannot write " + g.out);
  f << text;
}

pexc::MatGroup load_group(const Globals& g, const GroupSource& s) {
  const int given = !s.file.empty() + !s.entry.empty() + !s.recipe.empty();
  if (given != 1) throw pexc::InvalidArgument("give exactly one of --group, --entry, --recipe");
  if (!s.file.empty()) return pexc::load_group_file(s.file);
  const auto cat = g.catalog();
  if (!s.entry.empty()) return cat.build(s.entry, g.limits());
  return cat.build_recipe(s.recipe, g.limits());
}

void add_group_options(CLI::App* cmd, GroupSource& s) {
  cmd->add_option("--group", s.file, "Group file (JSON)");
  cmd->add_option("--entry", s.entry, "Catalog entry name");
  cmd->add_option("--recipe", s.recipe, "Construction recipe as a JSON object, e.g. {\"kind\":\"c4_pair\",\"q\":4}");
}

std::string jordan_json(const pexc::JordanType& j, std::size_t a, std::size_t b, std::uint32_t p) {
  std::ostringstream os;
  os << "{\n  \"a\": " << a << ",\n  \"b\": " << b << ",\n  \"p\": " << p << ",\n  \"blocks\": [";
  for (std::size_t i = 0; i < j.blocks.size(); ++i) os << (i ? ", " : "") << j.blocks[i];
  os << "],\n  \"dim\": " << j.dim() << "\n}\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pexc: orbits of finite linear groups and p-exceptionality checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--max-vectors", g.max_vectors, "Cap on the number of vectors q^d")->capture_default_str();
  app.add_option("--max-elements", g.max_elements, "Cap on enumerated group elements")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file");
  app.add_option("--data-dir", g.data_dir, "Data directory holding catalog/ and perm/");
  app.add_flag("--timing", g.timing, "Include elapsed_ms in reports");
  app.add_option("--threads", g.threads, "Worker threads for catalog verify --all (0 = auto)");

  // catalog
  auto* cat = app.add_subcommand("catalog", "List or verify catalog entries");
  cat->require_subcommand(1);
  cat->fallthrough();
  cat->add_subcommand("list", "List entries");
  auto* verify = cat->add_subcommand("verify", "Verify entries against their expected orbit profiles");
  std::vector<std::string> names;
  bool all = false;
  auto* name_opt = verify->add_option("--name", names, "Entry name (repeatable)");
  auto* all_opt = verify->add_flag("--all", all, "Verify every entry");
  name_opt->excludes(all_opt);
  verify->require_option(1);

  GroupSource orbits_src, pexc_src, half_src;
  std::optional<std::uint32_t> orbits_p;
  std::uint32_t pexc_p = 0;
  auto* orbits = app.add_subcommand("orbits", "Orbit partition of a group on all vectors");
  add_group_options(orbits, orbits_src);
  orbits->add_option("--p", orbits_p, "Also report the p-exceptionality verdict");
  auto* pexc = app.add_subcommand("pexc", "p-exceptionality verdict");
  add_group_options(pexc, pexc_src);
  pexc->add_option("--p", pexc_p, "The prime (default: the field characteristic)");
  auto* half = app.add_subcommand("half", "Half-transitivity and transitivity on nonzero vectors");
  add_group_options(half, half_src);

  std::string perm_file;
  std::uint32_t conc_p = 0;
  std::uint64_t max_subsets = std::uint64_t{1} << 24;
  auto* concealed = app.add_subcommand("concealed", "Orbits on subsets and the p-concealed predicate");
  concealed->add_option("--perm", perm_file, "Permutation file, or A<n> / S<n>")->required();
  concealed->add_option("--p", conc_p, "The prime")->required();
  concealed->add_option("--max-subsets", max_subsets, "Cap on subsets per pass")->capture_default_str();

  std::size_t ja = 0, jb = 0;
  std::uint32_t jp = 0;
  auto* jordan = app.add_subcommand("jordan", "Jordan type of J_a (x) J_b in characteristic p");
  jordan->add_option("--a", ja)->required();
  jordan->add_option("--b", jb)->required();
  jordan->add_option("--p", jp)->required();

  std::uint64_t bn = 0, bk = 0, bp = 0;
  auto* binom = app.add_subcommand("binom", "p-adic valuation of C(n,k)");
  binom->add_option("--n", bn)->required();
  binom->add_option("--k", bk)->required();
  binom->add_option("--p", bp)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool table = g.format == "table";
  try {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count(); };

    if (cat->parsed()) {
      const auto c = g.catalog();
      if (cat->got_subcommand("list")) {
        emit(g, table ? pexc::catalog_list_table(c) : pexc::catalog_list_json(c));
        return 0;
      }
      std::vector<pexc::VerifyReport> reports;
      if (all) {
        reports = c.verify_all(g.limits(), g.timing, g.threads);
      } else {
        for (const auto& n : names) reports.push_back(c.verify(n, g.limits(), g.timing));
      }
      emit(g, table ? pexc::verify_report_table(reports) : pexc::verify_report_json(reports));
      for (const auto& r : reports)
        if (!r.pass()) {
          std::cerr << "MismatchedProfile: " << r.name << "\n";
          return 1;
        }
      return 0;
    }

    if (orbits->parsed() || pexc->parsed() || half->parsed()) {
      const GroupSource& src = orbits->parsed() ? orbits_src : pexc->parsed() ? pexc_src : half_src;
      const auto grp = load_group(g, src);
      std::optional<std::uint32_t> p;
      if (orbits->parsed()) p = orbits_p;
      if (pexc->parsed()) p = pexc_p ? pexc_p : grp.field().characteristic();
      auto rep = pexc::make_orbit_report(grp, p, g.limits(), half->parsed());
      if (g.timing) rep.elapsed_ms = elapsed();
      emit(g, table ? pexc::orbit_report_table(rep) : pexc::orbit_report_json(rep));
      return 0;
    }

    if (concealed->parsed()) {
      std::optional<pexc::PermGroup> h;
      if (perm_file.size() >= 2 && (perm_file[0] == 'A' || perm_file[0] == 'S') &&
          perm_file.find_first_not_of("0123456789", 1) == std::string::npos) {
        const std::size_t n = std::stoul(perm_file.substr(1));
        h = perm_file[0] == 'A' ? pexc::alternating_group(n) : pexc::symmetric_group(n);
      } else {
        h = pexc::load_perm_file(perm_file).group;
      }
      const auto rep = pexc::subset_orbits(*h, conc_p, max_subsets);
      emit(g, table ? pexc::subset_report_table(rep, h->label()) : pexc::subset_report_json(rep, h->label()));
      return 0;
    }

    if (jordan->parsed()) {
      const auto j = pexc::jordan_tensor(ja, jb, jp);
      if (table) {
        std::ostringstream os;
        for (std::size_t i = 0; i < j.blocks.size(); ++i) os << (i ? " " : "") << "J" << j.blocks[i];
        emit(g, os.str() + "\n");
      } else {
        emit(g, jordan_json(j, ja, jb, jp));
      }
      return 0;
    }

    if (binom->parsed()) {
      if (bk > bn) throw pexc::InvalidArgument("need 0 <= k <= n");
      if (!pexc::is_prime(bp)) throw pexc::InvalidArgument("p must be prime");
      const unsigned v = pexc::binom_p_valuation(bn, bk, bp);
      if (table) {
        emit(g, "v_" + std::to_string(bp) + "(C(" + std::to_string(bn) + "," + std::to_string(bk) + ")) = " +
                    std::to_string(v) + "\n");
      } else {
        emit(g, "{\n  \"n\": " + std::to_string(bn) + ",\n  \"k\": " + std::to_string(bk) + ",\n  \"p\": " +
                    std::to_string(bp) + ",\n  \"valuation\": " + std::to_string(v) + "\n}\n");
      }
      return 0;
    }
  } catch (const pexc::SpaceTooLarge& e) {
    std::cerr << "SpaceTooLarge: " << e.what() << " (raise --max-vectors)\n";
    return 2;
  } catch (const pexc::GroupTooLarge& e) {
    std::cerr << "GroupTooLarge: " << e.what() << " (raise --max-elements)\n";
    return 2;
  } catch (const pexc::UnknownEntry& e) {
    std::cerr << "UnknownEntry: " << e.what() << "\n";
    return 2;
  } catch (const pexc::ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const pexc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
