#include "json.hpp"

#include "doctest.h"
#include "pexc/constructions.hpp"
#include "pexc/errors.hpp"
#include "pexc/io.hpp"
#include "support.hpp"

using namespace pexc;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_group_file(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("group file round trip") {
  const std::vector<MatGroup> groups{
      general_linear(3, Field::make(2)),
      special_linear(2, Field::of_order(9)),
      torus_group(8, true),
      c4_pair_group(4),
      extraspecial({3, 1, ExtraspecialVariant::OddExponentR, 4}).group,
  };
  for (const auto& g : groups) {
    CAPTURE(g.label());
    const std::string text = write_group_file(g);
    const MatGroup h = parse_group_file(text);
    CHECK(write_group_file(h) == text);
    CHECK(h.label() == g.label());
    CHECK(h.field() == g.field());
    REQUIRE(h.generators().size() == g.generators().size());
    for (std::size_t i = 0; i < g.generators().size(); ++i) CHECK(h.generators()[i] == g.generators()[i]);
    CHECK(h.orbits().sizes == g.orbits().sizes);
  }
}

TEST_CASE("group file defaults") {
  const MatGroup g = parse_group_file(R"({"dim": 2, "field": {"p": 3},
    "generators": [[[1, 1], [0, 1]], [[0, 1], [2, 0]]]})");
  CHECK(g.order() == 24);
  CHECK(g.label().empty());
  CHECK(g.is_linear());
  // Keys come out sorted and small arrays stay on one line.
  const std::string text = write_group_file(g);
  CHECK(text.find("\"dim\"") < text.find("\"field\""));
  CHECK(text.find("\"generators\"") < text.find("\"label\""));
  CHECK(text.find("[1,1]") != std::string::npos);
}

TEST_CASE("group file errors") {
  const std::string bad_syntax = "{\n  \"dim\": 2,\n  \"field\": {\"p\": 3}\n  \"generators\": []\n}";
  const auto msg = error_of(bad_syntax);
  CHECK(msg.find("line 4") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);

  CHECK(error_of(R"({"field": {"p": 3}, "generators": []})").find("dim") != std::string::npos);
  CHECK(error_of(R"({"dim": 1, "field": {"p": 3}, "generators": [[[5]]]})").find("not an element") != std::string::npos);
  CHECK(error_of(R"({"dim": 2, "field": {"p": 3}, "generators": [[[1, 0]]]})").find("generator 0") != std::string::npos);
  CHECK(error_of(R"({"dim": 1, "field": {"p": 3}, "generators": [[[-1]]]})") != "");
  CHECK_THROWS_AS(parse_group_file(R"({"dim": 1, "field": {"p": 4}, "generators": [[[1]]]})"), Error);

  try {
    parse_group_file(R"({"dim": 2, "field": {"p": 3}, "generators": [[[1, 0], [0, 1]], [[1, 1], [1, 1]]]})");
    FAIL("singular generator accepted");
  } catch (const SingularMatrix& e) {
    CHECK(std::string(e.what()).find("generator 1") != std::string::npos);
  }
  CHECK_THROWS_AS(load_group_file(support::data_dir() / "no_such_file.json"), ParseError);
}

TEST_CASE("permutation files") {
  const auto m23 = load_perm_file(support::data_dir() / "perm" / "M23.json");
  CHECK(m23.group.degree() == 23);
  CHECK(m23.order == 10200960);
  CHECK_FALSE(m23.provenance.empty());

  const auto cyc = parse_perm_file(R"({"label": "C5", "degree": 5, "base": 1,
    "generators": [[[1, 2, 3, 4, 5]]], "order": 5})");
  CHECK(cyc.group.generators()[0] == Perm{1, 2, 3, 4, 0});
  const auto img = parse_perm_file(R"({"label": "C2", "degree": 3, "base": 0,
    "generators": [[1, 0, 2]], "order": 2})");
  CHECK(img.group.generators()[0] == Perm{1, 0, 2});

  CHECK_THROWS_AS(parse_perm_file(R"({"label": "C5", "degree": 5, "base": 1,
    "generators": [[[1, 2, 3, 4, 5]]], "order": 10})"),
                  ParseError);
  CHECK_THROWS_AS(parse_perm_file(R"({"label": "x", "degree": 3, "base": 0,
    "generators": [[0, 0, 1]], "order": 1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_perm_file(R"({"label": "x", "degree": 3, "base": 1,
    "generators": [[[0, 1]]], "order": 2})"),
                  ParseError);
}

TEST_CASE("orbit reports") {
  const MatGroup g = general_linear(2, Field::make(3));
  Limits lim;
  const auto r = make_orbit_report(g, 3u, lim);
  const auto j = nlohmann::json::parse(orbit_report_json(r));
  CHECK(j["order"] == 48);
  CHECK(j["total"] == 9);
  CHECK(j["num_orbits"] == 2);
  CHECK(j["orbit_sizes"]["8"] == 1);
  CHECK(j["verdict"]["status"] == "P_EXCEPTIONAL");
  CHECK(j["verdict"]["witness"].is_null());
  CHECK(j["half_transitive"] == true);
  CHECK_FALSE(j.contains("elapsed_ms"));

  const auto bad = make_orbit_report(deleted_permutation_module(alternating_group(5), Field::make(2)), 2u, lim);
  const auto jb = nlohmann::json::parse(orbit_report_json(bad));
  CHECK(jb["verdict"]["status"] == "BAD_ORBIT");
  CHECK(jb["verdict"]["witness_size"] == 10);

  const auto skip = make_orbit_report(g, std::nullopt, lim, true);
  CHECK_FALSE(skip.order);
  CHECK(nlohmann::json::parse(orbit_report_json(skip))["order"].is_null());
  CHECK(orbit_report_table(r).find("orbit sizes") != std::string::npos);

  CHECK(format_sizes({{1, 1}, {40, 2}}) == "{1, 40^2}");
  CHECK(format_sizes({}) == "{}");
}
