#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ncforge/verify.hpp"
#include "support.hpp"

using namespace testing;

namespace {

CheckConfig with_grid(std::vector<GridPoint> g) {
  CheckConfig cfg;
  cfg.grid = std::move(g);
  return cfg;
}

GridPoint pt(std::initializer_list<std::int64_t> xs) {
  GridPoint p;
  for (auto x : xs) p.push_back({x, 1});
  return p;
}

}  // namespace

TEST_CASE("registry") {
  CHECK(registered_checks().size() >= 20);
  CHECK(check_info("d3-semisimple").axes == std::vector<std::string>{"alpha1", "alpha2"});
  CHECK_THROWS_AS(run_check("nonexistent", CheckConfig{}), CheckError);
  CHECK_THROWS_AS(check_info("nonexistent"), CheckError);
}

TEST_CASE("e3-basis and t-hilbert") {
  auto r = run_check("e3-basis", CheckConfig{});
  CHECK(r.status == Status::Pass);
  auto words = r.points.at(0).details["normal_words"].get<std::vector<std::string>>();
  CHECK(std::set<std::string>(words.begin(), words.end()) ==
        std::set<std::string>{"1", "a", "b", "c", "ab", "ac", "ba", "bc", "aba", "abc", "bac", "abac"});
  auto h = run_check("t-hilbert", CheckConfig{});
  CHECK(h.status == Status::Pass);
  CHECK(h.points.at(0).details["hilbert"].get<std::vector<std::size_t>>() ==
        std::vector<std::size_t>{1, 4, 8, 11, 12, 12, 11, 8, 4, 1});
}

TEST_CASE("semisimplicity scan on a box") {
  CheckConfig cfg;
  cfg.grid = parse_grid("-2..3x-2..3", 2, cfg);
  REQUIRE(cfg.grid->size() == 36);
  auto r = scan("d3-semisimple", cfg);
  CHECK(r.status == Status::Pass);
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    auto a1 = (*cfg.grid)[i][0].num, a2 = (*cfg.grid)[i][1].num;
    CHECK(r.points[i].details["semisimple"].get<bool>() == ((3 * a1 - a2) * (a1 + a2) != 0));
  }
}

TEST_CASE("flatness at random points") {
  CheckConfig cfg;
  cfg.grid = parse_grid("random:25", 2, cfg);
  auto r = scan("d3-flatness", cfg);
  CHECK(r.status == Status::Pass);
  for (const auto& p : r.points) CHECK(p.details["dimension"] == 12);
}

TEST_CASE("T semisimplicity scan") {
  auto cfg = with_grid({pt({1, 1, 1}), pt({1, 1, 0}), pt({1, 1, -8}), pt({2, -2, 8}), pt({1, 3, 1})});
  auto r = scan("t-semisimple", cfg);
  CHECK(r.status == Status::Pass);
  // alpha3 + (a1+a2) beta^2: (1,1,-8) gives -8 + 2*4 = 0
  CHECK(r.points[2].details["semisimple"] == false);
  CHECK(r.points[0].details["semisimple"] == true);
  CHECK(r.points[1].details["semisimple"] == false);
}

TEST_CASE("reports are deterministic and sub-grids compose") {
  auto full = with_grid({pt({1, 1}), pt({2, -1}), pt({0, 3})});
  auto a = run_check("pi-hall", full).to_json().dump();
  auto b = run_check("pi-hall", full).to_json().dump();
  CHECK(a == b);
  auto left = run_check("pi-hall", with_grid({pt({1, 1})}));
  auto right = run_check("pi-hall", with_grid({pt({2, -1}), pt({0, 3})}));
  auto whole = run_check("pi-hall", full);
  Json joined = Json::array();
  for (const auto& r : {left, right}) {
    auto j = r.to_json();
    for (const auto& p : j["points"]) joined.push_back(p);
  }
  CHECK(joined == whole.to_json()["points"]);
}

TEST_CASE("skips carry reasons") {
  auto r = run_check("t-semisimple", with_grid({pt({1, 1, 1})}));
  REQUIRE(r.points.size() == 1);
  CheckConfig qq;
  qq.field = FieldSpec::rationals();
  qq.grid = std::vector<GridPoint>{pt({1, 1, 2})};
  auto s = run_check("t-semisimple", qq);
  CHECK(s.status == Status::Skipped);
  CHECK_FALSE(s.points[0].reason.empty());
  auto j = s.to_json();
  CHECK(j["skipped"].size() == 1);
  CHECK(j["config"]["field"] == "qq");
}

TEST_CASE("overflow is reported as an error") {
  CheckConfig cfg;
  cfg.max_rules = 3;
  auto r = run_check("e3-basis", cfg);
  CHECK(r.status == Status::Error);
  CHECK_FALSE(r.points[0].reason.empty());
}

TEST_CASE("pi_test") {
  auto d3 = build_table(complete(presentation(Model::D3, params(kFp, 1, 1))));
  CheckConfig cfg;
  auto r = pi_test(d3, cfg, 42);
  CHECK(r.status == Status::Pass);
  REQUIRE(r.error_bound);
  CHECK(r.error_bound->trials == 50);
  CHECK(r.error_bound->sample_size == 10009);
  CHECK(r.error_bound->degree == 5);
  CHECK(r.error_bound->log10() < -165);
  auto free5 = truncated_free_table(kFp, Alphabet{"a", "b", "c"}, 5);
  cfg.trials = 3;
  CHECK(pi_test(free5, cfg, 1).status == Status::Fail);
}

TEST_CASE("error bounds are exact") {
  ErrorBound b{5, 7, 2};
  CHECK(b.exact() == "25/49");
}

TEST_CASE("grid parsing") {
  CheckConfig cfg;
  CHECK_FALSE(parse_grid("default", 2, cfg).has_value());
  auto g = parse_grid("1,2; 3,-1/2", 2, cfg);
  REQUIRE(g);
  CHECK(g->size() == 2);
  CHECK((*g)[1][1] == Ratio{-1, 2});
  auto h = parse_grid("{0,1}x0..2x{5}", 3, cfg);
  CHECK(h->size() == 6);
  CHECK(parse_grid("random:4", 3, cfg)->size() == 4);
  CHECK(*parse_grid("random:4", 3, cfg) == *parse_grid("random:4", 3, cfg));
  CHECK_THROWS_AS(parse_grid("1,2,3", 2, cfg), CheckError);
  CHECK_THROWS_AS(parse_grid("1/0,1", 2, cfg), CheckError);
  CHECK_THROWS_AS(parse_grid("3..1x0", 2, cfg), CheckError);
  CHECK_THROWS_AS(parse_grid("", 2, cfg), CheckError);
  CHECK_THROWS_AS(parse_grid("a,b", 2, cfg), CheckError);
}

TEST_CASE("default grid contains the named degenerate loci") {
  CheckConfig cfg;
  auto d3 = default_points("d3-semisimple", cfg);
  CHECK(d3.size() == 45);
  auto t = default_points("t-semisimple", cfg);
  bool cube_locus = false, beta_locus = false;
  for (const auto& p : t) {
    auto b = 3 * p[0].num - p[1].num;
    if (b != 0 && p[2].num == -b * b * b) cube_locus = true;
    if (b != 0 && p[2].num == -(p[0].num + p[1].num) * b * b && p[0].num + p[1].num != 0) beta_locus = true;
  }
  CHECK(cube_locus);
  CHECK(beta_locus);
}
