#include "doctest.h"
#include "lvb/io.hpp"
#include "support.hpp"

using namespace lvb;

TEST_CASE("diagram text round trip") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10000; ++t) {
    const auto x = test::random_diagram(rng, 12, -99, 99);
    CHECK(parse_diagram(render_diagram(x)) == x);
  }
}

TEST_CASE("diagram text stops at a blank line") {
  CHECK(parse_diagram("1 2\n3\n\n9 9\n") == WeightDiagram({{1, 2}, {3}}));
  CHECK(parse_diagram("-4\r\n5 6") == WeightDiagram({{-4}, {5, 6}}));
}

TEST_CASE("diagram text errors carry positions") {
  auto position = [](std::string_view text) {
    try {
      parse_diagram(text);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(position("1 2\n3  4\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(position("1 x\n") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(position(" 1\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(position("1 \n") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(position("99999999999999999999\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_THROWS_AS(parse_diagram(""), ParseError);
  CHECK_THROWS_AS(parse_diagram("\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("1.5\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("+1\n"), ParseError);
}

TEST_CASE("several diagrams") {
  const auto xs = parse_diagrams("# first\n1 2\n3\n\n\n4\n");
  REQUIRE(xs.size() == 2);
  CHECK(xs[1] == WeightDiagram({{4}}));
}

TEST_CASE("pair JSON") {
  const auto pair =
      parse_pair_json(R"({"orbit": [3,3,3,2,2], "bundle": {"3": [5,0,-3], "2": [4,-6]}})");
  CHECK(pair == vogan_pair());
  CHECK(parse_pair_json(to_json(pair).dump()) == pair);
  CHECK_THROWS_AS(parse_pair_json(R"({"orbit": [1], "bundle": {"1": [0]}, "x": 1})"), ParseError);
  CHECK_THROWS_AS(parse_pair_json(R"({"orbit": [1]})"), ParseError);
  CHECK_THROWS_AS(parse_pair_json(R"({"orbit": [1], "bundle": {"one": [0]}})"), ParseError);
  CHECK_THROWS_AS(parse_pair_json(R"({"orbit": [1], "bundle": {"1": [0.5]}})"), ParseError);
  CHECK_THROWS_AS(parse_pair_json("{"), ParseError);
  CHECK_THROWS_WITH_AS(parse_pair_json(R"({"orbit": [2,2], "bundle": {"2": [1]}})"),
                       "bundle tuple length must match part multiplicity", DomainError);
}

TEST_CASE("weight JSON") {
  const auto w = parse_weight_json(R"({"weight": [2, 0, 0, -1]})");
  CHECK(w.entries == std::vector<Entry>{2, 0, 0, -1});
  CHECK(parse_weight_json(to_json(w).dump()) == w);
  CHECK_THROWS_AS(parse_weight_json(R"({"weight": [0, 1]})"), DomainError);
  CHECK_THROWS_AS(parse_weight_json(R"({"weights": [0]})"), ParseError);
}

TEST_CASE("trace rendering follows the step listing") {
  const auto t = distinguish(test::step_x(1));
  const auto steps = group_steps(t);
  REQUIRE(steps.size() == 8);
  CHECK(describe(steps[0]) == "Perform C with r = 1, i = 3, and i' = 4.");
  CHECK(describe(steps[2]) == "Perform A four times with s = 1, r = 2, on rows 1 and 2.");
  CHECK(describe(steps[3]) == "Perform A^-1 five times with s = 1, r = 2, on rows 4 and 5.");
  CHECK(describe(steps[6]) == "Perform B with r = 3 on rows 1 and 2.");
  CHECK(describe(steps[7]) == "Perform A with s = 2, r = 3, on row 2.");
  const auto text = render_trace(t);
  CHECK(text.find("Step 9. ") != std::string::npos);
  CHECK(text.find("tau = (6,6,4,4,3,0,0,0,-3,-3,-3,-7,-7)") != std::string::npos);
}

TEST_CASE("trace JSON") {
  const auto t = distinguish(test::step_x(1));
  const auto j = to_json(t);
  CHECK(j["final"] == to_json(test::step_x(9)));
  CHECK(j["steps"][0]["move"] == "C");
  CHECK(j["steps"][0]["rows"] == nlohmann::json::array({3, 4}));
  CHECK(j["steps"].back()["EX"] == nlohmann::json(test::step_ex(9)));
  CHECK(j["weight"].size() == 13);
}

TEST_CASE("golden corpus parses") {
  const auto& steps = golden_steps();
  REQUIRE(steps.size() == 9);
  CHECK_FALSE(steps[0].move);
  CHECK(steps[3].move->count == 4);
  CHECK(steps[7].move->kind == MoveKind::B);
  CHECK_THROWS_AS(parse_golden("X\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_golden("step 1\nmove Q\n"), ParseError);
}

TEST_CASE("golden check suite") {
  for (const auto& r : run_golden_checks()) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("golden check suite catches mutations") {
  CheckHooks swapless;
  swapless.dispatch.first_column_swap = false;
  for (const auto& r : run_golden_checks(swapless)) {
    if (r.name == "dispatch step 1") CHECK_FALSE(r.passed);
    if (r.name.rfind("etransform", 0) == 0) CHECK(r.passed);
  }
  CheckHooks perturbed;
  perturbed.transform = [](const WeightDiagram& x) {
    auto rows = e_transform(x).rows();
    rows[0][0] += 1;
    return rows;
  };
  const auto results = run_golden_checks(perturbed);
  CHECK(results.front().name == "etransform step 1");
  CHECK_FALSE(results.front().passed);
}
