#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "vinfer/af_io.hpp"
#include "vinfer/engine.hpp"
#include "vinfer/report.hpp"

using namespace vinfer;
using fixtures::coffee_scenario;

namespace {

ArgumentationFramework coffee_afv() {
  Scenario sc = coffee_scenario();
  std::vector<Observation> history;
  for (const auto& step : simulate(sc).steps) history.push_back(step.observation);
  return build_afv(build_arguments(sc.rules, history));
}

constexpr const char* kCoffeeApx =
    "arg(opp_p_cup_intact_2).\n"
    "arg(sup_p_cup_intact_1).\n"
    "arg(sup_p_have_coffee_1).\n"
    "att(opp_p_cup_intact_2,sup_p_cup_intact_1).\n"
    "att(sup_p_cup_intact_1,sup_p_have_coffee_1).\n"
    "att(sup_p_have_coffee_1,sup_p_cup_intact_1).\n";

}  // namespace

TEST_CASE("format names map to formats") {
  CHECK(af_format_from_name("apx") == AfFormat::Apx);
  CHECK(af_format_from_name("tgf") == AfFormat::Tgf);
  CHECK(af_format_from_name("dot") == AfFormat::Dot);
  CHECK_FALSE(af_format_from_name("yaml").has_value());
}

TEST_CASE("the coffee framework exports to canonical apx") {
  CHECK(export_af(coffee_afv(), AfFormat::Apx) == kCoffeeApx);
}

TEST_CASE("an empty framework exports to a bare tgf separator") {
  CHECK(export_af(ArgumentationFramework{}, AfFormat::Tgf) == "#\n");
  CHECK(export_af(ArgumentationFramework{}, AfFormat::Apx) == "");
}

TEST_CASE("tgf export lists nodes, separator, edges") {
  CHECK(export_af(coffee_afv(), AfFormat::Tgf) ==
        "opp_p_cup_intact_2\n"
        "sup_p_cup_intact_1\n"
        "sup_p_have_coffee_1\n"
        "#\n"
        "opp_p_cup_intact_2 sup_p_cup_intact_1\n"
        "sup_p_cup_intact_1 sup_p_have_coffee_1\n"
        "sup_p_have_coffee_1 sup_p_cup_intact_1\n");
}

TEST_CASE("dot export draws one edge per attack and dashes blockers") {
  auto af = coffee_afv();
  std::string dot = export_af(af, AfFormat::Dot, {"opp_p_cup_intact_2"});
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find("->", pos)) != std::string::npos) {
    ++edges;
    pos += 2;
  }
  CHECK(edges == af.attacks.size());
  CHECK(dot.find("\"opp_p_cup_intact_2\" [style=dashed];") != std::string::npos);
  CHECK(dot.find("\"sup_p_cup_intact_1\" [style=dashed]") == std::string::npos);
}

TEST_CASE("apx parses its own output") {
  auto af = coffee_afv();
  CHECK(parse_apx(export_af(af, AfFormat::Apx)) == af);
}

TEST_CASE("tgf parses its own output") {
  auto af = coffee_afv();
  CHECK(parse_tgf(export_af(af, AfFormat::Tgf)) == af);
}

TEST_CASE("round-trip through both formats on random frameworks") {
  std::mt19937 rng(6901);
  for (int round = 0; round < 200; ++round) {
    auto af = testgen::random_framework(rng);
    CHECK(parse_apx(export_af(af, AfFormat::Apx)) == af);
    CHECK(parse_tgf(export_af(af, AfFormat::Tgf)) == af);
  }
}

TEST_CASE("apx accepts comments and flags malformed lines with their number") {
  auto af = parse_apx("% header\narg(a).\n\n% more\narg(b).\natt(a,b).\n");
  CHECK(af.arguments == std::set<std::string>{"a", "b"});
  CHECK(af.attacks == std::set<Attack>{{"a", "b"}});

  CHECK_THROWS_WITH_AS(parse_apx("arg(a).\nbogus\n"), doctest::Contains("line 2"),
                       FrameworkError);
  CHECK_THROWS_WITH_AS(parse_apx("arg(a).\narg(a).\n"), doctest::Contains("duplicate"),
                       FrameworkError);
  CHECK_THROWS_WITH_AS(parse_apx("arg(a).\natt(a,ghost).\n"), doctest::Contains("ghost"),
                       FrameworkError);
  CHECK_THROWS_AS(parse_apx("att(a,b,c).\n"), FrameworkError);
}

TEST_CASE("tgf rejects duplicate nodes, unknown endpoints and stray separators") {
  CHECK_THROWS_WITH_AS(parse_tgf("a\na\n#\n"), doctest::Contains("duplicate"),
                       FrameworkError);
  CHECK_THROWS_WITH_AS(parse_tgf("a\n#\na ghost\n"), doctest::Contains("ghost"),
                       FrameworkError);
  CHECK_THROWS_WITH_AS(parse_tgf("a\n#\n#\n"), doctest::Contains("second"),
                       FrameworkError);
  CHECK_THROWS_AS(parse_tgf("a\nb\n#\na b c\n"), FrameworkError);
  // nodes without any edge section parse fine
  CHECK(parse_tgf("a\nb\n").arguments.size() == 2);
}

TEST_CASE("the structured report ends with the narrative conclusion") {
  Trace trace = simulate(coffee_scenario());
  std::string doc = render_report(trace, ReportMode::Structured);
  CHECK(doc.find("\"final\"") != std::string::npos);
  CHECK(doc.find("\"believed\": [\n      \"have_coffee\"\n    ]") != std::string::npos);
  CHECK(doc.find("\"believed_not\": [\n      \"cup_intact\"\n    ]") != std::string::npos);
  CHECK(doc.find("\"steps\"") != std::string::npos);
}

TEST_CASE("an empty trace renders an empty steps list") {
  std::string doc = render_report(Trace{}, ReportMode::Structured);
  CHECK(doc.find("\"steps\": []") != std::string::npos);
}

TEST_CASE("human report grows by one block per step") {
  Scenario sc = coffee_scenario();
  Trace two = simulate(sc);
  sc.script.pop_back();
  Trace one = simulate(sc);

  auto count_blocks = [](const std::string& text) {
    std::size_t n = 0, pos = 0;
    while ((pos = text.find("obs ", pos)) != std::string::npos) {
      ++n;
      pos += 4;
    }
    return n;
  };
  CHECK(count_blocks(render_report(one, ReportMode::Human)) == 1);
  CHECK(count_blocks(render_report(two, ReportMode::Human)) == 2);
}

TEST_CASE("verdict rendering is deterministic and sorted") {
  ValueVerdicts v;
  v.believed = {Literal("q"), Literal("p", false)};
  std::string text = render_verdicts(v);
  CHECK(text.find("believed:     p, ~q") == std::string::npos);
  CHECK(text.find("~p, q") != std::string::npos);
  CHECK(render_verdicts(v) == render_verdicts(v));
}
