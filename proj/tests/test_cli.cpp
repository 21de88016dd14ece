#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gradeforge/commands.hpp"
#include "gradeforge/error.hpp"
#include "oracles.hpp"

using namespace gradeforge;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::string& args, const std::string& env = "") {
  const auto out = std::filesystem::temp_directory_path() / "gradeforge_cli_test.out";
  const std::string cmd = env + " " + quote(GRADEFORGE_CLI) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::SchemaViolation;
}

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("expand examples") {
    CHECK(strings(cmd_expand(builtin_descriptor("central-binomial"), 5)["coeffs"]) ==
          std::vector<std::string>{"1", "2", "6", "20", "70"});
    CHECK(strings(cmd_expand(builtin_descriptor("euler"), 4)["coeffs"]) ==
          std::vector<std::string>{"1", "-1", "2", "-6"});
    const auto d = parse_descriptor(json::parse(R"({"kind":"coeffs","coeffs":["1","1"]})"));
    try {
      cmd_expand(d, 5);
      FAIL("expanded past the truncation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TruncationExceeded);
      CHECK(std::string(e.what()).find("requested terms exceed truncation") != std::string::npos);
    }
  }

  TEST_CASE("builtins agree with independent oracles") {
    CHECK(expand(builtin_descriptor("catalan"), 40) == oracle::series(oracle::catalan_convolution(40)));
    CHECK(expand(builtin_descriptor("central-binomial"), 40) == oracle::series(oracle::central_binomials(40)));
    std::vector<long> tm;
    for (int s : oracle::thue_morse_signs(64)) tm.push_back(s);
    std::vector<Rational> tmr(tm.begin(), tm.end());
    CHECK(expand(builtin_descriptor("thue-morse-signs"), 64) == TruncSeries(tmr));
    const auto log1p = expand(builtin_descriptor("log1p"), 10);
    for (long n = 1; n < 10; ++n) CHECK(log1p[n] == Rational(n % 2 ? 1 : -1) / Rational(n));
    // Every representation of a builtin gives the same terms.
    for (const auto& name : builtin_names()) {
      const SeriesDescriptor d = builtin_descriptor(name);
      const TruncSeries f = expand(d, 30);
      if (d.annihilator) CHECK(expand_branch(*d.annihilator, 30) == f);
      if (d.exppoly) CHECK(d.exppoly->expand(30) == f);
    }
  }

  TEST_CASE("hadamard examples") {
    const json e = cmd_hadamard(builtin_descriptor("euler"), builtin_descriptor("exp"), 6, false);
    CHECK(strings(e["product"]["coeffs"]) == std::vector<std::string>{"1", "-1", "1", "-1", "1", "-1"});

    const json sq = cmd_hadamard(builtin_descriptor("central-binomial"), builtin_descriptor("central-binomial"), 40, true);
    CHECK(sq["recurrence_matches_product"] == true);
    const SeriesDescriptor rec = parse_descriptor(sq["recurrence"]);
    const PRecurrence ratio = PRecurrence::make({UniPoly(std::vector<Rational>{-4, -16, -16}),
                                                 UniPoly(std::vector<Rational>{1, 2, 1})},
                                                0, {Rational(1)});
    CHECK(equivalent(*rec.recurrence, ratio, 100));

    for (const auto& name : builtin_names()) {
      const SeriesDescriptor d = builtin_descriptor(name);
      CHECK(cmd_hadamard(d, builtin_descriptor("geometric"), 20, false)["product"] == cmd_expand(d, 20));
    }
    CHECK(code_of([] {
            cmd_hadamard(builtin_descriptor("thue-morse-signs"), builtin_descriptor("exp"), 5, true);
          }) == ErrorCode::DegenerateInput);
  }

  TEST_CASE("module reports") {
    const Config cfg;
    CHECK(cmd_obstruct(builtin_descriptor("exp"), cfg.terms, cfg)["verdict"] == "infinite-grade-evidence");
    const json m = cmd_modp(builtin_descriptor("catalan"), 2, 1, 0, cfg, true);
    CHECK(m["automaton"]["status"] == "closed");
    CHECK(m["dot"].get<std::string>().starts_with("digraph"));
    const json e = cmd_euler(1, cfg);
    CHECK(e["value"].get<double>() == doctest::Approx(0.596347).epsilon(1e-6));
    CHECK(e["discrepancy"].get<double>() < 1e-8);
    CHECK(e.contains("error_estimate"));
    CHECK(e.contains("reference"));
    const json d = cmd_diagonal({builtin_descriptor("catalan"), builtin_descriptor("catalan")}, 6, cfg);
    CHECK(d["d"] == 2);
    CHECK(strings(d["diagonal"]["coeffs"]) == std::vector<std::string>{"1", "1", "4", "25", "196", "1764"});
    CHECK(code_of([&] { cmd_modp(builtin_descriptor("euler"), 2, 1, 0, cfg, false); }) ==
          ErrorCode::DegenerateInput);
  }

  TEST_CASE("expand output re-ingests to itself") {
    for (const auto& name : builtin_names()) {
      const json first = cmd_expand(builtin_descriptor(name), 25);
      const json second = cmd_expand(parse_descriptor(first), 25);
      CHECK(first == second);
      CHECK(cmd_expand(parse_descriptor(json::parse(first.dump())), 10) == cmd_expand(builtin_descriptor(name), 10));
    }
  }

  TEST_CASE("descriptor schemas") {
    const auto alg = parse_descriptor(json::parse(R"({"kind":"algebraic","P":[[0,2,"1"],[0,1,"-1"],[1,0,"1"]],"y0":"0"})"));
    CHECK(expand(alg, 6) == oracle::series({0, 1, 1, 2, 5, 14}));

    const auto hol = parse_descriptor(
        json::parse(R"({"kind":"holonomic","order":1,"coeffs":[["-2","-4"],["1","1"]],"n0":0,"initial":["1"]})"));
    CHECK(expand(hol, 5) == oracle::series({1, 2, 6, 20, 70}));
    const auto wrapped = parse_descriptor(
        json::parse(R"({"kind":"holonomic","order":1,"coeffs":[[["-2","-4"],["1","1"]]],"n0":0,"initial":["1"]})"));
    CHECK(expand(wrapped, 5) == oracle::series({1, 2, 6, 20, 70}));

    const auto rat = parse_descriptor(json::parse(R"({"kind":"rational-exppoly","terms":[{"pole":"2","poly":["1/2"]}]})"));
    CHECK(expand(rat, 3) == TruncSeries(std::vector<Rational>{Rational(1, 4), Rational(1, 8), Rational(1, 16)}));

    const auto b = parse_descriptor(json::parse(R"({"kind":"builtin","name":"exp"})"));
    CHECK(expand(b, 3)[2] == Rational(1, 2));

    auto field_error = [](const char* text) {
      try {
        parse_descriptor(json::parse(text));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SchemaViolation);
        return std::string(e.what());
      }
      FAIL("accepted " << text);
      return std::string();
    };
    CHECK(field_error(R"({"kind":"algebraic","P":[[0,2,"x"]]})").find("descriptor.P[0][2]") != std::string::npos);
    CHECK(field_error(R"({"kind":"holonomic","coeffs":[["1"],["1"]]})").find("descriptor.initial") !=
          std::string::npos);
    CHECK(field_error(R"({"kind":"coeffs","coeffs":["1"],"order":2})").find("descriptor.order") != std::string::npos);
    CHECK(field_error(R"({"kind":"nope"})").find("descriptor.kind") != std::string::npos);
    CHECK(field_error(R"({"kind":"builtin","name":"pi"})").find("unknown name") != std::string::npos);
    CHECK(field_error(R"([1,2])").find("descriptor") != std::string::npos);
  }

  TEST_CASE("descriptor sources") {
    const auto path = std::filesystem::temp_directory_path() / "gradeforge_desc.json";
    std::ofstream(path) << R"({"kind":"coeffs","coeffs":["3","1/2"]})";
    CHECK(expand(load_descriptor(path.string()), 2)[1] == Rational(1, 2));
    CHECK(expand(load_descriptor(R"({"kind":"builtin","name":"geometric"})"), 3) == oracle::series({1, 1, 1}));
    CHECK(load_descriptor("catalan").name == "catalan");
    CHECK(code_of([] { load_descriptor("{ not json"); }) == ErrorCode::ParseError);
  }

  TEST_CASE("configuration") {
    const Config c = config_from_json(json::parse(R"({"terms": 7, "zero_beta": 0.6})"));
    CHECK(c.terms == 7);
    CHECK(c.zero_beta == 0.6);
    CHECK(c.window == Config{}.window);
    CHECK(config_from_json(to_json(c)).terms == 7);
    CHECK(code_of([] { config_from_json(json::parse(R"({"bogus": 1})")); }) == ErrorCode::SchemaViolation);
    CHECK(code_of([] { config_from_json(json::parse(R"({"terms": "7"})")); }) == ErrorCode::SchemaViolation);
    CHECK(c.kernel_budgets(3).max_depth == 7);
    CHECK(c.obstruction().thresholds.zero_beta == 0.6);
  }

  TEST_CASE("binary: json and table render the same report") {
    const Run j = run("expand central-binomial --terms 5 --json");
    REQUIRE(j.code == 0);
    const json report = json::parse(j.out);
    CHECK(report == cmd_expand(builtin_descriptor("central-binomial"), 5));
    const Run t = run("expand central-binomial --terms 5 --table");
    CHECK(t.code == 0);
    CHECK(t.out == render_table(report));
    CHECK(t.out.find("1 2 6 20 70") != std::string::npos);

    for (const std::string args : {"obstruct exp", "euler --z 1", "modp catalan --p 2 --r 1", "diagonal catalan --order 6",
                                   "hadamard central-binomial central-binomial --emit-recurrence --terms 12"}) {
      CAPTURE(args);
      const Run a = run(args + " --json"), b = run(args);
      REQUIRE(a.code == 0);
      REQUIRE(b.code == 0);
      CHECK(b.out == render_table(json::parse(a.out)));
    }
  }

  TEST_CASE("binary: exit codes follow error families") {
    CHECK(run("expand euler --terms 4").code == 0);
    CHECK(run(R"(expand '{"kind":"coeffs","coeffs":["1","1"]}' --terms 5)").code == 3);
    CHECK(run(R"(expand '{"kind":"algebraic","P":[[0,2,"x"]]}')").code == 2);
    CHECK(run(R"(expand '{"kind":"algebraic"')").code == 2);
    CHECK(run("expand no-such-series").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("expand euler --terms banana").code == 2);
    CHECK(run("modp euler --p 2").code == 3);
    CHECK(run("modp catalan --p 4").code == 3);
    CHECK(run("euler --z -1").code == 3);
    CHECK(run("diagonal catalan catalan --order 40").code == 4);
    CHECK(run("obstruct exp --terms 10").code == 3);
    const Run out = run("expand euler --terms 4");
    CHECK(out.out.find("1 -1 2 -6") != std::string::npos);
    CHECK(run("--help").code == 0);
  }

  TEST_CASE("binary: configuration from the environment") {
    const Run show = run("--show-config --json");
    REQUIRE(show.code == 0);
    CHECK(json::parse(show.out) == to_json(Config{}));

    const auto path = std::filesystem::temp_directory_path() / "gradeforge_cfg.json";
    std::ofstream(path) << R"({"terms": 6, "max_modular_terms": 100})";
    const std::string env = "GRADEFORGE_CONFIG=" + quote(path.string());
    const Run e = run("expand catalan --json", env);
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["order"] == 6);
    CHECK(run("modp catalan --p 2", env).code == 4);
    std::ofstream(path) << R"({"unknown_key": 1})";
    CHECK(run("expand catalan", env).code == 2);
  }
}
