#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "fulcrum/classify.hpp"
#include "fulcrum/io.hpp"

using namespace fulcrum;

namespace {
  std::string const fk3_presentation = R"({
    "alphabet": [{"id": "x0", "sort": "module"},
                 {"id": "x1", "sort": "module"},
                 {"id": "x2", "sort": "module"}],
    "relations": ["x0 x0", "x1 x1", "x2 x2",
                  "x0 x1 + x2 x0 + x1 x2", "x1 x0 + x0 x2 + x2 x1"],
    "degree_cap": 8
  })";

  std::filesystem::path temp_path(std::string const& name) {
    return std::filesystem::temp_directory_path()
           / ("fulcrum_test_" + std::to_string(::getpid()) + "_" + name);
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream     f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  struct Ran {
    int         code;
    std::string out, err;
  };

  Ran run_config(cli::RunConfig const& c) {
    std::ostringstream out, err;
    int const          code = cli::run(c, out, err);
    return {code, out.str(), err.str()};
  }

  int run_main(int (*entry)(int, char const* const*),
               std::vector<char const*> args) {
    return entry(static_cast<int>(args.size()), args.data());
  }
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("presentation files") {
    ReductionSystem sys = parse_presentation(fk3_presentation);
    CHECK(sys.ring()->field == Field::f2());
    CHECK(sys.degree_cap() == 8);
    auto const rep = complete(sys);
    CHECK(rep.status == CompletionStatus::confluent);
    CHECK(count_irreducible(rep.system, 8).total == 12);
    json const doc = to_json(rep);
    CHECK(doc["status"] == "CONFLUENT");
    CHECK(doc["new_rules"].size() == rep.new_rules.size());

    auto const q = parse_presentation(R"({"alphabet":[{"id":"a","sort":"module"},
        {"id":"g","sort":"group"}], "relations":["g a - a g - 1/2 g"],
        "field":"Q", "order":"module_deglex"})");
    CHECK(q.ring()->field == Field::rational());
    CHECK(q.rules().size() == 1);

    CHECK_THROWS_AS(parse_presentation("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation(R"({"alphabet": []})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation(
                        R"({"alphabet":[{"id":"a","sort":"odd"}],"relations":[]})"),
                    std::invalid_argument);
    CHECK_THROWS(parse_presentation(
        R"({"alphabet":[{"id":"a","sort":"module"}],"relations":["b"]})"));
  }

  TEST_CASE("fields by name") {
    CHECK(parse_field("F2") == Field::f2());
    CHECK(parse_field("F7") == Field::fp(7));
    CHECK(parse_field("Q") == Field::rational());
    CHECK_THROWS(parse_field("F8"));
    CHECK_THROWS(parse_field("R"));
    CHECK_THROWS(parse_field("F7x"));
  }

  TEST_CASE("group tables and certificates serialize") {
    json const g = to_json(s3_quotient(dihedral_rack()));
    CHECK(g["order"] == 6);
    CHECK(g["identity"] == 0);
    CHECK(g["table"].size() == 6);
    CHECK(g["inverses"].size() == 6);
    CHECK(g["distinguished"].size() == 3);

    auto const cert = certify_pair("000000000", "111111111");
    json const c    = to_json(cert);
    CHECK(c["schema"] == 1);
    CHECK(c["valid"] == true);
    CHECK(c["lifting"]["dimension"] == 72);
    CHECK(c["cubic"]["conventions"][0] == "shift");
    CHECK(c["skew_primitivity"].size() == 9);
    CHECK(dump(c) == dump(to_json(certify_pair("000000000", "111111111"))));
  }

  TEST_CASE("degree cap from the environment") {
    ::setenv("FULCRUM_DEGREE_CAP", "11", 1);
    CHECK(configured_degree_cap() == 11);
    ::setenv("FULCRUM_DEGREE_CAP", "junk", 1);
    CHECK(configured_degree_cap() == 8);
    ::unsetenv("FULCRUM_DEGREE_CAP");
    CHECK(configured_degree_cap() == 8);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("pipelines") {
    cli::RunConfig c;
    c.command  = cli::Command::nichols_dim;
    auto const n = run_config(c);
    CHECK(n.code == 0);
    CHECK(n.out == "12\n");

    c.command = cli::Command::jordan_verify;
    c.max_len = 3;
    auto const j = run_config(c);
    CHECK(j.code == 0);
    CHECK(j.out.find("count: 30") != std::string::npos);

    c         = {};
    c.command = cli::Command::classify;
    c.out     = temp_path("table.json").string();
    auto const k = run_config(c);
    CHECK(k.code == 0);
    CHECK(k.out.find("pairs: 32") != std::string::npos);
    CHECK(k.out.find("classes: 10") != std::string::npos);
    std::string const first = slurp(c.out);
    REQUIRE(run_config(c).code == 0);
    CHECK(slurp(c.out) == first);
    CHECK(read_table(first).pairs.size() == 32);
    std::filesystem::remove(c.out);
  }

  TEST_CASE("usage errors and failures") {
    cli::RunConfig c;
    c.command = cli::Command::classify;
    c.field   = "Q";
    CHECK(run_config(c).code == cli::exit_usage);

    c         = {};
    c.command = cli::Command::verify;
    c.lambda  = "0101";
    c.mu      = "000000000";
    CHECK(run_config(c).code == cli::exit_usage);

    c.lambda = "100000000";
    auto const bad = run_config(c);
    CHECK(bad.code == cli::exit_failure);
    CHECK(bad.err.find("cocycle") != std::string::npos);

    c.lambda = "000000000";
    c.mu     = "111111111";
    auto const good = run_config(c);
    CHECK(good.code == 0);
    CHECK(good.out.find("dim L: 72") != std::string::npos);

    c         = {};
    c.command = cli::Command::complete;
    c.input   = "/nonexistent/presentation.json";
    CHECK(run_config(c).code == cli::exit_usage);
  }

  TEST_CASE("complete on a file") {
    auto const path = temp_path("fk3.json");
    {
      std::ofstream f(path);
      f << fk3_presentation;
    }
    cli::RunConfig c;
    c.command = cli::Command::complete;
    c.input   = path.string();
    auto const r = run_config(c);
    CHECK(r.code == 0);
    json const doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["status"] == "CONFLUENT");
    std::size_t total = 0;
    for (auto const& v : doc["irreducible_per_length"]) {
      total += v.get<std::size_t>();
    }
    CHECK(total == 12);
    std::filesystem::remove(path);
  }

  TEST_CASE("argument parsing") {
    CHECK(run_main(cli::fk3_main, {"fk3"}) == cli::exit_usage);
    CHECK(run_main(cli::fk3_main, {"fk3", "classify", "--group", "h"})
          == cli::exit_usage);
    CHECK(run_main(cli::fk3_main, {"fk3", "verify", "--lambda", "000000000"})
          == cli::exit_usage);
    CHECK(run_main(cli::jordan_main, {"jordan", "verify", "--max-len", "1"})
          == cli::exit_usage);
    CHECK(run_main(cli::fulcrum_main, {"fulcrum", "complete"}) == cli::exit_usage);
    CHECK(run_main(cli::fk3_main, {"fk3", "nichols-dim"}) == 0);
  }
}
