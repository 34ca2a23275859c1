#include <doctest.h>

#include "engine.hpp"
#include "hh/hochschild.hpp"
#include "io/corpus.hpp"

#include <regex>

using namespace tatehh;

TEST_CASE("every corpus entry parses and validates") {
    for (const auto& e : builtin_corpus()) {
        CAPTURE(e.name);
        ProblemSpec spec = parse_problem(e.json_text);
        CHECK(spec.name == e.name);
        CHECK(validate(spec.algebra).ok());
        CHECK(validate(spec.algebra, spec.module).ok());
    }
    // the corpus covers the spec'd minimum
    for (const char* name :
         {"f2", "f3", "f2xf2", "f2eps", "f3eps", "a2path", "m2f2", "dgsq"})
        CHECK(find_corpus_entry(name) != nullptr);
    CHECK(find_corpus_entry("f2.json") != nullptr);
    CHECK(find_corpus_entry("some/path/f2.json") != nullptr);
    CHECK(find_corpus_entry("nope") == nullptr);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_problem("{"), doctest::Contains("malformed"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_problem(R"({"p":4,"algebra":{"basis":[{"label":"1"}],"unit":0}})"),
        doctest::Contains("not prime"), ParseError);
    // non-associative table names the triple
    std::string bad = R"({
      "p": 2,
      "algebra": {
        "basis": [{"label":"1"},{"label":"v"},{"label":"r"}],
        "unit": 0,
        "mult": [[0,0,[[0,1]]],[0,1,[[1,1]]],[1,0,[[1,1]]],[0,2,[[2,1]]],[2,0,[[2,1]]],
                 [1,1,[[1,1]]],[2,1,[[1,1]]],[1,2,[]],[2,2,[]]]
      }
    })";
    CHECK_THROWS_WITH_AS(parse_problem(bad), doctest::Contains("associativity"), ParseError);
    // broken resolutions are rejected at parse time
    std::string badres = R"({
      "p": 2,
      "algebra": {"basis": [{"label":"1"},{"label":"e"}], "unit": 0,
        "mult": [[0,0,[[0,1]]],[0,1,[[1,1]]],[1,0,[[1,1]]],[1,1,[]]]},
      "resolution": {"components": [{"rank": 1}], "augmentation": [[[0,1]]]}
    })";
    CHECK_THROWS_WITH_AS(parse_problem(badres), doctest::Contains("resolution"), ParseError);
}

TEST_CASE("module block parses") {
    // trivial module over the dual numbers
    std::string text = R"({
      "p": 2, "name": "trivtest",
      "algebra": {"basis": [{"label":"1"},{"label":"e"}], "unit": 0,
        "mult": [[0,0,[[0,1]]],[0,1,[[1,1]]],[1,0,[[1,1]]],[1,1,[]]]},
      "module": {"basis": [{"label":"t"}],
        "left": [[0,0,[[0,1]]]], "right": [[0,0,[[0,1]]]]}
    })";
    ProblemSpec spec = parse_problem(text);
    CHECK(!spec.module_is_algebra);
    CHECK(spec.module.dim() == 1);
    auto h = hh(spec.algebra, spec.module, 3);
    for (int q = 0; q <= 3; ++q) CHECK(h.dims.at(q) == 1);
}

TEST_CASE("reports are deterministic modulo the timing field") {
    ProblemSpec spec = parse_problem(find_corpus_entry("f2eps")->json_text);
    RunOptions opt;
    opt.max_degree = 4;
    RunReport r1 = run_command("hh", &spec, opt);
    RunReport r2 = run_command("hh", &spec, opt);
    auto strip = [](std::string s) {
        return std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9.e+-]+"),
                                  "\"elapsed_ms\": X");
    };
    CHECK(strip(r1.json_text()) == strip(r2.json_text()));
    CHECK(r1.json_text().find("\"0\": 2") != std::string::npos);
}

TEST_CASE("engine: unknown command and missing input") {
    RunOptions opt;
    CHECK_THROWS_AS(run_command("frobnicate", nullptr, opt), Error);
    CHECK_THROWS_AS(run_command("hh", nullptr, opt), Error);
}

TEST_CASE("hh command output matches the corpus expectations") {
    RunOptions opt;
    opt.max_degree = 4;
    for (auto [name, d0] : std::initializer_list<std::pair<const char*, int>>{
             {"f2", 1}, {"m2f2", 1}, {"a2path", 2}, {"f2xf2", 2}, {"dgsq", 1}}) {
        ProblemSpec spec = parse_problem(find_corpus_entry(name)->json_text);
        RunReport r = run_command("hh", &spec, opt);
        CHECK(r.result["hh_dims"]["0"].get<int>() == d0);
        CHECK(r.result["hh_dims"]["1"].get<int>() == 0);
        CHECK(r.result["stabilized"].get<bool>());
        if (spec.resolution) CHECK(r.result["routes_agree"].get<bool>());
    }
}
