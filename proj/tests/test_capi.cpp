#include <doctest.h>

#include <tatehh/tatehh.h>

#include <cstring>
#include <string>

TEST_CASE("C API round trip") {
    CHECK(tatehh_corpus_count() >= 8);
    const char* text = tatehh_corpus_find("f2eps");
    REQUIRE(text != nullptr);

    tatehh_problem* problem = nullptr;
    REQUIRE(tatehh_problem_from_text(text, &problem) == TATEHH_OK);
    CHECK(std::string(tatehh_problem_name(problem)) == "f2eps");

    tatehh_options opt;
    tatehh_options_init(&opt);
    opt.max_degree = 3;
    tatehh_report* report = nullptr;
    REQUIRE(tatehh_run("hh", problem, &opt, &report) == TATEHH_OK);
    std::string json = tatehh_report_json(report);
    CHECK(json.find("\"0\": 2") != std::string::npos);
    CHECK(json.find("\"3\": 2") != std::string::npos);
    CHECK(tatehh_report_exit_code(report) == 0);
    tatehh_report_free(report);
    tatehh_problem_free(problem);
}

TEST_CASE("C API error paths") {
    tatehh_problem* problem = nullptr;
    CHECK(tatehh_problem_from_text(nullptr, &problem) == TATEHH_ERR_NULL);
    CHECK(tatehh_problem_from_text("{", &problem) == TATEHH_ERR_PARSE);
    CHECK(std::strlen(tatehh_last_error()) > 0);
    CHECK(tatehh_problem_from_file("/does/not/exist.json", &problem) == TATEHH_ERR_PARSE);

    const char* bad = R"({"p":4,"algebra":{"basis":[{"label":"1"}],"unit":0}})";
    CHECK(tatehh_problem_from_text(bad, &problem) == TATEHH_ERR_PARSE);
    CHECK(std::string(tatehh_last_error()).find("not prime") != std::string::npos);

    tatehh_report* report = nullptr;
    CHECK(tatehh_run("nope", nullptr, nullptr, &report) == TATEHH_ERR_USAGE);
    CHECK(tatehh_run("hh", nullptr, nullptr, &report) == TATEHH_ERR_USAGE);
}

TEST_CASE("C API corpus accessors") {
    for (int i = 0; i < tatehh_corpus_count(); ++i) {
        CHECK(tatehh_corpus_name(i) != nullptr);
        CHECK(tatehh_corpus_json(i) != nullptr);
        tatehh_problem* p = nullptr;
        REQUIRE(tatehh_problem_from_text(tatehh_corpus_json(i), &p) == TATEHH_OK);
        tatehh_problem_free(p);
    }
    CHECK(tatehh_corpus_name(-1) == nullptr);
    CHECK(tatehh_corpus_name(10000) == nullptr);
}
