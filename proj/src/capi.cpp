#include "tatehh/tatehh.h"

#include "engine.hpp"
#include "io/corpus.hpp"

#include <cstring>
#include <string>

using namespace tatehh;

struct tatehh_problem {
    ProblemSpec spec;
};

struct tatehh_report {
    RunReport report;
    std::string text_cache;
    std::string json_cache;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

} // namespace

extern "C" {

void tatehh_options_init(tatehh_options* opt) {
    if (!opt) return;
    opt->group_prime = 0;
    opt->max_degree = 6;
    opt->window_lo = -6;
    opt->window_hi = 6;
    opt->window_set = 0;
    opt->r_max = -1;
    opt->strict = 0;
    opt->verbose = 0;
}

const char* tatehh_version(void) { return "tatehh 1.0.0"; }

const char* tatehh_last_error(void) { return g_last_error.c_str(); }

int tatehh_problem_from_text(const char* json_text, tatehh_problem** out) {
    if (!json_text || !out) return fail(TATEHH_ERR_NULL, "null argument");
    try {
        auto* p = new tatehh_problem{parse_problem(json_text)};
        *out = p;
        return TATEHH_OK;
    } catch (const ParseError& e) {
        return fail(TATEHH_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(TATEHH_ERR_INTERNAL, e.what());
    }
}

int tatehh_problem_from_file(const char* path, tatehh_problem** out) {
    if (!path || !out) return fail(TATEHH_ERR_NULL, "null argument");
    try {
        auto* p = new tatehh_problem{parse_problem_file(path)};
        *out = p;
        return TATEHH_OK;
    } catch (const ParseError& e) {
        return fail(TATEHH_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(TATEHH_ERR_INTERNAL, e.what());
    }
}

const char* tatehh_problem_name(const tatehh_problem* p) {
    return p ? p->spec.name.c_str() : "";
}

void tatehh_problem_free(tatehh_problem* p) { delete p; }

int tatehh_corpus_count(void) { return static_cast<int>(builtin_corpus().size()); }

const char* tatehh_corpus_name(int index) {
    const auto& c = builtin_corpus();
    if (index < 0 || static_cast<size_t>(index) >= c.size()) return nullptr;
    return c[index].name.c_str();
}

const char* tatehh_corpus_json(int index) {
    const auto& c = builtin_corpus();
    if (index < 0 || static_cast<size_t>(index) >= c.size()) return nullptr;
    return c[index].json_text.c_str();
}

const char* tatehh_corpus_find(const char* name) {
    if (!name) return nullptr;
    const CorpusEntry* e = find_corpus_entry(name);
    return e ? e->json_text.c_str() : nullptr;
}

int tatehh_run(const char* command, const tatehh_problem* problem, const tatehh_options* opt,
               tatehh_report** out) {
    if (!command || !out) return fail(TATEHH_ERR_NULL, "null argument");
    RunOptions ro;
    if (opt) {
        if (opt->group_prime) ro.group_prime = opt->group_prime;
        if (opt->max_degree > 0) ro.max_degree = opt->max_degree;
        if (opt->window_set) ro.window = {opt->window_lo, opt->window_hi};
        ro.r_max = opt->r_max;
        ro.strict = opt->strict != 0;
        ro.verbose = opt->verbose != 0;
    }
    try {
        RunReport r = run_command(command, problem ? &problem->spec : nullptr, ro);
        auto* rep = new tatehh_report{std::move(r), {}, {}};
        rep->text_cache = rep->report.text();
        rep->json_cache = rep->report.json_text();
        *out = rep;
        return TATEHH_OK;
    } catch (const ParseError& e) {
        return fail(TATEHH_ERR_PARSE, e.what());
    } catch (const Error& e) {
        return fail(TATEHH_ERR_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(TATEHH_ERR_INTERNAL, e.what());
    }
}

const char* tatehh_report_text(const tatehh_report* r) { return r ? r->text_cache.c_str() : ""; }

const char* tatehh_report_json(const tatehh_report* r) { return r ? r->json_cache.c_str() : ""; }

int tatehh_report_exit_code(const tatehh_report* r) { return r ? r->report.exit_code : 1; }

void tatehh_report_free(tatehh_report* r) { delete r; }

} // extern "C"
