// Command-line driver; links only the shared C API.
#include <tatehh/tatehh.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int load_problem(const std::string& input, tatehh_problem** out) {
    std::ifstream probe(input);
    if (probe.good()) return tatehh_problem_from_file(input.c_str(), out);
    if (const char* builtin = tatehh_corpus_find(input.c_str()))
        return tatehh_problem_from_text(builtin, out);
    std::fprintf(stderr, "error: no such file or corpus entry: %s\n", input.c_str());
    return TATEHH_ERR_USAGE;
}

struct CommonFlags {
    std::string input;
    unsigned p = 0;
    int max_degree = 0;
    std::string window;
    int r_max = -1;
    bool json = false;
    bool strict = false;
    bool verbose = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool needs_input) {
    if (needs_input)
        cmd->add_option("input", f.input, "input file or corpus name (e.g. f2eps.json)")
            ->required();
    cmd->add_option("-p,--prime", f.p, "cyclic group order (default: field characteristic)");
    cmd->add_option("-D,--max-degree", f.max_degree, "top homological degree (default 6)");
    cmd->add_option("--window", f.window, "degree window LO..HI (default -6..6)");
    cmd->add_option("--r-max", f.r_max, "spectral sequence page bound (default: automatic)");
    cmd->add_flag("--json", f.json, "emit the report as JSON");
    cmd->add_flag("--strict", f.strict, "exit 2 on inconclusive verdicts");
    cmd->add_flag("--verbose", f.verbose, "include representatives / per-identity lines");
}

int parse_window(const std::string& w, int& lo, int& hi) {
    auto dots = w.find("..");
    if (dots == std::string::npos) return -1;
    try {
        lo = std::stoi(w.substr(0, dots));
        hi = std::stoi(w.substr(dots + 2));
    } catch (...) {
        return -1;
    }
    return lo <= hi ? 0 : -1;
}

int run(const std::string& command, const CommonFlags& f, bool needs_input) {
    tatehh_options opt;
    tatehh_options_init(&opt);
    if (f.p) opt.group_prime = f.p;
    if (f.max_degree > 0) opt.max_degree = f.max_degree;
    if (!f.window.empty()) {
        if (parse_window(f.window, opt.window_lo, opt.window_hi) != 0) {
            std::fprintf(stderr, "error: bad window '%s', expected LO..HI\n", f.window.c_str());
            return 1;
        }
        opt.window_set = 1;
    }
    opt.r_max = f.r_max;
    opt.strict = f.strict ? 1 : 0;
    opt.verbose = f.verbose ? 1 : 0;

    tatehh_problem* problem = nullptr;
    if (needs_input) {
        if (load_problem(f.input, &problem) != TATEHH_OK) {
            const char* msg = tatehh_last_error();
            if (msg && *msg) std::fprintf(stderr, "error: %s\n", msg);
            return 1;
        }
    }
    tatehh_report* report = nullptr;
    int rc = tatehh_run(command.c_str(), problem, &opt, &report);
    if (rc != TATEHH_OK) {
        std::fprintf(stderr, "error: %s\n", tatehh_last_error());
        tatehh_problem_free(problem);
        return 1;
    }
    std::fputs(f.json ? tatehh_report_json(report) : tatehh_report_text(report), stdout);
    int exit_code = tatehh_report_exit_code(report);
    if (!f.strict && exit_code == 2 && command == "degeneration") exit_code = 0;
    tatehh_report_free(report);
    tatehh_problem_free(problem);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hochschild homology and cyclic-group Tate constructions over prime "
                 "fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tatehh_version());

    struct Sub {
        const char* name;
        const char* help;
        bool needs_input;
    };
    const Sub subs[] = {
        {"hh", "Hochschild homology dimension table", true},
        {"tate", "Tate homology of the subdivided cyclic bar model", true},
        {"ss", "Tate spectral sequence pages and convergence", true},
        {"d1check", "verify that the first differential vanishes (M = A)", true},
        {"degeneration", "ungraded E_infinity vs total Hochschild dimension", true},
        {"subdivision-selftest", "levelwise subdivision identification identities", true},
        {"selftest", "run the invariant suite over the built-in corpus", false},
    };
    std::map<std::string, CommonFlags> flags;
    std::map<std::string, bool> needs;
    for (const auto& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, flags[s.name], s.needs_input);
        needs[s.name] = s.needs_input;
    }

    CLI::App* corpus = app.add_subcommand("corpus", "list or print the built-in corpus");
    std::string show_name, dump_dir;
    corpus->add_option("--show", show_name, "print one entry as JSON");
    corpus->add_option("--dump", dump_dir, "write every entry to DIR/<name>.json");

    CLI11_PARSE(app, argc, argv);

    if (corpus->parsed()) {
        if (!show_name.empty()) {
            const char* text = tatehh_corpus_find(show_name.c_str());
            if (!text) {
                std::fprintf(stderr, "error: no corpus entry '%s'\n", show_name.c_str());
                return 1;
            }
            std::fputs(text, stdout);
            return 0;
        }
        if (!dump_dir.empty()) {
            for (int i = 0; i < tatehh_corpus_count(); ++i) {
                std::string path = dump_dir + "/" + tatehh_corpus_name(i) + ".json";
                std::ofstream out(path);
                if (!out) {
                    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
                    return 1;
                }
                out << tatehh_corpus_json(i);
            }
            return 0;
        }
        for (int i = 0; i < tatehh_corpus_count(); ++i)
            std::printf("%s\n", tatehh_corpus_name(i));
        return 0;
    }

    for (const auto& s : subs)
        if (app.get_subcommand(s.name)->parsed()) return run(s.name, flags[s.name], needs[s.name]);
    return 1;
}
