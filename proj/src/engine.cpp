#include "engine.hpp"

#include "io/corpus.hpp"
#include "ss/degeneration.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace tatehh {

namespace {

using nlohmann::ordered_json;

ordered_json dims_table(const std::map<int, size_t>& dims) {
    ordered_json t = ordered_json::object();
    for (const auto& [n, d] : dims) t[std::to_string(n)] = d;
    return t;
}

TateModel build_model(const ProblemSpec& spec, size_t p, int cap) {
    return build_tate_model(spec.algebra, spec.module,
                            spec.resolution ? &*spec.resolution : nullptr, p, cap);
}

ordered_json degeneration_json(const DegenerationReport& rep) {
    ordered_json r;
    r["verdict"] = verdict_name(rep.verdict);
    r["reason"] = rep.reason;
    r["hh_dims"] = dims_table(rep.hh_dims);
    r["hh_total"] = rep.hh_total;
    r["certified"] = rep.certified;
    r["coefficient_hh_dims"] = dims_table(rep.coefficient_hh);
    r["abutment_dims"] = dims_table(rep.abutment);
    r["e_infty_class_totals"] = rep.e_infty_class_totals;
    r["period"] = rep.period;
    r["truncation"] = rep.truncation;
    r["checks"] = rep.checks;
    return r;
}

RunReport selftest(const RunOptions& opt);

RunReport dispatch(const std::string& command, const ProblemSpec* spec, const RunOptions& opt) {
    RunReport rep;
    rep.command = command;
    if (command == "selftest") return selftest(opt);

    if (!spec) throw Error("command '" + command + "' needs an input problem");
    rep.input_name = spec->name;
    rep.input_digest = spec->digest;
    size_t p = opt.group_prime.value_or(spec->characteristic);
    if (!PrimeField::is_prime(static_cast<uint32_t>(p)))
        throw ParseError("group order not prime: " + std::to_string(p));
    int D = opt.max_degree;
    auto window = opt.window.value_or(std::make_pair(-6, 6));
    rep.params["p"] = p;
    rep.params["max_degree"] = D;
    rep.params["window"] = {window.first, window.second};
    rep.params["expected_smooth"] = spec->expected_smooth;

    const DgAlgebra& a = spec->algebra;
    const DgBimodule& m = spec->module;

    if (command == "hh") {
        HochschildResult h = hh(a, m, D);
        rep.result["hh_dims"] = dims_table(h.dims);
        rep.result["stabilized"] = h.stabilized;
        if (!h.stabilized) {
            rep.exit_code = 2;
            rep.notes.push_back("internal consistency error: truncation did not stabilize");
        }
        if (spec->resolution) {
            TorResult t = hh_via_resolution(a, *spec->resolution, m);
            rep.result["resolution_route_dims"] = dims_table(t.dims);
            bool agree = true;
            for (int q = 0; q <= D; ++q) {
                size_t c = t.dims.count(q) ? t.dims.at(q) : 0;
                agree = agree && c == h.dims.at(q);
            }
            rep.result["routes_agree"] = agree;
            if (!agree) rep.exit_code = 2;
        }
        if (opt.verbose) {
            ordered_json reps = ordered_json::object();
            for (int q = 0; q <= std::min(D, 3); ++q) {
                Homology hq = homology(h.realization.total.complex, q);
                ordered_json lines = ordered_json::array();
                for (size_t j = 0; j < hq.reps.cols(); ++j) {
                    std::ostringstream os;
                    bool first = true;
                    for (const auto& [i, v] : hq.reps.col(j)) {
                        if (!first) os << " + ";
                        if (v != 1) os << v << "*";
                        os << h.realization.total.complex.space().label(q, i);
                        first = false;
                    }
                    lines.push_back(os.str());
                }
                reps[std::to_string(q)] = lines;
            }
            rep.result["representatives"] = reps;
        }
        return rep;
    }

    if (command == "tate") {
        TateModel md = build_model(*spec, p, D);
        rep.notes = md.notes;
        rep.result["model_truncation"] = md.truncation;
        rep.result["tail_certified"] = md.certified;
        auto dims = tate_homology(md.ec, window.first, window.second);
        rep.result["tate_homology_dims"] = dims_table(dims);
        rep.result["period"] = (p == 2 ? 1 : 2);
        if (!md.certified)
            rep.notes.push_back("dims describe the truncated model; without a tail "
                                "certificate they need not equal the full Tate homology");
        return rep;
    }

    if (command == "ss") {
        TateModel md = build_model(*spec, p, D);
        rep.notes = md.notes;
        rep.result["model_truncation"] = md.truncation;
        rep.result["tail_certified"] = md.certified;
        auto sup = md.ec.complex.support();
        int t_hi = sup ? sup->second : 0;
        int rstar = t_hi + 2;
        int s_lo = window.first - t_hi - rstar - 2, s_hi = window.second + rstar + 2;
        TateComplexData tc = tate_complex(md.ec, TotalConvention::TateMixed, s_lo, s_hi);
        SpectralSequence ss = spectral_sequence(tc, opt.r_max);
        for (const auto& w : ss.warnings) rep.notes.push_back(w);
        rep.result["degeneration_page"] = ss.degeneration_page;
        rep.result["indexing"] =
            "filtration degree s is the resolution degree; the paper's cohomological "
            "H^s corresponds to s here via s_homological = -s_cohomological";
        ordered_json pages = ordered_json::object();
        for (int r : {1, 2, ss.degeneration_page}) {
            ordered_json page = ordered_json::array();
            for (int s = ss.safe_s_lo; s <= ss.safe_s_hi; ++s)
                for (int t = ss.t_lo; t <= ss.t_hi; ++t) {
                    size_t d = ss.page_dim(r, s, t);
                    if (d) page.push_back({s, t, d});
                }
            pages["E_" + std::to_string(r)] = page;
        }
        rep.result["pages"] = pages;
        ordered_json ranks = ordered_json::object();
        for (const auto& [r, spots] : ss.d_ranks) {
            ordered_json lines = ordered_json::array();
            for (const auto& [st, rk] : spots)
                if (st.first >= ss.safe_s_lo && st.first <= ss.safe_s_hi)
                    lines.push_back({st.first, st.second, rk});
            if (!lines.empty()) ranks["d_" + std::to_string(r)] = lines;
        }
        rep.result["differential_ranks"] = ranks;
        ConvergenceReport conv = convergence_check(ss, tc);
        ordered_json cl = ordered_json::array();
        for (const auto& l : conv.lines)
            cl.push_back({l.degree, l.e_infty_total, l.homology_dim, l.ok ? "ok" : "FAIL"});
        rep.result["convergence"] = cl;
        rep.result["convergence_ok"] = conv.ok();
        if (!conv.ok()) rep.exit_code = 2;
        return rep;
    }

    if (command == "d1check") {
        if (!spec->module_is_algebra)
            throw Error("d1check applies to the M = A case only");
        int rows = std::min(D, feasible_truncation(a, m, p, D));
        D1Report d1 = d1_triviality_check(a, p, rows);
        rep.result["ok"] = d1.ok;
        rep.result["rows_checked"] = {d1.rows_lo, d1.rows_hi};
        rep.result["violations"] = d1.violations;
        for (const auto& n : d1.notes) rep.notes.push_back(n);
        if (!d1.ok) rep.exit_code = 2;
        return rep;
    }

    if (command == "degeneration") {
        DegenerationReport dr = degeneration_check(
            a, m, spec->resolution ? &*spec->resolution : nullptr, p, D);
        rep.result = degeneration_json(dr);
        for (const auto& n : dr.notes) rep.notes.push_back(n);
        if (dr.verdict == Verdict::Inconclusive && opt.strict) rep.exit_code = 2;
        if (dr.verdict == Verdict::Mismatch) rep.notes.push_back(
            "mismatch under valid certificates: the degeneration hypothesis fails for this input");
        return rep;
    }

    if (command == "subdivision-selftest") {
        int L = feasible_unwound_truncation(a, m, p, std::min(D, 3));
        ComparisonReport cr = compare_subdivision(a, m, p, L);
        rep.result["truncation"] = L;
        rep.result["ok"] = cr.ok();
        ordered_json lines = ordered_json::array();
        for (const auto& l : cr.lines)
            if (!l.ok || opt.verbose)
                lines.push_back({l.level, l.identity, l.ok ? "ok" : "FAIL"});
        rep.result["lines"] = lines;
        size_t total = cr.lines.size(), okc = 0;
        for (const auto& l : cr.lines) okc += l.ok;
        rep.result["identities_checked"] = total;
        rep.result["identities_ok"] = okc;
        if (!cr.ok()) rep.exit_code = 2;
        return rep;
    }

    throw Error("unknown command: " + command);
}

RunReport selftest(const RunOptions& opt) {
    RunReport rep;
    rep.command = "selftest";
    rep.input_name = "builtin corpus";
    rep.input_digest = "-";
    ordered_json lines = ordered_json::array();
    bool all_ok = true;
    auto record = [&](const std::string& what, bool ok) {
        lines.push_back({what, ok ? "ok" : "FAIL"});
        all_ok = all_ok && ok;
    };

    for (const auto& entry : builtin_corpus()) {
        ProblemSpec spec = parse_problem(entry.json_text);
        record(entry.name + ": parse + validate", true);
        size_t p = spec.characteristic;

        HochschildResult h = hh(spec.algebra, spec.module, 4);
        record(entry.name + ": hh stabilization", h.stabilized);
        if (spec.resolution) {
            TorResult t = hh_via_resolution(spec.algebra, *spec.resolution, spec.module);
            bool agree = true;
            for (int q = 0; q <= 4; ++q) {
                size_t c = t.dims.count(q) ? t.dims.at(q) : 0;
                agree = agree && c == h.dims.at(q);
            }
            record(entry.name + ": hh routes agree", agree);
        }

        int L = feasible_unwound_truncation(spec.algebra, spec.module, p, 2, 100000);
        ComparisonReport cr = compare_subdivision(spec.algebra, spec.module, p, L);
        record(entry.name + ": subdivision identities (L = " + std::to_string(L) + ")", cr.ok());

        TateModel md = build_model(spec, p, 3);
        auto sup = md.ec.complex.support();
        int t_hi = sup ? sup->second : 0;
        int s_lo = -2 - t_hi - (t_hi + 2) - 2, s_hi = 2 + (t_hi + 2) + 2;
        auto t1 = tate_complex(md.ec, TotalConvention::Sum, s_lo, s_hi);
        auto t2 = tate_complex(md.ec, TotalConvention::Prod, s_lo, s_hi);
        auto t3 = tate_complex(md.ec, TotalConvention::TateMixed, s_lo, s_hi);
        record(entry.name + ": Tate variants agree",
               t1.total.complex.same_dims(t2.total.complex) &&
                   t1.total.complex.same_dims(t3.total.complex));
        bool periodic = true;
        try {
            verify_periodicity(t3);
        } catch (const Error&) {
            periodic = false;
        }
        record(entry.name + ": periodicity", periodic);
        SpectralSequence ss = spectral_sequence(t3);
        ConvergenceReport conv = convergence_check(ss, t3);
        record(entry.name + ": convergence", conv.ok());
    }

    for (const char* name : {"f2", "f2eps", "m2f2"}) {
        ProblemSpec spec = parse_problem(find_corpus_entry(name)->json_text);
        D1Report d1 = d1_triviality_check(spec.algebra, 2, name == std::string("f2eps") ? 4 : 2);
        record(std::string(name) + ": d_1 trivial", d1.ok);
    }

    for (const char* name : {"f2", "m2f2"}) {
        ProblemSpec spec = parse_problem(find_corpus_entry(name)->json_text);
        DegenerationReport dr = degeneration_check(
            spec.algebra, spec.module, spec.resolution ? &*spec.resolution : nullptr, 2, 6);
        record(std::string(name) + ": degeneration verdict match",
               dr.verdict == Verdict::Match);
    }
    {
        ProblemSpec spec = parse_problem(find_corpus_entry("f2eps")->json_text);
        DegenerationReport dr = degeneration_check(spec.algebra, spec.module, nullptr, 2, 6);
        record("f2eps: degeneration honestly inconclusive",
               dr.verdict == Verdict::Inconclusive);
    }

    rep.result["lines"] = lines;
    rep.result["ok"] = all_ok;
    if (!all_ok) rep.exit_code = 2;
    (void)opt;
    return rep;
}

} // namespace

RunReport run_command(const std::string& command, const ProblemSpec* spec,
                      const RunOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    RunReport rep = dispatch(command, spec, opt);
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

} // namespace tatehh
