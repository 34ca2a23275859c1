#pragma once

#include "dg/resolution.hpp"
#include "ss/spectral.hpp"

#include <optional>

namespace tatehh {

// rank of d_1 at every safe spot of the Tate spectral sequence for the
// subdivided model of Z(A;A); rows 0..t_top-1 are the trustworthy ones
struct D1Report {
    bool ok = true;
    int rows_lo = 0, rows_hi = 0;
    int safe_s_lo = 0, safe_s_hi = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};
D1Report d1_triviality_check(const DgAlgebra& a, size_t p, int t_top);

enum class Verdict { Match, Mismatch, Inconclusive };
const char* verdict_name(Verdict v);

struct DegenerationReport {
    std::map<int, size_t> hh_dims; // HH_*(A;M)
    size_t hh_total = 0;
    bool certified = false; // finite resolution backed both tails
    std::map<int, size_t> coefficient_hh; // HH_*(A^{(x)p}; M^tw)
    std::map<int, size_t> abutment;       // Tate homology over one period window
    std::vector<size_t> e_infty_class_totals; // per residue class mod period
    size_t period = 1;
    size_t p = 2;
    int truncation = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
    std::vector<std::string> checks; // audit lines ("ok: ..." / "FAIL: ...")
    std::vector<std::string> notes;

    bool all_checks_ok() const;
};

// w: optional certified finite projective bimodule resolution of A. Without
// it the verdict can never be `match` (the truncation tail is uncertified).
DegenerationReport degeneration_check(const DgAlgebra& a, const DgBimodule& m,
                                      const VerifiedResolution* w, size_t p, int D);

// largest subdivision-model truncation whose top level stays within the
// size budget (at least 1)
int feasible_truncation(const DgAlgebra& a, const DgBimodule& m, size_t p, int want,
                        size_t budget = 200000);
// largest compare_subdivision truncation with the unwound top level within
// the budget (at least 1)
int feasible_unwound_truncation(const DgAlgebra& a, const DgBimodule& m, size_t p, int want,
                                size_t budget = 300000);

// the good-truncated subdivision model, with the tail certificate when a
// resolution is available
struct TateModel {
    EquivariantComplex ec;
    int truncation;
    bool certified;
    std::map<int, size_t> coefficient_hh;
    std::vector<std::string> notes;
};
TateModel build_tate_model(const DgAlgebra& a, const DgBimodule& m, const VerifiedResolution* w,
                           size_t p, int cap);

} // namespace tatehh
