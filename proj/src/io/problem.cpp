#include "io/problem.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tatehh {

using nlohmann::json;

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

namespace {

SparseVec parse_vec(const PrimeField& F, const json& j, size_t dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of [index, coeff] pairs");
    SparseAcc acc(F);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError(where + ": entries must be [index, coeff] pairs");
        long long idx = e[0].get<long long>();
        if (idx < 0 || static_cast<size_t>(idx) >= dim)
            throw ParseError(where + ": index " + std::to_string(idx) + " out of range");
        acc.add(static_cast<uint32_t>(idx), F.reduce(e[1].get<long long>()));
    }
    return acc.take();
}

DgAlgebra parse_algebra(const PrimeField& F, const json& j) {
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
        throw ParseError("algebra: missing or empty basis");
    size_t dim = j["basis"].size();
    DgAlgebra a(F, dim);
    for (size_t i = 0; i < dim; ++i) {
        const auto& b = j["basis"][i];
        if (!b.contains("label")) throw ParseError("algebra basis: missing label");
        a.labels[i] = b["label"].get<std::string>();
        a.degree[i] = b.value("degree", 0);
    }
    if (!j.contains("unit") || !j["unit"].is_number_integer())
        throw ParseError("algebra: missing unit index");
    long long unit = j["unit"].get<long long>();
    if (unit < 0 || static_cast<size_t>(unit) >= dim)
        throw ParseError("algebra: unit index out of range");
    a.unit = static_cast<size_t>(unit);
    if (j.contains("mult")) {
        for (const auto& t : j["mult"]) {
            if (!t.is_array() || t.size() != 3)
                throw ParseError("algebra mult: expected [i, j, vector] triples");
            long long i = t[0].get<long long>(), k = t[1].get<long long>();
            if (i < 0 || k < 0 || static_cast<size_t>(i) >= dim || static_cast<size_t>(k) >= dim)
                throw ParseError("algebra mult: index out of range");
            a.mult[i][k] = parse_vec(F, t[2], dim, "algebra mult");
        }
    }
    if (j.contains("diff")) {
        for (const auto& t : j["diff"]) {
            if (!t.is_array() || t.size() != 2)
                throw ParseError("algebra diff: expected [i, vector] pairs");
            long long i = t[0].get<long long>();
            if (i < 0 || static_cast<size_t>(i) >= dim)
                throw ParseError("algebra diff: index out of range");
            for (const auto& [k, c] : parse_vec(F, t[1], dim, "algebra diff"))
                a.diff.add_at(k, i, c);
        }
    }
    return a;
}

DgBimodule parse_module(const PrimeField& F, const json& j, const DgAlgebra& a) {
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
        throw ParseError("module: missing or empty basis");
    size_t dim = j["basis"].size();
    DgBimodule m(F, dim, a.dim());
    for (size_t i = 0; i < dim; ++i) {
        const auto& b = j["basis"][i];
        if (!b.contains("label")) throw ParseError("module basis: missing label");
        m.labels[i] = b["label"].get<std::string>();
        m.degree[i] = b.value("degree", 0);
    }
    auto parse_action = [&](const char* key, std::vector<FpMat>& ops) {
        if (!j.contains(key)) return;
        for (const auto& t : j[key]) {
            if (!t.is_array() || t.size() != 3)
                throw ParseError(std::string("module ") + key +
                                 ": expected [algebra_index, module_index, vector] triples");
            long long i = t[0].get<long long>(), k = t[1].get<long long>();
            if (i < 0 || static_cast<size_t>(i) >= a.dim())
                throw ParseError(std::string("module ") + key + ": algebra index out of range");
            if (k < 0 || static_cast<size_t>(k) >= dim)
                throw ParseError(std::string("module ") + key + ": module index out of range");
            for (const auto& [r, c] : parse_vec(F, t[2], dim, std::string("module ") + key))
                ops[i].add_at(r, k, c);
        }
    };
    parse_action("left", m.left);
    parse_action("right", m.right);
    if (j.contains("diff")) {
        for (const auto& t : j["diff"]) {
            if (!t.is_array() || t.size() != 2)
                throw ParseError("module diff: expected [i, vector] pairs");
            long long i = t[0].get<long long>();
            if (i < 0 || static_cast<size_t>(i) >= dim)
                throw ParseError("module diff: index out of range");
            for (const auto& [k, c] : parse_vec(F, t[1], dim, "module diff"))
                m.diff.add_at(k, i, c);
        }
    }
    return m;
}

BimodResolutionData parse_resolution(const PrimeField& F, const json& j, size_t dimA) {
    BimodResolutionData d;
    size_t sq = dimA * dimA;
    if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
        throw ParseError("resolution: missing components");
    for (const auto& comp : j["components"]) {
        if (!comp.contains("rank")) throw ParseError("resolution component: missing rank");
        size_t rank = comp["rank"].get<size_t>();
        d.rank.push_back(rank);
        FreeBimodMap idem;
        if (comp.contains("idem")) {
            for (const auto& gi : comp["idem"])
                idem.gen_image.push_back(parse_vec(F, gi, rank * sq, "resolution idem"));
            if (idem.gen_image.size() != rank)
                throw ParseError("resolution idem: one image per generator required");
        }
        d.idem.push_back(std::move(idem));
    }
    if (j.contains("maps")) {
        for (const auto& mp : j["maps"]) {
            FreeBimodMap fm;
            size_t q = d.diff.size() + 1;
            if (q >= d.rank.size()) throw ParseError("resolution: too many maps");
            for (const auto& gi : mp)
                fm.gen_image.push_back(parse_vec(F, gi, d.rank[q - 1] * sq, "resolution map"));
            d.diff.push_back(std::move(fm));
        }
    }
    if (d.diff.size() + 1 != d.rank.size())
        throw ParseError("resolution: need one map per adjacent component pair");
    if (!j.contains("augmentation")) throw ParseError("resolution: missing augmentation");
    for (const auto& gi : j["augmentation"])
        d.aug.push_back(parse_vec(F, gi, dimA, "resolution augmentation"));
    return d;
}

} // namespace

ProblemSpec parse_problem(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.contains("p") || !j["p"].is_number_integer())
        throw ParseError("missing integer field 'p'");
    long long p = j["p"].get<long long>();
    if (p < 2 || p > (1ll << 31) || !PrimeField::is_prime(static_cast<uint32_t>(p)))
        throw ParseError("modulus not prime: p = " + std::to_string(p));
    PrimeField F(static_cast<uint32_t>(p));

    if (!j.contains("algebra")) throw ParseError("missing 'algebra'");
    DgAlgebra a = parse_algebra(F, j["algebra"]);
    a.name = j.value("name", std::string("input"));
    ValidationReport arep = validate(a);
    if (!arep.ok()) throw ParseError("algebra axioms violated: " + arep.summary());

    DgBimodule m = bimodule_from_algebra(a);
    bool module_is_algebra = true;
    if (j.contains("module")) {
        m = parse_module(F, j["module"], a);
        m.name = a.name + ".module";
        module_is_algebra = false;
    }
    ValidationReport mrep = validate(a, m);
    if (!mrep.ok()) throw ParseError("module axioms violated: " + mrep.summary());

    std::optional<VerifiedResolution> res;
    if (j.contains("resolution")) {
        BimodResolutionData data = parse_resolution(F, j["resolution"], a.dim());
        try {
            res = verify_resolution(a, data);
        } catch (const Error& e) {
            throw ParseError(std::string("resolution rejected: ") + e.what());
        }
    }

    ProblemSpec spec{j.value("name", std::string("input")),
                     static_cast<uint32_t>(p),
                     j.value("expected_smooth", false),
                     std::move(a),
                     std::move(m),
                     module_is_algebra,
                     std::move(res),
                     fnv1a_hex(json_text)};
    return spec;
}

ProblemSpec parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_problem(os.str());
}

} // namespace tatehh
