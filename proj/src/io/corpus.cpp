#include "io/corpus.hpp"

#include <json.hpp>

namespace tatehh {

namespace {

using nlohmann::ordered_json;

ordered_json basis_elt(const std::string& label, int degree = 0) {
    ordered_json b;
    b["label"] = label;
    if (degree) b["degree"] = degree;
    return b;
}

ordered_json vec(std::initializer_list<std::pair<int, int>> entries) {
    ordered_json v = ordered_json::array();
    for (auto [i, c] : entries) v.push_back({i, c});
    return v;
}

ordered_json ground_field_json(int p) {
    ordered_json j;
    j["name"] = "f" + std::to_string(p);
    j["p"] = p;
    j["expected_smooth"] = true;
    j["algebra"]["basis"] = {basis_elt("1")};
    j["algebra"]["unit"] = 0;
    j["algebra"]["mult"] = {{0, 0, vec({{0, 1}})}};
    j["resolution"]["components"] = {{{"rank", 1}}};
    j["resolution"]["augmentation"] = {vec({{0, 1}})};
    return j;
}

// F_p[e]/(e^2)
ordered_json dual_numbers_json(int p, int eps_degree) {
    ordered_json j;
    j["name"] = std::string("f") + std::to_string(p) + "eps";
    j["p"] = p;
    j["expected_smooth"] = false;
    j["algebra"]["basis"] = {basis_elt("1"), basis_elt("e", eps_degree)};
    j["algebra"]["unit"] = 0;
    j["algebra"]["mult"] = {{0, 0, vec({{0, 1}})},
                            {0, 1, vec({{1, 1}})},
                            {1, 0, vec({{1, 1}})},
                            {1, 1, ordered_json::array()}};
    return j;
}

ordered_json product_of_fields_json() {
    ordered_json j;
    j["name"] = "f2xf2";
    j["p"] = 2;
    j["expected_smooth"] = true;
    j["algebra"]["basis"] = {basis_elt("1"), basis_elt("u")};
    j["algebra"]["unit"] = 0;
    j["algebra"]["mult"] = {{0, 0, vec({{0, 1}})},
                            {0, 1, vec({{1, 1}})},
                            {1, 0, vec({{1, 1}})},
                            {1, 1, vec({{1, 1}})}};
    // separability idempotent over F_2: 1(x)1 + 1(x)u + u(x)1
    // coordinates (x, y) -> x*2 + y
    j["resolution"]["components"] = {{{"rank", 1}, {"idem", {vec({{0, 1}, {1, 1}, {2, 1}})}}}};
    j["resolution"]["augmentation"] = {vec({{0, 1}})};
    return j;
}

ordered_json a2_path_json() {
    ordered_json j;
    j["name"] = "a2path";
    j["p"] = 2;
    j["expected_smooth"] = true;
    j["algebra"]["basis"] = {basis_elt("1"), basis_elt("v"), basis_elt("r")};
    j["algebra"]["unit"] = 0;
    // v idempotent; r the arrow with r v = r, v r = 0
    j["algebra"]["mult"] = {{0, 0, vec({{0, 1}})}, {0, 1, vec({{1, 1}})}, {1, 0, vec({{1, 1}})},
                            {0, 2, vec({{2, 1}})}, {2, 0, vec({{2, 1}})}, {1, 1, vec({{1, 1}})},
                            {2, 1, vec({{2, 1}})}, {1, 2, ordered_json::array()},
                            {2, 2, ordered_json::array()}};
    // hereditary resolution: W_0 = Av(x)vA + Aw(x)wA (w = 1 - v), W_1 = Aw(x)vA
    // coordinates (slot, x, y) -> slot*9 + x*3 + y
    j["resolution"]["components"] = {
        {{"rank", 2},
         {"idem", {vec({{0 * 9 + 1 * 3 + 1, 1}}),
                   vec({{1 * 9 + 0 * 3 + 0, 1},
                        {1 * 9 + 0 * 3 + 1, 1},
                        {1 * 9 + 1 * 3 + 0, 1},
                        {1 * 9 + 1 * 3 + 1, 1}})}}},
        {{"rank", 1}, {"idem", {vec({{0 * 9 + 0 * 3 + 1, 1}, {0 * 9 + 1 * 3 + 1, 1}})}}}};
    j["resolution"]["maps"] = {
        {vec({{0 * 9 + 2 * 3 + 1, 1}, {1 * 9 + 0 * 3 + 2, 1}, {1 * 9 + 1 * 3 + 2, 1}})}};
    j["resolution"]["augmentation"] = {vec({{1, 1}}), vec({{0, 1}, {1, 1}})};
    return j;
}

ordered_json matrix_algebra_json() {
    ordered_json j;
    j["name"] = "m2f2";
    j["p"] = 2;
    j["expected_smooth"] = true;
    // basis 1, a = E12, b = E21, w = E22 (E11 = 1 + w over F_2)
    j["algebra"]["basis"] = {basis_elt("1"), basis_elt("a"), basis_elt("b"), basis_elt("w")};
    j["algebra"]["unit"] = 0;
    j["algebra"]["mult"] = {
        {0, 0, vec({{0, 1}})}, {0, 1, vec({{1, 1}})}, {0, 2, vec({{2, 1}})},
        {0, 3, vec({{3, 1}})}, {1, 0, vec({{1, 1}})}, {2, 0, vec({{2, 1}})},
        {3, 0, vec({{3, 1}})}, {1, 1, ordered_json::array()}, {1, 2, vec({{0, 1}, {3, 1}})},
        {1, 3, vec({{1, 1}})}, {3, 1, ordered_json::array()}, {2, 1, vec({{3, 1}})},
        {2, 2, ordered_json::array()}, {2, 3, ordered_json::array()},
        {3, 2, vec({{2, 1}})}, {3, 3, vec({{3, 1}})}};
    // separability idempotent: (1+w)(x)(1+w) + b(x)a; coordinates (x,y) -> x*4+y
    j["resolution"]["components"] = {
        {{"rank", 1},
         {"idem", {vec({{0 * 4 + 0, 1}, {0 * 4 + 3, 1}, {2 * 4 + 1, 1}, {3 * 4 + 0, 1},
                        {3 * 4 + 3, 1}})}}}};
    j["resolution"]["augmentation"] = {vec({{0, 1}})};
    return j;
}

// acyclic DG algebra: 1, x (deg 0), y (deg 1), dy = x, products of non-units zero
ordered_json acyclic_dg_json(int p) {
    ordered_json j;
    j["name"] = std::string("dgsq") + (p == 2 ? "" : std::to_string(p));
    j["p"] = p;
    j["expected_smooth"] = true;
    j["algebra"]["basis"] = {basis_elt("1"), basis_elt("x"), basis_elt("y", 1)};
    j["algebra"]["unit"] = 0;
    j["algebra"]["mult"] = {{0, 0, vec({{0, 1}})}, {0, 1, vec({{1, 1}})}, {1, 0, vec({{1, 1}})},
                            {0, 2, vec({{2, 1}})}, {2, 0, vec({{2, 1}})},
                            {1, 1, ordered_json::array()}, {1, 2, ordered_json::array()},
                            {2, 1, ordered_json::array()}, {2, 2, ordered_json::array()}};
    j["algebra"]["diff"] = {{2, vec({{1, 1}})}};
    // multiplication A^e -> A is a quasi-isomorphism here
    j["resolution"]["components"] = {{{"rank", 1}}};
    j["resolution"]["augmentation"] = {vec({{0, 1}})};
    return j;
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> out;
    auto add = [&](const ordered_json& j) {
        out.push_back({j["name"].get<std::string>(), j.dump(2) + "\n"});
    };
    add(ground_field_json(2));
    add(ground_field_json(3));
    add(product_of_fields_json());
    add(dual_numbers_json(2, 0));
    [&] {
        ordered_json f3e = dual_numbers_json(3, 1);
        add(f3e);
    }();
    add(a2_path_json());
    add(matrix_algebra_json());
    add(acyclic_dg_json(2));
    add(acyclic_dg_json(3));
    return out;
}

} // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = build();
    return corpus;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
    std::string base = name;
    auto slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    if (base.size() > 5 && base.substr(base.size() - 5) == ".json")
        base = base.substr(0, base.size() - 5);
    for (const auto& e : builtin_corpus())
        if (e.name == base) return &e;
    return nullptr;
}

} // namespace tatehh
