#include "rotdist/families.hpp"

#include <algorithm>

namespace rotdist {

std::string FamilyInstance::params_text() const {
    std::string out = name + "(";
    bool first = true;
    auto add = [&](const std::string& key, int value) {
        if (!first) out += ", ";
        out += key + "=" + std::to_string(value);
        first = false;
    };
    if (cap_level) add("I", *cap_level);
    if (m) add("m", *m);
    add("n", n);
    out += ")";
    return out;
}

namespace {

FamilyInstance build(std::string name, Word word, GenSet genset) {
    FamilyInstance inst;
    inst.name = std::move(name);
    inst.word = std::move(word);
    inst.pair = pair_of_word(to_unique_normal_form(inst.word));
    inst.n = inst.pair.t1.carets();
    inst.genset = std::move(genset);
    return inst;
}

std::vector<int> levels_up_to(int top) {
    std::vector<int> levels(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) levels[static_cast<std::size_t>(i)] = i;
    return levels;
}

} // namespace

FamilyInstance badword(int m, int n) {
    if (m < 1) throw ParameterViolation("badword: m must be >= 1");
    if (n <= m + 4) throw ParameterViolation("badword: requires n > m + 4");
    Word w;
    for (int i = m + 2; i <= n - 2; ++i) w.push_back(Letter{Family::X, i, 1});
    for (int i = n - 3; i >= m + 1; --i) w.push_back(Letter{Family::X, i, -1});
    FamilyInstance inst = build("badword", std::move(w), GenSet::finite(levels_up_to(m)));
    inst.m = m;
    if (inst.n != n) throw InternalInvariantViolation("badword: pair size mismatch");
    inst.predicted_lower_bound = 4 * n - 4 * m - 4;
    inst.predicted_upper_bound = 4 * n - 8;
    return inst;
}

FamilyInstance longra(int n) {
    if (n < 3) throw ParameterViolation("longra: requires n >= 3");
    Word w;
    for (int i = 0; i <= n - 2; ++i) w.push_back(Letter{Family::X, i, 1});
    for (int i = n - 3; i >= 1; --i) w.push_back(Letter{Family::X, i, -1});
    w.push_back(Letter{Family::X, 0, -2});
    FamilyInstance inst = build("longra", std::move(w), GenSet::all_right_arm());
    if (inst.n != n) throw InternalInvariantViolation("longra: pair size mismatch");
    inst.predicted_lower_bound = 2 * n - 2;
    inst.predicted_upper_bound = 2 * n - 2;
    return inst;
}

namespace {

FamilyInstance spinal_common(const std::string& name, int I, int m, std::vector<int> left_levels,
                             bool parity_variant) {
    if (I < 1) throw ParameterViolation(name + ": I must be >= 1");
    if (m < I + 2) throw ParameterViolation(name + ": requires m >= I + 2");
    if (left_levels.empty()) throw ParameterViolation(name + ": needs at least one left level");
    Word w;
    w.push_back(Letter{Family::X, I + 2, 1});
    for (int i = I + 3; i <= m; ++i) w.push_back(Letter{Family::X, i, 2});
    if (parity_variant) {
        w.push_back(Letter{Family::X, m + 1, 1});
        w.push_back(Letter{Family::X, m, -1});
    }
    for (int i = m - 1; i >= I + 2; --i) w.push_back(Letter{Family::X, i, -2});
    w.push_back(Letter{Family::X, I + 1, -1});

    FamilyInstance inst =
        build(name, std::move(w), GenSet::finite(levels_up_to(I), left_levels));
    inst.m = m;
    inst.cap_level = I;
    int expected_n = parity_variant ? 2 * m - I + 1 : 2 * m - I;
    if (inst.n != expected_n) throw InternalInvariantViolation(name + ": pair size mismatch");
    int deepest = std::max(I, *std::max_element(left_levels.begin(), left_levels.end()));
    int slack = parity_variant ? 10 : 12;
    inst.predicted_lower_bound = std::max(0, 4 * inst.n - 4 * deepest - slack);
    inst.predicted_upper_bound = 4 * inst.n - 8;
    return inst;
}

} // namespace

FamilyInstance spinalword(int I, int m, std::vector<int> left_levels) {
    return spinal_common("spinal", I, m, std::move(left_levels), false);
}

FamilyInstance spinal_parity(int I, int m, std::vector<int> left_levels) {
    return spinal_common("spinal-parity", I, m, std::move(left_levels), true);
}

} // namespace rotdist
