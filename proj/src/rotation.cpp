#include "rotdist/rotation.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

namespace rotdist {

namespace {

std::string step_text(const RotationStep& step) {
    return std::string(direction_name(step.direction)) + " rotation at " +
           arm_name(step.location.arm) + "-arm level " + std::to_string(step.location.level);
}

Tree rotate_here(const Tree& m, RotationDirection d) {
    if (d == RotationDirection::Right) {
        const Tree& l = m.left();
        return Tree::caret(l.left(), Tree::caret(l.right(), m.right()));
    }
    const Tree& r = m.right();
    return Tree::caret(Tree::caret(m.left(), r.left()), r.right());
}

Tree rotate_at(const Tree& t, Arm arm, int level, RotationDirection d) {
    if (level == 0) return rotate_here(t, d);
    if (arm == Arm::Right) return Tree::caret(t.left(), rotate_at(t.right(), arm, level - 1, d));
    return Tree::caret(rotate_at(t.left(), arm, level - 1, d), t.right());
}

} // namespace

bool can_rotate(const Tree& t, const RotationStep& step) {
    const Tree* m = t.spine_caret(step.location);
    if (m == nullptr) return false;
    return step.direction == RotationDirection::Right ? !m->left().empty() : !m->right().empty();
}

Tree rotate(const Tree& t, const RotationStep& step) {
    if (!can_rotate(t, step)) throw NotApplicable(step_text(step) + " is not applicable");
    return rotate_at(t, step.location.arm, step.location.level, step.direction);
}

RotationStep inverse(const RotationStep& step) {
    RotationStep out = step;
    out.direction = step.direction == RotationDirection::Left ? RotationDirection::Right
                                                              : RotationDirection::Left;
    return out;
}

RotationStep step_of_generator(const Generator& g) {
    if (g.family == Family::X) {
        if (g.index < 0) throw ParameterViolation("x-generator index must be >= 0");
        return RotationStep{CaretLocation{Arm::Right, g.index},
                            g.sign > 0 ? RotationDirection::Left : RotationDirection::Right};
    }
    if (g.index < 1) throw ParameterViolation("y-generator index must be >= 1");
    return RotationStep{CaretLocation{Arm::Left, g.index},
                        g.sign > 0 ? RotationDirection::Right : RotationDirection::Left};
}

Generator generator_of_step(const RotationStep& step) {
    if (step.location.arm == Arm::Right) {
        return Generator{Family::X, step.location.level,
                         step.direction == RotationDirection::Left ? 1 : -1};
    }
    return Generator{Family::Y, step.location.level,
                     step.direction == RotationDirection::Right ? 1 : -1};
}

Tree apply_generator(const Tree& t, const Generator& g) {
    return rotate(t, step_of_generator(g));
}

Tree apply_word(const Tree& t, const Word& w) {
    Tree cur = t;
    std::size_t step_index = 0;
    for (const Generator& g : w.application_order()) {
        RotationStep step = step_of_generator(g);
        if (!can_rotate(cur, step)) {
            throw NotApplicableAtStep(to_string(g) + ": " + step_text(step) +
                                          " is not applicable to " + cur.render(),
                                      step_index);
        }
        cur = rotate_at(cur, step.location.arm, step.location.level, step.direction);
        ++step_index;
    }
    return cur;
}

SiblingEffect sibling_effect(const Tree& t, const RotationStep& step) {
    std::vector<std::pair<int, int>> before = sibling_pairs(t);
    std::vector<std::pair<int, int>> after = sibling_pairs(rotate(t, step));
    SiblingEffect out;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(out.created));
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::back_inserter(out.destroyed));
    return out;
}

namespace {

[[noreturn]] void uncovered(const std::string& what) { throw UnspecifiedCase(what); }

void validate_trace(const GTrace& g) {
    if (g.r < 0 || g.s < 0 || static_cast<int>(g.labels.size()) != g.r) {
        throw ParameterViolation("predict_g_transition: malformed trace " + to_string(g));
    }
    if (g.r >= 1) {
        char head = g.arm == Arm::Right ? 'L' : 'R';
        if (g.labels[0] != head) {
            throw ParameterViolation("predict_g_transition: trace labels must begin with " +
                                     std::string(1, head) + " on the " + arm_name(g.arm) + " arm");
        }
    }
}

// Rotation at the root: with the spinal ancestor at level 1, the rotation
// pulling that side of the tree up moves the ancestor across the root and
// the path's first label flips; otherwise the ancestor's level shifts by
// one and the path is untouched.
GTrace root_transition(const GTrace& g, RotationDirection d) {
    GTrace out = g;
    bool ancestor_side_rises = (g.arm == Arm::Right) == (d == RotationDirection::Left);
    if (!ancestor_side_rises) {
        out.s = g.s + 1;
        return out;
    }
    if (g.s >= 2) {
        out.s = g.s - 1;
        return out;
    }
    out.arm = g.arm == Arm::Right ? Arm::Left : Arm::Right;
    out.labels[0] = out.labels[0] == 'L' ? 'R' : 'L';
    return out;
}

} // namespace

GTrace predict_g_transition(const GTrace& g, const RotationStep& step) {
    validate_trace(g);
    if (g.r == 0) uncovered("trace with r = 0 (exposed caret on the spine)");

    const int k = step.location.level;
    if (k == 0) return root_transition(g, step.direction);

    GTrace out = g;
    if (step.location.arm != g.arm) return out;

    if (g.r < 2) uncovered("same-arm rotation with r = 1 (tables read two labels)");

    // Mirror-symmetric tables; normalize to the right-arm reading where the
    // first label is L, a left rotation moves material up the arm, and a
    // second label L means the path immediately doubles back.
    bool mirrored = g.arm == Arm::Left;
    bool up = mirrored ? step.direction == RotationDirection::Right
                       : step.direction == RotationDirection::Left;
    char inner = mirrored ? 'R' : 'L';
    char second = g.labels[1];

    if (k < g.s - 1) {
        out.s = up ? g.s - 1 : g.s + 1;
    } else if (k == g.s - 1) {
        if (up) {
            out.r = g.r + 1;
            out.s = g.s - 1;
            // New non-spinal node enters at the head; the old head becomes a
            // sibling-side child.
            out.labels = std::string(1, inner) + (inner == 'L' ? 'R' : 'L') + g.labels.substr(1);
        } else {
            out.s = g.s + 1;
        }
    } else if (k == g.s) {
        if (up) {
            out.r = g.r + 1;
            out.labels = std::string(1, inner) + g.labels;
        } else if (second == inner) {
            out.r = g.r - 1;
            out.labels = g.labels.substr(1);
        } else {
            out.r = g.r - 1;
            out.s = g.s + 1;
            out.labels = std::string(1, inner) + g.labels.substr(2);
        }
    }
    // k > s: unchanged.
    return out;
}

std::vector<RotationStep> applicable_spine_steps(const Tree& t) {
    std::vector<RotationStep> out;
    int right = t.right_arm_length();
    for (int k = 0; k < right; ++k) {
        for (RotationDirection d : {RotationDirection::Left, RotationDirection::Right}) {
            RotationStep step{CaretLocation{Arm::Right, k}, d};
            if (can_rotate(t, step)) out.push_back(step);
        }
    }
    int left = t.left_arm_length();
    for (int k = 1; k <= left; ++k) {
        for (RotationDirection d : {RotationDirection::Left, RotationDirection::Right}) {
            RotationStep step{CaretLocation{Arm::Left, k}, d};
            if (can_rotate(t, step)) out.push_back(step);
        }
    }
    return out;
}

namespace {

using Wrap = std::function<Tree(Tree)>;

void collect_neighbors(const Tree& t, const Wrap& wrap, std::vector<Tree>& out) {
    if (t.empty()) return;
    if (!t.right().empty()) out.push_back(wrap(rotate_here(t, RotationDirection::Left)));
    if (!t.left().empty()) out.push_back(wrap(rotate_here(t, RotationDirection::Right)));
    collect_neighbors(
        t.left(), [&](Tree sub) { return wrap(Tree::caret(std::move(sub), t.right())); }, out);
    collect_neighbors(
        t.right(), [&](Tree sub) { return wrap(Tree::caret(t.left(), std::move(sub))); }, out);
}

} // namespace

std::vector<Tree> all_rotation_neighbors(const Tree& t) {
    std::vector<Tree> out;
    collect_neighbors(t, [](Tree sub) { return sub; }, out);
    return out;
}

GTableConformanceReport check_g_table_conformance(int n_min, int n_max, int cap) {
    GTableConformanceReport report;
    auto count_uncovered = [&](const std::string& reason) {
        for (auto& [key, count] : report.uncovered) {
            if (key == reason) {
                ++count;
                return;
            }
        }
        report.uncovered.emplace_back(reason, 1);
    };
    for (int n = n_min; n <= n_max; ++n) {
        for (const Tree& t : enumerate_trees(n, cap)) {
            std::vector<RotationStep> steps = applicable_spine_steps(t);
            for (const auto& pair : sibling_pairs(t)) {
                GTrace before = g_trace(t, pair);
                for (const RotationStep& step : steps) {
                    Tree rotated = rotate(t, step);
                    GTrace after;
                    try {
                        after = g_trace(rotated, pair);
                    } catch (const NotASiblingPair&) {
                        ++report.destroyed;
                        continue;
                    }
                    GTrace predicted;
                    try {
                        predicted = predict_g_transition(before, step);
                    } catch (const UnspecifiedCase& e) {
                        count_uncovered(e.what());
                        continue;
                    }
                    ++report.checked;
                    if (predicted == after) {
                        ++report.matched;
                    } else {
                        ++report.mismatched;
                        if (report.mismatch_samples.size() < 10) {
                            report.mismatch_samples.push_back(
                                t.render() + " pair [" + std::to_string(pair.first) + "," +
                                std::to_string(pair.second) + "] " +
                                direction_name(step.direction) + "@" +
                                arm_name(step.location.arm) + ":" +
                                std::to_string(step.location.level) + " predicted " +
                                to_string(predicted) + " actual " + to_string(after));
                        }
                    }
                }
            }
        }
    }
    report.pass = report.mismatched == 0;
    return report;
}

} // namespace rotdist
