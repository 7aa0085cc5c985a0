#include "rotdist/genset.hpp"

#include <algorithm>

namespace rotdist {

namespace {

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

GenSet GenSet::finite(std::vector<int> right_levels, std::vector<int> left_levels) {
    GenSet s;
    s.mode_ = Mode::Finite;
    s.right_levels_ = std::move(right_levels);
    s.left_levels_ = std::move(left_levels);
    sort_unique(s.right_levels_);
    sort_unique(s.left_levels_);
    if (s.right_levels_.empty() || s.right_levels_.front() != 0) {
        throw ParameterViolation("genset: a finite set must contain x0");
    }
    if (!s.left_levels_.empty() && s.left_levels_.front() < 1) {
        throw ParameterViolation("genset: left-arm levels start at 1");
    }
    return s;
}

GenSet GenSet::all_right_arm() {
    GenSet s;
    s.mode_ = Mode::AllRightArm;
    return s;
}

GenSet GenSet::all_nodes() {
    GenSet s;
    s.mode_ = Mode::AllNodes;
    return s;
}

GenSet GenSet::parse(std::string_view spec) {
    if (spec == "right-all") return all_right_arm();
    if (spec == "all-nodes") return all_nodes();
    std::vector<int> right;
    std::vector<int> left;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        char fam = spec[pos];
        if (fam != 'x' && fam != 'y') throw ParseError("genset: expected 'x' or 'y'", pos);
        ++pos;
        if (pos >= spec.size() || spec[pos] < '0' || spec[pos] > '9') {
            throw ParseError("genset: expected level digits", pos);
        }
        long level = 0;
        while (pos < spec.size() && spec[pos] >= '0' && spec[pos] <= '9') {
            level = level * 10 + (spec[pos] - '0');
            if (level > 1'000'000) throw ParseError("genset: level out of range", pos);
            ++pos;
        }
        (fam == 'x' ? right : left).push_back(static_cast<int>(level));
        if (pos < spec.size()) {
            if (spec[pos] != ',') throw ParseError("genset: expected ','", pos);
            ++pos;
            if (pos == spec.size()) throw ParseError("genset: trailing ','", pos);
        }
    }
    if (right.empty() && left.empty()) throw ParseError("genset: empty spec", 0);
    return finite(std::move(right), std::move(left));
}

std::string GenSet::spec_string() const {
    if (mode_ == Mode::AllRightArm) return "right-all";
    if (mode_ == Mode::AllNodes) return "all-nodes";
    std::string out;
    for (int level : right_levels_) {
        if (!out.empty()) out += ',';
        out += 'x';
        out += std::to_string(level);
    }
    for (int level : left_levels_) {
        if (!out.empty()) out += ',';
        out += 'y';
        out += std::to_string(level);
    }
    return out;
}

bool GenSet::has_nonzero_right_level() const {
    return mode_ == Mode::Finite && right_levels_.size() > 1;
}

int GenSet::min_nonzero_right_level() const {
    if (!has_nonzero_right_level()) {
        throw ParameterViolation("genset: no nonzero right-arm level");
    }
    return right_levels_[1];
}

int GenSet::best_right_level_at_most(int level) const {
    int best = -1;
    for (int k : right_levels_) {
        if (k >= 1 && k <= level) best = k;
    }
    return best;
}

std::vector<RotationStep> GenSet::permitted_steps(const Tree& t) const {
    std::vector<RotationStep> out;
    auto try_push = [&](Arm arm, int level) {
        for (RotationDirection d : {RotationDirection::Left, RotationDirection::Right}) {
            RotationStep step{CaretLocation{arm, level}, d};
            if (can_rotate(t, step)) out.push_back(step);
        }
    };
    switch (mode_) {
    case Mode::Finite:
        for (int level : right_levels_) try_push(Arm::Right, level);
        for (int level : left_levels_) try_push(Arm::Left, level);
        break;
    case Mode::AllRightArm: {
        int arm = t.right_arm_length();
        for (int level = 0; level < arm; ++level) try_push(Arm::Right, level);
        break;
    }
    case Mode::AllNodes:
        throw ParameterViolation("permitted_steps: all-nodes rotations are not spine steps");
    }
    return out;
}

} // namespace rotdist
