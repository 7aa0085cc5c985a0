#pragma once

// Permitted-rotation-location sets.  A finite set lists right-arm levels
// (always including 0, the root) and optionally left-arm levels; the two
// infinite modes allow every right-arm location or every caret.
//
// Spec string (bit-exact): comma-separated "x<k>" / "y<k>" tokens, or the
// keyword "right-all" or "all-nodes".

#include <string>
#include <string_view>
#include <vector>

#include "rotdist/errors.hpp"
#include "rotdist/rotation.hpp"
#include "rotdist/tree.hpp"

namespace rotdist {

class GenSet {
public:
    enum class Mode { Finite, AllRightArm, AllNodes };

    // Finite set; right_levels must contain 0.
    static GenSet finite(std::vector<int> right_levels, std::vector<int> left_levels = {});
    static GenSet all_right_arm();
    static GenSet all_nodes();

    static GenSet parse(std::string_view spec);
    std::string spec_string() const;

    Mode mode() const { return mode_; }
    const std::vector<int>& right_levels() const { return right_levels_; }
    const std::vector<int>& left_levels() const { return left_levels_; }

    bool finite_right_arm_only() const { return mode_ == Mode::Finite && left_levels_.empty(); }
    bool spinal() const { return mode_ == Mode::Finite && !left_levels_.empty(); }

    // Smallest permitted nonzero right-arm level, or absent.
    bool has_nonzero_right_level() const;
    int min_nonzero_right_level() const;
    // Largest permitted right level <= level, ignoring 0; absent -> -1.
    int best_right_level_at_most(int level) const;

    // Applicable rotations at permitted locations of t, in deterministic
    // order (right levels ascending then left, left rotation first).
    std::vector<RotationStep> permitted_steps(const Tree& t) const;

    friend bool operator==(const GenSet&, const GenSet&) = default;

private:
    Mode mode_ = Mode::Finite;
    std::vector<int> right_levels_; // sorted, unique
    std::vector<int> left_levels_;  // sorted, unique, >= 1
};

} // namespace rotdist
