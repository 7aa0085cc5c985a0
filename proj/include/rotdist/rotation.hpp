#pragma once

// Single rotations at spine locations, the generator <-> rotation
// correspondence, word application as rotation scripts, sibling-pair effect
// classification, and the symbolic G(c) transition rules.

#include <utility>
#include <vector>

#include "rotdist/tree.hpp"
#include "rotdist/word.hpp"

namespace rotdist {

enum class RotationDirection { Left, Right };

inline const char* direction_name(RotationDirection d) {
    return d == RotationDirection::Left ? "left" : "right";
}

struct RotationStep {
    CaretLocation location;
    RotationDirection direction = RotationDirection::Left;

    friend bool operator==(const RotationStep&, const RotationStep&) = default;
};

// A right rotation at a caret needs a caret as its left child; a left
// rotation needs a caret as its right child; and the spine must reach the
// location at all.
bool can_rotate(const Tree& t, const RotationStep& step);

// Right rotation turns the subtree ((A B) C) at the location into
// (A (B C)); left rotation is the inverse.  Caret count and the infix
// order of leaves are preserved.
Tree rotate(const Tree& t, const RotationStep& step);

RotationStep inverse(const RotationStep& step);

// x_k^(+1) is a left rotation at right-arm level k and x_k^(-1) a right
// rotation there; y_k mirrors this on the left arm (y_k^(+1) is a right
// rotation at left-arm level k), so that y_n = x0^n x1 x0^(-n-1) holds as
// an action identity.
RotationStep step_of_generator(const Generator& g);
Generator generator_of_step(const RotationStep& step);

Tree apply_generator(const Tree& t, const Generator& g);

// Applies w as a rotation script, reading letters right to left; throws
// NotApplicableAtStep when some rotation is not applicable, i.e. the word
// is not a valid script for t without adding carets.
Tree apply_word(const Tree& t, const Word& w);

struct SiblingEffect {
    std::vector<std::pair<int, int>> created;
    std::vector<std::pair<int, int>> destroyed;
};

// Difference between the sibling pairs of t and of rotate(t, step).
SiblingEffect sibling_effect(const Tree& t, const RotationStep& step);

// Symbolic update of a G-trace under one spine rotation, per the transition
// tables for same-arm rotations at level k >= 1 and the two root-rotation
// rules.  Throws UnspecifiedCase for configurations the tables do not
// cover (r = 0 anywhere; r = 1 for same-arm rotations at level >= 1, where
// the tables read two labels).
GTrace predict_g_transition(const GTrace& g, const RotationStep& step);

// All applicable rotations at spine locations of t, right arm (levels
// ascending, left before right rotation) then left arm.
std::vector<RotationStep> applicable_spine_steps(const Tree& t);

// Neighbors of t under one rotation at any caret, in deterministic order.
std::vector<Tree> all_rotation_neighbors(const Tree& t);

struct GTableConformanceReport {
    long checked = 0;
    long matched = 0;
    long mismatched = 0;
    long destroyed = 0; // rotation split the pair; no trace to predict
    std::vector<std::pair<std::string, long>> uncovered; // reason -> count
    std::vector<std::string> mismatch_samples;           // capped
    bool pass = false;
};

// Compares predict_g_transition against a recomputed g_trace over every
// tree with n_min..n_max carets, every exposed caret, and every applicable
// spine rotation.  Covered cases must all match; uncovered configurations
// are tallied by reason, never guessed.
GTableConformanceReport check_g_table_conformance(int n_min, int n_max,
                                                  int cap = kEnumerateCap);

} // namespace rotdist
