#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotdist {

// Malformed textual input (tree grammar, word grammar, genset spec).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Operation on two trees that requires equal caret counts.
class SizeMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A rotation whose precondition fails (missing caret at the location,
// or the rotated child is a leaf).
class NotApplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A word is not a valid rotation script for the given tree.  step() is the
// 0-based ordinal of the failing rotation in application order (rightmost
// letter of the word applies first).
class NotApplicableAtStep : public NotApplicable {
public:
    NotApplicableAtStep(const std::string& what, std::size_t step)
        : NotApplicable(what + " (step " + std::to_string(step) + ")"), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

class NotASiblingPair : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Restricted distance queried for a pair it is not defined between.
class NotDefined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation requires a finite right-arm generating set.
class NotRightArmSet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// G(c) transition requested for a configuration the transition tables do
// not cover.  Never guessed; callers decide how to recompute.
class UnspecifiedCase : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exhaustive computation requested above the configured size cap.
class ResourceCap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Family or generating-set parameters outside their legal range.
class ParameterViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A guaranteed-valid construction produced an invalid step.  Firing one of
// these is a bug in this library, never a caller error.
class InternalInvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rotdist
