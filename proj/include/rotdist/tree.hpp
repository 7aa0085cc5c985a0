#pragma once

// Rooted binary tree shapes measured in carets (interior nodes), with the
// serialization grammar `tree := "*" | "(" tree " " tree ")"`, leaf and
// caret numbering, leaf exponents, exhaustive enumeration, and spine
// geometry (arms, sibling pairs, G-traces).

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rotdist/errors.hpp"

namespace rotdist {

// Which arm of the spine a location or ancestor lies on.  The root counts
// as the right side of the tree.
enum class Arm { Right, Left };

inline const char* arm_name(Arm a) { return a == Arm::Right ? "right" : "left"; }

// Address of a spine caret: Right level 0 is the root, Right level k is the
// k-th caret down the chain of right edges; Left levels start at 1.
struct CaretLocation {
    Arm arm = Arm::Right;
    int level = 0;

    friend bool operator==(const CaretLocation&, const CaretLocation&) = default;
};

// Immutable tree shape.  A default-constructed Tree is the 0-caret tree (a
// lone leaf); it parses and renders but is rejected by distance operations.
// Copies are O(1) and subtrees are shared.
class Tree {
public:
    Tree() = default;

    static Tree leaf() { return Tree(); }
    static Tree caret(Tree left, Tree right);

    // Root caret plus n-1 right carets.
    static Tree all_right(int n);
    // Mirror image: root caret plus n-1 left carets.
    static Tree left_comb(int n);

    static Tree parse(std::string_view text);
    std::string render() const;

    bool empty() const { return node_ == nullptr; }
    int carets() const;
    int leaves() const { return carets() + 1; }

    // Children; only valid on a nonempty tree.
    const Tree& left() const;
    const Tree& right() const;

    // Number of carets on the chain of right edges from the root (root
    // included), and on the chain of left edges (root excluded).
    int right_arm_length() const;
    int left_arm_length() const;

    // Caret at a spine location, or nullptr when the spine does not reach it.
    const Tree* spine_caret(const CaretLocation& loc) const;

    // Preorder shape encoding (caret = 1, leaf = 0) behind a sentinel bit.
    // Collision-free for trees of up to 31 carets.
    std::uint64_t shape_bits() const;

    friend bool operator==(const Tree& a, const Tree& b);

private:
    struct Node;

    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct Tree::Node {
    Tree left;
    Tree right;
    int carets;
};

inline int Tree::carets() const { return node_ ? node_->carets : 0; }
inline const Tree& Tree::left() const { return node_->left; }
inline const Tree& Tree::right() const { return node_->right; }

// Canonical order: lexicographic on the serialization.
bool canonical_less(const Tree& a, const Tree& b);

struct TreeHash {
    std::size_t operator()(const Tree& t) const { return std::hash<std::uint64_t>()(t.shape_bits()); }
};

// Position of an exposed caret c relative to the spine: r = edge count of
// the path from c's node to its spinal ancestor, s = level of that
// ancestor, arm = which arm it lies on.  labels holds one L/R letter per
// non-spinal node of the path (c's node included), nearest the spine first;
// its length equals r.
struct GTrace {
    int r = 0;
    int s = 0;
    Arm arm = Arm::Right;
    std::string labels;

    friend bool operator==(const GTrace&, const GTrace&) = default;
};

std::string to_string(const GTrace& g);

inline constexpr int kEnumerateCap = 14;

// Exponent of leaf k: the number of ancestors of leaf k reachable by an
// ascending all-left-edge path, counting only ancestors that are not on the
// right side of the tree.  One entry per leaf.
std::vector<int> leaf_exponents(const Tree& t);

// Leaf pairs [i, i+1] of exposed carets, in increasing order of i.
std::vector<std::pair<int, int>> sibling_pairs(const Tree& t);

// All trees with n carets in canonical order.  Catalan(n) entries.
std::vector<Tree> enumerate_trees(int n, int cap = kEnumerateCap);

// G-trace of the exposed caret with leaves [pair.first, pair.second].
// For an exposed caret that is itself a spine caret, returns r = 0 with
// empty labels; throws NotASiblingPair if the pair is not exposed in t.
GTrace g_trace(const Tree& t, std::pair<int, int> pair);

} // namespace rotdist
