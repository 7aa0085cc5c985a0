#include "rotdist/pair.hpp"

#include <algorithm>
#include <cstddef>

namespace rotdist {

namespace {

std::vector<std::pair<int, int>> common_exposed(const TreePair& p) {
    std::vector<std::pair<int, int>> a = sibling_pairs(p.t1);
    std::vector<std::pair<int, int>> b = sibling_pairs(p.t2);
    std::vector<std::pair<int, int>> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Replaces the exposed caret whose left leaf is numbered target with a leaf.
Tree remove_exposed(const Tree& t, int target, int& next_leaf) {
    if (t.empty()) {
        ++next_leaf;
        return t;
    }
    if (t.left().empty() && t.right().empty()) {
        int here = next_leaf;
        next_leaf += 2;
        return here == target ? Tree::leaf() : t;
    }
    Tree l = remove_exposed(t.left(), target, next_leaf);
    Tree r = remove_exposed(t.right(), target, next_leaf);
    return Tree::caret(std::move(l), std::move(r));
}

Tree remove_exposed(const Tree& t, int target) {
    int next_leaf = 0;
    return remove_exposed(t, target, next_leaf);
}

} // namespace

bool is_reduced(const TreePair& p) {
    if (p.t1.carets() != p.t2.carets()) throw SizeMismatch("is_reduced: caret counts differ");
    return p.t1.carets() <= 1 || common_exposed(p).empty();
}

TreePair reduce_pair(const TreePair& p) {
    if (p.t1.carets() != p.t2.carets()) throw SizeMismatch("reduce_pair: caret counts differ");
    TreePair cur = p;
    while (cur.t1.carets() > 1) {
        std::vector<std::pair<int, int>> common = common_exposed(cur);
        if (common.empty()) break;
        int target = common.front().first;
        cur.t1 = remove_exposed(cur.t1, target);
        cur.t2 = remove_exposed(cur.t2, target);
    }
    return cur;
}

namespace {

NormalForm::Part part_from_exponents(const std::vector<int>& exps) {
    NormalForm::Part part;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > 0) part.emplace_back(static_cast<int>(i), exps[i]);
    }
    return part;
}

} // namespace

NormalForm word_of_pair(const TreePair& p) {
    if (p.t1.carets() != p.t2.carets()) throw SizeMismatch("word_of_pair: caret counts differ");
    if (p.t1.empty()) throw SizeMismatch("word_of_pair: trees must have at least one caret");
    return NormalForm(part_from_exponents(leaf_exponents(p.t2)),
                      part_from_exponents(leaf_exponents(p.t1)));
}

namespace {

// Parses the block vector of leaf-contribution counts covering leaves
// [lo, hi] into the tree with hi-lo carets it came from.  counts[lo] has
// already had the caller's own contribution removed where appropriate.
Tree parse_block(std::vector<int>& counts, int lo, int hi) {
    if (lo == hi) return Tree::leaf();
    --counts[static_cast<std::size_t>(lo)];
    int sum = 0;
    int split = lo;
    while (true) {
        sum += counts[static_cast<std::size_t>(split)];
        if (sum == split - lo) break;
        ++split;
        if (split > hi) {
            throw InternalInvariantViolation("tree_from_exponents: unparseable block");
        }
    }
    Tree left = parse_block(counts, lo, split);
    Tree right = parse_block(counts, split + 1, hi);
    return Tree::caret(std::move(left), std::move(right));
}

} // namespace

Tree tree_from_exponents(const std::vector<int>& exps) {
    int last_nonzero = -1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw ParameterViolation("tree_from_exponents: negative exponent");
        if (exps[i] > 0) last_nonzero = static_cast<int>(i);
    }
    // One left subtree per right-arm level; a zero entry is a bare level, a
    // positive entry opens a block that closes once its running exponent sum
    // equals its caret count.
    std::vector<Tree> level_subtrees;
    std::vector<int> counts = exps;
    int pos = 0;
    while (pos <= last_nonzero) {
        if (counts[static_cast<std::size_t>(pos)] == 0) {
            level_subtrees.push_back(Tree::leaf());
            ++pos;
            continue;
        }
        int sum = 0;
        int end = pos;
        while (true) {
            sum += end < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(end)] : 0;
            if (sum == end - pos) break;
            ++end;
        }
        if (end >= static_cast<int>(counts.size())) counts.resize(static_cast<std::size_t>(end) + 1, 0);
        level_subtrees.push_back(parse_block(counts, pos, end));
        pos = end + 1;
    }
    Tree t = Tree::leaf();
    for (auto it = level_subtrees.rbegin(); it != level_subtrees.rend(); ++it) {
        t = Tree::caret(*it, std::move(t));
    }
    std::vector<int> check = leaf_exponents(t);
    for (std::size_t i = 0; i < std::max(check.size(), exps.size()); ++i) {
        int want = i < exps.size() ? exps[i] : 0;
        int got = i < check.size() ? check[i] : 0;
        if (want != got) throw InternalInvariantViolation("tree_from_exponents: round trip failed");
    }
    return t;
}

namespace {

// Extends the right arm by grafting carets onto the rightmost leaf; leaf
// exponents are unchanged.
Tree extend_right_arm(const Tree& t, int extra) {
    if (extra == 0) return t;
    if (t.empty()) return Tree::all_right(extra);
    return Tree::caret(t.left(), extend_right_arm(t.right(), extra));
}

std::vector<int> exponents_of_part(const NormalForm::Part& part) {
    std::vector<int> exps;
    for (const auto& [index, exp] : part) {
        if (static_cast<std::size_t>(index) >= exps.size()) {
            exps.resize(static_cast<std::size_t>(index) + 1, 0);
        }
        exps[static_cast<std::size_t>(index)] = exp;
    }
    return exps;
}

} // namespace

TreePair pair_of_word(const NormalForm& nf) {
    Tree t1 = tree_from_exponents(exponents_of_part(nf.negative()));
    Tree t2 = tree_from_exponents(exponents_of_part(nf.positive()));
    int n = std::max({t1.carets(), t2.carets(), 1});
    return TreePair{extend_right_arm(t1, n - t1.carets()), extend_right_arm(t2, n - t2.carets())};
}

namespace {

// Smallest common refinement: the union of the two shapes.
Tree merge_shapes(const Tree& a, const Tree& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return Tree::caret(merge_shapes(a.left(), b.left()), merge_shapes(a.right(), b.right()));
}

// Subtrees of `refined` sitting at the leaves of `base`; base must be a
// prefix shape of refined.
void grafts_at_leaves(const Tree& base, const Tree& refined, std::vector<Tree>& out) {
    if (base.empty()) {
        out.push_back(refined);
        return;
    }
    if (refined.empty()) {
        throw InternalInvariantViolation("grafts_at_leaves: refinement is not a supershape");
    }
    grafts_at_leaves(base.left(), refined.left(), out);
    grafts_at_leaves(base.right(), refined.right(), out);
}

Tree apply_grafts(const Tree& t, const std::vector<Tree>& grafts, int& next_leaf) {
    if (t.empty()) return grafts[static_cast<std::size_t>(next_leaf++)];
    Tree l = apply_grafts(t.left(), grafts, next_leaf);
    Tree r = apply_grafts(t.right(), grafts, next_leaf);
    return Tree::caret(std::move(l), std::move(r));
}

// Grafts onto the leaves of `target` whatever `refined` adds to `base`
// (matched by leaf number).
Tree transfer_refinement(const Tree& base, const Tree& refined, const Tree& target) {
    std::vector<Tree> grafts;
    grafts_at_leaves(base, refined, grafts);
    int next_leaf = 0;
    return apply_grafts(target, grafts, next_leaf);
}

} // namespace

TreePair multiply(const TreePair& a, const TreePair& b) {
    if (a.t1.carets() != a.t2.carets() || b.t1.carets() != b.t2.carets()) {
        throw SizeMismatch("multiply: caret counts differ within a pair");
    }
    // In a word for a.b the letters of b act first, so the product runs
    // through b's negative side: refine until b.t2 and a.t1 agree and glue
    // there.
    Tree middle = merge_shapes(b.t2, a.t1);
    Tree t1 = transfer_refinement(b.t2, middle, b.t1);
    Tree t2 = transfer_refinement(a.t1, middle, a.t2);
    return TreePair{std::move(t1), std::move(t2)};
}

TreePair generator_pair(const Generator& g) {
    NormalForm nf;
    if (g.family == Family::X) {
        if (g.index < 0) throw ParameterViolation("generator_pair: x index must be >= 0");
        nf = NormalForm({{g.index, 1}}, {});
    } else {
        if (g.index < 1) throw ParameterViolation("generator_pair: y index must be >= 1");
        // y_n = x0^n x1 x0^(-n-1)
        NormalForm::Part pos;
        if (g.index > 0) pos.emplace_back(0, g.index);
        pos.emplace_back(1, 1);
        nf = NormalForm(std::move(pos), {{0, g.index + 1}});
    }
    TreePair p = reduce_pair(pair_of_word(nf));
    if (g.sign < 0) std::swap(p.t1, p.t2);
    return p;
}

} // namespace rotdist
