#include "rotdist/tree.hpp"

#include <algorithm>
#include <functional>

namespace rotdist {

Tree Tree::caret(Tree left, Tree right) {
    int n = left.carets() + right.carets() + 1;
    return Tree(std::make_shared<const Node>(Node{std::move(left), std::move(right), n}));
}

Tree Tree::all_right(int n) {
    if (n < 0) throw ParameterViolation("all_right: caret count must be nonnegative");
    Tree t = leaf();
    for (int i = 0; i < n; ++i) t = caret(leaf(), std::move(t));
    return t;
}

Tree Tree::left_comb(int n) {
    if (n < 0) throw ParameterViolation("left_comb: caret count must be nonnegative");
    Tree t = leaf();
    for (int i = 0; i < n; ++i) t = caret(std::move(t), leaf());
    return t;
}

namespace {

struct TreeParser {
    std::string_view text;
    std::size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    Tree parse() {
        char c = peek();
        if (c == '*') {
            ++pos;
            return Tree::leaf();
        }
        if (c == '(') {
            ++pos;
            Tree left = parse();
            if (peek() != ' ') fail("expected single space between subtrees");
            ++pos;
            Tree right = parse();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return Tree::caret(std::move(left), std::move(right));
        }
        fail("expected '*' or '('");
    }
};

} // namespace

Tree Tree::parse(std::string_view text) {
    TreeParser p{text};
    Tree t = p.parse();
    if (p.pos != text.size()) p.fail("trailing input after tree");
    return t;
}

namespace {

void render_into(const Tree& t, std::string& out) {
    if (t.empty()) {
        out += '*';
        return;
    }
    out += '(';
    render_into(t.left(), out);
    out += ' ';
    render_into(t.right(), out);
    out += ')';
}

} // namespace

std::string Tree::render() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(4 * carets() + 1));
    render_into(*this, out);
    return out;
}

int Tree::right_arm_length() const {
    int len = 0;
    for (const Tree* t = this; !t->empty(); t = &t->right()) ++len;
    return len;
}

int Tree::left_arm_length() const {
    if (empty()) return 0;
    int len = 0;
    for (const Tree* t = &left(); !t->empty(); t = &t->left()) ++len;
    return len;
}

const Tree* Tree::spine_caret(const CaretLocation& loc) const {
    if (loc.level < 0 || (loc.arm == Arm::Left && loc.level < 1)) return nullptr;
    const Tree* t = this;
    for (int i = 0; i < loc.level; ++i) {
        if (t->empty()) return nullptr;
        t = loc.arm == Arm::Right ? &t->right() : &t->left();
    }
    return t->empty() ? nullptr : t;
}

namespace {

void shape_bits_into(const Tree& t, std::uint64_t& bits) {
    if (t.empty()) {
        bits <<= 1;
        return;
    }
    bits = (bits << 1) | 1u;
    shape_bits_into(t.left(), bits);
    shape_bits_into(t.right(), bits);
}

} // namespace

std::uint64_t Tree::shape_bits() const {
    if (carets() > 31) throw ResourceCap("shape_bits: tree too large to encode in 64 bits");
    std::uint64_t bits = 1;
    shape_bits_into(*this, bits);
    return bits;
}

bool operator==(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return true;
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    if (a.carets() != b.carets()) return false;
    return a.left() == b.left() && a.right() == b.right();
}

bool canonical_less(const Tree& a, const Tree& b) {
    return a.render() < b.render();
}

std::string to_string(const GTrace& g) {
    return "(r=" + std::to_string(g.r) + ", s=" + std::to_string(g.s) + ", arm=" + arm_name(g.arm) +
           ", labels=" + (g.labels.empty() ? std::string("-") : g.labels) + ")";
}

namespace {

// Every caret not on the right side contributes 1 to the exponent of its
// leftmost leaf; the right side is the root plus the right-arm carets.
void exponents_walk(const Tree& t, bool on_right_side, int& next_leaf, std::vector<int>& exps) {
    if (t.empty()) {
        ++next_leaf;
        return;
    }
    if (!on_right_side) ++exps[next_leaf];
    exponents_walk(t.left(), false, next_leaf, exps);
    exponents_walk(t.right(), on_right_side, next_leaf, exps);
}

} // namespace

std::vector<int> leaf_exponents(const Tree& t) {
    std::vector<int> exps(static_cast<std::size_t>(t.leaves()), 0);
    int next_leaf = 0;
    exponents_walk(t, true, next_leaf, exps);
    return exps;
}

namespace {

void sibling_walk(const Tree& t, int& next_leaf, std::vector<std::pair<int, int>>& out) {
    if (t.empty()) {
        ++next_leaf;
        return;
    }
    if (t.left().empty() && t.right().empty()) {
        out.emplace_back(next_leaf, next_leaf + 1);
        next_leaf += 2;
        return;
    }
    sibling_walk(t.left(), next_leaf, out);
    sibling_walk(t.right(), next_leaf, out);
}

} // namespace

std::vector<std::pair<int, int>> sibling_pairs(const Tree& t) {
    std::vector<std::pair<int, int>> out;
    int next_leaf = 0;
    sibling_walk(t, next_leaf, out);
    return out;
}

std::vector<Tree> enumerate_trees(int n, int cap) {
    if (n < 0) throw ParameterViolation("enumerate_trees: caret count must be nonnegative");
    if (n > cap) {
        throw ResourceCap("enumerate_trees: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    }
    std::vector<std::vector<Tree>> by_size(static_cast<std::size_t>(n) + 1);
    by_size[0] = {Tree::leaf()};
    for (int m = 1; m <= n; ++m) {
        for (int k = 0; k < m; ++k) {
            for (const Tree& l : by_size[static_cast<std::size_t>(k)]) {
                for (const Tree& r : by_size[static_cast<std::size_t>(m - 1 - k)]) {
                    by_size[static_cast<std::size_t>(m)].push_back(Tree::caret(l, r));
                }
            }
        }
    }
    std::vector<Tree>& raw = by_size[static_cast<std::size_t>(n)];
    std::vector<std::pair<std::string, Tree>> keyed;
    keyed.reserve(raw.size());
    for (Tree& t : raw) keyed.emplace_back(t.render(), std::move(t));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Tree> out;
    out.reserve(keyed.size());
    for (auto& [key, tree] : keyed) out.push_back(std::move(tree));
    return out;
}

namespace {

// Edge path from the root to the exposed caret whose left leaf is number i;
// 'L'/'R' per edge.  Returns false when leaf i is not the left leaf of an
// exposed caret.
bool locate_exposed(const Tree& t, int target, int& next_leaf, std::string& path, bool& found) {
    if (t.empty()) {
        ++next_leaf;
        return false;
    }
    if (t.left().empty() && t.right().empty()) {
        if (next_leaf == target) {
            found = true;
            return true;
        }
        next_leaf += 2;
        return false;
    }
    path += 'L';
    if (locate_exposed(t.left(), target, next_leaf, path, found)) return true;
    path.pop_back();
    path += 'R';
    if (locate_exposed(t.right(), target, next_leaf, path, found)) return true;
    path.pop_back();
    return false;
}

} // namespace

GTrace g_trace(const Tree& t, std::pair<int, int> pair) {
    if (pair.second != pair.first + 1 || pair.first < 0) {
        throw NotASiblingPair("g_trace: leaves " + std::to_string(pair.first) + "," +
                              std::to_string(pair.second) + " are not of the form [i, i+1]");
    }
    std::string path;
    int next_leaf = 0;
    bool found = false;
    locate_exposed(t, pair.first, next_leaf, path, found);
    if (!found) {
        throw NotASiblingPair("g_trace: no exposed caret with leaves [" +
                              std::to_string(pair.first) + ", " + std::to_string(pair.second) +
                              "]");
    }
    // Spine prefix of the path: the run of leading R edges, or of leading L
    // edges; the deepest spine node on the path is the spinal ancestor.
    int depth = static_cast<int>(path.size());
    int spine = 0;
    if (!path.empty()) {
        char armc = path[0];
        while (spine < depth && path[static_cast<std::size_t>(spine)] == armc) ++spine;
    }
    GTrace g;
    g.s = spine;
    g.r = depth - spine;
    g.arm = (spine == 0 || path[0] == 'R') ? Arm::Right : Arm::Left;
    g.labels = path.substr(static_cast<std::size_t>(spine));
    return g;
}

} // namespace rotdist
