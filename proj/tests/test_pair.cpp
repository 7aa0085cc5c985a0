#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "rotdist/pair.hpp"
#include "rotdist/rotation.hpp"
#include "rotdist/tree.hpp"
#include "rotdist/word.hpp"

using namespace rotdist;

namespace {

Tree T(const std::string& text) { return Tree::parse(text); }

TreePair P(const std::string& t1, const std::string& t2) { return TreePair{T(t1), T(t2)}; }

} // namespace

TEST_CASE("word_of_pair reads leaf exponents") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(word_of_pair(TreePair{Tree::all_right(n), Tree::all_right(n)}).empty());
    }
    CHECK(word_of_pair(P("((* *) *)", "(* (* *))")).render() == "x0^-1");
    CHECK(word_of_pair(P("(* (* (* *)))", "(* ((* *) *))")).render() == "x1");
    CHECK_THROWS_AS(word_of_pair(P("(* *)", "(* (* *))")), SizeMismatch);
    CHECK_THROWS_AS(word_of_pair(P("*", "*")), SizeMismatch);
}

TEST_CASE("pair_of_word builds minimal pairs") {
    TreePair x0 = pair_of_word(NormalForm({{0, 1}}, {}));
    CHECK(x0.t1 == Tree::all_right(2));
    CHECK(x0.t2 == Tree::left_comb(2));

    TreePair id = pair_of_word(NormalForm());
    CHECK(id.t1 == Tree::all_right(1));
    CHECK(id.t2 == Tree::all_right(1));

    // x3 x4 x3^-1 x2^-1 has a 6-caret pair with buried sibling pairs.
    NormalForm bad({{3, 1}, {4, 1}}, {{2, 1}, {3, 1}});
    TreePair p = pair_of_word(bad);
    CHECK(p.t1.carets() == 6);
    std::vector<std::pair<int, int>> in_t1 = sibling_pairs(p.t1);
    std::vector<std::pair<int, int>> in_t2 = sibling_pairs(p.t2);
    CHECK(std::count(in_t1.begin(), in_t1.end(), std::pair<int, int>{3, 4}) == 1);
    CHECK(std::count(in_t2.begin(), in_t2.end(), std::pair<int, int>{4, 5}) == 1);
}

TEST_CASE("reduce_pair") {
    TreePair reduced = P("(* (* (* *)))", "(* ((* *) *))");
    CHECK(reduce_pair(reduced) == reduced);
    CHECK(is_reduced(reduced));

    // The one-caret-larger representative of x1 reduces back to it.
    TreePair primed = P("((* *) (* (* *)))", "((* *) ((* *) *))");
    CHECK_FALSE(is_reduced(primed));
    CHECK(reduce_pair(primed) == reduced);

    for (int n = 1; n <= 5; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            TreePair same = reduce_pair(TreePair{t, t});
            CHECK(same.t1 == Tree::all_right(1));
            CHECK(same.t2 == Tree::all_right(1));
        }
    }
    CHECK(is_reduced(TreePair{Tree::all_right(1), Tree::all_right(1)}));
}

TEST_CASE("round trips on reduced pairs, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<Tree> trees = enumerate_trees(n);
        for (const Tree& a : trees) {
            for (const Tree& b : trees) {
                TreePair p{a, b};
                NormalForm nf = word_of_pair(p);
                // Reducedness matches the uniqueness condition, except that a
                // common exposed caret at the bottom of the right arm is
                // invisible to leaf exponents: the pair is then unreduced
                // while the word can still be in unique form.
                auto pa = sibling_pairs(a);
                auto pb = sibling_pairs(b);
                std::pair<int, int> rightmost{n - 1, n};
                bool rightmost_common =
                    std::binary_search(pa.begin(), pa.end(), rightmost) &&
                    std::binary_search(pb.begin(), pb.end(), rightmost);
                bool expect_reduced = n == 1 || (nf.unique_form() && !rightmost_common);
                CHECK(is_reduced(p) == expect_reduced);
                if (is_reduced(p)) CHECK(nf.unique_form());
                if (is_reduced(p)) {
                    CHECK(reduce_pair(pair_of_word(nf)) == p);
                    CHECK(pair_of_word(nf).t1.carets() <= n);
                }
                // The leaf-exponent word is a rotation script from t1 to t2.
                CHECK(apply_word(a, nf.to_word()) == b);
            }
        }
    }
}

TEST_CASE("multiply agrees with normal-form concatenation") {
    TreePair x0 = generator_pair(make_x(0));
    TreePair x1 = generator_pair(make_x(1));
    TreePair x0inv = generator_pair(make_x(0, -1));

    TreePair prod = reduce_pair(multiply(x0, pair_of_word(NormalForm())));
    CHECK(prod == x0);

    TreePair idp = reduce_pair(multiply(x0, x0inv));
    CHECK(idp.t1 == idp.t2);

    CHECK(reduce_pair(multiply(x0, x1)) ==
          pair_of_word(to_unique_normal_form(Word::parse("x0 x1"))));

    // Exhaustive agreement on 3-caret pairs.
    std::vector<Tree> trees = enumerate_trees(3);
    for (const Tree& a1 : trees) {
        for (const Tree& a2 : trees) {
            for (const Tree& b1 : trees) {
                for (const Tree& b2 : trees) {
                    TreePair a{a1, a2};
                    TreePair b{b1, b2};
                    NormalForm expected = to_unique_normal_form(
                        word_of_pair(a).to_word().concat(word_of_pair(b).to_word()));
                    CHECK(word_of_pair(reduce_pair(multiply(a, b))) == expected);
                }
            }
        }
    }
}

TEST_CASE("generator pairs") {
    TreePair x0 = generator_pair(make_x(0));
    CHECK(x0.t1 == Tree::all_right(2));
    CHECK(x0.t2 == Tree::left_comb(2));

    TreePair x1 = generator_pair(make_x(1));
    CHECK(x1.t1 == Tree::all_right(3));
    CHECK(x1.t2 == T("(* ((* *) *))"));

    TreePair y1 = generator_pair(make_y(1));
    CHECK(y1 == reduce_pair(pair_of_word(to_unique_normal_form(Word::parse("x0 x1 x0^-2")))));

    TreePair x2inv = generator_pair(make_x(2, -1));
    CHECK(x2inv.t1 == generator_pair(make_x(2)).t2);
    CHECK(x2inv.t2 == generator_pair(make_x(2)).t1);

    // Action consistency: the positive generator rotates t1 to t2.
    for (const Generator& g : {make_x(0), make_x(1), make_y(1)}) {
        TreePair p = generator_pair(g);
        CHECK(apply_word(p.t1, Word::of(g)) == p.t2);
    }
}

TEST_CASE("tree_from_exponents realizes arbitrary exponent maps") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> val(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> exps(8);
        for (int& e : exps) e = val(rng);
        Tree t = tree_from_exponents(exps);
        std::vector<int> got = leaf_exponents(t);
        for (std::size_t i = 0; i < std::max(got.size(), exps.size()); ++i) {
            int want = i < exps.size() ? exps[i] : 0;
            CHECK((i < got.size() ? got[i] : 0) == want);
        }
    }
    CHECK(tree_from_exponents({}) == T("*"));
    CHECK(tree_from_exponents({1}) == Tree::left_comb(2));
    CHECK(tree_from_exponents({0, 1}) == T("(* ((* *) *))"));
    CHECK(tree_from_exponents({2}) == Tree::left_comb(3));
}
