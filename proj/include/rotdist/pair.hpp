#pragma once

// Tree pair diagrams: ordered pairs (t1, t2) of same-size trees.  The pair
// encodes a group element whose normal form reads off the leaf exponents:
// negative part from t1, positive part from t2.

#include <vector>

#include "rotdist/tree.hpp"
#include "rotdist/word.hpp"

namespace rotdist {

struct TreePair {
    Tree t1; // negative tree
    Tree t2; // positive tree

    friend bool operator==(const TreePair&, const TreePair&) = default;
};

// A pair is reduced when no exposed caret with identical leaf numbers
// occurs in both trees.  The single-caret pair is reduced by convention
// (reduction never deletes the last caret).
bool is_reduced(const TreePair& p);

// Deletes common exposed carets with identical leaf numbers, smallest leaf
// number first, until the pair is reduced.  Idempotent.
TreePair reduce_pair(const TreePair& p);

// Normal form of the pair: exponent f_i of leaf i in t2 feeds the positive
// part, e_i in t1 the negative part.  Unique iff the pair is reduced.
NormalForm word_of_pair(const TreePair& p);

// Minimal-caret-count pair whose leaf exponents realize nf (at least one
// caret, the identity pair being two single carets).
TreePair pair_of_word(const NormalForm& nf);

// Smallest tree whose leaf exponents extend exps by zeros.
Tree tree_from_exponents(const std::vector<int>& exps);

// Product of the group elements, via unreduced representatives with a
// common middle tree; the result is in general unreduced.
TreePair multiply(const TreePair& a, const TreePair& b);

// Canonical reduced pair of a generator; a negative sign swaps the trees.
TreePair generator_pair(const Generator& g);

} // namespace rotdist
