#pragma once

// Extremal word families with their tree pairs, generating sets, and
// predicted distance bounds.

#include <optional>
#include <string>
#include <vector>

#include "rotdist/genset.hpp"
#include "rotdist/pair.hpp"
#include "rotdist/word.hpp"

namespace rotdist {

struct FamilyInstance {
    std::string name;
    int n = 0;              // caret count of the pair
    std::optional<int> m;   // level / telescope parameters, when applicable
    std::optional<int> cap_level; // I: deepest permitted right-arm level (spinal families)
    Word word;
    TreePair pair;
    GenSet genset = GenSet::all_right_arm();
    std::optional<int> predicted_lower_bound;
    std::optional<int> predicted_upper_bound;
    bool derived = false;   // located by search rather than by a closed form

    std::string params_text() const;
};

// Word x_{m+2} x_{m+3} ... x_{n-2} x_{n-3}^-1 x_{n-4}^-1 ... x_{m+1}^-1
// over genset {x0..xm}; requires n > m+4.  Lower bound 4n-4m-4, upper 4n-8.
FamilyInstance badword(int m, int n);

// Word x0 x1 ... x_{n-2} x_{n-3}^-1 ... x1^-1 x0^-2 of length 2n-2 over the
// full right arm; requires n >= 3.  Exact right-arm distance 2n-2.
FamilyInstance longra(int n);

// Word x_{I+2} x_{I+3}^2 ... x_m^2 x_{m-1}^-2 ... x_{I+2}^-2 x_{I+1}^-1,
// n = 2m-I carets, over {x0..xI} plus the given left levels (default {1});
// requires I >= 1 and m >= I+2.  Lower bound 4n - 4*max(I, max left) - 12,
// upper 4n-8.
FamilyInstance spinalword(int I, int m, std::vector<int> left_levels = {1});

// Same family with one extra caret (n = 2m-I+1, complementing the parity);
// lower bound 4n - 4*max(I, max left) - 10.
FamilyInstance spinal_parity(int I, int m, std::vector<int> left_levels = {1});

} // namespace rotdist
