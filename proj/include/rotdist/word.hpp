#pragma once

// Words over the generators x_i (right-arm rotations) and y_j (left-arm
// rotations, y_n = x0^n x1 x0^(-n-1)), normal forms for the x-generator
// presentation, the complete-rewriting reduction to the unique normal form,
// the partial reduction that exempts x0/x0^(-1) pairs, the shift
// homomorphism, and infinite-generating-set word length.
//
// Word grammar: letters separated by single spaces,
//   letter := ("x" | "y") decimal-index ("^" signed-decimal-exponent)?
// An omitted exponent means +1, e.g. "x0 x2^-1 y1^3".

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rotdist/errors.hpp"

namespace rotdist {

enum class Family { X, Y };

// One signed generator: x_index or y_index to the power sign (+1 or -1).
struct Generator {
    Family family = Family::X;
    int index = 0;
    int sign = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

Generator make_x(int index, int sign = 1);
Generator make_y(int index, int sign = 1);
std::string to_string(const Generator& g);

// A run of identical generators: generator^exponent, exponent nonzero.
struct Letter {
    Family family = Family::X;
    int index = 0;
    int exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

// A word is a sequence of letters; adjacent letters with the same generator
// are merged on construction, so equal group scripts compare equal.  The
// empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word parse(std::string_view text);
    std::string render() const;

    static Word of(const Generator& g);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    // Letter count with multiplicity.
    int length() const;
    bool x_only() const;

    // Appends one generator (or an exponentiated letter) on the right,
    // merging and cancelling against the current last letter.
    void push_back(const Generator& g);
    void push_back(const Letter& l);

    Word concat(const Word& other) const;
    Word inverse() const;

    // Unit generators in application order: the rightmost letter acts on a
    // tree first.
    std::vector<Generator> application_order() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

// Normal form P N: a positive part x_{i1}^{r1} ... x_{ik}^{rk} with
// i1 < ... < ik and a negative part x_{jl}^{-sl} ... x_{j1}^{-s1} with
// j1 < ... < jl, all exponents positive.  Both parts are stored by
// ascending index; rendering emits the negative part in descending order.
class NormalForm {
public:
    using Part = std::vector<std::pair<int, int>>; // (index, exponent > 0), ascending

    NormalForm() = default;
    NormalForm(Part positive, Part negative);

    const Part& positive() const { return positive_; }
    const Part& negative() const { return negative_; }

    bool empty() const { return positive_.empty() && negative_.empty(); }
    // Letter count with multiplicity.
    int length() const;

    // Reduction condition for uniqueness: whenever x_i and x_i^(-1) both
    // occur, so does x_{i+1} or x_{i+1}^(-1).
    bool unique_form() const;
    // Same condition restricted to i > 0.
    bool partially_reduced_form() const;

    Word to_word() const;
    std::string render() const { return to_word().render(); }

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    Part positive_;
    Part negative_;
};

// Rewrites any word over x- and y-generators (y expanded first) into the
// unique normal form of the group element it represents.
NormalForm to_unique_normal_form(const Word& w);
NormalForm to_unique_normal_form(const NormalForm& nf);

// Maximal-length partially reduced normal form: every reduction of the
// unique-normal-form procedure is applied except those cancelling an
// x0/x0^(-1) pair.  The word must use x-generators only.
NormalForm partial_reduce(const Word& w);
NormalForm partial_reduce(const NormalForm& nf);

// Shift homomorphism x_i -> x_{i+1} on x-only words.
Word shift(const Word& w);

// Replaces every y_n^(+-1) with its x-generator expansion.
Word expand_y_letters(const Word& w);

// Word length with respect to the infinite generating set {x_i}: the letter
// count of the unique normal form.
int word_length_infinite(const Word& w);

} // namespace rotdist
