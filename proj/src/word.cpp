#include "rotdist/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace rotdist {

namespace {

void validate_generator(Family family, int index) {
    if (index < 0) throw ParameterViolation("generator index must be nonnegative");
    if (family == Family::Y && index < 1) throw ParameterViolation("y-generator index must be >= 1");
}

} // namespace

Generator make_x(int index, int sign) {
    validate_generator(Family::X, index);
    if (sign != 1 && sign != -1) throw ParameterViolation("generator sign must be +1 or -1");
    return Generator{Family::X, index, sign};
}

Generator make_y(int index, int sign) {
    validate_generator(Family::Y, index);
    if (sign != 1 && sign != -1) throw ParameterViolation("generator sign must be +1 or -1");
    return Generator{Family::Y, index, sign};
}

std::string to_string(const Generator& g) {
    std::string out(g.family == Family::X ? "x" : "y");
    out += std::to_string(g.index);
    if (g.sign < 0) out += "^-1";
    return out;
}

Word::Word(std::vector<Letter> letters) {
    for (const Letter& l : letters) push_back(l);
}

Word Word::of(const Generator& g) {
    Word w;
    w.push_back(g);
    return w;
}

void Word::push_back(const Generator& g) {
    push_back(Letter{g.family, g.index, g.sign});
}

void Word::push_back(const Letter& l) {
    if (l.exponent == 0) throw ParameterViolation("letter exponent must be nonzero");
    validate_generator(l.family, l.index);
    // Runs of the same generator with the same sign are one letter; opposite
    // signs stay separate (a script of two mutually inverse rotations is not
    // the empty script).
    if (!letters_.empty()) {
        Letter& back = letters_.back();
        if (back.family == l.family && back.index == l.index &&
            (back.exponent > 0) == (l.exponent > 0)) {
            back.exponent += l.exponent;
            return;
        }
    }
    letters_.push_back(l);
}

int Word::length() const {
    int n = 0;
    for (const Letter& l : letters_) n += std::abs(l.exponent);
    return n;
}

bool Word::x_only() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.family == Family::X; });
}

Word Word::concat(const Word& other) const {
    Word out = *this;
    for (const Letter& l : other.letters_) out.push_back(l);
    return out;
}

Word Word::inverse() const {
    Word out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back(Letter{it->family, it->index, -it->exponent});
    }
    return out;
}

std::vector<Generator> Word::application_order() const {
    std::vector<Generator> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        int sign = it->exponent > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(it->exponent); ++k) {
            out.push_back(Generator{it->family, it->index, sign});
        }
    }
    return out;
}

namespace {

struct WordParser {
    std::string_view text;
    std::size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    int parse_uint() {
        if (peek() < '0' || peek() > '9') fail("expected digit");
        long value = 0;
        while (peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000) fail("index or exponent out of range");
            ++pos;
        }
        return static_cast<int>(value);
    }

    Letter parse_letter() {
        Family family;
        if (peek() == 'x') {
            family = Family::X;
        } else if (peek() == 'y') {
            family = Family::Y;
        } else {
            fail("expected 'x' or 'y'");
        }
        ++pos;
        int index = parse_uint();
        int exponent = 1;
        if (peek() == '^') {
            ++pos;
            int sign = 1;
            if (peek() == '-') {
                sign = -1;
                ++pos;
            } else if (peek() == '+') {
                ++pos;
            }
            exponent = sign * parse_uint();
            if (exponent == 0) fail("exponent must be nonzero");
        }
        if (family == Family::Y && index < 1) fail("y-generator index must be >= 1");
        return Letter{family, index, exponent};
    }
};

} // namespace

Word Word::parse(std::string_view text) {
    Word out;
    if (text.empty()) return out;
    WordParser p{text};
    while (true) {
        out.push_back(p.parse_letter());
        if (p.pos == text.size()) break;
        if (p.peek() != ' ') p.fail("expected single space between letters");
        ++p.pos;
        if (p.pos == text.size()) p.fail("trailing space");
    }
    return out;
}

std::string Word::render() const {
    std::string out;
    for (const Letter& l : letters_) {
        if (!out.empty()) out += ' ';
        out += l.family == Family::X ? 'x' : 'y';
        out += std::to_string(l.index);
        if (l.exponent != 1) {
            out += '^';
            out += std::to_string(l.exponent);
        }
    }
    return out;
}

NormalForm::NormalForm(Part positive, Part negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
    for (const Part* part : {&positive_, &negative_}) {
        int prev = -1;
        for (const auto& [index, exp] : *part) {
            if (index <= prev) throw ParameterViolation("normal form indices must strictly ascend");
            if (index < 0 || exp <= 0) throw ParameterViolation("normal form exponents must be positive");
            prev = index;
        }
    }
}

int NormalForm::length() const {
    int n = 0;
    for (const auto& [index, exp] : positive_) n += exp;
    for (const auto& [index, exp] : negative_) n += exp;
    return n;
}

namespace {

bool part_has(const NormalForm::Part& part, int index) {
    return std::binary_search(part.begin(), part.end(), std::make_pair(index, 0),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
}

bool reduction_condition_holds(const NormalForm& nf, int min_index) {
    for (const auto& [index, exp] : nf.positive()) {
        if (index < min_index) continue;
        if (part_has(nf.negative(), index) && !part_has(nf.positive(), index + 1) &&
            !part_has(nf.negative(), index + 1)) {
            return false;
        }
    }
    return true;
}

} // namespace

bool NormalForm::unique_form() const { return reduction_condition_holds(*this, 0); }

bool NormalForm::partially_reduced_form() const { return reduction_condition_holds(*this, 1); }

Word NormalForm::to_word() const {
    Word out;
    for (const auto& [index, exp] : positive_) out.push_back(Letter{Family::X, index, exp});
    for (auto it = negative_.rbegin(); it != negative_.rend(); ++it) {
        out.push_back(Letter{Family::X, it->first, -it->second});
    }
    return out;
}

namespace {

// Accumulator for right multiplication of a normal form by single letters.
// Both parts ascend by index.  Rewriting rules used while a letter commutes
// into place (i < n everywhere):
//   x_n x_i     = x_i x_{n+1}        x_i^-1 x_n    = x_{n+1} x_i^-1
//   x_n^-1 x_i  = x_i x_{n+1}^-1     x_i^-1 x_n^-1 = x_{n+1}^-1 x_i^-1
// Free cancellation happens only when a positive letter meets the matching
// x_t^-1 inside the negative part; an x_t x_t^-1 pair at the part boundary
// is kept (the reduction pass decides whether it may cancel).
struct Accumulator {
    NormalForm::Part pos;
    NormalForm::Part neg;

    void append_positive(int t) {
        std::size_t b = 0;
        while (b < neg.size() && neg[b].first < t) {
            t += neg[b].second;
            ++b;
        }
        if (b < neg.size() && neg[b].first == t) {
            if (--neg[b].second == 0) neg.erase(neg.begin() + static_cast<std::ptrdiff_t>(b));
            return;
        }
        for (std::size_t k = b; k < neg.size(); ++k) ++neg[k].first;
        // Insert x_t into the positive part from the right.
        std::size_t p = pos.size();
        while (p > 0 && pos[p - 1].first > t) {
            ++pos[p - 1].first;
            --p;
        }
        if (p > 0 && pos[p - 1].first == t) {
            ++pos[p - 1].second;
        } else {
            pos.insert(pos.begin() + static_cast<std::ptrdiff_t>(p), {t, 1});
        }
    }

    void append_negative(int t) {
        std::size_t b = 0;
        while (b < neg.size() && neg[b].first < t) {
            t += neg[b].second;
            ++b;
        }
        if (b < neg.size() && neg[b].first == t) {
            ++neg[b].second;
        } else {
            neg.insert(neg.begin() + static_cast<std::ptrdiff_t>(b), {t, 1});
        }
    }

    void append(const Generator& g) {
        if (g.sign > 0) {
            append_positive(g.index);
        } else {
            append_negative(g.index);
        }
    }
};

NormalForm::Part::iterator find_index(NormalForm::Part& part, int index) {
    return std::find_if(part.begin(), part.end(),
                        [index](const auto& e) { return e.first == index; });
}

// Applies u x_i phi(v) x_i^-1 w -> u v w wherever the reduction condition
// fails, for indices >= min_index, until no reducible index remains.
void reduce_parts(NormalForm::Part& pos, NormalForm::Part& neg, int min_index) {
    for (;;) {
        int target = -1;
        for (const auto& [index, exp] : pos) {
            if (index < min_index) continue;
            auto n = std::find_if(neg.begin(), neg.end(),
                                  [i = index](const auto& e) { return e.first == i; });
            if (n == neg.end()) continue;
            bool successor = find_index(pos, index + 1) != pos.end() ||
                             find_index(neg, index + 1) != neg.end();
            if (!successor) {
                target = index;
                break;
            }
        }
        if (target < 0) return;
        auto p = find_index(pos, target);
        auto n = find_index(neg, target);
        if (--p->second == 0) pos.erase(p);
        if (--n->second == 0) neg.erase(n);
        // Everything of index > target sits between the cancelled pair and
        // shifts down one level.
        for (auto& [index, exp] : pos) {
            if (index > target) --index;
        }
        for (auto& [index, exp] : neg) {
            if (index > target) --index;
        }
    }
}

Accumulator accumulate(const Word& w) {
    Accumulator acc;
    for (const Letter& l : w.letters()) {
        int sign = l.exponent > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(l.exponent); ++k) {
            acc.append(Generator{l.family, l.index, sign});
        }
    }
    return acc;
}

} // namespace

Word expand_y_letters(const Word& w) {
    Word out;
    for (const Letter& l : w.letters()) {
        if (l.family == Family::X) {
            out.push_back(l);
            continue;
        }
        int n = l.index;
        int reps = std::abs(l.exponent);
        for (int k = 0; k < reps; ++k) {
            if (l.exponent > 0) {
                // y_n = x0^n x1 x0^(-n-1)
                out.push_back(Letter{Family::X, 0, n});
                out.push_back(Letter{Family::X, 1, 1});
                out.push_back(Letter{Family::X, 0, -(n + 1)});
            } else {
                out.push_back(Letter{Family::X, 0, n + 1});
                out.push_back(Letter{Family::X, 1, -1});
                out.push_back(Letter{Family::X, 0, -n});
            }
        }
    }
    return out;
}

NormalForm to_unique_normal_form(const Word& w) {
    Accumulator acc = accumulate(expand_y_letters(w));
    reduce_parts(acc.pos, acc.neg, 0);
    return NormalForm(std::move(acc.pos), std::move(acc.neg));
}

NormalForm to_unique_normal_form(const NormalForm& nf) {
    NormalForm::Part pos = nf.positive();
    NormalForm::Part neg = nf.negative();
    reduce_parts(pos, neg, 0);
    return NormalForm(std::move(pos), std::move(neg));
}

NormalForm partial_reduce(const Word& w) {
    if (!w.x_only()) throw ParameterViolation("partial_reduce: word must use x-generators only");
    Accumulator acc = accumulate(w);
    reduce_parts(acc.pos, acc.neg, 1);
    return NormalForm(std::move(acc.pos), std::move(acc.neg));
}

NormalForm partial_reduce(const NormalForm& nf) {
    NormalForm::Part pos = nf.positive();
    NormalForm::Part neg = nf.negative();
    reduce_parts(pos, neg, 1);
    return NormalForm(std::move(pos), std::move(neg));
}

Word shift(const Word& w) {
    if (!w.x_only()) throw ParameterViolation("shift: word must use x-generators only");
    Word out;
    for (const Letter& l : w.letters()) out.push_back(Letter{l.family, l.index + 1, l.exponent});
    return out;
}

int word_length_infinite(const Word& w) { return to_unique_normal_form(w).length(); }

} // namespace rotdist
