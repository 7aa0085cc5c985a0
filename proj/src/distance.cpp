#include "rotdist/distance.hpp"

#include <algorithm>

#include "rotdist/rotation.hpp"

namespace rotdist {

namespace {

void require_same_size(const Tree& t1, const Tree& t2, const char* who) {
    if (t1.carets() != t2.carets()) {
        throw SizeMismatch(std::string(who) + ": caret counts differ (" +
                           std::to_string(t1.carets()) + " vs " + std::to_string(t2.carets()) +
                           ")");
    }
    if (t1.empty()) throw SizeMismatch(std::string(who) + ": trees must have at least one caret");
}

void require_within_cap(int n, int cap, const char* who) {
    if (n > cap) {
        throw ResourceCap(std::string(who) + ": n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    }
}

} // namespace

RotationGraph::RotationGraph(int n, GenSet gens, int cap) : n_(n), gens_(std::move(gens)) {
    require_within_cap(n, cap, "rotation graph");
    if (n < 1) throw ParameterViolation("rotation graph: n must be >= 1");
    trees_ = enumerate_trees(n, cap);
    index_.reserve(trees_.size() * 2);
    for (int i = 0; i < size(); ++i) {
        index_.emplace(trees_[static_cast<std::size_t>(i)].shape_bits(), i);
    }
    adj_.resize(trees_.size());
    for (int v = 0; v < size(); ++v) {
        const Tree& t = trees_[static_cast<std::size_t>(v)];
        std::vector<Edge>& edges = adj_[static_cast<std::size_t>(v)];
        if (gens_.mode() == GenSet::Mode::AllNodes) {
            for (const Tree& nb : all_rotation_neighbors(t)) {
                edges.push_back(Edge{index_of(nb), Generator{}});
            }
        } else {
            for (const RotationStep& step : gens_.permitted_steps(t)) {
                edges.push_back(Edge{index_of(rotate(t, step)), generator_of_step(step)});
            }
        }
    }
}

int RotationGraph::index_of(const Tree& t) const {
    auto it = index_.find(t.shape_bits());
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> RotationGraph::distances_from(int source) const {
    std::vector<int> dist(trees_.size(), -1);
    std::vector<int> frontier{source};
    dist[static_cast<std::size_t>(source)] = 0;
    int depth = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        ++depth;
        for (int v : frontier) {
            for (const Edge& e : adj_[static_cast<std::size_t>(v)]) {
                if (dist[static_cast<std::size_t>(e.to)] < 0) {
                    dist[static_cast<std::size_t>(e.to)] = depth;
                    next.push_back(e.to);
                }
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

Word RotationGraph::witness(int a, int b) const {
    if (gens_.mode() == GenSet::Mode::AllNodes) {
        throw ParameterViolation("witness: all-nodes scripts have no generator letters");
    }
    std::vector<int> dist_to_b = distances_from(b);
    if (dist_to_b[static_cast<std::size_t>(a)] < 0) {
        throw NotDefined("witness: trees are not connected under this genset");
    }
    // Walk the distance gradient from a, breaking ties toward the smallest
    // canonical index; letters accumulate in application order.
    std::vector<Generator> applied;
    int cur = a;
    while (cur != b) {
        int want = dist_to_b[static_cast<std::size_t>(cur)] - 1;
        int best = -1;
        Generator gen;
        for (const Edge& e : adj_[static_cast<std::size_t>(cur)]) {
            if (dist_to_b[static_cast<std::size_t>(e.to)] == want && (best < 0 || e.to < best)) {
                best = e.to;
                gen = e.gen;
            }
        }
        if (best < 0) throw InternalInvariantViolation("witness: gradient walk stalled");
        applied.push_back(gen);
        cur = best;
    }
    Word w;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) w.push_back(*it);
    return w;
}

DistanceResult d_ra(const Tree& t1, const Tree& t2) {
    require_same_size(t1, t2, "d_ra");
    NormalForm nf = word_of_pair(reduce_pair(TreePair{t1, t2}));
    if (!nf.unique_form()) {
        throw InternalInvariantViolation("d_ra: reduced pair did not give a unique normal form");
    }
    DistanceResult out;
    out.defined = true;
    out.distance = nf.length();
    out.lower_bound = out.upper_bound = nf.length();
    out.bound_source = "normal-form length";
    out.witness = nf.to_word();
    if (apply_word(t1, *out.witness) != t2) {
        throw InternalInvariantViolation("d_ra: normal-form script failed to reach t2");
    }
    return out;
}

bool rra_defined(const Tree& t1, const Tree& t2, const GenSet& s) {
    if (!s.finite_right_arm_only()) {
        throw NotRightArmSet("rra_defined: needs a finite right-arm genset");
    }
    require_same_size(t1, t2, "rra_defined");
    // Definedness is a property of the pair as given; partial reduction of
    // its raw leaf-exponent word decides it.
    NormalForm reduced = partial_reduce(word_of_pair(TreePair{t1, t2}));
    int blocked_below = s.has_nonzero_right_level() ? s.min_nonzero_right_level() : -1;
    auto blocked = [&](const NormalForm::Part& part) {
        for (const auto& [index, exp] : part) {
            if (index >= 1 && (blocked_below < 0 || index <= blocked_below - 1)) return true;
        }
        return false;
    };
    return !blocked(reduced.positive()) && !blocked(reduced.negative());
}

DistanceResult bfs_distance(const Tree& t1, const Tree& t2, const GenSet& s, int cap) {
    require_same_size(t1, t2, "bfs_distance");
    RotationGraph graph(t1.carets(), s, cap);
    int a = graph.index_of(t1);
    int b = graph.index_of(t2);
    std::vector<int> dist = graph.distances_from(a);
    DistanceResult out;
    out.bound_source = "bfs";
    if (dist[static_cast<std::size_t>(b)] < 0) {
        out.defined = false;
        return out;
    }
    out.defined = true;
    out.distance = dist[static_cast<std::size_t>(b)];
    out.lower_bound = out.upper_bound = out.distance;
    if (s.mode() != GenSet::Mode::AllNodes) out.witness = graph.witness(a, b);
    return out;
}

namespace {

// Realizes one x-letter as rotations over the permitted right-arm levels:
// a permitted level applies directly; an out-of-set level j is shifted to
// the deepest permitted level i <= j by j-i root rotations, rotated there,
// and shifted back (the conjugate x0^-(j-i) x_i^sign x0^(j-i) as a word).
void realize_letter(int index, int sign, const GenSet& s, std::vector<Generator>& applied) {
    const std::vector<int>& levels = s.right_levels();
    bool permitted = std::binary_search(levels.begin(), levels.end(), index);
    if (index == 0 || permitted) {
        applied.push_back(make_x(index, sign));
        return;
    }
    int i = s.best_right_level_at_most(index);
    if (i < 1) {
        throw InternalInvariantViolation("witness_sequence: no permitted level below " +
                                         std::to_string(index));
    }
    int shift = index - i;
    for (int k = 0; k < shift; ++k) applied.push_back(make_x(0, 1));
    applied.push_back(make_x(i, sign));
    for (int k = 0; k < shift; ++k) applied.push_back(make_x(0, -1));
}

Word validate_script(const Tree& t1, const Tree& t2, const std::vector<Generator>& applied) {
    Word w;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) w.push_back(*it);
    Tree reached;
    try {
        reached = apply_word(t1, w);
    } catch (const NotApplicable& e) {
        throw InternalInvariantViolation(std::string("witness_sequence: invalid step: ") +
                                         e.what());
    }
    if (reached != t2) {
        throw InternalInvariantViolation("witness_sequence: script reached " + reached.render() +
                                         " instead of t2");
    }
    return w;
}

} // namespace

Word witness_sequence(const Tree& t1, const Tree& t2, const GenSet& s) {
    require_same_size(t1, t2, "witness_sequence");
    if (t1 == t2) return Word();
    if (s.mode() == GenSet::Mode::AllRightArm) {
        DistanceResult res = d_ra(t1, t2);
        return *res.witness;
    }
    if (!s.finite_right_arm_only()) {
        throw NotRightArmSet("witness_sequence: needs a right-arm genset");
    }
    if (!rra_defined(t1, t2, s)) {
        throw NotDefined("witness_sequence: restricted right-arm distance is not defined");
    }
    NormalForm script = partial_reduce(word_of_pair(TreePair{t1, t2}));
    std::vector<Generator> applied;
    for (const Generator& g : script.to_word().application_order()) {
        realize_letter(g.index, g.sign, s, applied);
    }
    return validate_script(t1, t2, applied);
}

UpperBoundReport check_upper_bounds(int n, const GenSet& s, int cap) {
    UpperBoundReport report;
    report.n = n;
    report.genset = s.spec_string();
    switch (s.mode()) {
    case GenSet::Mode::Finite:
        if (n < 3) throw ParameterViolation("check_upper_bounds: 4n-8 bound needs n >= 3");
        report.bound = 4 * n - 8;
        break;
    case GenSet::Mode::AllRightArm:
        report.bound = 2 * n - 2;
        break;
    case GenSet::Mode::AllNodes:
        throw ParameterViolation("check_upper_bounds: use d_r_ordinary_diameter for all-nodes");
    }
    RotationGraph graph(n, s, cap);
    for (int src = 0; src < graph.size(); ++src) {
        std::vector<int> dist = graph.distances_from(src);
        for (int v = 0; v < graph.size(); ++v) {
            int d = dist[static_cast<std::size_t>(v)];
            if (d < 0) {
                ++report.undefined_pairs;
            } else {
                ++report.defined_pairs;
                report.max_distance = std::max(report.max_distance, d);
            }
        }
    }
    report.pass = report.max_distance <= report.bound;
    if (s.mode() == GenSet::Mode::AllRightArm && report.undefined_pairs > 0) report.pass = false;
    return report;
}

LowerBoundReport check_lower_bound_family(const FamilyInstance& inst, int cap) {
    LowerBoundReport report;
    report.family = inst.params_text();
    report.n = inst.n;
    report.genset = inst.genset.spec_string();
    report.predicted_lower_bound = inst.predicted_lower_bound;
    report.predicted_upper_bound = inst.predicted_upper_bound;
    DistanceResult res = bfs_distance(inst.pair.t1, inst.pair.t2, inst.genset, cap);
    report.defined = res.defined;
    if (!res.defined) {
        report.pass = false;
        return report;
    }
    report.distance = *res.distance;
    report.pass = (!report.predicted_lower_bound || report.distance >= *report.predicted_lower_bound) &&
                  (!report.predicted_upper_bound || report.distance <= *report.predicted_upper_bound);
    return report;
}

namespace {

std::pair<int, int> buried_pair(const FamilyInstance& inst, PairSide side) {
    int left;
    if (inst.name == "badword") {
        left = inst.n - 3;
    } else if (inst.name == "spinal" || inst.name == "spinal-parity") {
        if (!inst.m) throw ParameterViolation("check_sibling_persistence: family lacks m");
        left = *inst.m - 1;
        if (inst.name == "spinal-parity") ++left;
    } else {
        throw ParameterViolation("check_sibling_persistence: no buried pair known for family " +
                                 inst.name);
    }
    if (side == PairSide::T2) ++left;
    return {left, left + 1};
}

bool has_pair(const Tree& t, std::pair<int, int> pair) {
    std::vector<std::pair<int, int>> pairs = sibling_pairs(t);
    return std::binary_search(pairs.begin(), pairs.end(), pair);
}

} // namespace

SiblingPersistenceReport check_sibling_persistence(const FamilyInstance& inst, int radius,
                                                   PairSide side, int cap) {
    SiblingPersistenceReport report;
    report.family = inst.params_text();
    report.n = inst.n;
    report.side = side;
    report.pair = buried_pair(inst, side);
    report.radius = radius;

    RotationGraph graph(inst.n, inst.genset, cap);
    const Tree& start = side == PairSide::T1 ? inst.pair.t1 : inst.pair.t2;
    std::vector<int> dist = graph.distances_from(graph.index_of(start));
    report.all_within_radius_contain = true;
    for (int v = 0; v < graph.size(); ++v) {
        int d = dist[static_cast<std::size_t>(v)];
        if (d < 0) continue;
        bool contains = has_pair(graph.trees()[static_cast<std::size_t>(v)], report.pair);
        if (d <= radius) {
            ++report.trees_within_radius;
            if (!contains) report.all_within_radius_contain = false;
        }
        if (!contains && (!report.first_split_depth || d < *report.first_split_depth)) {
            report.first_split_depth = d;
        }
    }
    report.pass = report.all_within_radius_contain;
    return report;
}

namespace {

Tree reflect(const Tree& t) {
    if (t.empty()) return t;
    return Tree::caret(reflect(t.right()), reflect(t.left()));
}

} // namespace

int d_r_ordinary_diameter(int n, int cap) {
    if (n < 1) throw ParameterViolation("d_r_ordinary_diameter: n must be >= 1");
    require_within_cap(n, cap, "d_r_ordinary_diameter");
    RotationGraph graph(n, GenSet::all_nodes(), cap);
    // Reflection is a graph automorphism, so eccentricities come in mirror
    // pairs; sources with a smaller-indexed mirror are skipped.
    std::vector<int> mirror(static_cast<std::size_t>(graph.size()));
    for (int v = 0; v < graph.size(); ++v) {
        mirror[static_cast<std::size_t>(v)] =
            graph.index_of(reflect(graph.trees()[static_cast<std::size_t>(v)]));
    }
    int diameter = 0;
    for (int src = 0; src < graph.size(); ++src) {
        if (mirror[static_cast<std::size_t>(src)] < src) continue;
        std::vector<int> dist = graph.distances_from(src);
        for (int d : dist) {
            if (d < 0) throw InternalInvariantViolation("rotation graph is not connected");
            diameter = std::max(diameter, d);
        }
    }
    return diameter;
}

DiameterWitness max_distance_pair(int n, const GenSet& s, int cap) {
    RotationGraph graph(n, s, cap);
    DiameterWitness best;
    best.distance = -1;
    for (int src = 0; src < graph.size(); ++src) {
        std::vector<int> dist = graph.distances_from(src);
        for (int v = 0; v < graph.size(); ++v) {
            int d = dist[static_cast<std::size_t>(v)];
            if (d > best.distance) {
                best.distance = d;
                best.a = graph.trees()[static_cast<std::size_t>(src)];
                best.b = graph.trees()[static_cast<std::size_t>(v)];
            }
        }
    }
    return best;
}

} // namespace rotdist
