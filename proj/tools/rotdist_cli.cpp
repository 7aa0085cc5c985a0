// Command-line front end: distance queries, bound verification, normal
// forms, and extremal families.  Exit codes: 0 success, 1 undefined
// distance or failed verification, 2 malformed input or parameters.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rotdist/distance.hpp"
#include "rotdist/families.hpp"
#include "rotdist/rotation.hpp"

using json = nlohmann::ordered_json;
using namespace rotdist;

namespace {

constexpr int kExitUndefined = 1;
constexpr int kExitInputError = 2;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw ParseError("range must be N or A..B: " + text, 0);
    }
    if (r.lo > r.hi) throw ParseError("empty range: " + text, 0);
    return r;
}

// ---------------------------------------------------------------------
// CSV distance cache: header n,genset,tree_a,tree_b,distance; genset is
// quoted (it contains commas); undefined distances render as "undefined".

struct CacheKey {
    int n;
    std::string genset;
    std::string a;
    std::string b;

    bool operator<(const CacheKey& o) const {
        return std::tie(n, genset, a, b) < std::tie(o.n, o.genset, o.a, o.b);
    }
};

class DistanceCache {
public:
    explicit DistanceCache(std::string dir) : path_(std::move(dir)) {
        std::filesystem::create_directories(path_);
        file_ = path_ + "/distances.csv";
        load();
    }

    std::optional<std::optional<int>> lookup(const CacheKey& key) const {
        auto it = rows_.find(key);
        if (it == rows_.end()) return std::nullopt;
        return it->second;
    }

    void store(const CacheKey& key, std::optional<int> distance) {
        rows_[key] = distance;
        std::string tmp = file_ + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << "n,genset,tree_a,tree_b,distance\n";
            for (const auto& [k, v] : rows_) {
                out << k.n << ",\"" << k.genset << "\"," << k.a << "," << k.b << ","
                    << (v ? std::to_string(*v) : std::string("undefined")) << "\n";
            }
        }
        std::filesystem::rename(tmp, file_);
    }

private:
    void load() {
        std::ifstream in(file_);
        if (!in) return;
        std::string line;
        std::getline(in, line); // header
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            // n,"genset",a,b,distance
            auto c1 = line.find(',');
            auto q1 = line.find('"', c1 + 1);
            auto q2 = line.find('"', q1 + 1);
            auto c2 = line.find(',', q2 + 1);
            auto c3 = line.find(',', c2 + 1);
            auto c4 = line.find(',', c3 + 1);
            if (c1 == std::string::npos || q2 == std::string::npos || c3 == std::string::npos ||
                c4 == std::string::npos) {
                continue;
            }
            CacheKey key;
            key.n = std::stoi(line.substr(0, c1));
            key.genset = line.substr(q1 + 1, q2 - q1 - 1);
            key.a = line.substr(c2 + 1, c3 - c2 - 1);
            key.b = line.substr(c3 + 1, c4 - c3 - 1);
            std::string value = line.substr(c4 + 1);
            rows_[key] = value == "undefined" ? std::optional<int>() : std::optional<int>(std::stoi(value));
        }
    }

    std::string path_;
    std::string file_;
    std::map<CacheKey, std::optional<int>> rows_;
};

// ---------------------------------------------------------------------

json witness_json(const std::optional<Word>& witness) {
    if (!witness) return nullptr;
    json letters = json::array();
    for (const Letter& l : witness->letters()) {
        Word single;
        single.push_back(l);
        letters.push_back(single.render());
    }
    return letters;
}

struct DistOptions {
    std::string metric;
    std::string gens;
    std::string t1_text;
    std::string t2_text;
    std::string exact = "default";
    bool want_witness = false;
    bool as_json = false;
    std::string cache_dir;
    int cap = kBfsCap;
};

GenSet genset_for_metric(const DistOptions& opt) {
    const std::string& m = opt.metric;
    if (m == "rr") {
        if (!opt.gens.empty() && opt.gens != "x0,x1") {
            throw ParameterViolation("metric rr fixes the genset to x0,x1");
        }
        return GenSet::finite({0, 1});
    }
    if (m == "ra") {
        if (!opt.gens.empty() && opt.gens != "right-all") {
            throw ParameterViolation("metric ra fixes the genset to right-all");
        }
        return GenSet::all_right_arm();
    }
    if (m == "r") {
        if (!opt.gens.empty() && opt.gens != "all-nodes") {
            throw ParameterViolation("metric r fixes the genset to all-nodes");
        }
        return GenSet::all_nodes();
    }
    if (m == "rra" || m == "rs") {
        if (opt.gens.empty()) throw ParameterViolation("metric " + m + " requires --gens");
        GenSet s = GenSet::parse(opt.gens);
        if (s.mode() != GenSet::Mode::Finite) {
            throw ParameterViolation("metric " + m + " needs a finite genset");
        }
        if (m == "rra" && s.spinal()) {
            throw ParameterViolation("metric rra does not allow y-generators; use --metric rs");
        }
        if (m == "rs" && !s.spinal()) {
            throw ParameterViolation("metric rs needs at least one y-generator; use --metric rra");
        }
        return s;
    }
    throw ParameterViolation("unknown metric: " + m);
}

int run_dist(const DistOptions& opt) {
    GenSet gens = genset_for_metric(opt);
    Tree t1 = Tree::parse(opt.t1_text);
    Tree t2 = Tree::parse(opt.t2_text);
    if (t1.carets() != t2.carets()) {
        throw SizeMismatch("trees have " + std::to_string(t1.carets()) + " and " +
                           std::to_string(t2.carets()) + " carets");
    }

    bool use_formula = opt.exact == "formula" || (opt.exact == "default" && opt.metric == "ra");
    if (use_formula && opt.metric != "ra") {
        throw ParameterViolation("--exact formula is only available for --metric ra");
    }

    DistanceResult res;
    std::optional<DistanceCache> cache;
    CacheKey key{t1.carets(), gens.spec_string(), t1.render(), t2.render()};
    bool cached = false;
    if (!opt.cache_dir.empty() && !opt.want_witness) {
        cache.emplace(opt.cache_dir);
        if (auto hit = cache->lookup(key)) {
            res.defined = hit->has_value();
            res.distance = *hit;
            res.bound_source = "cache";
            cached = true;
        }
    }
    if (!cached) {
        res = use_formula ? d_ra(t1, t2) : bfs_distance(t1, t2, gens, opt.cap);
        if (cache) cache->store(key, res.defined ? res.distance : std::nullopt);
    }

    if (opt.as_json) {
        json out;
        out["n"] = t1.carets();
        out["genset"] = gens.spec_string();
        out["defined"] = res.defined;
        out["distance"] = res.defined ? json(*res.distance) : json(nullptr);
        out["witness"] = opt.want_witness ? witness_json(res.witness) : json(nullptr);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n=" << t1.carets() << " genset=" << gens.spec_string()
                  << " defined=" << (res.defined ? "true" : "false");
        if (res.defined) std::cout << " distance=" << *res.distance;
        std::cout << "\n";
        if (opt.want_witness && res.witness) {
            std::cout << "witness: " << (res.witness->empty() ? "(empty)" : res.witness->render())
                      << "\n";
        }
    }
    return res.defined ? 0 : kExitUndefined;
}

// ---------------------------------------------------------------------

struct VerifyOptions {
    std::string check;
    std::string range_text = "3..5";
    std::string gens;
    std::string family;
    int m = -1;
    int I = -1;
    int n_param = -1;
    bool as_json = false;
    int cap = kBfsCap;
};

FamilyInstance make_family(const std::string& name, int m, int I, int n) {
    if (name == "badword") {
        if (m < 0 || n < 0) throw ParameterViolation("badword needs --m and --n");
        return badword(m, n);
    }
    if (name == "longra") {
        if (n < 0) throw ParameterViolation("longra needs --n");
        return longra(n);
    }
    if (name == "spinal") {
        if (I < 0 || m < 0) throw ParameterViolation("spinal needs --I and --m");
        return spinalword(I, m);
    }
    if (name == "spinal-parity") {
        if (I < 0 || m < 0) throw ParameterViolation("spinal-parity needs --I and --m");
        return spinal_parity(I, m);
    }
    throw ParameterViolation("unknown family: " + name);
}

int run_verify(const VerifyOptions& opt) {
    Range range = parse_range(opt.range_text);
    json results = json::array();
    bool all_pass = true;
    auto emit = [&](const std::string& name, bool pass, const std::string& detail, json extra) {
        all_pass = all_pass && pass;
        if (opt.as_json) {
            json row;
            row["check"] = name;
            row["pass"] = pass;
            row["detail"] = detail;
            row["data"] = std::move(extra);
            results.push_back(std::move(row));
        } else {
            std::cout << (pass ? "PASS" : "FAIL") << ": " << name << " " << detail << "\n";
        }
    };

    if (opt.check == "sharp-rr") {
        for (int n = range.lo; n <= range.hi; ++n) {
            UpperBoundReport r = check_upper_bounds(n, GenSet::finite({0, 1}), opt.cap);
            bool pass = r.pass && r.max_distance == r.bound;
            emit("sharp-rr n=" + std::to_string(n), pass,
                 "max=" + std::to_string(r.max_distance) + " bound=" + std::to_string(r.bound),
                 {{"n", n}, {"max", r.max_distance}, {"bound", r.bound}});
        }
    } else if (opt.check == "ra-2n2") {
        for (int n = range.lo; n <= range.hi; ++n) {
            UpperBoundReport r = check_upper_bounds(n, GenSet::all_right_arm(), opt.cap);
            FamilyInstance f = longra(n);
            int attained = *d_ra(f.pair.t1, f.pair.t2).distance;
            bool pass = r.pass && r.max_distance == 2 * n - 2 && attained == 2 * n - 2;
            emit("ra-2n2 n=" + std::to_string(n), pass,
                 "max=" + std::to_string(r.max_distance) +
                     " longra=" + std::to_string(attained),
                 {{"n", n}, {"max", r.max_distance}, {"longra", attained}});
        }
    } else if (opt.check == "upper-4n8") {
        GenSet s = opt.gens.empty() ? GenSet::finite({0, 1}) : GenSet::parse(opt.gens);
        for (int n = range.lo; n <= range.hi; ++n) {
            UpperBoundReport r = check_upper_bounds(n, s, opt.cap);
            emit("upper-4n8 n=" + std::to_string(n) + " genset=" + r.genset, r.pass,
                 "max=" + std::to_string(r.max_distance) + " bound=" + std::to_string(r.bound) +
                     " defined-pairs=" + std::to_string(r.defined_pairs),
                 {{"n", n},
                  {"genset", r.genset},
                  {"max", r.max_distance},
                  {"bound", r.bound},
                  {"defined_pairs", r.defined_pairs},
                  {"undefined_pairs", r.undefined_pairs}});
        }
    } else if (opt.check == "gtables") {
        GTableConformanceReport r = check_g_table_conformance(range.lo, range.hi);
        json unc = json::array();
        std::string detail = "checked=" + std::to_string(r.checked) +
                             " matched=" + std::to_string(r.matched) +
                             " mismatched=" + std::to_string(r.mismatched);
        for (const auto& [reason, count] : r.uncovered) {
            unc.push_back({{"reason", reason}, {"count", count}});
            detail += "\n  uncovered (" + std::to_string(count) + "): " + reason;
        }
        for (const std::string& s : r.mismatch_samples) detail += "\n  mismatch: " + s;
        emit("gtables n=" + opt.range_text, r.pass, detail,
             {{"checked", r.checked},
              {"matched", r.matched},
              {"mismatched", r.mismatched},
              {"destroyed", r.destroyed},
              {"uncovered", unc}});
    } else if (opt.check == "defined-vs-reach") {
        GenSet s = opt.gens.empty() ? GenSet::finite({0, 2}) : GenSet::parse(opt.gens);
        if (!s.finite_right_arm_only()) {
            throw ParameterViolation("defined-vs-reach needs a finite right-arm genset");
        }
        for (int n = range.lo; n <= range.hi; ++n) {
            RotationGraph graph(n, s, opt.cap);
            long disagreements = 0;
            long pairs = 0;
            for (int a = 0; a < graph.size(); ++a) {
                std::vector<int> dist = graph.distances_from(a);
                for (int b = 0; b < graph.size(); ++b) {
                    bool reach = dist[static_cast<size_t>(b)] >= 0;
                    bool defined = rra_defined(graph.trees()[static_cast<size_t>(a)],
                                               graph.trees()[static_cast<size_t>(b)], s);
                    if (reach != defined) ++disagreements;
                    ++pairs;
                }
            }
            emit("defined-vs-reach n=" + std::to_string(n) + " genset=" + s.spec_string(),
                 disagreements == 0,
                 "pairs=" + std::to_string(pairs) +
                     " disagreements=" + std::to_string(disagreements),
                 {{"n", n}, {"pairs", pairs}, {"disagreements", disagreements}});
        }
    } else if (opt.check == "family") {
        FamilyInstance inst = make_family(opt.family, opt.m, opt.I, opt.n_param);
        LowerBoundReport r = check_lower_bound_family(inst, opt.cap);
        std::string detail = "distance=" + std::to_string(r.distance);
        if (r.predicted_lower_bound) detail += " lower=" + std::to_string(*r.predicted_lower_bound);
        if (r.predicted_upper_bound) detail += " upper=" + std::to_string(*r.predicted_upper_bound);
        emit("family " + r.family + " genset=" + r.genset, r.pass, detail,
             {{"family", r.family},
              {"n", r.n},
              {"genset", r.genset},
              {"defined", r.defined},
              {"distance", r.distance}});
    } else {
        throw ParameterViolation("unknown check: " + opt.check);
    }

    if (opt.as_json) std::cout << results.dump() << "\n";
    return all_pass ? 0 : kExitUndefined;
}

// ---------------------------------------------------------------------

struct NfOptions {
    std::optional<std::string> word_text;
    std::string t1_text;
    std::string t2_text;
    bool as_json = false;
};

int run_nf(const NfOptions& opt) {
    Word word;
    std::optional<TreePair> input_pair;
    if (opt.word_text) {
        if (!opt.t1_text.empty() || !opt.t2_text.empty()) {
            throw ParameterViolation("give either --word or --t1/--t2, not both");
        }
        word = Word::parse(*opt.word_text);
    } else {
        if (opt.t1_text.empty() || opt.t2_text.empty()) {
            throw ParameterViolation("need --word or both --t1 and --t2");
        }
        input_pair = TreePair{Tree::parse(opt.t1_text), Tree::parse(opt.t2_text)};
        word = word_of_pair(*input_pair).to_word();
    }
    NormalForm unique = to_unique_normal_form(word);
    NormalForm partial = partial_reduce(word.x_only() ? word : expand_y_letters(word));
    TreePair canonical = pair_of_word(unique);

    if (opt.as_json) {
        json out;
        out["input"] = word.render();
        out["unique"] = unique.render();
        out["partial"] = partial.render();
        out["length"] = unique.length();
        out["pair"] = {{"t1", canonical.t1.render()}, {"t2", canonical.t2.render()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "input:   " << (word.empty() ? "(identity)" : word.render()) << "\n";
        std::cout << "unique:  " << (unique.empty() ? "(identity)" : unique.render()) << "\n";
        std::cout << "partial: " << (partial.empty() ? "(identity)" : partial.render()) << "\n";
        std::cout << "length:  " << unique.length() << "\n";
        std::cout << "pair:    " << canonical.t1.render() << "  ->  " << canonical.t2.render()
                  << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------

struct FamilyOptions {
    std::string name;
    int m = -1;
    int I = -1;
    int n = -1;
    bool certify = false;
    bool as_json = false;
    int cap = kBfsCap;
};

int run_family(const FamilyOptions& opt) {
    FamilyInstance inst = make_family(opt.name, opt.m, opt.I, opt.n);
    std::optional<LowerBoundReport> cert;
    if (opt.certify) cert = check_lower_bound_family(inst, opt.cap);

    if (opt.as_json) {
        json out;
        out["family"] = inst.params_text();
        out["word"] = inst.word.render();
        out["t1"] = inst.pair.t1.render();
        out["t2"] = inst.pair.t2.render();
        out["genset"] = inst.genset.spec_string();
        out["lower_bound"] =
            inst.predicted_lower_bound ? json(*inst.predicted_lower_bound) : json(nullptr);
        out["upper_bound"] =
            inst.predicted_upper_bound ? json(*inst.predicted_upper_bound) : json(nullptr);
        if (cert) {
            out["certified"] = {{"defined", cert->defined},
                                {"distance", cert->distance},
                                {"pass", cert->pass}};
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "family:  " << inst.params_text() << "\n";
        std::cout << "word:    " << inst.word.render() << "\n";
        std::cout << "t1:      " << inst.pair.t1.render() << "\n";
        std::cout << "t2:      " << inst.pair.t2.render() << "\n";
        std::cout << "genset:  " << inst.genset.spec_string() << "\n";
        if (inst.predicted_lower_bound) {
            std::cout << "lower:   " << *inst.predicted_lower_bound << "\n";
        }
        if (inst.predicted_upper_bound) {
            std::cout << "upper:   " << *inst.predicted_upper_bound << "\n";
        }
        if (cert) {
            std::cout << "certify: distance=" << cert->distance << " "
                      << (cert->pass ? "PASS" : "FAIL") << "\n";
        }
    }
    if (cert && !cert->pass) return kExitUndefined;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted rotation distances between rooted binary trees"};
    app.require_subcommand(1);

    DistOptions dist;
    CLI::App* dist_cmd = app.add_subcommand("dist", "distance between two trees");
    dist_cmd->add_option("--metric", dist.metric, "rr | ra | rra | rs | r")->required();
    dist_cmd->add_option("--gens", dist.gens, "genset spec, e.g. x0,x2,y1 | right-all | all-nodes");
    dist_cmd->add_option("--t1", dist.t1_text, "first tree")->required();
    dist_cmd->add_option("--t2", dist.t2_text, "second tree")->required();
    dist_cmd->add_option("--exact", dist.exact, "bfs | formula");
    dist_cmd->add_flag("--witness", dist.want_witness, "emit a geodesic script");
    dist_cmd->add_flag("--json", dist.as_json, "machine-readable output");
    dist_cmd->add_option("--cache", dist.cache_dir, "CSV distance cache directory");
    dist_cmd->add_option("--cap", dist.cap, "exhaustive-search size cap");

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a bound or lemma exhaustively");
    verify_cmd
        ->add_option("--check", verify.check,
                     "upper-4n8 | ra-2n2 | sharp-rr | gtables | defined-vs-reach | family")
        ->required();
    verify_cmd->add_option("--n", verify.range_text, "caret range, e.g. 3..7");
    verify_cmd->add_option("--gens", verify.gens, "genset spec");
    verify_cmd->add_option("--name", verify.family, "family name for --check family");
    verify_cmd->add_option("--m", verify.m, "family parameter m");
    verify_cmd->add_option("--I", verify.I, "family parameter I");
    verify_cmd->add_option("--family-n", verify.n_param, "family parameter n");
    verify_cmd->add_flag("--json", verify.as_json, "machine-readable output");
    verify_cmd->add_option("--cap", verify.cap, "exhaustive-search size cap");

    NfOptions nf;
    std::string nf_word;
    CLI::App* nf_cmd = app.add_subcommand("nf", "normal forms of a word or a tree pair");
    CLI::Option* nf_word_opt = nf_cmd->add_option("--word", nf_word, "word, e.g. \"x0 x2^-1\"");
    nf_cmd->add_option("--t1", nf.t1_text, "first tree");
    nf_cmd->add_option("--t2", nf.t2_text, "second tree");
    nf_cmd->add_flag("--json", nf.as_json, "machine-readable output");

    FamilyOptions family;
    CLI::App* family_cmd = app.add_subcommand("family", "emit an extremal family instance");
    family_cmd->add_option("--name", family.name, "badword | longra | spinal | spinal-parity")
        ->required();
    family_cmd->add_option("--m", family.m, "parameter m");
    family_cmd->add_option("--I", family.I, "parameter I");
    family_cmd->add_option("--n", family.n, "parameter n");
    family_cmd->add_flag("--certify", family.certify, "BFS-certify the predicted bounds");
    family_cmd->add_flag("--json", family.as_json, "machine-readable output");
    family_cmd->add_option("--cap", family.cap, "exhaustive-search size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (dist_cmd->parsed()) return run_dist(dist);
        if (verify_cmd->parsed()) {
            return run_verify(verify);
        }
        if (nf_cmd->parsed()) {
            if (nf_word_opt->count() > 0) nf.word_text = nf_word;
            return run_nf(nf);
        }
        if (family_cmd->parsed()) return run_family(family);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const SizeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParameterViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NotRightArmSet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceCap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NotDefined& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndefined;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
