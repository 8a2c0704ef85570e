#include "raney/verify.hpp"

#include "raney/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace raney {

namespace {

// Every suite is a function that either returns a detail string (pass) or
// throws/Fails with a message.  The harness catches failures so one broken
// suite never hides the others.
struct Fail {
    std::string message;
};

void check(bool ok, const std::string& message) {
    if (!ok) {
        throw Fail{message};
    }
}

std::string nat_str(const ExactNat& n) { return n.str(); }

// --- arithmetic identity suites -------------------------------------------

std::string suite_raney_identities(const VerifyOptions& opt) {
    std::size_t checked = 0;
    for (std::uint32_t p = 1; p <= opt.p_max; ++p) {
        for (std::uint32_t r = 1; r <= opt.r_max; ++r) {
            for (std::uint32_t k = 0; k <= opt.k_max; ++k) {
                const ExactNat closed = raney_closed(p, r, k);
                const ExactNat by_compositions = raney_composition_sum(p, r, k);
                const ExactNat by_convolution = raney_convolution(p, r, k);
                std::ostringstream at;
                at << "(p=" << p << ",r=" << r << ",k=" << k << ")";
                check(closed == by_compositions,
                      "composition sum disagrees at " + at.str() + ": " +
                          nat_str(closed) + " vs " + nat_str(by_compositions));
                check(closed == by_convolution,
                      "convolution disagrees at " + at.str() + ": " +
                          nat_str(closed) + " vs " + nat_str(by_convolution));
                if (k >= 1) {
                    const ExactNat alt = raney_closed_alt(p, r, k);
                    check(closed == alt, "second closed form disagrees at " +
                                             at.str() + ": " + nat_str(closed) +
                                             " vs " + nat_str(alt));
                }
                ++checked;
            }
        }
    }
    return std::to_string(checked) + " parameter triples, all routes agree";
}

std::string suite_catalan_recurrence(const VerifyOptions&) {
    // c_{n+1} = sum c_i c_{n-i} for the p = 2, r = 1 specialization.
    const std::uint32_t n_max = 12;
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        ExactNat sum = 0;
        for (std::uint32_t i = 0; i <= n; ++i) {
            sum += raney_closed(2, 1, i) * raney_closed(2, 1, n - i);
        }
        check(sum == raney_closed(2, 1, n + 1),
              "Catalan recurrence fails at n=" + std::to_string(n));
    }
    return "convolution recurrence holds through n=" + std::to_string(n_max);
}

std::string suite_weak_composition_closed_form(const VerifyOptions&) {
    for (std::uint32_t r = 1; r <= 6; ++r) {
        for (std::uint32_t k = 0; k <= 10; ++k) {
            check(raney_closed(1, r, k) ==
                      binomial(std::uint64_t{k} + r - 1, k),
                  "R(1,r,k) != C(k+r-1,k) at r=" + std::to_string(r) +
                      ",k=" + std::to_string(k));
        }
    }
    return "R(1,r,k) = C(k+r-1,k) for r<=6, k<=10";
}

std::string suite_edge_subdivision_identity(const VerifyOptions&) {
    for (std::uint32_t p = 1; p <= 6; ++p) {
        for (std::uint32_t k = 0; k <= 8; ++k) {
            check(raney_closed(p, p, k) == raney_closed(p, 1, k + 1),
                  "R(p,p,k) != R(p,1,k+1) at p=" + std::to_string(p) +
                      ",k=" + std::to_string(k));
        }
    }
    return "R(p,p,k) = R(p,1,k+1) for p<=6, k<=8";
}

std::string suite_composition_streams(const VerifyOptions&) {
    for (std::uint32_t k = 0; k <= 10; ++k) {
        const auto all = compositions(k);
        const std::size_t expected = k == 0 ? 1 : (std::size_t{1} << (k - 1));
        check(all.size() == expected,
              "composition count wrong at k=" + std::to_string(k));
        std::set<std::vector<std::uint32_t>> seen;
        for (const Composition& c : all) {
            check(c.total() == k, "composition sums to the wrong total");
            for (std::uint32_t part : c.parts) {
                check(part >= 1, "composition part below 1");
            }
            check(seen.insert(c.parts).second, "duplicate composition");
        }
        check(std::is_sorted(all.begin(), all.end(),
                             [](const Composition& a, const Composition& b) {
                                 return a.parts < b.parts;
                             }),
              "compositions not in lexicographic order");
    }
    for (std::uint32_t r = 1; r <= 5; ++r) {
        for (std::uint32_t k = 0; k <= 8; ++k) {
            const auto all = weak_compositions(k, r);
            check(ExactNat(all.size()) ==
                      binomial(std::uint64_t{k} + r - 1,
                               static_cast<std::int64_t>(r) - 1),
                  "weak composition count wrong at k=" + std::to_string(k) +
                      ",r=" + std::to_string(r));
            std::set<std::vector<std::uint32_t>> seen;
            for (const WeakComposition& c : all) {
                check(c.parts.size() == r, "weak composition length wrong");
                check(c.total() == k, "weak composition total wrong");
                check(seen.insert(c.parts).second, "duplicate weak composition");
            }
        }
    }
    return "strong/weak composition streams have predicted cardinalities, "
           "no duplicates";
}

// --- tree suites ------------------------------------------------------------

// Builds a uniformly scruffy random code: child counts are drawn 0..3 and
// forced to 0 once the size budget is spent, which always lands on a valid
// code.
CanonicalCode random_code(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::uint32_t> dist(0, 3);
    CanonicalCode code;
    std::uint64_t pending = 1;
    while (pending > 0) {
        std::uint32_t count = 0;
        if (code.size() + pending < max_len) {
            count = dist(rng);
        }
        code.push_back(count);
        pending += count;
        pending -= 1;
    }
    return code;
}

std::string suite_code_roundtrip(const VerifyOptions&) {
    std::mt19937 rng(0x5eed);
    const std::size_t trials = 10000;
    for (std::size_t i = 0; i < trials; ++i) {
        const CanonicalCode code = random_code(rng, 40);
        check(is_valid_code(code), "random generator produced an invalid code");
        const PlaneTree tree = decode(code);
        check(encode(tree) == code, "decode/encode round trip failed");
        check(tree.leaf_count() == boundary_leaves(tree).size(),
              "boundary leaf listing disagrees with leaf count");
    }
    return std::to_string(trials) + " random round trips";
}

std::string suite_pary_tree_counts(const VerifyOptions&) {
    for (std::uint32_t p = 1; p <= 4; ++p) {
        for (std::uint32_t j = 0; j <= 6; ++j) {
            const auto trees = enumerate_pary_trees(p, j);
            check(ExactNat(trees.size()) == p_catalan(p, j),
                  "p-ary tree count != p-Catalan at p=" + std::to_string(p) +
                      ",j=" + std::to_string(j));
            std::set<CanonicalCode> seen;
            for (const PlaneTree& tree : trees) {
                const CanonicalCode code = encode(tree);
                check(is_valid_code(code), "emitted invalid code");
                check(seen.insert(code).second, "duplicate p-ary tree");
                check(tree.leaf_count() == std::size_t{j} * (p - 1) + 1,
                      "full p-ary boundary leaf law failed");
            }
            check(std::is_sorted(seen.begin(), seen.end()),
                  "p-ary stream not sorted");
        }
    }
    return "|p-ary trees| = p-Catalan for p<=4, j<=6; codes valid, sorted, "
           "distinct";
}

// --- coral suites -----------------------------------------------------------

struct CoralRange {
    std::uint32_t p, r, k;
};

std::vector<CoralRange> coral_agreement_ranges() {
    std::vector<CoralRange> ranges;
    for (std::uint32_t p = 1; p <= 3; ++p) {
        for (std::uint32_t r = 1; r <= 3; ++r) {
            for (std::uint32_t k = 0; k <= 5; ++k) {
                ranges.push_back({p, r, k});
            }
        }
    }
    for (std::uint32_t k = 0; k <= 4; ++k) {
        ranges.push_back({4, 2, k});
    }
    return ranges;
}

std::vector<CanonicalCode> codes_of(const std::vector<CoralDiagram>& diagrams) {
    std::vector<CanonicalCode> codes;
    codes.reserve(diagrams.size());
    for (const CoralDiagram& d : diagrams) {
        codes.push_back(d.code);
    }
    return codes;
}

std::string suite_coral_generator_agreement(const VerifyOptions&) {
    std::size_t families = 0;
    for (const CoralRange& range : coral_agreement_ranges()) {
        const auto tiered = enumerate_coral_tiered(range.p, range.r, range.k);
        const auto tuple = enumerate_coral_tuple(range.p, range.r, range.k);
        std::ostringstream at;
        at << "(p=" << range.p << ",r=" << range.r << ",k=" << range.k << ")";
        check(codes_of(tiered) == codes_of(tuple),
              "tiered and tuple enumerations differ at " + at.str());
        const auto codes = codes_of(tiered);
        check(std::adjacent_find(codes.begin(), codes.end()) == codes.end(),
              "duplicate diagram at " + at.str());
        ++families;
    }
    return std::to_string(families) + " families, code sets identical";
}

std::string suite_coral_count_law(const VerifyOptions&) {
    for (const CoralRange& range : coral_agreement_ranges()) {
        std::ostringstream at;
        at << "(p=" << range.p << ",r=" << range.r << ",k=" << range.k << ")";
        check(count_coral(range.p, range.r, range.k) ==
                  raney_closed(range.p, range.r, range.k),
              "generated count != closed form at " + at.str());
    }
    return "generated cardinalities match the closed form on all families";
}

std::string suite_tier_decomposition(const VerifyOptions&) {
    for (std::uint32_t p = 1; p <= 3; ++p) {
        for (std::uint32_t r = 1; r <= 3; ++r) {
            for (std::uint32_t k = 1; k <= 4; ++k) {
                std::map<std::vector<std::uint32_t>, ExactNat> by_tier;
                for_each_coral_tiered(
                    p, r, k,
                    [&](const Composition& tiers, const CoralDiagram&) {
                        ++by_tier[tiers.parts];
                    });
                for (const Composition& lambda : compositions(k)) {
                    ExactNat expected = binomial(r, lambda.parts[0]);
                    for (std::size_t i = 1; i < lambda.parts.size(); ++i) {
                        expected *= binomial(
                            std::uint64_t{p} * lambda.parts[i - 1],
                            lambda.parts[i]);
                    }
                    ExactNat actual = 0;
                    if (auto it = by_tier.find(lambda.parts);
                        it != by_tier.end()) {
                        actual = it->second;
                    }
                    check(actual == expected,
                          "tier count != composition summand at p=" +
                              std::to_string(p) + ",r=" + std::to_string(r) +
                              ",k=" + std::to_string(k));
                }
            }
        }
    }
    return "per-tier diagram counts equal the composition summands "
           "(p,r<=3, k<=4)";
}

std::string suite_coral_invariants(const VerifyOptions&) {
    std::size_t diagrams = 0;
    for (const CoralRange& range : coral_agreement_ranges()) {
        for (const CoralDiagram& d :
             enumerate_coral_tuple(range.p, range.r, range.k)) {
            check(is_valid_coral(d), "emitted diagram violates its invariants");
            const PlaneTree tree = d.tree();
            check(tree.leaf_count() ==
                      std::size_t{range.r} + 1 +
                          std::size_t{range.k} * (range.p - 1),
                  "coral boundary leaf law failed");
            ++diagrams;
        }
    }
    return std::to_string(diagrams) +
           " diagrams structurally valid, boundary law r+1+k(p-1) holds";
}

std::string suite_subdivision_bijection(const VerifyOptions&) {
    for (std::uint32_t p = 1; p <= 3; ++p) {
        for (std::uint32_t k = 0; k <= 4; ++k) {
            const auto source = enumerate_coral_tuple(p, p, k);
            std::set<CanonicalCode> image;
            for (const CoralDiagram& d : source) {
                const CoralDiagram mapped = subdivide_leftmost_edge(d);
                check(mapped.r == 1 && mapped.k == k + 1,
                      "subdivision produced wrong parameters");
                check(is_valid_coral(mapped),
                      "subdivision produced an invalid diagram");
                check(image.insert(mapped.code).second,
                      "subdivision is not injective");
            }
            std::set<CanonicalCode> target;
            for (const CoralDiagram& d : enumerate_coral_tuple(p, 1, k + 1)) {
                target.insert(d.code);
            }
            check(image == target,
                  "subdivision image != (p,1,k+1) family at p=" +
                      std::to_string(p) + ",k=" + std::to_string(k));
        }
    }
    return "edge subdivision is a bijection (p,p,k) -> (p,1,k+1) for p<=3, "
           "k<=4";
}

std::string suite_chain_bijection(const VerifyOptions&) {
    for (std::uint32_t r = 1; r <= 5; ++r) {
        for (std::uint32_t k = 0; k <= 8; ++k) {
            std::set<std::vector<std::uint32_t>> image;
            const auto family = enumerate_coral_tuple(1, r, k);
            for (const CoralDiagram& d : family) {
                const WeakComposition parts = chain_weak_composition(d);
                check(parts.parts.size() == r && parts.total() == k,
                      "chain read-off has wrong shape");
                check(image.insert(parts.parts).second,
                      "chain read-off is not injective");
            }
            std::set<std::vector<std::uint32_t>> target;
            for (const WeakComposition& w : weak_compositions(k, r)) {
                target.insert(w.parts);
            }
            check(image == target, "chain read-off misses weak compositions");
            check(ExactNat(family.size()) ==
                      binomial(std::uint64_t{k} + r - 1, k),
                  "(1,r,k) family size != C(k+r-1,k)");
        }
    }
    return "chain read-off bijects (1,r,k) corals with weak compositions "
           "for r<=5, k<=8";
}

// --- web suites ---------------------------------------------------------

std::string suite_sourcesink_oracle_agreement(const VerifyOptions& opt) {
    std::ostringstream covered;
    for (std::uint32_t p : {2u, 3u}) {
        const std::uint32_t k_top = p == 2 ? 4 : 1;
        for (std::uint32_t k = 0; k <= k_top; ++k) {
            if (raney_closed(p, p, k * (p + 1)) > opt.cap) {
                covered << " (p=" << p << ": k=" << k << " over cap, skipped)";
                break;
            }
            const ExactNat closed = raney_closed(p * p, p, k);
            const auto built = enumerate_sourcesink_trees(p, k);
            const ExactNat filtered = count_sourcesink_by_filter(p, k, opt.cap);
            std::ostringstream at;
            at << "(p=" << p << ",k=" << k << ")";
            check(ExactNat(built.size()) == closed,
                  "constructive web count != closed form at " + at.str());
            check(filtered == closed,
                  "filter count != closed form at " + at.str());
        }
    }
    return "constructive count = filter count = R(p^2,p,k) for p=2,k<=4 and "
           "p=3,k<=1" +
           covered.str();
}

std::string suite_web_boundary_law(const VerifyOptions&) {
    for (std::uint32_t p : {2u, 3u}) {
        const std::uint32_t k_top = p == 2 ? 3 : 1;
        for (std::uint32_t k = 0; k <= k_top; ++k) {
            const std::size_t expected = std::size_t{k} * (p * p - 1) + p + 1;
            for (const OrientedTreeWeb& web :
                 enumerate_sourcesink_trees(p, k)) {
                check(web.boundary.size() == expected,
                      "web boundary length law failed");
                check(web.boundary.find('-') == std::string::npos,
                      "constant-boundary web contains a minus");
            }
        }
    }
    return "every constructed web has k(p^2-1)+(p+1) boundary leaves, all '+'";
}

void check_web_coherence(const OrientedTreeWeb& web) {
    const PlaneTree tree = web.tree();
    check(web.classes.size() == tree.vertex_count(),
          "class string length != vertex count");
    check(web.boundary.size() == tree.leaf_count(),
          "boundary length != leaf count");
    // Re-deriving the orientation from the stored word must reproduce it.
    const auto rederived = orient_with_word(tree, web.boundary);
    check(rederived.has_value(), "stored boundary word fails to orient");
    check(*rederived == web, "re-orientation differs from the stored web");
    // Adjacent vertices carry opposite classes ('.'-smoothed root aside),
    // and the leaf subsequence of the classes is the boundary word.
    struct Walker {
        const std::string& classes;
        std::string leaf_signs;
        std::size_t index = 0;

        void walk(const PlaneTree& node) {
            const std::size_t self = index++;
            if (node.is_leaf()) {
                leaf_signs.push_back(classes[self]);
            }
            for (const PlaneTree& child : node.children()) {
                const char a = classes[self];
                const char b = classes[index];
                check(a == '.' || b == '.' || a != b,
                      "adjacent vertices share a class");
                walk(child);
            }
        }
    };
    Walker walker{web.classes, {}, 0};
    walker.walk(tree);
    check(walker.leaf_signs == web.boundary,
          "leaf classes disagree with the boundary word");
}

// Minus-boundary filtering at level k visits the (2,2) corals with 3k-1
// stars; suites skip the levels the cap cannot afford.
bool minus_level_within_cap(std::uint32_t k, std::uint64_t cap) {
    return k == 0 || raney_closed(2, 2, 3 * k - 1) <= cap;
}

std::string suite_orientation_coherence(const VerifyOptions& opt) {
    std::size_t webs = 0;
    for (std::uint32_t k = 0; k <= 3; ++k) {
        for (const OrientedTreeWeb& web : enumerate_sourcesink_trees(2, k)) {
            check_web_coherence(web);
            ++webs;
        }
        if (!minus_level_within_cap(k, opt.cap)) {
            continue;
        }
        for (const OrientedTreeWeb& web :
             enumerate_a2_tree_webs_minus(k, opt.cap)) {
            check_web_coherence(web);
            ++webs;
        }
    }
    for (const OrientedTreeWeb& web : enumerate_sourcesink_trees(3, 1)) {
        check_web_coherence(web);
        ++webs;
    }
    return std::to_string(webs) +
           " webs: orientation re-derivation is idempotent, classes alternate";
}

std::string suite_orientation_uniqueness(const VerifyOptions&) {
    // Over every trivalent tree with <= 6 boundary leaves, each boundary
    // word admits at most one orientation, and exactly two words per tree
    // are realizable (the parity word and its complement).
    std::size_t trees = 0;
    for (std::uint32_t stars = 0; stars <= 3; ++stars) {
        for (const CoralDiagram& d : enumerate_coral_tuple(2, 2, stars)) {
            const PlaneTree tree = d.tree();
            const std::size_t leaves = tree.leaf_count();
            std::size_t realizable = 0;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << leaves);
                 ++bits) {
                BoundaryWord word(leaves, '+');
                for (std::size_t i = 0; i < leaves; ++i) {
                    if (bits & (std::uint64_t{1} << i)) {
                        word[i] = '-';
                    }
                }
                const auto web = orient_with_word(tree, word);
                if (web.has_value()) {
                    ++realizable;
                    check(web->boundary == word, "web stored the wrong word");
                }
            }
            check(realizable == 2,
                  "tree realizes " + std::to_string(realizable) +
                      " words, expected exactly 2");
            ++trees;
        }
    }
    return std::to_string(trees) +
           " trivalent trees: exactly 2 realizable words each, forced "
           "orientation";
}

std::string suite_minus_word_counts(const VerifyOptions& opt) {
    std::string note;
    for (std::uint32_t k = 0; k <= 3; ++k) {
        if (!minus_level_within_cap(k, opt.cap)) {
            note = " (k=" + std::to_string(k) + " over cap, skipped)";
            break;
        }
        const auto webs = enumerate_a2_tree_webs_minus(k, opt.cap);
        check(ExactNat(webs.size()) == raney_closed(4, 1, k),
              "minus-word web count != R(4,1,k) at k=" + std::to_string(k));
    }
    return "minus-boundary web counts equal R(4,1,k) for k<=3" + note;
}

using SuiteFn = std::string (*)(const VerifyOptions&);

struct Suite {
    const char* name;
    SuiteFn run;
};

constexpr Suite kSuites[] = {
    {"raney-identities", suite_raney_identities},
    {"catalan-recurrence", suite_catalan_recurrence},
    {"weak-composition-closed-form", suite_weak_composition_closed_form},
    {"edge-subdivision-identity", suite_edge_subdivision_identity},
    {"composition-streams", suite_composition_streams},
    {"code-roundtrip", suite_code_roundtrip},
    {"pary-tree-counts", suite_pary_tree_counts},
    {"coral-generator-agreement", suite_coral_generator_agreement},
    {"coral-count-law", suite_coral_count_law},
    {"tier-decomposition", suite_tier_decomposition},
    {"coral-invariants", suite_coral_invariants},
    {"subdivision-bijection", suite_subdivision_bijection},
    {"chain-bijection", suite_chain_bijection},
    {"sourcesink-oracle-agreement", suite_sourcesink_oracle_agreement},
    {"web-boundary-law", suite_web_boundary_law},
    {"orientation-coherence", suite_orientation_coherence},
    {"orientation-uniqueness", suite_orientation_uniqueness},
    {"minus-word-counts", suite_minus_word_counts},
};

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    std::vector<SuiteResult> results;
    results.reserve(std::size(kSuites));
    for (const Suite& suite : kSuites) {
        SuiteResult result;
        result.name = suite.name;
        try {
            result.detail = suite.run(options);
            result.passed = true;
        } catch (const Fail& failure) {
            result.detail = failure.message;
        } catch (const std::exception& error) {
            result.detail = std::string("unexpected error: ") + error.what();
        }
        results.push_back(std::move(result));
    }
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.passed; });
}

std::string format_report(const std::vector<SuiteResult>& results) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const SuiteResult& result : results) {
        out << (result.passed ? "PASS" : "FAIL") << ' ' << result.name << ": "
            << result.detail << '\n';
        if (result.passed) {
            ++passed;
        }
    }
    out << "verification: " << passed << '/' << results.size()
        << " suites passed\n";
    return out.str();
}

}  // namespace raney
