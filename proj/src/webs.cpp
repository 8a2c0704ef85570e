#include "raney/webs.hpp"

#include "raney/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace raney {

namespace {

constexpr char kSource = '-';
constexpr char kSink = '+';
constexpr char kSmoothed = '.';

bool is_arc(const PlaneTree& tree) {
    return tree.arity() == 2 && tree.children()[0].is_leaf() &&
           tree.children()[1].is_leaf();
}

// Fills `classes` with the depth-parity coloring rooted at `root_class` and
// appends each leaf's sign to `word`.
void color_by_parity(const PlaneTree& node, char even, char odd,
                     std::uint32_t depth, std::string& classes,
                     std::string& word) {
    const char cls = (depth % 2 == 0) ? even : odd;
    classes.push_back(cls);
    if (node.is_leaf()) {
        word.push_back(cls);
        return;
    }
    for (const PlaneTree& child : node.children()) {
        color_by_parity(child, even, odd, depth + 1, classes, word);
    }
}

// Embedding degree of every internal vertex: child count, plus one for the
// parent edge everywhere except the root.
void collect_internal_degrees(const PlaneTree& node, bool is_root,
                              std::vector<std::uint32_t>& degrees) {
    if (node.is_leaf()) {
        return;
    }
    degrees.push_back(node.arity() + (is_root ? 0 : 1));
    for (const PlaneTree& child : node.children()) {
        collect_internal_degrees(child, false, degrees);
    }
}

}  // namespace

std::optional<OrientedTreeWeb> orient_with_word(const PlaneTree& tree,
                                                const BoundaryWord& word) {
    for (char sign : word) {
        if (sign != kSource && sign != kSink) {
            throw std::invalid_argument("boundary word must use only + and -");
        }
    }
    if (tree.leaf_count() != word.size()) {
        throw std::invalid_argument("boundary word length " +
                                    std::to_string(word.size()) +
                                    " does not match leaf count " +
                                    std::to_string(tree.leaf_count()));
    }
    if (tree.vertex_count() == 1) {
        throw std::invalid_argument("a single vertex has no edges to orient");
    }

    if (is_arc(tree)) {
        // The root is a smoothed 2-valent point; the arc orients end to end,
        // so exactly the two mixed words are realizable.
        if (word != "-+" && word != "+-") {
            return std::nullopt;
        }
        std::string classes{kSmoothed, word[0], word[1]};
        return OrientedTreeWeb{encode(tree), classes, word};
    }

    std::vector<std::uint32_t> degrees;
    collect_internal_degrees(tree, true, degrees);
    for (std::uint32_t degree : degrees) {
        if (degree != degrees.front() || degree < 3) {
            throw std::invalid_argument(
                "tree is not a uniform-valence web (internal degree " +
                std::to_string(degree) + ")");
        }
    }

    // Coherence forces adjacent vertices into opposite classes, so the two
    // candidate orientations are the two depth-parity colorings; their leaf
    // words are complementary, hence at most one can match.
    for (char root_class : {kSource, kSink}) {
        std::string classes;
        std::string leaf_word;
        classes.reserve(tree.vertex_count());
        color_by_parity(tree, root_class,
                        root_class == kSource ? kSink : kSource, 0, classes,
                        leaf_word);
        if (leaf_word == word) {
            return OrientedTreeWeb{encode(tree), std::move(classes), word};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructive source/sink webs.

namespace {

// Rewrites a (p^2, p) coral code into the oriented tree's code: every star
// base keeps p children, each of which receives p of the star's original
// subtrees in order.
void expand_star_blocks(const CanonicalCode& coral, std::size_t& index,
                        std::uint32_t p, bool is_root, CanonicalCode& out) {
    const std::uint32_t count = coral[index++];
    if (is_root) {
        out.push_back(count);
        for (std::uint32_t i = 0; i < count; ++i) {
            expand_star_blocks(coral, index, p, false, out);
        }
        return;
    }
    if (count == 0) {
        out.push_back(0);
        return;
    }
    // count == p*p by the coral invariants.
    out.push_back(p);
    for (std::uint32_t group = 0; group < p; ++group) {
        out.push_back(p);
        for (std::uint32_t i = 0; i < p; ++i) {
            expand_star_blocks(coral, index, p, false, out);
        }
    }
}

OrientedTreeWeb web_from_expanded_code(CanonicalCode code) {
    const PlaneTree tree = decode(code);
    std::string classes;
    std::string word;
    classes.reserve(tree.vertex_count());
    color_by_parity(tree, kSource, kSink, 0, classes, word);
    return OrientedTreeWeb{std::move(code), std::move(classes), std::move(word)};
}

void sort_webs(std::vector<OrientedTreeWeb>& webs) {
    std::sort(webs.begin(), webs.end(),
              [](const OrientedTreeWeb& a, const OrientedTreeWeb& b) {
                  return a.code < b.code;
              });
}

}  // namespace

std::vector<OrientedTreeWeb> enumerate_sourcesink_trees(std::uint32_t p,
                                                        std::uint32_t k) {
    if (p < 2) {
        throw std::invalid_argument("source/sink trees need p >= 2");
    }
    std::vector<OrientedTreeWeb> webs;
    for_each_coral_tuple(p * p, p, k, [&](const CanonicalCode& coral) {
        CanonicalCode code;
        std::size_t index = 0;
        expand_star_blocks(coral, index, p, true, code);
        webs.push_back(web_from_expanded_code(std::move(code)));
    });
    sort_webs(webs);
    return webs;
}

ExactNat count_sourcesink_by_filter(std::uint32_t p, std::uint32_t k,
                                    std::uint64_t cap) {
    if (p < 2) {
        throw std::invalid_argument("source/sink trees need p >= 2");
    }
    // Trees with boundary length k(p^2-1) + (p+1) and uniform valence p+1
    // are exactly the (p, p) coral diagrams with k(p+1) stars.
    const std::uint32_t stars = k * (p + 1);
    const ExactNat unfiltered = raney_closed(p, p, stars);
    if (unfiltered > cap) {
        std::ostringstream message;
        message << "filter would enumerate " << unfiltered
                << " trees, above the cap of " << cap;
        throw SizeLimitError(message.str(), cap);
    }
    const std::size_t boundary_length = k * (p * p - 1) + p + 1;
    const BoundaryWord word(boundary_length, kSink);
    ExactNat matched = 0;
    for_each_coral_tuple(p, p, stars, [&](const CanonicalCode& code) {
        if (orient_with_word(decode(code), word).has_value()) {
            ++matched;
        }
    });
    return matched;
}

std::vector<OrientedTreeWeb> enumerate_a2_tree_webs_constant(std::uint32_t k) {
    return enumerate_sourcesink_trees(2, k);
}

std::vector<OrientedTreeWeb> enumerate_a2_tree_webs_minus(std::uint32_t k,
                                                          std::uint64_t cap) {
    if (k == 0) {
        // Boundary length 2 admits no trivalent vertex at all; the only tree
        // is the bare arc, and it orients as (-, +).
        return {OrientedTreeWeb{CanonicalCode{2, 0, 0}, ".-+", "-+"}};
    }
    // Trivalent trees with 3k+2 boundary leaves are the (2, 2) corals with
    // 3k-1 stars.
    const std::uint32_t stars = 3 * k - 1;
    const ExactNat unfiltered = raney_closed(2, 2, stars);
    if (unfiltered > cap) {
        std::ostringstream message;
        message << "filter would enumerate " << unfiltered
                << " trees, above the cap of " << cap;
        throw SizeLimitError(message.str(), cap);
    }
    BoundaryWord word(3 * k + 2, kSink);
    word[0] = kSource;
    std::vector<OrientedTreeWeb> webs;
    for_each_coral_tuple(2, 2, stars, [&](const CanonicalCode& code) {
        if (auto web = orient_with_word(decode(code), word)) {
            webs.push_back(std::move(*web));
        }
    });
    sort_webs(webs);
    return webs;
}

ConjecturePair conjecture_values(std::uint32_t n, std::uint32_t j,
                                 std::uint32_t k) {
    if (n < 3) {
        throw std::invalid_argument("n must be >= 3");
    }
    if (j < 1 || j > n - 1) {
        throw std::invalid_argument("j must satisfy 1 <= j <= n-1");
    }
    const ExactNat scale = boost::multiprecision::pow(ExactNat(n - 2), k);
    return ConjecturePair{scale * raney_closed(n + 1, n - 1, k),
                          scale * raney_closed(n - 1, n - j, k)};
}

std::string record_line(const OrientedTreeWeb& web, std::uint32_t p,
                        std::uint32_t r, std::uint32_t k) {
    std::ostringstream out;
    out << p << ' ' << r << ' ' << k << ' ' << code_to_string(web.code) << ' '
        << web.boundary << ' ' << web.classes;
    return out.str();
}

OrientedTreeWeb web_from_record(const std::string& line, std::uint32_t& p,
                                std::uint32_t& r, std::uint32_t& k) {
    std::istringstream in(line);
    std::string code_text;
    OrientedTreeWeb web;
    if (!(in >> p >> r >> k >> code_text >> web.boundary >> web.classes)) {
        throw MalformedCodeError("unparsable web record: " + line);
    }
    std::string extra;
    if (in >> extra) {
        throw MalformedCodeError("trailing fields in web record: " + line);
    }
    web.code = code_from_string(code_text);
    const PlaneTree tree = decode(web.code);
    if (web.classes.size() != tree.vertex_count() ||
        web.boundary.size() != tree.leaf_count()) {
        throw MalformedCodeError("web record fields disagree with the code: " +
                                 line);
    }
    return web;
}

std::string to_dot(const OrientedTreeWeb& web, const std::string& name) {
    const PlaneTree tree = web.tree();
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  graph [ordering=out];\n";
    for (std::size_t v = 0; v < web.classes.size(); ++v) {
        out << "  n" << v << " [label=\"" << web.classes[v] << "\"];\n";
    }
    // Each edge points from its source-class endpoint to its sink-class
    // endpoint; a smoothed endpoint defers to the other end.
    struct Walker {
        const std::string& classes;
        std::ostringstream& out;
        std::size_t index = 0;

        void walk(const PlaneTree& node) {
            const std::size_t self = index++;
            for (const PlaneTree& child : node.children()) {
                const std::size_t child_id = index;
                if (classes[child_id] == kSink) {
                    out << "  n" << self << " -> n" << child_id << ";\n";
                } else {
                    out << "  n" << child_id << " -> n" << self << ";\n";
                }
                walk(child);
            }
        }
    };
    Walker walker{web.classes, out};
    walker.walk(tree);
    out << "}\n";
    return out.str();
}

}  // namespace raney
