#include "raney/coral.hpp"

#include "raney/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace raney {

namespace {

void require_positive(std::uint32_t value, const char* name) {
    if (value == 0) {
        throw std::invalid_argument(std::string(name) + " must be >= 1");
    }
}

bool check_coral_subtree(const PlaneTree& node, std::uint32_t p,
                         std::uint32_t& star_bases) {
    if (node.is_leaf()) {
        return true;
    }
    if (node.arity() != p) {
        return false;
    }
    ++star_bases;
    for (const PlaneTree& child : node.children()) {
        if (!check_coral_subtree(child, p, star_bases)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_valid_coral(const CoralDiagram& diagram) {
    if (diagram.p == 0 || diagram.r == 0 || !is_valid_code(diagram.code)) {
        return false;
    }
    const PlaneTree tree = decode(diagram.code);
    if (tree.arity() != diagram.r + 1) {
        return false;
    }
    if (!tree.children().front().is_leaf()) {
        return false;  // the reserved leftmost base edge grew a star
    }
    std::uint32_t star_bases = 0;
    for (const PlaneTree& child : tree.children()) {
        if (!check_coral_subtree(child, diagram.p, star_bases)) {
            return false;
        }
    }
    return star_bases == diagram.k;
}

// ---------------------------------------------------------------------------
// Tiered route.  A growable arena of nodes keeps the diagram under
// construction; the frontier holds the previous tier's star tops in
// left-to-right order.  Attachments are undone on backtrack, so one arena
// serves the whole enumeration.

namespace {

struct TieredGenerator {
    std::uint32_t p;
    std::uint32_t r;
    std::uint32_t k;
    const std::function<void(const Composition&, const CoralDiagram&)>& visit;

    std::vector<std::vector<std::uint32_t>> children;  // arena, index 0 = root
    std::vector<std::uint32_t> parts;                  // tier sizes so far

    void run() {
        children.assign(1, {});
        for (std::uint32_t i = 0; i <= r; ++i) {
            children[0].push_back(static_cast<std::uint32_t>(children.size()));
            children.emplace_back();
        }
        // Eligible base sites: every root child except the leftmost.
        std::vector<std::uint32_t> frontier(children[0].begin() + 1,
                                            children[0].end());
        place_tiers(k, frontier);
    }

    void emit() {
        CanonicalCode code;
        code.reserve(children.size());
        encode_arena(0, code);
        visit(Composition{parts}, CoralDiagram{p, r, k, std::move(code)});
    }

    void encode_arena(std::uint32_t node, CanonicalCode& out) const {
        out.push_back(static_cast<std::uint32_t>(children[node].size()));
        for (std::uint32_t child : children[node]) {
            encode_arena(child, out);
        }
    }

    void place_tiers(std::uint32_t remaining,
                     const std::vector<std::uint32_t>& frontier) {
        if (remaining == 0) {
            emit();
            return;
        }
        const std::uint32_t max_take = std::min<std::uint32_t>(
            remaining, static_cast<std::uint32_t>(frontier.size()));
        for (std::uint32_t take = 1; take <= max_take; ++take) {
            parts.push_back(take);
            std::vector<std::uint32_t> subset;
            subset.reserve(take);
            choose_sites(frontier, take, 0, remaining, subset);
            parts.pop_back();
        }
    }

    // Chooses `take` attachment sites out of the frontier (indices
    // ascending), attaches a p-star on each, recurses, then detaches.
    void choose_sites(const std::vector<std::uint32_t>& frontier,
                      std::uint32_t take, std::uint32_t start,
                      std::uint32_t remaining,
                      std::vector<std::uint32_t>& subset) {
        if (subset.size() == take) {
            const std::size_t arena_mark = children.size();
            std::vector<std::uint32_t> next_frontier;
            next_frontier.reserve(static_cast<std::size_t>(subset.size()) * p);
            for (std::uint32_t site : subset) {
                for (std::uint32_t i = 0; i < p; ++i) {
                    const auto node = static_cast<std::uint32_t>(children.size());
                    children[site].push_back(node);
                    children.emplace_back();
                    next_frontier.push_back(node);
                }
            }
            place_tiers(remaining - take, next_frontier);
            for (std::uint32_t site : subset) {
                children[site].clear();
            }
            children.resize(arena_mark);
            return;
        }
        const auto needed = take - static_cast<std::uint32_t>(subset.size());
        for (std::uint32_t i = start; i + needed <= frontier.size(); ++i) {
            subset.push_back(frontier[i]);
            choose_sites(frontier, take, i + 1, remaining, subset);
            subset.pop_back();
        }
    }
};

}  // namespace

void for_each_coral_tiered(
    std::uint32_t p, std::uint32_t r, std::uint32_t k,
    const std::function<void(const Composition&, const CoralDiagram&)>& visit) {
    require_positive(p, "p");
    require_positive(r, "r");
    TieredGenerator generator{p, r, k, visit, {}, {}};
    generator.run();
}

std::vector<CoralDiagram> enumerate_coral_tiered(std::uint32_t p,
                                                 std::uint32_t r,
                                                 std::uint32_t k) {
    std::vector<CoralDiagram> out;
    for_each_coral_tiered(p, r, k,
                          [&](const Composition&, const CoralDiagram& diagram) {
                              out.push_back(diagram);
                          });
    std::sort(out.begin(), out.end(),
              [](const CoralDiagram& a, const CoralDiagram& b) {
                  return a.code < b.code;
              });
    return out;
}

// ---------------------------------------------------------------------------
// Tuple route.  A coral code is [r+1, 0, t_1, ..., t_r] for full p-ary
// subtree codes t_j, so the enumeration is a cartesian product over the
// weak compositions of k.

namespace {

void tuple_slots(const std::vector<std::vector<CanonicalCode>>& table,
                 std::uint32_t slots_left, std::uint32_t remaining,
                 CanonicalCode& current,
                 const std::function<void(const CanonicalCode&)>& visit) {
    if (slots_left == 1) {
        for (const CanonicalCode& sub : table[remaining]) {
            const std::size_t mark = current.size();
            current.insert(current.end(), sub.begin(), sub.end());
            visit(current);
            current.resize(mark);
        }
        return;
    }
    for (std::uint32_t take = 0; take <= remaining; ++take) {
        for (const CanonicalCode& sub : table[take]) {
            const std::size_t mark = current.size();
            current.insert(current.end(), sub.begin(), sub.end());
            tuple_slots(table, slots_left - 1, remaining - take, current, visit);
            current.resize(mark);
        }
    }
}

}  // namespace

void for_each_coral_tuple(
    std::uint32_t p, std::uint32_t r, std::uint32_t k,
    const std::function<void(const CanonicalCode&)>& visit) {
    require_positive(p, "p");
    require_positive(r, "r");
    const auto table = pary_tree_code_table(p, k);
    CanonicalCode current{r + 1, 0};
    tuple_slots(table, r, k, current, visit);
}

std::vector<CoralDiagram> enumerate_coral_tuple(std::uint32_t p,
                                                std::uint32_t r,
                                                std::uint32_t k) {
    std::vector<CoralDiagram> out;
    for_each_coral_tuple(p, r, k, [&](const CanonicalCode& code) {
        out.push_back(CoralDiagram{p, r, k, code});
    });
    std::sort(out.begin(), out.end(),
              [](const CoralDiagram& a, const CoralDiagram& b) {
                  return a.code < b.code;
              });
    return out;
}

ExactNat count_coral(std::uint32_t p, std::uint32_t r, std::uint32_t k) {
    ExactNat count = 0;
    for_each_coral_tuple(p, r, k, [&](const CanonicalCode&) { ++count; });
    return count;
}

CoralDiagram subdivide_leftmost_edge(const CoralDiagram& diagram) {
    if (diagram.r != diagram.p) {
        throw ParameterMismatchError("edge subdivision requires r == p");
    }
    if (!is_valid_coral(diagram)) {
        throw std::invalid_argument("not a valid coral diagram: " +
                                    record_line(diagram));
    }
    // Old code is [p+1, 0, rest]; the new 2-valent base keeps the reserved
    // leaf, and the old base becomes the first p-star: [2, 0, p, rest].
    CanonicalCode code;
    code.reserve(diagram.code.size() + 1);
    code.push_back(2);
    code.push_back(0);
    code.push_back(diagram.p);
    code.insert(code.end(), diagram.code.begin() + 2, diagram.code.end());
    return CoralDiagram{diagram.p, 1, diagram.k + 1, std::move(code)};
}

WeakComposition chain_weak_composition(const CoralDiagram& diagram) {
    if (diagram.p != 1) {
        throw ParameterMismatchError("chain read-off requires p == 1");
    }
    if (!is_valid_coral(diagram)) {
        throw std::invalid_argument("not a valid coral diagram: " +
                                    record_line(diagram));
    }
    const PlaneTree tree = diagram.tree();
    WeakComposition out;
    out.parts.reserve(diagram.r);
    for (std::uint32_t j = 1; j <= diagram.r; ++j) {
        // A 1-ary subtree is a chain; its star count is its edge count.
        const PlaneTree& chain = tree.children()[j];
        out.parts.push_back(static_cast<std::uint32_t>(chain.vertex_count() - 1));
    }
    return out;
}

std::string record_line(const CoralDiagram& diagram) {
    std::ostringstream out;
    out << diagram.p << ' ' << diagram.r << ' ' << diagram.k << ' '
        << code_to_string(diagram.code);
    return out.str();
}

CoralDiagram coral_from_record(const std::string& line) {
    std::istringstream in(line);
    CoralDiagram diagram;
    std::string code_text;
    if (!(in >> diagram.p >> diagram.r >> diagram.k >> code_text)) {
        throw MalformedCodeError("unparsable coral record: " + line);
    }
    std::string extra;
    if (in >> extra) {
        throw MalformedCodeError("trailing fields in coral record: " + line);
    }
    diagram.code = code_from_string(code_text);
    if (!is_valid_coral(diagram)) {
        throw MalformedCodeError("record is not a valid coral diagram: " + line);
    }
    return diagram;
}

}  // namespace raney
