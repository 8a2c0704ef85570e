#pragma once

#include "raney/numbers.hpp"
#include "raney/plane_tree.hpp"

#include <functional>
#include <string>
#include <vector>

namespace raney {

// A rooted plane tree grown from an (r+1)-valent base vertex: the root has
// exactly r+1 children, the leftmost root child stays a bare leaf (the
// reserved edge that pins the planar embedding), every other vertex has 0
// or p children, and exactly k non-root vertices have p children (the
// star bases).
struct CoralDiagram {
    std::uint32_t p = 1;
    std::uint32_t r = 1;
    std::uint32_t k = 0;
    CanonicalCode code;

    PlaneTree tree() const { return decode(code); }

    bool operator==(const CoralDiagram&) const = default;
};

// Structural check of all the invariants above.
bool is_valid_coral(const CoralDiagram& diagram);

// --- Two independent enumeration routes.  Both yield each diagram exactly
// once; the sorted vectors they return are equal as code sets (and the
// verification suite insists on it).

// Tier-by-tier construction: stars are attached in rounds, each round only
// on top of stars from the previous round, so the rounds' sizes form a
// strong composition of k.  Skipped attachment sites freeze permanently.
std::vector<CoralDiagram> enumerate_coral_tiered(std::uint32_t p,
                                                 std::uint32_t r,
                                                 std::uint32_t k);

// Visits every diagram in generation order together with the tier-size
// composition that produced it.
void for_each_coral_tiered(
    std::uint32_t p, std::uint32_t r, std::uint32_t k,
    const std::function<void(const Composition&, const CoralDiagram&)>& visit);

// Tuple-of-trees construction: grafts a full p-ary tree onto each of the r
// eligible base edges, one choice per weak composition of k.
std::vector<CoralDiagram> enumerate_coral_tuple(std::uint32_t p,
                                                std::uint32_t r,
                                                std::uint32_t k);

// Streaming form of the tuple route (generation order, no materialization);
// used by the brute-force web filters where the family can get large.
void for_each_coral_tuple(
    std::uint32_t p, std::uint32_t r, std::uint32_t k,
    const std::function<void(const CanonicalCode&)>& visit);

// Cardinality obtained by actually generating the family (not by formula);
// equals raney_closed(p, r, k).
ExactNat count_coral(std::uint32_t p, std::uint32_t r, std::uint32_t k);

// Subdivides the reserved leftmost base edge of an (p, p) diagram with a
// new 2-valent vertex and re-roots there: the old base becomes the first
// star of a (p, 1) diagram with k+1 stars.  Bijective onto that family.
// Throws ParameterMismatchError unless diagram.r == diagram.p.
CoralDiagram subdivide_leftmost_edge(const CoralDiagram& diagram);

// For p = 1 diagrams: reads off the chain lengths above the r eligible
// base edges.  Bijective onto the length-r weak compositions of k.
// Throws ParameterMismatchError unless diagram.p == 1.
WeakComposition chain_weak_composition(const CoralDiagram& diagram);

// One-line record "p r k c,o,d,e" and its inverse (inverse validates).
std::string record_line(const CoralDiagram& diagram);
CoralDiagram coral_from_record(const std::string& line);

}  // namespace raney
