#pragma once

#include "raney/coral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace raney {

// Default ceiling on how many unfiltered trees a brute-force filter may
// visit before it refuses with SizeLimitError.
inline constexpr std::uint64_t kDefaultSizeCap = 1'000'000;

// Signs along the boundary line, left to right.  '+' means the leaf's edge
// points at the boundary (the leaf is a sink); '-' means it points away.
using BoundaryWord = std::string;

// A plane tree with the coherent source/sink orientation realizing a
// boundary word.  `classes` has one character per vertex in preorder:
//   '-'  source: every incident edge points away from the vertex
//   '+'  sink:   every incident edge points into the vertex
//   '.'  smoothed 2-valent point (only the bare arc's root)
// Leaf entries coincide with the boundary word, which is the subsequence
// of `classes` at the leaf positions.
struct OrientedTreeWeb {
    CanonicalCode code;
    std::string classes;
    BoundaryWord boundary;

    PlaneTree tree() const { return decode(code); }

    bool operator==(const OrientedTreeWeb&) const = default;
};

// The coherent orientation of `tree` realizing `word`, or nullopt when none
// exists.  On a tree the orientation is forced by 2-coloring the vertices
// by depth parity, so it is unique whenever it exists.  Requires every
// internal vertex to have one fixed embedding degree >= 3 (child count
// plus one, or the bare child count at the root); the sole exception is
// the two-leaf arc, whose root is a smoothed pass-through point.  Throws
// std::invalid_argument on malformed input (wrong word length, stray
// characters, non-uniform or sub-3 valence).
std::optional<OrientedTreeWeb> orient_with_word(const PlaneTree& tree,
                                                const BoundaryWord& word);

// Source/sink oriented (p+1)-valent trees whose boundary leaves are all
// sinks, built constructively: each (p^2, p) coral diagram's stars expand
// into two-level blocks (a sink carrying p sources, each carrying p
// sinks).  Sorted by canonical code; cardinality raney_closed(p^2, p, k);
// boundary length k(p^2-1) + (p+1).  Requires p >= 2.
std::vector<OrientedTreeWeb> enumerate_sourcesink_trees(std::uint32_t p,
                                                        std::uint32_t k);

// Independent oracle for the same count: enumerates EVERY (p+1)-valent
// half-plane tree with the matching boundary length and keeps those that
// orient with the all-'+' word.  Throws SizeLimitError when the unfiltered
// family exceeds `cap`.
ExactNat count_sourcesink_by_filter(std::uint32_t p, std::uint32_t k,
                                    std::uint64_t cap = kDefaultSizeCap);

// p = 2 specialization: connected trivalent tree webs with a constant
// boundary of 3(k+1) pluses.
std::vector<OrientedTreeWeb> enumerate_a2_tree_webs_constant(std::uint32_t k);

// Connected trivalent tree webs with boundary '-' followed by 3k+1 '+',
// obtained by filtering every trivalent tree with 3k+2 boundary leaves.
// k = 0 yields the bare arc.  Cardinality raney_closed(4, 1, k).
std::vector<OrientedTreeWeb> enumerate_a2_tree_webs_minus(
    std::uint32_t k, std::uint64_t cap = kDefaultSizeCap);

// Conjectured (unverified) web counts.  Nothing in this library checks
// these against an enumeration; they are closed-form predictions only.
struct ConjecturePair {
    // (n-2)^k * R_{n+1,n-1}(k): boundary of n(k+1) ones.
    ExactNat constant_boundary;
    // (n-2)^k * R_{n-1,n-j}(k): boundary of one j then nk+n-j ones.
    ExactNat pointed_boundary;
};

// Requires n >= 3 and 1 <= j <= n-1.
ConjecturePair conjecture_values(std::uint32_t n, std::uint32_t j,
                                 std::uint32_t k);

// One-line record "p r k c,o,d,e boundary classes" where (p, r, k) are the
// Raney parameters counting the family the web came from.
std::string record_line(const OrientedTreeWeb& web, std::uint32_t p,
                        std::uint32_t r, std::uint32_t k);

// Parses a web record; returns the web and fills the Raney parameters.
OrientedTreeWeb web_from_record(const std::string& line, std::uint32_t& p,
                                std::uint32_t& r, std::uint32_t& k);

// Graphviz digraph with edges pointing source -> sink and vertices
// labelled by their class character.
std::string to_dot(const OrientedTreeWeb& web, const std::string& name = "web");

}  // namespace raney
