#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace raney {

// Preorder child-count sequence of a plane rooted tree.  A sequence is a
// valid code iff the running total 1 + sum(c_i - 1) stays positive before
// the last entry and reaches 0 exactly there.  Codes are the canonical
// form throughout: two trees are equal iff their codes are equal, and all
// enumeration output is sorted by code.
using CanonicalCode = std::vector<std::uint32_t>;

bool is_valid_code(const CanonicalCode& code);

// "3,0,2,0,0" style serialization, one tree per line in record streams.
std::string code_to_string(const CanonicalCode& code);
CanonicalCode code_from_string(const std::string& text);

// Rooted tree with totally ordered children (left-to-right planar order).
class PlaneTree {
public:
    PlaneTree() = default;  // a single leaf
    explicit PlaneTree(std::vector<PlaneTree> children)
        : children_(std::move(children)) {}

    bool is_leaf() const { return children_.empty(); }
    std::uint32_t arity() const {
        return static_cast<std::uint32_t>(children_.size());
    }
    const std::vector<PlaneTree>& children() const { return children_; }

    std::size_t vertex_count() const;
    std::size_t leaf_count() const;

    bool operator==(const PlaneTree&) const = default;

private:
    std::vector<PlaneTree> children_;
};

CanonicalCode encode(const PlaneTree& tree);

// Inverse of encode.  Throws MalformedCodeError when the deficit invariant
// fails (corrupt input).
PlaneTree decode(const CanonicalCode& code);

// Preorder indices of the leaves.  Preorder visits leaves in their
// left-to-right planar order, so this is the boundary order as well.
std::vector<std::size_t> boundary_leaves(const PlaneTree& tree);

// All plane trees in which every vertex has 0 or p children and exactly
// internal_count vertices have p children, sorted by canonical code.
// Cardinality is p_catalan(p, internal_count).
std::vector<PlaneTree> enumerate_pary_trees(std::uint32_t p,
                                            std::uint32_t internal_count);

// Same family as codes; table[j] lists (sorted) every full p-ary tree with
// j internal vertices for j = 0..max_internal.  This is the workhorse the
// coral enumerators build on.
std::vector<std::vector<CanonicalCode>> pary_tree_code_table(
    std::uint32_t p, std::uint32_t max_internal);

// Graphviz text for the tree; child order is preserved via ordering=out.
std::string to_dot(const PlaneTree& tree, const std::string& name = "tree");

}  // namespace raney
