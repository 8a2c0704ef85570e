#include "raney/plane_tree.hpp"

#include "raney/error.hpp"
#include "raney/numbers.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace raney {

bool is_valid_code(const CanonicalCode& code) {
    if (code.empty()) {
        return false;
    }
    std::uint64_t pending = 1;  // slots still waiting for a subtree
    for (std::uint32_t count : code) {
        if (pending == 0) {
            return false;  // entries past the end of the tree
        }
        pending += count;
        pending -= 1;
    }
    return pending == 0;
}

std::string code_to_string(const CanonicalCode& code) {
    std::ostringstream out;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << code[i];
    }
    return out.str();
}

CanonicalCode code_from_string(const std::string& text) {
    CanonicalCode code;
    const char* pos = text.data();
    const char* end = text.data() + text.size();
    while (pos < end) {
        std::uint32_t value = 0;
        auto [next, ec] = std::from_chars(pos, end, value);
        if (ec != std::errc{} || (next < end && *next != ',')) {
            throw MalformedCodeError("unparsable canonical code: " + text);
        }
        code.push_back(value);
        pos = next < end ? next + 1 : next;
    }
    if (!is_valid_code(code)) {
        throw MalformedCodeError("canonical code fails the deficit invariant: " +
                                 text);
    }
    return code;
}

std::size_t PlaneTree::vertex_count() const {
    std::size_t total = 1;
    for (const PlaneTree& child : children_) {
        total += child.vertex_count();
    }
    return total;
}

std::size_t PlaneTree::leaf_count() const {
    if (is_leaf()) {
        return 1;
    }
    std::size_t total = 0;
    for (const PlaneTree& child : children_) {
        total += child.leaf_count();
    }
    return total;
}

namespace {

void encode_into(const PlaneTree& tree, CanonicalCode& out) {
    out.push_back(tree.arity());
    for (const PlaneTree& child : tree.children()) {
        encode_into(child, out);
    }
}

PlaneTree decode_at(const CanonicalCode& code, std::size_t& index) {
    const std::uint32_t count = code[index++];
    std::vector<PlaneTree> children;
    children.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        children.push_back(decode_at(code, index));
    }
    return PlaneTree(std::move(children));
}

}  // namespace

CanonicalCode encode(const PlaneTree& tree) {
    CanonicalCode out;
    out.reserve(tree.vertex_count());
    encode_into(tree, out);
    return out;
}

PlaneTree decode(const CanonicalCode& code) {
    if (!is_valid_code(code)) {
        throw MalformedCodeError("canonical code fails the deficit invariant: " +
                                 code_to_string(code));
    }
    std::size_t index = 0;
    return decode_at(code, index);
}

namespace {

void collect_leaves(const PlaneTree& tree, std::size_t& index,
                    std::vector<std::size_t>& out) {
    const std::size_t self = index++;
    if (tree.is_leaf()) {
        out.push_back(self);
        return;
    }
    for (const PlaneTree& child : tree.children()) {
        collect_leaves(child, index, out);
    }
}

}  // namespace

std::vector<std::size_t> boundary_leaves(const PlaneTree& tree) {
    std::vector<std::size_t> out;
    std::size_t index = 0;
    collect_leaves(tree, index, out);
    return out;
}

namespace {

// Appends to `out` one tree per choice of subtrees from table[parts[i]].
void append_tuple_products(const std::vector<std::vector<CanonicalCode>>& table,
                           const std::vector<std::uint32_t>& parts,
                           std::size_t slot, CanonicalCode& current,
                           std::vector<CanonicalCode>& out) {
    if (slot == parts.size()) {
        out.push_back(current);
        return;
    }
    for (const CanonicalCode& sub : table[parts[slot]]) {
        const std::size_t mark = current.size();
        current.insert(current.end(), sub.begin(), sub.end());
        append_tuple_products(table, parts, slot + 1, current, out);
        current.resize(mark);
    }
}

}  // namespace

std::vector<std::vector<CanonicalCode>> pary_tree_code_table(
    std::uint32_t p, std::uint32_t max_internal) {
    if (p == 0) {
        throw std::invalid_argument("p must be >= 1");
    }
    std::vector<std::vector<CanonicalCode>> table(max_internal + 1);
    table[0].push_back(CanonicalCode{0});
    for (std::uint32_t j = 1; j <= max_internal; ++j) {
        // Root is internal; its p subtrees split the remaining j-1 internal
        // vertices in every possible ordered way.
        for (const WeakComposition& split : weak_compositions(j - 1, p)) {
            CanonicalCode current{p};
            append_tuple_products(table, split.parts, 0, current, table[j]);
        }
        std::sort(table[j].begin(), table[j].end());
    }
    return table;
}

std::vector<PlaneTree> enumerate_pary_trees(std::uint32_t p,
                                            std::uint32_t internal_count) {
    const auto table = pary_tree_code_table(p, internal_count);
    std::vector<PlaneTree> out;
    out.reserve(table[internal_count].size());
    for (const CanonicalCode& code : table[internal_count]) {
        out.push_back(decode(code));
    }
    return out;
}

namespace {

void dot_edges(const PlaneTree& tree, std::size_t& index, std::ostream& out) {
    const std::size_t self = index++;
    for (const PlaneTree& child : tree.children()) {
        out << "  n" << self << " -- n" << index << ";\n";
        dot_edges(child, index, out);
    }
}

}  // namespace

std::string to_dot(const PlaneTree& tree, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  graph [ordering=out];\n";
    out << "  node [shape=point];\n";
    const std::size_t vertices = tree.vertex_count();
    for (std::size_t v = 0; v < vertices; ++v) {
        out << "  n" << v << ";\n";
    }
    std::size_t index = 0;
    dot_edges(tree, index, out);
    out << "}\n";
    return out.str();
}

}  // namespace raney
