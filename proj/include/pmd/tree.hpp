#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace pmd {

// A p-ary labeled tree. Every vertex owns exactly `arity` ordered child
// slots; slot identity matters (a lone child in slot 0 is a different tree
// from the same child in slot 1). Vertices carry distinct positive labels,
// not necessarily 1..n. root == kNone encodes the empty tree.
//
// Trees are treated as immutable values after construction; every operation
// below returns a fresh tree and never mutates its input.
struct PAryTree {
    static constexpr int kNone = -1;

    struct Node {
        long long label = 0;
        std::vector<int> slot;  // size == arity, entries are node indices or kNone
    };

    int arity = 2;
    int root = kNone;
    std::vector<Node> nodes;

    bool empty() const { return root == kNone; }
    std::size_t size() const { return nodes.size(); }
};

// A non-ordered collection of p-ary trees with disjoint labels. Canonical
// form keeps components sorted by root label ascending, so two forests are
// equal iff their canonical component lists are equal.
struct Forest {
    int arity = 2;
    std::vector<PAryTree> components;
};

// The (Y, Z) split of a tree: y_part is MD(T) together with its increasing
// leaves (each kept in the slot it occupied in T, its own subtree cut away);
// z_part is the induced forest on the non-MD vertices, one component per
// increasing leaf.
struct Decomposition {
    struct Attachment {
        long long leaf_label;    // z-component root, appears as a leaf of y_part
        long long parent_label;  // MD vertex it hangs under
        int slot;
    };

    PAryTree y_part;
    Forest z_part;
    std::vector<Attachment> attachments;  // sorted by leaf_label
};

// Checks all PAryTree invariants: distinct positive labels, exactly `arity`
// slots per vertex, in-range child references, each non-root vertex having
// exactly one parent, connectivity from the root. Problems found are
// appended to `diagnostics` when it is non-null.
bool validate(const PAryTree& tree, std::vector<std::string>* diagnostics = nullptr);

std::set<long long> labels(const PAryTree& tree);

// The maximal subtree from the root all of whose edges are decreasing
// (child label < parent label). Throws EmptyTree on the empty tree.
PAryTree md_subtree(const PAryTree& tree);

long long md_size(const PAryTree& tree);

Decomposition decompose(const PAryTree& tree);

// Grafts each z-component back onto the increasing leaf of y_part carrying
// the same label. Exact inverse of decompose. Throws AttachmentMismatch if a
// component root is not an increasing leaf of y_part.
PAryTree recompose(const Decomposition& d);

// Canonical text form:  tree := "_" | "(" label {"," tree}*p ")"
// with exactly p comma-separated slots, decimal labels, no whitespace.
std::string canonical_encode(const PAryTree& tree);

// Inverse of canonical_encode. The arity is inferred from the first vertex
// and enforced on every other; a bare "_" yields an empty tree of
// `arity_hint`. Throws ParseError with a byte position on malformed input.
PAryTree canonical_decode(const std::string& text, int arity_hint = 2);

}  // namespace pmd
