#include "pmd/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "pmd/errors.hpp"

namespace pmd {

namespace {

// Copies the subtree of `src` rooted at `node` into `dst`, returning the new
// root index. `keep` may prune: children for which keep(child) is false are
// left as empty slots.
int copy_subtree(const PAryTree& src, int node, PAryTree& dst,
                 const std::function<bool(int)>& keep) {
    int me = static_cast<int>(dst.nodes.size());
    dst.nodes.push_back({src.nodes[node].label, std::vector<int>(src.arity, PAryTree::kNone)});
    for (int i = 0; i < src.arity; ++i) {
        int c = src.nodes[node].slot[i];
        if (c != PAryTree::kNone && keep(c)) {
            dst.nodes[me].slot[i] = copy_subtree(src, c, dst, keep);
        }
    }
    return me;
}

int copy_subtree(const PAryTree& src, int node, PAryTree& dst) {
    return copy_subtree(src, node, dst, [](int) { return true; });
}

// Vertex indices of MD(tree): the root, closed under decreasing edges.
std::vector<bool> md_mask(const PAryTree& tree) {
    std::vector<bool> in_md(tree.nodes.size(), false);
    std::vector<int> stack{tree.root};
    in_md[tree.root] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : tree.nodes[v].slot) {
            if (c != PAryTree::kNone && tree.nodes[c].label < tree.nodes[v].label) {
                in_md[c] = true;
                stack.push_back(c);
            }
        }
    }
    return in_md;
}

}  // namespace

bool validate(const PAryTree& tree, std::vector<std::string>* diagnostics) {
    auto report = [&](const std::string& msg) {
        if (diagnostics) diagnostics->push_back(msg);
    };
    bool ok = true;
    if (tree.arity < 2) {
        report("arity must be >= 2");
        ok = false;
    }
    if (tree.root == PAryTree::kNone) {
        if (!tree.nodes.empty()) {
            report("empty tree must have no nodes");
            ok = false;
        }
        return ok;
    }
    int n = static_cast<int>(tree.nodes.size());
    if (tree.root < 0 || tree.root >= n) {
        report("root index out of range");
        return false;
    }
    std::vector<int> parents(n, 0);
    std::map<long long, int> seen;
    for (int v = 0; v < n; ++v) {
        const auto& node = tree.nodes[v];
        if (node.label <= 0) {
            report("label " + std::to_string(node.label) + " is not positive");
            ok = false;
        }
        if (++seen[node.label] == 2) {
            report("duplicate label " + std::to_string(node.label));
            ok = false;
        }
        if (static_cast<int>(node.slot.size()) != tree.arity) {
            report("vertex " + std::to_string(node.label) + " does not have exactly " +
                   std::to_string(tree.arity) + " slots");
            ok = false;
            continue;
        }
        for (int c : node.slot) {
            if (c == PAryTree::kNone) continue;
            if (c < 0 || c >= n) {
                report("child index out of range under vertex " + std::to_string(node.label));
                ok = false;
            } else {
                ++parents[c];
            }
        }
    }
    if (!ok) return false;
    for (int v = 0; v < n; ++v) {
        int expected = (v == tree.root) ? 0 : 1;
        if (parents[v] != expected) {
            report("vertex " + std::to_string(tree.nodes[v].label) + " has " +
                   std::to_string(parents[v]) + " parents, expected " + std::to_string(expected));
            ok = false;
        }
    }
    if (!ok) return false;
    // parent counts are right, so reachability from the root means acyclic + connected
    std::vector<bool> visited(n, false);
    std::vector<int> stack{tree.root};
    visited[tree.root] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : tree.nodes[v].slot) {
            if (c != PAryTree::kNone && !visited[c]) {
                visited[c] = true;
                ++count;
                stack.push_back(c);
            }
        }
    }
    if (count != n) {
        report("tree is not connected from the root");
        ok = false;
    }
    return ok;
}

std::set<long long> labels(const PAryTree& tree) {
    std::set<long long> out;
    for (const auto& node : tree.nodes) out.insert(node.label);
    return out;
}

PAryTree md_subtree(const PAryTree& tree) {
    if (tree.empty()) throw EmptyTree("md_subtree of the empty tree");
    auto in_md = md_mask(tree);
    PAryTree out;
    out.arity = tree.arity;
    out.root = copy_subtree(tree, tree.root, out, [&](int c) { return in_md[c]; });
    return out;
}

long long md_size(const PAryTree& tree) {
    if (tree.empty()) throw EmptyTree("md_size of the empty tree");
    auto in_md = md_mask(tree);
    return std::count(in_md.begin(), in_md.end(), true);
}

Decomposition decompose(const PAryTree& tree) {
    if (tree.empty()) throw EmptyTree("decompose of the empty tree");
    auto in_md = md_mask(tree);

    Decomposition d;
    d.y_part.arity = tree.arity;
    d.z_part.arity = tree.arity;

    // Y = MD plus its increasing leaves, each leaf truncated to a bare vertex.
    std::function<int(int)> build_y = [&](int v) -> int {
        int me = static_cast<int>(d.y_part.nodes.size());
        d.y_part.nodes.push_back(
            {tree.nodes[v].label, std::vector<int>(tree.arity, PAryTree::kNone)});
        for (int i = 0; i < tree.arity; ++i) {
            int c = tree.nodes[v].slot[i];
            if (c == PAryTree::kNone) continue;
            if (in_md[c]) {
                d.y_part.nodes[me].slot[i] = build_y(c);
            } else {
                int leaf = static_cast<int>(d.y_part.nodes.size());
                d.y_part.nodes.push_back(
                    {tree.nodes[c].label, std::vector<int>(tree.arity, PAryTree::kNone)});
                d.y_part.nodes[me].slot[i] = leaf;
                d.attachments.push_back({tree.nodes[c].label, tree.nodes[v].label, i});

                PAryTree comp;
                comp.arity = tree.arity;
                comp.root = copy_subtree(tree, c, comp);
                d.z_part.components.push_back(std::move(comp));
            }
        }
        return me;
    };
    d.y_part.root = build_y(tree.root);

    auto root_label = [](const PAryTree& t) { return t.nodes[t.root].label; };
    std::sort(d.z_part.components.begin(), d.z_part.components.end(),
              [&](const PAryTree& a, const PAryTree& b) { return root_label(a) < root_label(b); });
    std::sort(d.attachments.begin(), d.attachments.end(),
              [](const auto& a, const auto& b) { return a.leaf_label < b.leaf_label; });
    return d;
}

PAryTree recompose(const Decomposition& d) {
    PAryTree out = d.y_part;
    // label -> node index in out, for leaves only
    std::map<long long, int> y_index;
    for (int v = 0; v < static_cast<int>(out.nodes.size()); ++v) {
        y_index[out.nodes[v].label] = v;
    }
    std::vector<int> parent(out.nodes.size(), PAryTree::kNone);
    for (int v = 0; v < static_cast<int>(out.nodes.size()); ++v) {
        for (int c : out.nodes[v].slot) {
            if (c != PAryTree::kNone) parent[c] = v;
        }
    }
    for (const auto& comp : d.z_part.components) {
        if (comp.empty()) throw AttachmentMismatch("empty forest component");
        long long root_label = comp.nodes[comp.root].label;
        auto it = y_index.find(root_label);
        if (it == y_index.end()) {
            throw AttachmentMismatch("component root " + std::to_string(root_label) +
                                     " is absent from y_part");
        }
        int leaf = it->second;
        bool is_leaf = std::all_of(out.nodes[leaf].slot.begin(), out.nodes[leaf].slot.end(),
                                   [](int c) { return c == PAryTree::kNone; });
        int par = parent[leaf];
        if (!is_leaf || par == PAryTree::kNone ||
            out.nodes[leaf].label <= out.nodes[par].label) {
            throw AttachmentMismatch("component root " + std::to_string(root_label) +
                                     " is not an increasing leaf of y_part");
        }
        // splice the component's children under the existing leaf vertex
        for (int i = 0; i < comp.arity; ++i) {
            int c = comp.nodes[comp.root].slot[i];
            if (c != PAryTree::kNone) {
                out.nodes[leaf].slot[i] = copy_subtree(comp, c, out);
            }
        }
    }
    return out;
}

std::string canonical_encode(const PAryTree& tree) {
    if (tree.empty()) return "_";
    std::string out;
    std::function<void(int)> enc = [&](int v) {
        if (v == PAryTree::kNone) {
            out += '_';
            return;
        }
        out += '(';
        out += std::to_string(tree.nodes[v].label);
        for (int c : tree.nodes[v].slot) {
            out += ',';
            enc(c);
        }
        out += ')';
    };
    enc(tree.root);
    return out;
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    PAryTree tree;
    int arity = 0;  // inferred at the first vertex

    explicit Parser(const std::string& t) : text(t) {}

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    int parse_tree() {
        if (peek() == '_') {
            ++pos;
            return PAryTree::kNone;
        }
        if (peek() != '(') fail("expected '(' or '_'");
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a decimal label");
        long long label = std::stoll(text.substr(start, pos - start));

        int me = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({label, {}});
        std::vector<int> children;
        while (peek() == ',') {
            ++pos;
            children.push_back(parse_tree());
        }
        if (peek() != ')') fail("expected ',' or ')'");
        ++pos;
        if (arity == 0) {
            if (children.size() < 2) fail("vertex must have at least 2 slots");
            arity = static_cast<int>(children.size());
        } else if (static_cast<int>(children.size()) != arity) {
            fail("vertex has " + std::to_string(children.size()) + " slots, expected " +
                 std::to_string(arity));
        }
        tree.nodes[me].slot = std::move(children);
        return me;
    }
};

}  // namespace

PAryTree canonical_decode(const std::string& text, int arity_hint) {
    Parser parser(text);
    int root = parser.parse_tree();
    if (parser.pos != text.size()) parser.fail("trailing characters");
    parser.tree.root = root;
    parser.tree.arity = parser.arity > 0 ? parser.arity : arity_hint;
    std::vector<std::string> diag;
    if (!validate(parser.tree, &diag)) {
        throw ParseError("invalid tree: " + (diag.empty() ? "unknown" : diag.front()), 0);
    }
    return parser.tree;
}

}  // namespace pmd
