#include "tetra/labels.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

static_assert(kLabels[0] == 1 && kLabels[13] == 14, "label order");
static_assert(kEdges[23].lo == 13 && kEdges[23].hi == 14, "edge order");

std::string label_name(Label m) {
    std::string s;
    for (int i = 1; i <= 4; ++i)
        if (m & (1 << (i - 1))) s += static_cast<char>('0' + i);
    return s;
}

Label label_from_name(const std::string& s) {
    Label m = 0;
    for (char c : s) {
        if (c < '1' || c > '4') throw std::runtime_error("bad label: " + s);
        m |= static_cast<Label>(1 << (c - '1'));
    }
    if (!label_valid(m)) throw std::runtime_error("bad label: " + s);
    return m;
}

int label_index(Label m) {
    for (int i = 0; i < 14; ++i)
        if (kLabels[i] == m) return i;
    return -1;
}

const std::vector<Perm>& all_permutations() {
    static const std::vector<Perm> perms = [] {
        std::vector<Perm> out;
        Perm p{1, 2, 3, 4};
        do {
            out.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

Perm perm_compose(const Perm& f, const Perm& g) {
    Perm out{};
    for (int i = 0; i < 4; ++i) out[i] = f[g[i] - 1];
    return out;
}

Perm perm_inverse(const Perm& p) {
    Perm out{};
    for (int i = 0; i < 4; ++i) out[p[i] - 1] = i + 1;
    return out;
}

Label perm_apply(const Perm& p, Label m) {
    Label out = 0;
    for (int i = 1; i <= 4; ++i)
        if (m & (1 << (i - 1))) out |= static_cast<Label>(1 << (p[i - 1] - 1));
    return out;
}

int edge_hyp(int e) { return label_size(kEdges[e].lo); }

int edge_index(Label a, Label b) {
    if (a > b) std::swap(a, b);
    for (int e = 0; e < kEdgeCount; ++e)
        if (kEdges[e].lo == a && kEdges[e].hi == b) return e;
    return -1;
}

std::string edge_name(int e) {
    return label_name(kEdges[e].lo) + "-" + label_name(kEdges[e].hi);
}

int edge_from_name(const std::string& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos) return -1;
    try {
        Label a = label_from_name(s.substr(0, dash));
        Label b = label_from_name(s.substr(dash + 1));
        return edge_index(a, b);
    } catch (const std::runtime_error&) {
        return -1;
    }
}

int perm_apply_edge(const Perm& p, int e) {
    int out = edge_index(perm_apply(p, kEdges[e].lo), perm_apply(p, kEdges[e].hi));
    if (out < 0) throw std::logic_error("permutation does not preserve edges");
    return out;
}

int edge_dual(int e) {
    int out = edge_index(label_complement(kEdges[e].lo), label_complement(kEdges[e].hi));
    if (out < 0) throw std::logic_error("duality does not preserve edges");
    return out;
}

EdgeSet edge_set_apply(const Perm& p, EdgeSet s) {
    EdgeSet out = 0;
    for (int e = 0; e < kEdgeCount; ++e)
        if (s & (EdgeSet{1} << e)) out |= EdgeSet{1} << perm_apply_edge(p, e);
    return out;
}

EdgeSet edge_set_dual(EdgeSet s) {
    EdgeSet out = 0;
    for (int e = 0; e < kEdgeCount; ++e)
        if (s & (EdgeSet{1} << e)) out |= EdgeSet{1} << edge_dual(e);
    return out;
}

std::string edge_set_to_string(EdgeSet s) {
    std::string out;
    for (int e = 0; e < kEdgeCount; ++e) {
        if (!(s & (EdgeSet{1} << e))) continue;
        if (!out.empty()) out += ",";
        out += edge_name(e);
    }
    return out;
}

EdgeSet edge_set_from_string(const std::string& s) {
    EdgeSet out = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string tok = s.substr(pos, comma - pos);
        int e = edge_from_name(tok);
        if (e < 0) throw std::runtime_error("bad edge token: " + tok);
        out |= EdgeSet{1} << e;
        pos = comma + 1;
    }
    return out;
}

}  // namespace tetra
