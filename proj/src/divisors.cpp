#include "tetra/divisors.hpp"

#include <stdexcept>

#include "tetra/faces.hpp"

namespace tetra {

namespace {

Label pair_mask(int i, int j) {
    return static_cast<Label>((1 << (i - 1)) | (1 << (j - 1)));
}

// C_i marks the opposite Delta_1 triangle (vertices {j},{k},{l}) together with
// the star triangle at i; C*_i is its dual: the lower triangle on the 2-sets
// avoiding i together with the Delta_3 triangle at i.
EdgeSet c_sset(int i) {
    Label t = label_complement(static_cast<Label>(1 << (i - 1)));
    return faces()[3 + triple_id(t)].edges | faces()[11 + (i - 1)].edges;
}

EdgeSet cstar_sset(int i) {
    Label t = label_complement(static_cast<Label>(1 << (i - 1)));
    return faces()[7 + triple_id(t)].edges | faces()[15 + (i - 1)].edges;
}

// D_ij marks the four edges that merge i with j levelwise:
// {i}{j}, {ik}{jk}, {il}{jl}, {ikl}{jkl}.
EdgeSet d_sset(int i, int j) {
    EdgeSet out = 0;
    auto add = [&](Label a, Label b) {
        int e = edge_index(a, b);
        if (e < 0) throw std::logic_error("D sset edge");
        out |= EdgeSet{1} << e;
    };
    Label mi = static_cast<Label>(1 << (i - 1)), mj = static_cast<Label>(1 << (j - 1));
    add(mi, mj);
    for (int k = 1; k <= 4; ++k) {
        if (k == i || k == j) continue;
        Label mk = static_cast<Label>(1 << (k - 1));
        add(mi | mk, mj | mk);
    }
    Label rest = label_complement(mi | mj);
    add(mi | rest, mj | rest);
    return out;
}

// E_ij marks {i}{j} and {ijk}{ijl}, plus every octahedron edge among the five
// 2-sets other than {ij} (the whole middle layer collapses to one line there).
EdgeSet e_sset(int i, int j) {
    EdgeSet out = 0;
    Label mij = pair_mask(i, j);
    out |= EdgeSet{1} << edge_index(static_cast<Label>(1 << (i - 1)), static_cast<Label>(1 << (j - 1)));
    // the two 3-sets containing {ij}
    std::vector<Label> threes;
    for (Label m = 1; m <= 14; ++m)
        if (label_size(m) == 3 && (m & mij) == mij) threes.push_back(m);
    out |= EdgeSet{1} << edge_index(threes[0], threes[1]);
    for (int e = 0; e < kEdgeCount; ++e) {
        if (edge_hyp(e) != 2) continue;
        if (kEdges[e].lo == mij || kEdges[e].hi == mij) continue;
        out |= EdgeSet{1} << e;
    }
    return out;
}

std::array<Divisor, kDivisorCount> make_divisors() {
    std::array<Divisor, kDivisorCount> out{};
    out[0] = {"A", DivisorKind::A, 1, kHypEdges[1]};
    out[1] = {"B", DivisorKind::B, 2, kHypEdges[2]};
    out[2] = {"Astar", DivisorKind::Astar, 3, kHypEdges[3]};
    for (int i = 1; i <= 4; ++i) {
        out[3 + (i - 1)] = {"C" + std::to_string(i), DivisorKind::C, i, c_sset(i)};
        out[7 + (i - 1)] = {"Cstar" + std::to_string(i), DivisorKind::Cstar, i, cstar_sset(i)};
    }
    int n = 11;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            out[n++] = {"D" + std::to_string(i) + std::to_string(j), DivisorKind::D,
                        static_cast<int>(pair_mask(i, j)), d_sset(i, j)};
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            out[n++] = {"E" + std::to_string(i) + std::to_string(j), DivisorKind::E,
                        static_cast<int>(pair_mask(i, j)), e_sset(i, j)};
    return out;
}

int d_id_from_pair(Label m) {
    for (int d = 11; d < 17; ++d)
        if (divisors()[d].index == m) return d;
    throw std::logic_error("pair mask");
}

int e_id_from_pair(Label m) {
    for (int d = 17; d < 23; ++d)
        if (divisors()[d].index == m) return d;
    throw std::logic_error("pair mask");
}

}  // namespace

const std::array<Divisor, kDivisorCount>& divisors() {
    static const std::array<Divisor, kDivisorCount> kDivisors = make_divisors();
    return kDivisors;
}

int divisor_from_name(const std::string& name) {
    for (int d = 0; d < kDivisorCount; ++d)
        if (divisors()[d].name == name) return d;
    return -1;
}

bool divisor_shifting(int d) { return d < 3; }

int perm_apply_divisor(const Perm& p, int d) {
    const Divisor& div = divisors()[d];
    switch (div.kind) {
        case DivisorKind::A:
        case DivisorKind::B:
        case DivisorKind::Astar: return d;
        case DivisorKind::C: return 3 + (p[div.index - 1] - 1);
        case DivisorKind::Cstar: return 7 + (p[div.index - 1] - 1);
        case DivisorKind::D: return d_id_from_pair(perm_apply(p, static_cast<Label>(div.index)));
        case DivisorKind::E: return e_id_from_pair(perm_apply(p, static_cast<Label>(div.index)));
    }
    throw std::logic_error("divisor kind");
}

int divisor_dual(int d) {
    const Divisor& div = divisors()[d];
    switch (div.kind) {
        case DivisorKind::A: return 2;
        case DivisorKind::B: return 1;
        case DivisorKind::Astar: return 0;
        case DivisorKind::C: return 7 + (div.index - 1);
        case DivisorKind::Cstar: return 3 + (div.index - 1);
        case DivisorKind::D: return d;
        case DivisorKind::E: return e_id_from_pair(label_complement(static_cast<Label>(div.index)));
    }
    throw std::logic_error("divisor kind");
}

}  // namespace tetra
