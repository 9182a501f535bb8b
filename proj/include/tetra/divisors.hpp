#pragma once
// The 23 boundary divisors.  Three shifting divisors collapse a whole
// hypersimplex (A: all points coincide, B: all lines, A*: all planes); the
// twenty split divisors (C_i, C*_i, D_ij, E_ij) collapse the patterns cut out
// by the coincidence relations of the presentation.  Each divisor is recorded
// by its marked-edge set: edge {I,J} is marked when the subspaces labeled I
// and J coincide on that divisor.

#include "tetra/labels.hpp"

namespace tetra {

inline constexpr int kDivisorCount = 23;

// Fixed ids: A=0, B=1, Astar=2, C1..C4=3..6, Cstar1..Cstar4=7..10,
// D12,D13,D14,D23,D24,D34=11..16, E12,E13,E14,E23,E24,E34=17..22.
enum class DivisorKind { A, B, Astar, C, Cstar, D, E };

struct Divisor {
    std::string name;   // "A", "Astar", "C1", "Cstar3", "D12", "E34", ...
    DivisorKind kind;
    int index;          // C/Cstar: i in 1..4; D/E: pair as Label mask; shifting: hypersimplex k
    EdgeSet sset;
};

const std::array<Divisor, kDivisorCount>& divisors();
int divisor_from_name(const std::string& name);   // -1 if unknown
bool divisor_shifting(int d);
int perm_apply_divisor(const Perm& p, int d);
int divisor_dual(int d);

}  // namespace tetra
