#pragma once

#include "bbw/diagrams.hpp"

#include <string>
#include <vector>

namespace bbw {

enum class Family { A, B, D };

/* A_m acts on m+1 coordinates by permutations; B_n/D_n act on n coordinates
 * by permutations and sign changes (D: an even number of sign changes). */
struct LieType {
    Family family = Family::A;
    long long rank = 1;

    long long coord_count() const { return family == Family::A ? rank + 1 : rank; }
    bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }
    bool operator!=(const LieType& o) const { return !(*this == o); }
};

/* Half-integral coordinates stored as doubled integers: coords[i] = two_c[i]/2.
 * For B/D the lattice requires all coordinates integral or all strictly
 * half-integral. */
struct Weight {
    LieType type;
    std::vector<long long> two_c;

    bool operator==(const Weight& o) const { return type == o.type && two_c == o.two_c; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const;
};

Weight make_weight(LieType type, std::vector<long long> two_coords);

// sum of all fundamental weights: (n-1+eps, ..., eps) for B_n/D_n with
// eps = 1/2 resp. 0; the staircase (N-1, ..., 0) for A_{N-1}
Weight rho(LieType type);

bool is_singular(const Weight& mu);

struct DominantizationResult {
    bool singular = false;
    Weight dominant;       // valid when not singular
    long long length = 0;  // minimal Weyl word length, valid when not singular
    int spin_sign = +1;    // type D: (-1)^{#negative coordinates} of the input
};

DominantizationResult dominantize(const Weight& mu);

// dimension of the Schur functor Sigma^alpha of an m-dimensional space
long long dim_schur(const YoungDiagram& alpha, long long m);

// dimension of a half-spinor representation: 2^{n-1} for D_n, 2^n for B_n
long long dim_half_spinor(LieType type);

// rank of the spinor bundle on the rank-k isotropic Grassmannian:
// 2^{n-1-k} for D_n, 2^{n-k} for B_n
long long spinor_bundle_rank(LieType type, long long k);

struct RepLabel {
    enum class Kind { Trivial, HalfSpinor, HighestWeight };
    Kind kind = Kind::Trivial;
    int sign = +1;  // HalfSpinor only
    Weight weight;  // HighestWeight only

    static RepLabel trivial() { return RepLabel{}; }
    static RepLabel half_spinor(int sign);
    static RepLabel highest_weight(Weight w);

    bool operator==(const RepLabel& o) const;
    bool operator<(const RepLabel& o) const;
};

// type tags "A3", "B4", "D5"
LieType parse_lie_type(const std::string& text);
std::string to_string(const LieType& type);

// comma-separated rationals with optional "/2", e.g. "5/2,3/2,1/2"
Weight parse_weight(const std::string& text, LieType type);
std::string coords_to_string(const Weight& w);

std::string to_string(const RepLabel& label);

}  // namespace bbw
