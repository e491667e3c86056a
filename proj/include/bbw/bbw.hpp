#pragma once

#include "bbw/diagrams.hpp"
#include "bbw/weyl.hpp"

#include <optional>
#include <vector>

namespace bbw {

/* Quadric space parameters: V of dimension N with N = 2(n + eps), so even N
 * gives type D_n and odd N gives type B_n; k is the rank of the isotropic
 * subspaces. */
struct SpaceParams {
    long long N = 0;
    long long k = 0;

    bool even() const { return N % 2 == 0; }
    long long n() const { return N / 2; }
    LieType ortho_type() const
    {
        return even() ? LieType{Family::D, n()} : LieType{Family::B, n()};
    }
};

struct GradedEntry {
    long long degree = 0;
    RepLabel label;
    long long mult = 0;

    bool operator==(const GradedEntry& o) const
    {
        return degree == o.degree && label == o.label && mult == o.mult;
    }
};

/* Output of every cohomology computation: a merged multiset of
 * (degree, representation, multiplicity), sorted by (degree, label).
 * An empty list means the bundle is acyclic. */
struct GradedRepList {
    std::vector<GradedEntry> entries;

    void add(long long degree, const RepLabel& label, long long mult);
    void add_all(const GradedRepList& other);
    bool empty() const { return entries.empty(); }
    bool operator==(const GradedRepList& o) const { return entries == o.entries; }
    bool operator!=(const GradedRepList& o) const { return !(*this == o); }
};

struct SpinorFactor {
    bool dual = false;
    int sign = +1;
};

/* Symbolic bundle description used by the CLI: a Schur functor of U or of
 * Uperp, an optional O(d) twist (H = c1 of the dual of U), and optional
 * spinor factors. */
struct BundleExpr {
    enum class Carrier { U, Uperp };
    Carrier carrier = Carrier::U;
    YoungDiagram shape;
    long long twist = 0;
    std::optional<SpinorFactor> spinor_left;
    std::optional<int> spinor_right_sign;
};

std::string to_string(const BundleExpr& b);

/* H^*(OGr(k,V), Sigma^beta U (x) S_{right_sign}) computed both by generic
 * dominantization and by the closed form (nonzero exactly when beta is the
 * horizontal (N-2k)-expansion of a symmetric nu, with a single entry in
 * degree s(N-2k) + (|nu|-s)/2, s = diag_length(nu)); the two paths are
 * cross-checked on every call.  In type B the spinor sign is ignored.
 * Requires N >= 2k+2 and beta in Y_{N-k,k}. */
GradedRepList cohomology_ogr_schur_spinor(const SpaceParams& sp, const YoungDiagram& beta,
                                          int right_sign);

// the two halves of the cross-check, exposed for sweeps
GradedRepList schur_spinor_closed_form(const SpaceParams& sp, const YoungDiagram& beta,
                                       int right_sign);
GradedRepList schur_spinor_dominantize(const SpaceParams& sp, const YoungDiagram& beta,
                                       int right_sign);

/* H^*(OGr(k,V), Sigma^beta U (x) S_{s1}^dual (x) S_{s2}): decomposes the
 * spinor product into summands with weights delta_t (type D keeps only the
 * parity (-1)^t = s1*s2; type B keeps all t in [0, n-k]) and dominantizes
 * each.  Requires N >= 2k+3, height(beta) <= k, width <= height+1. */
GradedRepList cohomology_ogr_hom_spinors(const SpaceParams& sp, const YoungDiagram& beta,
                                         const SpinorFactor& left, int right_sign);

/* H^*(Gr(k,V), Sigma^gamma Uperp (x) O(twist*H)) for GL(N). */
GradedRepList cohomology_gr(long long N, long long k, const YoungDiagram& gamma,
                            long long twist);

struct SpinorRelabel {
    int sign = +1;
    long long extra_twist = -1;
};

/* The dual of the pushed-forward spinor bundle is the other spinor bundle
 * twisted by O(-1); the sign is preserved when g-k is odd and flipped when
 * g-k is even (g = N/2 - 1).  Requires even N. */
SpinorRelabel dual_spinor_relabel(const SpaceParams& sp, int sign);

}  // namespace bbw
