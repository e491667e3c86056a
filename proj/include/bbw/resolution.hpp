#pragma once

#include "bbw/bbw.hpp"
#include "bbw/diagrams.hpp"

#include <vector>

namespace bbw {

struct ResolutionSummand {
    int sign = +1;       // spinor sign; 0 in type B
    YoungDiagram shape;  // Schur shape on Uperp

    bool operator==(const ResolutionSummand& o) const
    {
        return sign == o.sign && shape == o.shape;
    }
    bool operator<(const ResolutionSummand& o) const
    {
        if (shape != o.shape)
            return shape < o.shape;
        return sign > o.sign;
    }
};

struct ResolutionTerm {
    long long t = 0;
    std::vector<ResolutionSummand> summands;  // sorted

    bool operator==(const ResolutionTerm& o) const
    {
        return t == o.t && summands == o.summands;
    }
};

/* The resolution of the pushed-forward spinor bundle on Gr(k,V):
 * 0 -> F_{k(k+1)/2} -> ... -> F_1 -> F_0 -> j_*S -> 0, with
 * F_t = sum over symmetric nu in Y_{k,k} with |nu| + diag_length(nu) = 2t of
 * S_{base_sign * (-1)^{diag_length(nu)}} (x) Sigma^{exp^{0,N-2k} nu} Uperp. */
struct Resolution {
    SpaceParams params;
    int base_sign = +1;
    std::vector<ResolutionTerm> terms;  // indices 0 .. k(k+1)/2
};

/* Built twice: directly from the term formula and by pairing the spinor
 * bundle against the full exceptional collection {Sigma^alpha Uperp} of
 * Gr(k,V) (evaluating H^*(OGr, Sigma^{alpha^T} U (x) S) for every alpha in
 * Y_{k,N-k} and reading off the homological position); the two constructions
 * are cross-checked on every call.  Requires N >= 2k+2. */
Resolution build_resolution(const SpaceParams& sp, int base_sign);

/* Schur shapes on Uperp generating the subcategory containing the
 * pushed-forward spinor bundle(s) of a fiber.  shapes[i] is the vertical
 * (N-2k)-expansion of nus[i]. */
struct GeneratorSet {
    bool branching = false;
    std::vector<YoungDiagram> nus;     // sorted, in Y_{k,k}
    std::vector<YoungDiagram> shapes;  // exp^{0,N-2k} of the above
};

/* Non-branching fibers: exactly the shapes of build_resolution (symmetric
 * nu).  Branching fibers: the shapes whose pairing against the exceptional
 * collection can be nonzero, found by pushing Sigma^{alpha^T} U through
 * pushforward_p2 and cauchy_one_plus and testing the closed form on the
 * reduced space of dimension N-1; equals {nu : |head(nu)| <= |tail(nu)|}. */
GeneratorSet spinor_subcat_generators(const SpaceParams& sp, bool branching);

}  // namespace bbw
