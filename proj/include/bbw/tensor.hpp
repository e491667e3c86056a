#pragma once

#include "bbw/diagrams.hpp"

#include <optional>
#include <vector>

namespace bbw {

/* A formal nonnegative combination of Schur functors, optionally carried in a
 * uniform homological degree (shift >= 0 means the sum sits in degree shift). */
struct SchurSum {
    std::vector<std::pair<YoungDiagram, long long>> terms;  // sorted by diagram
    long long shift = 0;

    void add(const YoungDiagram& d, long long mult);
    long long mult_of(const YoungDiagram& d) const;
    bool operator==(const SchurSum& o) const
    {
        return terms == o.terms && shift == o.shift;
    }
};

// Sigma^mu tensor Sigma^nu = sum of c^lambda_{mu nu} Sigma^lambda, truncated
// to diagrams of height <= max_height after the full computation
SchurSum lr_product(const YoungDiagram& mu, const YoungDiagram& nu, long long max_height);

// single Littlewood-Richardson coefficient c^lambda_{mu nu}
long long lr_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu,
                         const YoungDiagram& nu);

// Sigma^{beta'}(O + U') as a sum of Sigma^gamma U' over gamma interlacing
// beta' (rank of U' is k, so beta' has height at most k+1)
SchurSum cauchy_one_plus(const YoungDiagram& beta_prime, long long k);

// Lambda^m(Sym^2 U) for U of rank k: sum of Sigma^{exp^{1,0} nu} U over
// symmetric nu in Y_{k,k} with |nu| + diag_length(nu) = 2m
SchurSum wedge_sym2(long long m, long long k);

/* Pushforward along p2 : Gr(k, O + U') -> base with P^k fibers, applied to
 * Sigma^beta U.  Nonzero exactly when beta_j != j for all j; then beta is the
 * horizontal 1-expansion of a unique tau of height <= k and the value is
 * Sigma^{exp^{0,1} tau}(O + U') in homological degree diag_length(tau)
 * (returned as shift). */
std::optional<SchurSum> pushforward_p2(const YoungDiagram& beta, long long k);

}  // namespace bbw
