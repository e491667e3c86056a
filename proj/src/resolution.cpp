#include "bbw/resolution.hpp"

#include "bbw/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbw {

Resolution build_resolution(const SpaceParams& sp, int base_sign)
{
    if (sp.k < 1)
        throw std::invalid_argument("build_resolution: k must be positive");
    if (sp.N < 2 * sp.k + 2)
        throw std::invalid_argument("build_resolution: requires N >= 2k+2");
    if (base_sign != -1 && base_sign != 1)
        throw std::invalid_argument("build_resolution: bad sign");
    const long long p = sp.N - 2 * sp.k;
    const long long tmax = sp.k * (sp.k + 1) / 2;
    const int base = sp.even() ? base_sign : 0;

    Resolution direct;
    direct.params = sp;
    direct.base_sign = base_sign;
    for (long long t = 0; t <= tmax; ++t) {
        EnumerateOptions opts;
        opts.symmetric_only = true;
        opts.size_plus_diag = 2 * t;
        ResolutionTerm term;
        term.t = t;
        for (const auto& nu : enumerate_diagrams(Rectangle{sp.k, sp.k}, opts)) {
            const int sign =
                base == 0 ? 0 : (nu.diag_length() % 2 == 0 ? base : -base);
            term.summands.push_back({sign, expand_vertical(nu, p)});
        }
        std::sort(term.summands.begin(), term.summands.end());
        direct.terms.push_back(std::move(term));
    }

    // pair j_*S against the exceptional collection of Gr(k,V)
    Resolution paired = direct;
    for (auto& term : paired.terms)
        term.summands.clear();
    for (const auto& alpha : enumerate_diagrams(Rectangle{sp.k, sp.N - sp.k})) {
        const YoungDiagram beta = transpose(alpha);
        const GradedRepList h = cohomology_ogr_schur_spinor(sp, beta, base_sign);
        if (h.empty())
            continue;
        const auto nu = contract_horizontal(beta, p);
        if (!nu || !is_symmetric(*nu))
            throw std::logic_error("build_resolution: nonzero pairing at a non-expansion index");
        const long long t = (nu->size() + nu->diag_length()) / 2;
        if (t < 0 || t > tmax || h.entries.size() != 1 || h.entries[0].mult != 1)
            throw std::logic_error("build_resolution: unexpected pairing output");
        const RepLabel& label = h.entries[0].label;
        if (label.kind != RepLabel::Kind::HalfSpinor)
            throw std::logic_error("build_resolution: unexpected pairing label");
        paired.terms[static_cast<size_t>(t)].summands.push_back({label.sign, alpha});
    }
    for (auto& term : paired.terms)
        std::sort(term.summands.begin(), term.summands.end());

    for (long long t = 0; t <= tmax; ++t)
        if (!(paired.terms[static_cast<size_t>(t)] == direct.terms[static_cast<size_t>(t)]))
            throw std::logic_error("build_resolution: pairing disagrees with the term formula");
    return direct;
}

GeneratorSet spinor_subcat_generators(const SpaceParams& sp, bool branching)
{
    if (sp.k < 1)
        throw std::invalid_argument("spinor_subcat_generators: k must be positive");
    if (!sp.even())
        throw std::invalid_argument("spinor_subcat_generators: requires even N");
    if (!branching && sp.N < 2 * sp.k + 2)
        throw std::invalid_argument("spinor_subcat_generators: requires N >= 2k+2");
    if (branching && sp.N - 1 < 2 * sp.k + 3)
        throw std::invalid_argument(
            "spinor_subcat_generators: branching requires N-1 >= 2k+3");
    const long long p = sp.N - 2 * sp.k;
    GeneratorSet out;
    out.branching = branching;

    if (!branching) {
        EnumerateOptions opts;
        opts.symmetric_only = true;
        for (const auto& nu : enumerate_diagrams(Rectangle{sp.k, sp.k}, opts))
            out.nus.push_back(nu);
    } else {
        const SpaceParams reduced{sp.N - 1, sp.k};
        for (const auto& alpha : enumerate_diagrams(Rectangle{sp.k, sp.N - sp.k})) {
            const YoungDiagram beta = transpose(alpha);
            const auto pushed = pushforward_p2(beta, sp.k);
            if (!pushed)
                continue;
            bool survives = false;
            for (const auto& [gamma, mult] :
                 cauchy_one_plus(pushed->terms[0].first, sp.k).terms) {
                if (!schur_spinor_closed_form(reduced, gamma, +1).empty()) {
                    survives = true;
                    break;
                }
            }
            if (!survives)
                continue;
            const auto nu_t = contract_horizontal(beta, p);
            if (!nu_t)
                throw std::logic_error(
                    "spinor_subcat_generators: survivor at a non-expansion index");
            out.nus.push_back(transpose(*nu_t));
        }
        std::sort(out.nus.begin(), out.nus.end());
    }

    for (const auto& nu : out.nus) {
        if (!Rectangle{sp.k, sp.k}.contains(nu))
            throw std::logic_error("spinor_subcat_generators: nu outside Y_{k,k}");
        const auto [head, tail] = head_tail(nu);
        if (head.size() > tail.size())
            throw std::logic_error("spinor_subcat_generators: |head| > |tail|");
        out.shapes.push_back(expand_vertical(nu, p));
    }
    return out;
}

}  // namespace bbw
