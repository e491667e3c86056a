#include "bbw/bbw.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace bbw {

void GradedRepList::add(long long degree, const RepLabel& label, long long mult)
{
    if (mult <= 0)
        throw std::invalid_argument("GradedRepList::add: multiplicity must be positive");
    auto key_less = [](const GradedEntry& e, const std::pair<long long, const RepLabel*>& key) {
        if (e.degree != key.first)
            return e.degree < key.first;
        return e.label < *key.second;
    };
    auto it = std::lower_bound(entries.begin(), entries.end(),
                               std::make_pair(degree, &label), key_less);
    if (it != entries.end() && it->degree == degree && it->label == label)
        it->mult += mult;
    else
        entries.insert(it, GradedEntry{degree, label, mult});
}

void GradedRepList::add_all(const GradedRepList& other)
{
    for (const auto& e : other.entries)
        add(e.degree, e.label, e.mult);
}

std::string to_string(const BundleExpr& b)
{
    std::string out;
    if (b.spinor_left) {
        out += b.spinor_left->sign == 0 ? "S" : b.spinor_left->sign > 0 ? "S+" : "S-";
        if (b.spinor_left->dual)
            out += "*";
        out += " (x) ";
    }
    const char* carrier = b.carrier == BundleExpr::Carrier::U ? "U" : "Uperp";
    if (b.shape.height() == 0)
        out += std::string("O");
    else
        out += "Sigma^(" + to_string(b.shape) + ") " + carrier;
    if (b.twist != 0)
        out += " (x) O(" + std::to_string(b.twist) + ")";
    if (b.spinor_right_sign)
        out += std::string(" (x) ") +
               (*b.spinor_right_sign == 0 ? "S" : *b.spinor_right_sign > 0 ? "S+" : "S-");
    return out;
}

static void validate_ualpha_input(const SpaceParams& sp, const YoungDiagram& beta)
{
    if (sp.k < 1)
        throw std::invalid_argument("cohomology_ogr_schur_spinor: k must be positive");
    if (sp.N < 2 * sp.k + 2)
        throw std::invalid_argument("cohomology_ogr_schur_spinor: requires N >= 2k+2");
    if (!Rectangle{sp.N - sp.k, sp.k}.contains(beta))
        throw std::invalid_argument("cohomology_ogr_schur_spinor: beta outside Y_{N-k,k}");
}

static int spinor_out_sign(const SpaceParams& sp, int s_parity_sign, int right_sign)
{
    if (!sp.even())
        return 0;  // type B has a single spinor representation
    return s_parity_sign * right_sign;
}

GradedRepList schur_spinor_closed_form(const SpaceParams& sp, const YoungDiagram& beta,
                                       int right_sign)
{
    validate_ualpha_input(sp, beta);
    const long long p = sp.N - 2 * sp.k;
    GradedRepList out;
    const auto nu = contract_horizontal(beta, p);
    if (!nu || !is_symmetric(*nu) || nu->width() > sp.k)
        return out;
    const long long s = nu->diag_length();
    const long long degree = s * p + (nu->size() - s) / 2;
    const int sign = spinor_out_sign(sp, s % 2 == 0 ? +1 : -1, right_sign);
    out.add(degree, RepLabel::half_spinor(sign), 1);
    return out;
}

GradedRepList schur_spinor_dominantize(const SpaceParams& sp, const YoungDiagram& beta,
                                       int right_sign)
{
    validate_ualpha_input(sp, beta);
    const LieType type = sp.ortho_type();
    const long long n = sp.n();
    std::vector<long long> two_delta(static_cast<size_t>(n), 1);
    for (long long i = 0; i < sp.k; ++i)
        two_delta[static_cast<size_t>(i)] = 1 - 2 * beta.row(static_cast<size_t>(sp.k - 1 - i));
    if (sp.even())
        two_delta[static_cast<size_t>(n - 1)] = right_sign;
    Weight mu = rho(type);
    for (size_t i = 0; i < mu.two_c.size(); ++i)
        mu.two_c[i] += two_delta[i];
    const DominantizationResult dom = dominantize(mu);
    GradedRepList out;
    if (dom.singular)
        return out;
    const Weight r = rho(type);
    int last_sign = +1;
    for (size_t i = 0; i < r.two_c.size(); ++i) {
        const long long two_lambda = dom.dominant.two_c[i] - r.two_c[i];
        if (two_lambda != 1 && !(sp.even() && i + 1 == r.two_c.size() && two_lambda == -1))
            throw std::logic_error("schur_spinor_dominantize: non-spinor output weight");
        if (two_lambda == -1)
            last_sign = -1;
    }
    out.add(dom.length, RepLabel::half_spinor(sp.even() ? last_sign : 0), 1);
    return out;
}

GradedRepList cohomology_ogr_schur_spinor(const SpaceParams& sp, const YoungDiagram& beta,
                                          int right_sign)
{
    const GradedRepList closed = schur_spinor_closed_form(sp, beta, right_sign);
    const GradedRepList generic = schur_spinor_dominantize(sp, beta, right_sign);
    if (closed != generic)
        throw std::logic_error("cohomology_ogr_schur_spinor: closed form disagrees with dominantization");
    return closed;
}

GradedRepList cohomology_ogr_hom_spinors(const SpaceParams& sp, const YoungDiagram& beta,
                                         const SpinorFactor& left, int right_sign)
{
    if (sp.k < 1)
        throw std::invalid_argument("cohomology_ogr_hom_spinors: k must be positive");
    if (sp.N < 2 * sp.k + 3)
        throw std::invalid_argument("cohomology_ogr_hom_spinors: requires N >= 2k+3");
    if (beta.height() > sp.k)
        throw std::invalid_argument("cohomology_ogr_hom_spinors: beta taller than k");
    if (beta.width() > beta.height() + 1)
        throw std::invalid_argument("cohomology_ogr_hom_spinors: width exceeds height+1");
    if (!left.dual)
        throw std::invalid_argument("cohomology_ogr_hom_spinors: left factor must be the dual spinor");
    const LieType type = sp.ortho_type();
    const long long n = sp.n();
    const Weight r = rho(type);
    GradedRepList out;
    for (long long t = 0; t <= n - sp.k; ++t) {
        if (sp.even()) {
            const int t_sign = t % 2 == 0 ? +1 : -1;
            if (t_sign != left.sign * right_sign)
                continue;
        }
        Weight mu = r;
        for (long long i = 0; i < sp.k; ++i)
            mu.two_c[static_cast<size_t>(i)] -= 2 * beta.row(static_cast<size_t>(sp.k - 1 - i));
        for (long long i = 0; i < t; ++i)
            mu.two_c[static_cast<size_t>(sp.k + i)] += 2;
        const DominantizationResult dom = dominantize(mu);
        if (dom.singular)
            continue;
        RepLabel label = RepLabel::trivial();
        if (dom.dominant != r) {
            Weight lambda = dom.dominant;
            for (size_t i = 0; i < lambda.two_c.size(); ++i)
                lambda.two_c[i] -= r.two_c[i];
            label = RepLabel::highest_weight(std::move(lambda));
        }
        out.add(dom.length, label, 1);
    }
    return out;
}

GradedRepList cohomology_gr(long long N, long long k, const YoungDiagram& gamma,
                            long long twist)
{
    if (N < 1 || k < 0 || k > N)
        throw std::invalid_argument("cohomology_gr: bad N or k");
    if (gamma.height() > N - k)
        throw std::invalid_argument("cohomology_gr: gamma taller than N-k");
    const LieType type{Family::A, N - 1};
    std::vector<long long> two_tau(static_cast<size_t>(N));
    for (long long i = 1; i <= k; ++i)
        two_tau[static_cast<size_t>(i - 1)] = 2 * (N - i + twist);
    for (long long i = 1; i <= N - k; ++i)
        two_tau[static_cast<size_t>(k + i - 1)] =
            2 * (N - k - i + gamma.row(static_cast<size_t>(i - 1)));
    const DominantizationResult dom = dominantize(Weight{type, std::move(two_tau)});
    GradedRepList out;
    if (dom.singular)
        return out;
    const Weight r = rho(type);
    Weight lambda = dom.dominant;
    bool zero = true;
    for (size_t i = 0; i < lambda.two_c.size(); ++i) {
        lambda.two_c[i] -= r.two_c[i];
        zero = zero && lambda.two_c[i] == 0;
    }
    out.add(dom.length,
            zero ? RepLabel::trivial() : RepLabel::highest_weight(std::move(lambda)), 1);
    return out;
}

SpinorRelabel dual_spinor_relabel(const SpaceParams& sp, int sign)
{
    if (!sp.even())
        throw std::invalid_argument("dual_spinor_relabel: requires even N");
    if (sign != -1 && sign != 1)
        throw std::invalid_argument("dual_spinor_relabel: bad sign");
    const long long g = sp.N / 2 - 1;
    SpinorRelabel out;
    out.sign = (g - sp.k) % 2 != 0 ? sign : -sign;
    out.extra_twist = -1;
    return out;
}

}  // namespace bbw
