#include "bbw/verify.hpp"

#include "bbw/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bbw {

namespace {

void parallel_for(long long count, int jobs, const std::function<void(long long)>& fn)
{
    if (jobs <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i)
            fn(i);
        return;
    }
    long long workers = std::min<long long>(jobs, count);
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (long long w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                long long i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    }
    for (auto& th : pool)
        th.join();
}

std::string describe(const GradedRepList& list)
{
    if (list.empty())
        return "0";
    std::ostringstream out;
    for (size_t i = 0; i < list.entries.size(); ++i) {
        if (i)
            out << " + ";
        const GradedEntry& e = list.entries[i];
        if (e.mult != 1)
            out << e.mult << "*";
        out << to_string(e.label) << "[" << -e.degree << "]";
    }
    return out.str();
}

std::string describe(const std::vector<std::pair<long long, long long>>& total)
{
    if (total.empty())
        return "0";
    std::ostringstream out;
    for (size_t i = 0; i < total.size(); ++i) {
        if (i)
            out << " + ";
        if (total[i].second != 1)
            out << total[i].second << "*";
        out << "k[" << -total[i].first << "]";
    }
    return out.str();
}

GradedRepList single_invariant(long long degree)
{
    GradedRepList list;
    list.add(degree, RepLabel::trivial(), 1);
    return list;
}

const std::vector<std::pair<long long, long long>> kDiagonalExt = {{0, 1}, {1, 1}};

// Ext^*(S_{s1}, S_{s2} (x) Lambda^m(Sym^2 U)) on one space, one Koszul index
GradedRepList koszul_layer_D(const SpaceParams& sp, int s1, int s2, long long m)
{
    GradedRepList layer;
    SchurSum wedge = wedge_sym2(m, sp.k);
    for (const auto& [beta, mult] : wedge.terms) {
        GradedRepList part = cohomology_ogr_hom_spinors(sp, beta, SpinorFactor{true, s1}, s2);
        for (const GradedEntry& e : part.entries)
            layer.add(e.degree, e.label, e.mult * mult);
    }
    return layer;
}

// same layer over a branching point, computed on the reduced odd space
GradedRepList koszul_layer_B(const SpaceParams& sp, long long m)
{
    GradedRepList layer;
    SchurSum wedge = wedge_sym2(m, sp.k);
    for (const auto& [beta, mult] : wedge.terms) {
        std::optional<SchurSum> pushed = pushforward_p2(beta, sp.k);
        if (!pushed)
            throw std::logic_error("koszul_layer_B: wedge term killed by pushforward");
        for (const auto& [beta_prime, mult2] : pushed->terms) {
            SchurSum expanded = cauchy_one_plus(beta_prime, sp.k);
            for (const auto& [gamma, mult3] : expanded.terms) {
                GradedRepList part =
                    cohomology_ogr_hom_spinors(sp, gamma, SpinorFactor{true, +1}, +1);
                for (const GradedEntry& e : part.entries)
                    layer.add(e.degree + pushed->shift, e.label, e.mult * mult * mult2 * mult3);
            }
        }
    }
    return layer;
}

void check_same_point_pattern(const ExtTable& table, bool diagonal, const std::string& who)
{
    long long top = static_cast<long long>(table.per_m.size()) - 1;
    for (long long m = 0; m <= top; ++m) {
        GradedRepList expected;
        if (diagonal && m <= 1)
            expected = single_invariant(2 * m);
        if (table.per_m[static_cast<size_t>(m)] != expected) {
            std::ostringstream msg;
            msg << who << ": layer m=" << m << " is "
                << describe(table.per_m[static_cast<size_t>(m)]) << ", expected "
                << describe(expected);
            throw std::logic_error(msg.str());
        }
    }
    if (table.indeterminate)
        throw std::logic_error(who + ": assembled table is indeterminate");
    std::vector<std::pair<long long, long long>> expected_total;
    if (diagonal)
        expected_total = kDiagonalExt;
    if (table.total != expected_total) {
        std::ostringstream msg;
        msg << who << ": assembled table is " << describe(table.total) << ", expected "
            << describe(expected_total);
        throw std::logic_error(msg.str());
    }
}

}  // namespace

bool check_vanishing_pair(const SpaceParams& sp, const YoungDiagram& mu, const YoungDiagram& nu)
{
    if (sp.k < 1 || sp.N < 2 * sp.k + 2)
        throw std::invalid_argument("check_vanishing_pair: requires N >= 2k+2");
    Rectangle square{sp.k, sp.k};
    if (!square.contains(mu) || !square.contains(nu))
        throw std::invalid_argument("check_vanishing_pair: shapes must lie in Y_{k,k}");

    auto [mu_head, mu_tail] = head_tail(mu);
    auto [nu_head, nu_tail] = head_tail(nu);
    bool hypothesis = mu.diag_length() != nu.diag_length()
                      || mu_head.size() + nu_head.size() <= mu_tail.size() + nu_tail.size();

    YoungDiagram mu_hat = expand_vertical(mu, sp.N - 2 * sp.k);
    YoungDiagram nu_hat = expand_vertical(nu, sp.N - 2 * sp.k);
    SchurSum product = lr_product(mu_hat, nu_hat, sp.N - sp.k);
    bool vanishes = true;
    for (const auto& [gamma, mult] : product.terms) {
        (void)mult;
        if (!cohomology_gr(sp.N, sp.k, gamma, -1).empty()) {
            vanishes = false;
            break;
        }
    }

    if (hypothesis && !vanishes) {
        std::ostringstream msg;
        msg << "check_vanishing_pair: N=" << sp.N << " k=" << sp.k << " mu=" << to_string(mu)
            << " nu=" << to_string(nu) << " satisfies the hypotheses but has cohomology";
        throw std::logic_error(msg.str());
    }
    return vanishes;
}

bool check_corollary_vanishing(const SpaceParams& sp, PointType type1, PointType type2)
{
    if (!sp.even())
        throw std::invalid_argument("check_corollary_vanishing: requires even N");
    SpinorRelabel relabel = dual_spinor_relabel(sp, +1);
    if (relabel.extra_twist != -1)
        throw std::logic_error("check_corollary_vanishing: unexpected dual twist");

    GeneratorSet left = spinor_subcat_generators(sp, type1 == PointType::Branching);
    GeneratorSet right = spinor_subcat_generators(sp, type2 == PointType::Branching);
    bool all = true;
    for (const YoungDiagram& mu : left.nus)
        for (const YoungDiagram& nu : right.nus)
            all = check_vanishing_pair(sp, mu, nu) && all;
    return all;
}

ExtTable assemble_koszul(const std::vector<GradedRepList>& per_m)
{
    std::map<long long, long long> total;
    std::vector<std::pair<long long, long long>> positions;  // (m, q) with nonzero mult
    for (size_t m = 0; m < per_m.size(); ++m) {
        for (const GradedEntry& e : per_m[m].entries) {
            if (e.label.kind != RepLabel::Kind::Trivial)
                throw std::logic_error("assemble_koszul: non-invariant term");
            total[e.degree - static_cast<long long>(m)] += e.mult;
            positions.emplace_back(static_cast<long long>(m), e.degree);
        }
    }

    ExtTable table;
    table.per_m = per_m;
    for (const auto& [degree, mult] : total)
        if (mult != 0)
            table.total.emplace_back(degree, mult);
    for (const auto& [m1, q1] : positions) {
        for (const auto& [m2, q2] : positions) {
            long long r = m1 - m2;
            if (r >= 1 && q2 == q1 - r + 1)
                table.indeterminate = true;
        }
    }
    return table;
}

ExtTable ext_same_point_D(const SpaceParams& sp, int s1, int s2)
{
    if (!sp.even() || sp.k < 1 || sp.k > sp.n() - 2)
        throw std::invalid_argument("ext_same_point_D: requires even N and 1 <= k <= n-2");
    if (s1 * s1 != 1 || s2 * s2 != 1)
        throw std::invalid_argument("ext_same_point_D: signs must be +1 or -1");

    long long top = sp.k * (sp.k + 1) / 2;
    std::vector<GradedRepList> per_m;
    per_m.reserve(static_cast<size_t>(top) + 1);
    for (long long m = 0; m <= top; ++m)
        per_m.push_back(koszul_layer_D(sp, s1, s2, m));
    ExtTable table = assemble_koszul(per_m);
    check_same_point_pattern(table, s1 == s2, "ext_same_point_D");
    return table;
}

ExtTable ext_same_point_B(const SpaceParams& sp_reduced)
{
    if (sp_reduced.even() || sp_reduced.N < 2 * sp_reduced.k + 3)
        throw std::invalid_argument("ext_same_point_B: requires odd N >= 2k+3");

    long long top = sp_reduced.k * (sp_reduced.k + 1) / 2;
    std::vector<GradedRepList> per_m;
    per_m.reserve(static_cast<size_t>(top) + 1);
    for (long long m = 0; m <= top; ++m)
        per_m.push_back(koszul_layer_B(sp_reduced, m));
    ExtTable table = assemble_koszul(per_m);
    check_same_point_pattern(table, true, "ext_same_point_B");
    return table;
}

CriterionReport bondal_orlov_report(long long genus, long long k)
{
    if (genus < 2)
        throw std::invalid_argument("bondal_orlov_report: requires genus >= 2");
    if (k < 1 || k > genus - 1)
        throw std::invalid_argument("bondal_orlov_report: requires 1 <= k <= genus-1");

    CriterionReport report;
    report.genus = genus;
    report.k = k;
    report.N = 2 * genus + 2;
    SpaceParams sp{report.N, k};
    SpaceParams reduced{report.N - 1, k};

    {
        CaseResult c;
        c.name = "different-fibers";
        try {
            bool ok = true;
            for (PointType t1 : {PointType::NonBranching, PointType::Branching})
                for (PointType t2 : {PointType::NonBranching, PointType::Branching})
                    ok = check_corollary_vanishing(sp, t1, t2) && ok;
            c.pass = ok;
            c.detail = ok ? "Ext vanishes for all point-type pairs"
                          : "nonvanishing Ext between distinct fibers";
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        report.cases.push_back(std::move(c));
    }

    {
        CaseResult c;
        c.name = "same-fiber-distinct";
        try {
            ExtTable plus_minus = ext_same_point_D(sp, +1, -1);
            ExtTable minus_plus = ext_same_point_D(sp, -1, +1);
            c.table = plus_minus;
            c.pass = plus_minus.total.empty() && minus_plus.total.empty()
                     && !plus_minus.indeterminate && !minus_plus.indeterminate;
            c.detail = c.pass ? "Ext vanishes for both sign orders"
                              : "nonvanishing Ext between the two spinor sheaves";
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        report.cases.push_back(std::move(c));
        report.indeterminate = report.indeterminate || report.cases.back().table.indeterminate;
    }

    {
        CaseResult c;
        c.name = "same-point-nonbranching";
        try {
            ExtTable plus = ext_same_point_D(sp, +1, +1);
            ExtTable minus = ext_same_point_D(sp, -1, -1);
            c.table = plus;
            c.pass = plus.total == kDiagonalExt && minus.total == kDiagonalExt
                     && !plus.indeterminate && !minus.indeterminate;
            c.detail = c.pass ? "Ext is k + k[-1] for both signs"
                              : "self-Ext deviates from k + k[-1]";
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        report.cases.push_back(std::move(c));
        report.indeterminate = report.indeterminate || report.cases.back().table.indeterminate;
    }

    {
        CaseResult c;
        c.name = "same-point-branching";
        try {
            ExtTable table = ext_same_point_B(reduced);
            c.table = table;
            c.pass = table.total == kDiagonalExt && !table.indeterminate;
            c.detail = c.pass ? "Ext is k + k[-1] over the branching point"
                              : "self-Ext deviates from k + k[-1]";
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        report.cases.push_back(std::move(c));
        report.indeterminate = report.indeterminate || report.cases.back().table.indeterminate;
    }

    report.pass = !report.indeterminate;
    for (const CaseResult& c : report.cases)
        report.pass = report.pass && c.pass;
    return report;
}

SweepResult sweep_cohomology_ualpha(const SpaceParams& sp, int jobs)
{
    if (sp.k < 1 || sp.N < 2 * sp.k + 2)
        throw std::invalid_argument("sweep_cohomology_ualpha: requires N >= 2k+2");

    Rectangle rect{sp.N - sp.k, sp.k};
    std::vector<YoungDiagram> betas = enumerate_diagrams(rect);
    std::vector<int> signs = sp.even() ? std::vector<int>{+1, -1} : std::vector<int>{+1};

    long long count = static_cast<long long>(betas.size() * signs.size());
    std::vector<std::string> slots(static_cast<size_t>(count));
    parallel_for(count, jobs, [&](long long i) {
        const YoungDiagram& beta = betas[static_cast<size_t>(i) / signs.size()];
        int sign = signs[static_cast<size_t>(i) % signs.size()];
        try {
            (void)cohomology_ogr_schur_spinor(sp, beta, sign);
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "beta=" << to_string(beta) << " sign=" << (sign > 0 ? "+" : "-") << ": "
                << e.what();
            slots[static_cast<size_t>(i)] = msg.str();
        }
    });

    SweepResult result;
    result.checked = count;
    for (std::string& s : slots)
        if (!s.empty())
            result.failures.push_back(std::move(s));
    return result;
}

SweepResult sweep_wt(const SpaceParams& sp, int jobs)
{
    if (sp.k < 1 || sp.N < 2 * sp.k + 3)
        throw std::invalid_argument("sweep_wt: requires N >= 2k+3");

    Rectangle rect{sp.k + 1, sp.k};
    std::vector<YoungDiagram> all = enumerate_diagrams(rect);
    std::vector<YoungDiagram> betas;
    for (const YoungDiagram& beta : all)
        if (beta.width() <= beta.height() + 1)
            betas.push_back(beta);
    std::vector<std::pair<int, int>> sign_pairs;
    if (sp.even())
        sign_pairs = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
    else
        sign_pairs = {{+1, +1}};

    long long count = static_cast<long long>(betas.size() * sign_pairs.size());
    std::vector<std::string> slots(static_cast<size_t>(count));
    parallel_for(count, jobs, [&](long long i) {
        const YoungDiagram& beta = betas[static_cast<size_t>(i) / sign_pairs.size()];
        auto [s1, s2] = sign_pairs[static_cast<size_t>(i) % sign_pairs.size()];
        try {
            GradedRepList actual =
                cohomology_ogr_hom_spinors(sp, beta, SpinorFactor{true, s1}, s2);
            GradedRepList expected;
            long long t = -1;
            if (beta == YoungDiagram{})
                t = 0;
            else if (beta == YoungDiagram{1})
                t = 1;
            else if (beta == YoungDiagram{2})
                t = 2;
            bool survives = t >= 0;
            if (survives && sp.even() && (t % 2 == 0) != (s1 == s2))
                survives = false;
            if (survives)
                expected = single_invariant(t);
            if (actual != expected) {
                std::ostringstream msg;
                msg << "beta=" << to_string(beta) << " signs=" << (s1 > 0 ? "+" : "-")
                    << (s2 > 0 ? "+" : "-") << ": got " << describe(actual) << ", expected "
                    << describe(expected);
                slots[static_cast<size_t>(i)] = msg.str();
            }
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "beta=" << to_string(beta) << ": " << e.what();
            slots[static_cast<size_t>(i)] = msg.str();
        }
    });

    SweepResult result;
    result.checked = count;
    for (std::string& s : slots)
        if (!s.empty())
            result.failures.push_back(std::move(s));
    return result;
}

SweepResult sweep_vanishing_terms(const SpaceParams& sp, int jobs)
{
    if (sp.k < 1 || sp.N < 2 * sp.k + 2)
        throw std::invalid_argument("sweep_vanishing_terms: requires N >= 2k+2");

    Rectangle square{sp.k, sp.k};
    std::vector<YoungDiagram> all = enumerate_diagrams(square);
    std::vector<std::pair<YoungDiagram, YoungDiagram>> pairs;
    for (const YoungDiagram& mu : all) {
        auto [mu_head, mu_tail] = head_tail(mu);
        for (const YoungDiagram& nu : all) {
            auto [nu_head, nu_tail] = head_tail(nu);
            bool hypothesis =
                mu.diag_length() != nu.diag_length()
                || mu_head.size() + nu_head.size() <= mu_tail.size() + nu_tail.size();
            if (hypothesis)
                pairs.emplace_back(mu, nu);
        }
    }

    long long count = static_cast<long long>(pairs.size());
    std::vector<std::string> slots(static_cast<size_t>(count));
    parallel_for(count, jobs, [&](long long i) {
        const auto& [mu, nu] = pairs[static_cast<size_t>(i)];
        try {
            if (!check_vanishing_pair(sp, mu, nu)) {
                std::ostringstream msg;
                msg << "mu=" << to_string(mu) << " nu=" << to_string(nu)
                    << ": cohomology does not vanish";
                slots[static_cast<size_t>(i)] = msg.str();
            }
        } catch (const std::exception& e) {
            slots[static_cast<size_t>(i)] = e.what();
        }
    });

    SweepResult result;
    result.checked = count;
    for (std::string& s : slots)
        if (!s.empty())
            result.failures.push_back(std::move(s));
    return result;
}

SweepResult sweep_same_p_D(const SpaceParams& sp)
{
    if (!sp.even() || sp.k < 1 || sp.k > sp.n() - 2)
        throw std::invalid_argument("sweep_same_p_D: requires even N and 1 <= k <= n-2");

    SweepResult result;
    const std::vector<std::pair<int, int>> sign_pairs = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
    for (auto [s1, s2] : sign_pairs) {
        ++result.checked;
        try {
            ExtTable table = ext_same_point_D(sp, s1, s2);
            result.indeterminate = result.indeterminate || table.indeterminate;
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "signs=" << (s1 > 0 ? "+" : "-") << (s2 > 0 ? "+" : "-") << ": " << e.what();
            result.failures.push_back(msg.str());
        }
    }
    return result;
}

SweepResult sweep_same_p_B(const SpaceParams& sp_reduced)
{
    if (sp_reduced.even() || sp_reduced.N < 2 * sp_reduced.k + 3)
        throw std::invalid_argument("sweep_same_p_B: requires odd N >= 2k+3");

    SweepResult result;
    result.checked = 1;
    try {
        ExtTable table = ext_same_point_B(sp_reduced);
        result.indeterminate = table.indeterminate;
    } catch (const std::exception& e) {
        result.failures.push_back(e.what());
    }
    return result;
}

SweepResult sweep_resolution_example(const SpaceParams& sp)
{
    if (sp.k < 1 || sp.k > 3 || sp.N < 2 * sp.k + 2)
        throw std::invalid_argument("sweep_resolution_example: requires k <= 3 and N >= 2k+2");

    std::vector<int> signs = sp.even() ? std::vector<int>{+1, -1} : std::vector<int>{+1};
    SweepResult result;
    for (int sign : signs) {
        ++result.checked;
        try {
            Resolution built = build_resolution(sp, sign);
            Resolution expected = example_resolution(sp, sign);
            for (size_t t = 0; t < expected.terms.size(); ++t) {
                if (built.terms[t] != expected.terms[t]) {
                    std::ostringstream msg;
                    msg << "sign=" << (sign > 0 ? "+" : "-") << " term t=" << t
                        << " deviates from the closed form";
                    result.failures.push_back(msg.str());
                }
            }
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "sign=" << (sign > 0 ? "+" : "-") << ": " << e.what();
            result.failures.push_back(msg.str());
        }
    }
    return result;
}

namespace {

YoungDiagram run_lengths(const std::vector<std::pair<long long, long long>>& runs)
{
    std::vector<long long> rows;
    for (const auto& [value, repeat] : runs)
        for (long long i = 0; i < repeat; ++i)
            rows.push_back(value);
    return YoungDiagram(std::move(rows));
}

}  // namespace

Resolution example_resolution(const SpaceParams& sp, int base_sign)
{
    if (sp.k < 1 || sp.k > 3 || sp.N < 2 * sp.k + 2)
        throw std::invalid_argument("example_resolution: requires k <= 3 and N >= 2k+2");
    if (base_sign * base_sign != 1)
        throw std::invalid_argument("example_resolution: sign must be +1 or -1");

    long long r = sp.N - sp.k;  // rank of Uperp
    // (relative sign, shape) per homological position, normalized so that
    // every bundle is a single Schur functor of Uperp
    std::vector<std::vector<std::pair<int, YoungDiagram>>> table;
    if (sp.k == 1) {
        table = {
            {{+1, {}}},                        // O
            {{-1, run_lengths({{1, r}})}},     // O(-1)
        };
    } else if (sp.k == 2) {
        table = {
            {{+1, {}}},                            // O
            {{-1, run_lengths({{1, r - 1}})}},     // (V/U)(-1)
            {{-1, run_lengths({{2, 1}, {1, r - 1}})}},  // Uperp(-1)
            {{+1, run_lengths({{2, r}})}},         // O(-2)
        };
    } else {
        table = {
            {{+1, {}}},                                 // O
            {{-1, run_lengths({{1, r - 2}})}},          // Lambda^2(V/U)(-1)
            {{-1, run_lengths({{2, 1}, {1, r - 2}})}},  // ad(Uperp)(-1)
            {{+1, run_lengths({{2, r - 1}})},           // Sym^2(V/U)(-2)
             {-1, run_lengths({{3, 1}, {1, r - 1}})}},  // Sym^2(Uperp)(-1)
            {{+1, run_lengths({{3, 1}, {2, r - 2}, {1, 1}})}},  // ad(Uperp)(-2)
            {{+1, run_lengths({{3, 2}, {2, r - 2}})}},  // Lambda^2(Uperp)(-2)
            {{-1, run_lengths({{3, r}})}},              // O(-3)
        };
    }

    Resolution resolution;
    resolution.params = sp;
    resolution.base_sign = base_sign;
    for (size_t t = 0; t < table.size(); ++t) {
        ResolutionTerm term;
        term.t = static_cast<long long>(t);
        for (const auto& [rel_sign, shape] : table[t]) {
            ResolutionSummand summand;
            summand.sign = sp.even() ? base_sign * rel_sign : 0;
            summand.shape = shape;
            term.summands.push_back(std::move(summand));
        }
        std::sort(term.summands.begin(), term.summands.end());
        resolution.terms.push_back(std::move(term));
    }
    return resolution;
}

}  // namespace bbw
