#include "bbw/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbw {

void SchurSum::add(const YoungDiagram& d, long long mult)
{
    if (mult <= 0)
        throw std::invalid_argument("SchurSum::add: multiplicity must be positive");
    auto it = std::lower_bound(terms.begin(), terms.end(), d,
                               [](const auto& t, const YoungDiagram& key) { return t.first < key; });
    if (it != terms.end() && it->first == d)
        it->second += mult;
    else
        terms.insert(it, {d, mult});
}

long long SchurSum::mult_of(const YoungDiagram& d) const
{
    auto it = std::lower_bound(terms.begin(), terms.end(), d,
                               [](const auto& t, const YoungDiagram& key) { return t.first < key; });
    return it != terms.end() && it->first == d ? it->second : 0;
}

namespace {

struct LrCounter {
    std::vector<long long> lambda, mu, content;  // content = remaining of nu
    std::vector<long long> counts;               // placed so far per value
    std::vector<std::pair<long long, long long>> cells;  // (row, col), rows top
                                                         // down, cols right to left
    std::vector<std::vector<long long>> val;
    long long total = 0;

    long long value_at(long long r, long long c) const
    {
        if (r < 0 || r >= static_cast<long long>(lambda.size()))
            return 0;
        if (c < 0 || c >= lambda[static_cast<size_t>(r)])
            return 0;
        return val[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }

    void rec(size_t idx)
    {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[idx];
        const long long right = value_at(r, c + 1);   // filled earlier or 0
        const long long above = value_at(r - 1, c);   // filled earlier or 0
        const long long h = static_cast<long long>(content.size());
        for (long long v = above + 1; v <= h; ++v) {
            if (counts[static_cast<size_t>(v - 1)] >= content[static_cast<size_t>(v - 1)])
                continue;
            if (right != 0 && v > right)
                continue;
            if (v > 1 && counts[static_cast<size_t>(v - 1)] >= counts[static_cast<size_t>(v - 2)])
                continue;  // reading word must stay a lattice word
            counts[static_cast<size_t>(v - 1)]++;
            val[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            rec(idx + 1);
            val[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
            counts[static_cast<size_t>(v - 1)]--;
        }
    }
};

long long count_lr_tableaux(const YoungDiagram& lambda, const YoungDiagram& mu,
                            const YoungDiagram& nu)
{
    LrCounter ctr;
    ctr.lambda = lambda.rows();
    ctr.mu = mu.rows();
    ctr.content = nu.rows();
    ctr.counts.assign(ctr.content.size(), 0);
    for (long long r = 0; r < lambda.height(); ++r) {
        ctr.val.emplace_back(static_cast<size_t>(lambda.rows()[r]), 0);
        for (long long c = lambda.rows()[r] - 1; c >= mu.row(static_cast<size_t>(r)); --c)
            ctr.cells.push_back({r, c});
    }
    ctr.rec(0);
    return ctr.total;
}

void gen_lambdas(const YoungDiagram& mu, const YoungDiagram& nu,
                 std::vector<long long>& rows, long long i, long long sum,
                 std::vector<YoungDiagram>& out)
{
    const long long target = mu.size() + nu.size();
    if (sum == target && i >= mu.height()) {
        out.push_back(YoungDiagram(rows));
        return;
    }
    const long long maxh = mu.height() + nu.height();
    if (i >= maxh)
        return;
    long long tail_mu = 0;
    for (long long j = i + 1; j < mu.height(); ++j)
        tail_mu += mu.rows()[j];
    const long long lo = std::max(mu.row(static_cast<size_t>(i)), 1LL);
    long long hi = i ? rows[static_cast<size_t>(i - 1)] : mu.width() + nu.width();
    hi = std::min(hi, mu.width() + nu.width());
    if (i >= nu.height())  // a column of lambda/mu can hold at most height(nu) cells
        hi = std::min(hi, mu.row(static_cast<size_t>(i - nu.height())));
    hi = std::min(hi, target - sum - tail_mu);
    for (long long v = lo; v <= hi; ++v) {
        rows.push_back(v);
        gen_lambdas(mu, nu, rows, i + 1, sum + v, out);
        rows.pop_back();
    }
}

}  // namespace

long long lr_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu,
                         const YoungDiagram& nu)
{
    if (lambda.size() != mu.size() + nu.size())
        return 0;
    for (long long i = 0; i < mu.height(); ++i)
        if (lambda.row(static_cast<size_t>(i)) < mu.rows()[i])
            return 0;
    return count_lr_tableaux(lambda, mu, nu);
}

SchurSum lr_product(const YoungDiagram& mu, const YoungDiagram& nu, long long max_height)
{
    SchurSum out;
    std::vector<YoungDiagram> lambdas;
    std::vector<long long> rows;
    gen_lambdas(mu, nu, rows, 0, 0, lambdas);
    for (const auto& lambda : lambdas) {
        const long long c = count_lr_tableaux(lambda, mu, nu);
        if (c > 0 && (max_height < 0 || lambda.height() <= max_height))
            out.add(lambda, c);
    }
    return out;
}

SchurSum cauchy_one_plus(const YoungDiagram& beta_prime, long long k)
{
    if (k < 0)
        throw std::invalid_argument("cauchy_one_plus: k must be nonnegative");
    if (beta_prime.height() > k + 1)
        throw std::invalid_argument("cauchy_one_plus: diagram taller than k+1");
    SchurSum out;
    std::vector<long long> gamma(static_cast<size_t>(k), 0);
    // odometer over gamma_i in [beta'_{i+1}, beta'_i]
    const auto lo = [&](long long i) { return beta_prime.row(static_cast<size_t>(i + 1)); };
    const auto hi = [&](long long i) { return beta_prime.row(static_cast<size_t>(i)); };
    for (long long i = 0; i < k; ++i)
        gamma[static_cast<size_t>(i)] = lo(i);
    while (true) {
        out.add(YoungDiagram(gamma), 1);
        long long i = k - 1;
        while (i >= 0 && gamma[static_cast<size_t>(i)] == hi(i)) {
            gamma[static_cast<size_t>(i)] = lo(i);
            --i;
        }
        if (i < 0)
            break;
        ++gamma[static_cast<size_t>(i)];
    }
    return out;
}

SchurSum wedge_sym2(long long m, long long k)
{
    if (k < 0)
        throw std::invalid_argument("wedge_sym2: k must be nonnegative");
    if (m < 0 || 2 * m > k * (k + 1))
        throw std::invalid_argument("wedge_sym2: m out of range");
    EnumerateOptions opts;
    opts.symmetric_only = true;
    opts.size_plus_diag = 2 * m;
    SchurSum out;
    for (const auto& nu : enumerate_diagrams(Rectangle{k, k}, opts))
        out.add(expand_horizontal(nu, 1), 1);
    return out;
}

std::optional<SchurSum> pushforward_p2(const YoungDiagram& beta, long long k)
{
    if (k < 0)
        throw std::invalid_argument("pushforward_p2: k must be nonnegative");
    if (beta.height() > k)
        throw std::invalid_argument("pushforward_p2: diagram taller than k");
    long long s = 0;
    for (long long j = 1; j <= k; ++j) {
        const long long b = beta.row(static_cast<size_t>(j - 1));
        if (b == j)
            return std::nullopt;
        if (b > j)
            ++s;
    }
    std::vector<long long> tau_rows = beta.rows();
    for (long long i = 0; i < s; ++i)
        --tau_rows[static_cast<size_t>(i)];
    const YoungDiagram tau(std::move(tau_rows));
    SchurSum out;
    out.add(expand_vertical(tau, 1), 1);
    out.shift = tau.diag_length();
    return out;
}

}  // namespace bbw
