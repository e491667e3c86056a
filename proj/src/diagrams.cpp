#include "bbw/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bbw {

static void validate_rows(const std::vector<long long>& rows)
{
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0)
            throw std::invalid_argument("YoungDiagram: negative row length");
        if (i + 1 < rows.size() && rows[i] < rows[i + 1])
            throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing");
    }
}

YoungDiagram::YoungDiagram(std::vector<long long> rows) : rows_(std::move(rows))
{
    validate_rows(rows_);
    while (!rows_.empty() && rows_.back() == 0)
        rows_.pop_back();
}

YoungDiagram::YoungDiagram(std::initializer_list<long long> rows)
    : YoungDiagram(std::vector<long long>(rows))
{
}

long long YoungDiagram::size() const
{
    return std::accumulate(rows_.begin(), rows_.end(), 0LL);
}

long long YoungDiagram::diag_length() const
{
    long long s = 0;
    while (s < height() && rows_[s] >= s + 1)
        ++s;
    return s;
}

YoungDiagram transpose(const YoungDiagram& a)
{
    std::vector<long long> cols(static_cast<size_t>(a.width()), 0);
    for (long long j = 0; j < a.width(); ++j)
        for (long long i = 0; i < a.height(); ++i)
            if (a.rows()[i] >= j + 1)
                ++cols[j];
    return YoungDiagram(std::move(cols));
}

std::pair<YoungDiagram, YoungDiagram> head_tail(const YoungDiagram& a)
{
    const long long s = a.diag_length();
    std::vector<long long> head, tail;
    for (long long i = 0; i < s; ++i)
        head.push_back(a.rows()[i] - s);
    for (long long i = s; i < a.height(); ++i)
        tail.push_back(a.rows()[i]);
    return {YoungDiagram(std::move(head)), YoungDiagram(std::move(tail))};
}

YoungDiagram expand_horizontal(const YoungDiagram& a, long long p)
{
    if (p < 0)
        throw std::invalid_argument("expand_horizontal: p must be nonnegative");
    const long long s = a.diag_length();
    std::vector<long long> rows = a.rows();
    for (long long i = 0; i < s; ++i)
        rows[i] += p;
    return YoungDiagram(std::move(rows));
}

YoungDiagram expand_vertical(const YoungDiagram& a, long long q)
{
    if (q < 0)
        throw std::invalid_argument("expand_vertical: q must be nonnegative");
    const long long s = a.diag_length();
    std::vector<long long> rows;
    rows.reserve(static_cast<size_t>(a.height() + q));
    for (long long i = 0; i < s; ++i)
        rows.push_back(a.rows()[i]);
    for (long long i = 0; i < q; ++i)
        rows.push_back(s);
    for (long long i = s; i < a.height(); ++i)
        rows.push_back(a.rows()[i]);
    return YoungDiagram(std::move(rows));
}

bool is_symmetric(const YoungDiagram& a)
{
    return transpose(a) == a;
}

std::optional<YoungDiagram> contract_horizontal(const YoungDiagram& a, long long p)
{
    if (p < 1)
        throw std::invalid_argument("contract_horizontal: p must be positive");
    // expand_horizontal(nu, p) widens the first diag_length(nu) rows, so the
    // preimage strips p boxes from a prefix of rows; the prefix length is
    // forced because the result must have that exact diagonal length
    for (long long s = 0; s <= a.height(); ++s) {
        std::vector<long long> rows = a.rows();
        bool ok = true;
        for (long long i = 0; ok && i < s; ++i) {
            rows[static_cast<size_t>(i)] -= p;
            if (rows[static_cast<size_t>(i)] < 0)
                ok = false;
        }
        for (size_t i = 0; ok && i + 1 < rows.size(); ++i)
            if (rows[i] < rows[i + 1])
                ok = false;
        if (!ok)
            continue;
        YoungDiagram nu(std::move(rows));
        if (nu.diag_length() == s && expand_horizontal(nu, p) == a)
            return nu;
    }
    return std::nullopt;
}

static void enumerate_rec(const Rectangle& rect, const EnumerateOptions& opts,
                          std::vector<long long>& prefix,
                          std::vector<YoungDiagram>& out)
{
    YoungDiagram d(prefix);
    bool keep = true;
    if (opts.symmetric_only && !is_symmetric(d))
        keep = false;
    if (keep && opts.size_plus_diag && d.size() + d.diag_length() != *opts.size_plus_diag)
        keep = false;
    if (keep)
        out.push_back(d);
    if (static_cast<long long>(prefix.size()) == rect.height)
        return;
    const long long cap = prefix.empty() ? rect.width : prefix.back();
    for (long long v = 1; v <= cap; ++v) {
        prefix.push_back(v);
        enumerate_rec(rect, opts, prefix, out);
        prefix.pop_back();
    }
}

std::vector<YoungDiagram> enumerate_diagrams(const Rectangle& rect,
                                             const EnumerateOptions& opts)
{
    if (rect.width < 0 || rect.height < 0)
        throw std::invalid_argument("enumerate_diagrams: negative rectangle");
    std::vector<YoungDiagram> out;
    std::vector<long long> prefix;
    enumerate_rec(rect, opts, prefix, out);
    return out;
}

YoungDiagram parse_diagram(const std::string& text)
{
    if (text.empty())
        return YoungDiagram{};
    std::vector<long long> rows;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        const std::string piece = text.substr(pos, comma - pos);
        if (piece.empty())
            throw std::invalid_argument("parse_diagram: empty row entry in '" + text + "'");
        size_t used = 0;
        long long v;
        try {
            v = std::stoll(piece, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_diagram: bad row '" + piece + "'");
        }
        if (used != piece.size())
            throw std::invalid_argument("parse_diagram: bad row '" + piece + "'");
        rows.push_back(v);
        pos = comma + 1;
        if (comma == text.size())
            break;
    }
    return YoungDiagram(std::move(rows));
}

std::string to_string(const YoungDiagram& a)
{
    if (a.height() == 0)
        return "0";
    std::string out;
    for (long long i = 0; i < a.height(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(a.rows()[i]);
    }
    return out;
}

}  // namespace bbw
