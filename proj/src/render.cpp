#include "bbw/render.hpp"

#include <sstream>

namespace bbw {

namespace {

std::string sign_token(int sign)
{
    if (sign == 0)
        return "";
    return sign > 0 ? "+" : "-";
}

}  // namespace

std::string spinor_token(int sign)
{
    return "S" + sign_token(sign);
}

std::string bundle_token(const YoungDiagram& shape, long long rank)
{
    if (shape.height() == 0)
        return "O";
    if (shape.height() == rank && shape.row(0) == shape.row(static_cast<size_t>(rank) - 1))
        return "O(-" + std::to_string(shape.row(0)) + ")";
    return "Sigma^(" + to_string(shape) + ") Uperp";
}

nlohmann::json to_json(const GradedRepList& list)
{
    nlohmann::json out = nlohmann::json::array();
    for (const GradedEntry& e : list.entries) {
        nlohmann::json item;
        item["degree"] = e.degree;
        item["mult"] = e.mult;
        item["rep"] = to_string(e.label);
        out.push_back(std::move(item));
    }
    return out;
}

nlohmann::json to_json(const SchurSum& sum)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [shape, mult] : sum.terms)
        out[to_string(shape)] = mult;
    return out;
}

nlohmann::json to_json(const Resolution& resolution)
{
    nlohmann::json out = nlohmann::json::array();
    for (const ResolutionTerm& term : resolution.terms) {
        nlohmann::json summands = nlohmann::json::array();
        for (const ResolutionSummand& s : term.summands) {
            nlohmann::json item;
            item["shape"] = to_string(s.shape);
            item["sign"] = sign_token(s.sign);
            summands.push_back(std::move(item));
        }
        nlohmann::json entry;
        entry["summands"] = std::move(summands);
        entry["t"] = term.t;
        out.push_back(std::move(entry));
    }
    return out;
}

nlohmann::json to_json(const ExtTable& table)
{
    nlohmann::json total = nlohmann::json::object();
    for (const auto& [degree, mult] : table.total)
        total[std::to_string(degree)] = mult;
    nlohmann::json out;
    out["indeterminate"] = table.indeterminate;
    out["total"] = std::move(total);
    return out;
}

nlohmann::json to_json(const CriterionReport& report)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const CaseResult& c : report.cases) {
        nlohmann::json item;
        item["detail"] = c.detail;
        item["name"] = c.name;
        item["pass"] = c.pass;
        item["table"] = to_json(c.table);
        cases.push_back(std::move(item));
    }
    nlohmann::json out;
    out["N"] = report.N;
    out["cases"] = std::move(cases);
    out["genus"] = report.genus;
    out["indeterminate"] = report.indeterminate;
    out["k"] = report.k;
    out["pass"] = report.pass;
    out["verdict"] = report.indeterminate ? "indeterminate" : report.pass ? "pass" : "FAIL";
    return out;
}

std::string render_text(const GradedRepList& list)
{
    if (list.empty())
        return "0";
    std::ostringstream out;
    size_t i = 0;
    bool first_line = true;
    while (i < list.entries.size()) {
        long long degree = list.entries[i].degree;
        if (!first_line)
            out << "\n";
        first_line = false;
        out << "H^" << degree << " = ";
        bool first_term = true;
        while (i < list.entries.size() && list.entries[i].degree == degree) {
            if (!first_term)
                out << " + ";
            first_term = false;
            out << to_string(list.entries[i].label) << " (x" << list.entries[i].mult << ")";
            ++i;
        }
    }
    return out.str();
}

std::string render_text(const SchurSum& sum)
{
    if (sum.terms.empty())
        return "0";
    std::ostringstream out;
    for (size_t i = 0; i < sum.terms.size(); ++i) {
        if (i)
            out << "\n";
        out << to_string(sum.terms[i].first) << " (x" << sum.terms[i].second << ")";
    }
    return out.str();
}

std::string render_text(const Resolution& resolution)
{
    long long rank = resolution.params.N - resolution.params.k;
    std::ostringstream out;
    out << "0";
    for (size_t i = resolution.terms.size(); i-- > 0;) {
        out << " -> ";
        const ResolutionTerm& term = resolution.terms[i];
        for (size_t j = 0; j < term.summands.size(); ++j) {
            if (j)
                out << " + ";
            const ResolutionSummand& s = term.summands[j];
            out << spinor_token(s.sign) << " (x) " << bundle_token(s.shape, rank);
        }
    }
    return out.str();
}

std::string render_text(const ExtTable& table)
{
    std::string body;
    if (table.total.empty()) {
        body = "0";
    } else {
        std::ostringstream out;
        for (size_t i = 0; i < table.total.size(); ++i) {
            if (i)
                out << " + ";
            const auto& [degree, mult] = table.total[i];
            if (mult != 1)
                out << mult << "*";
            out << "k";
            if (degree != 0)
                out << "[" << -degree << "]";
        }
        body = out.str();
    }
    if (table.indeterminate)
        body += " (indeterminate)";
    return body;
}

std::string render_text(const CriterionReport& report)
{
    std::ostringstream out;
    out << "report: genus " << report.genus << ", k " << report.k << ", N " << report.N << "\n";
    for (const CaseResult& c : report.cases) {
        out << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.detail << ")";
        if (!c.table.per_m.empty())
            out << " [Ext = " << render_text(c.table) << "]";
        out << "\n";
    }
    out << "verdict: " << (report.indeterminate ? "indeterminate" : report.pass ? "pass" : "FAIL");
    return out.str();
}

}  // namespace bbw
