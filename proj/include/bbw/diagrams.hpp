#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bbw {

/* A Young diagram is a weakly decreasing sequence of positive row lengths.
 * Trailing zeros are stripped on construction, so the empty diagram is the
 * unique representation of zero and operator== is structural equality. */
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<long long> rows);
    YoungDiagram(std::initializer_list<long long> rows);

    const std::vector<long long>& rows() const { return rows_; }
    long long row(size_t i) const { return i < rows_.size() ? rows_[i] : 0; }

    long long size() const;                 // |alpha|, number of boxes
    long long height() const { return static_cast<long long>(rows_.size()); }
    long long width() const { return rows_.empty() ? 0 : rows_[0]; }

    // max{ i : alpha_i >= i } with 1-based i; 0 for the empty diagram
    long long diag_length() const;

    bool operator==(const YoungDiagram& o) const { return rows_ == o.rows_; }
    bool operator!=(const YoungDiagram& o) const { return rows_ != o.rows_; }
    bool operator<(const YoungDiagram& o) const { return rows_ < o.rows_; }

private:
    std::vector<long long> rows_;
};

struct Rectangle {
    long long width = 0;
    long long height = 0;
    bool contains(const YoungDiagram& a) const
    {
        return a.height() <= height && a.width() <= width;
    }
};

YoungDiagram transpose(const YoungDiagram& a);

// (head, tail): the parts strictly right of / strictly below the main
// diagonal square of side diag_length
std::pair<YoungDiagram, YoungDiagram> head_tail(const YoungDiagram& a);

// widen the first diag_length rows by p
YoungDiagram expand_horizontal(const YoungDiagram& a, long long p);

// insert q rows of length diag_length after row diag_length
YoungDiagram expand_vertical(const YoungDiagram& a, long long q);

bool is_symmetric(const YoungDiagram& a);

// the unique nu with expand_horizontal(nu, p) == a, if it exists (p >= 1)
std::optional<YoungDiagram> contract_horizontal(const YoungDiagram& a, long long p);

struct EnumerateOptions {
    bool symmetric_only = false;
    // keep only diagrams with |nu| + diag_length(nu) equal to this value
    std::optional<long long> size_plus_diag;
};

// all diagrams in the rectangle matching the filters, in ascending
// lexicographic order on the row vectors (empty diagram first)
std::vector<YoungDiagram> enumerate_diagrams(const Rectangle& rect,
                                             const EnumerateOptions& opts = {});

// text format: comma-separated row lengths; empty diagram is "0" (also
// accepted: the empty string)
YoungDiagram parse_diagram(const std::string& text);
std::string to_string(const YoungDiagram& a);

}  // namespace bbw
