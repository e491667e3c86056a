#include "bbw/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace bbw {

bool Weight::operator<(const Weight& o) const
{
    if (type.family != o.type.family)
        return type.family < o.type.family;
    if (type.rank != o.type.rank)
        return type.rank < o.type.rank;
    return two_c < o.two_c;
}

Weight make_weight(LieType type, std::vector<long long> two_coords)
{
    if (type.rank < 1)
        throw std::invalid_argument("make_weight: rank must be positive");
    if (static_cast<long long>(two_coords.size()) != type.coord_count())
        throw std::invalid_argument("make_weight: wrong coordinate count");
    if (type.family == Family::A) {
        for (long long c : two_coords)
            if (c % 2 != 0)
                throw std::invalid_argument("make_weight: type A weights are integral");
    } else {
        // all integral or all strictly half-integral
        for (long long c : two_coords)
            if (((c % 2) + 2) % 2 != ((two_coords[0] % 2) + 2) % 2)
                throw std::invalid_argument("make_weight: mixed integrality");
    }
    return Weight{type, std::move(two_coords)};
}

Weight rho(LieType type)
{
    std::vector<long long> two_c;
    if (type.family == Family::A) {
        const long long N = type.rank + 1;
        for (long long i = 0; i < N; ++i)
            two_c.push_back(2 * (N - 1 - i));
    } else {
        const long long two_eps = type.family == Family::B ? 1 : 0;
        for (long long i = 0; i < type.rank; ++i)
            two_c.push_back(2 * (type.rank - 1 - i) + two_eps);
    }
    return Weight{type, std::move(two_c)};
}

bool is_singular(const Weight& mu)
{
    std::vector<long long> v = mu.two_c;
    if (mu.type.family == Family::A) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    }
    if (mu.type.family == Family::B &&
        std::find(v.begin(), v.end(), 0) != v.end())
        return true;
    for (auto& c : v)
        c = std::llabs(c);
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

/* Length of the Weyl element taking regular mu to the dominant chamber:
 * the number of positive roots alpha with <mu, alpha> < 0. */
static long long regular_length(const Weight& mu)
{
    const auto& c = mu.two_c;
    const size_t n = c.size();
    long long len = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (c[i] < c[j])
                ++len;
    if (mu.type.family != Family::A) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (c[i] + c[j] < 0)
                    ++len;
    }
    if (mu.type.family == Family::B) {
        for (size_t i = 0; i < n; ++i)
            if (c[i] < 0)
                ++len;
    }
    return len;
}

DominantizationResult dominantize(const Weight& mu)
{
    make_weight(mu.type, mu.two_c);  // lattice validation
    DominantizationResult res;
    if (is_singular(mu)) {
        res.singular = true;
        return res;
    }
    res.length = regular_length(mu);
    std::vector<long long> v = mu.two_c;
    if (mu.type.family == Family::A) {
        std::sort(v.begin(), v.end(), std::greater<>());
    } else {
        long long negatives = 0;
        bool has_zero = false;
        for (auto& c : v) {
            if (c < 0) {
                ++negatives;
                c = -c;
            } else if (c == 0) {
                has_zero = true;
            }
        }
        std::sort(v.begin(), v.end(), std::greater<>());
        if (mu.type.family == Family::D) {
            if (!has_zero) {
                res.spin_sign = negatives % 2 == 0 ? +1 : -1;
                // only even sign-change counts exist in W(D_n); an odd flip
                // demand leaves the smallest coordinate negative instead
                if (negatives % 2 != 0)
                    v.back() = -v.back();
            }
        }
    }
    res.dominant = Weight{mu.type, std::move(v)};
    return res;
}

static __int128 gcd128(__int128 a, __int128 b)
{
    while (b) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long dim_schur(const YoungDiagram& alpha, long long m)
{
    if (m < 1)
        throw std::invalid_argument("dim_schur: m must be positive");
    if (alpha.height() > m)
        throw std::invalid_argument("dim_schur: diagram taller than the space dimension");
    __int128 num = 1, den = 1;
    for (long long i = 1; i <= m; ++i) {
        for (long long j = i + 1; j <= m; ++j) {
            num *= alpha.row(static_cast<size_t>(i - 1)) -
                   alpha.row(static_cast<size_t>(j - 1)) + j - i;
            den *= j - i;
            const __int128 g = gcd128(num, den);
            num /= g;
            den /= g;
            if (num > (__int128)4 * 1000000000000000000LL)
                throw std::overflow_error("dim_schur: overflow");
        }
    }
    if (den != 1)
        throw std::logic_error("dim_schur: nonintegral result");
    return static_cast<long long>(num);
}

long long dim_half_spinor(LieType type)
{
    if (type.family == Family::A)
        throw std::invalid_argument("dim_half_spinor: type must be B or D");
    const long long e = type.family == Family::D ? type.rank - 1 : type.rank;
    if (e < 0 || e > 62)
        throw std::overflow_error("dim_half_spinor: rank out of range");
    return 1LL << e;
}

long long spinor_bundle_rank(LieType type, long long k)
{
    if (type.family == Family::A)
        throw std::invalid_argument("spinor_bundle_rank: type must be B or D");
    const long long e = (type.family == Family::D ? type.rank - 1 : type.rank) - k;
    if (k < 0 || e < 0)
        throw std::invalid_argument("spinor_bundle_rank: k out of range");
    return 1LL << e;
}

RepLabel RepLabel::half_spinor(int sign)
{
    if (sign != -1 && sign != 0 && sign != 1)
        throw std::invalid_argument("RepLabel: bad spinor sign");
    RepLabel l;
    l.kind = Kind::HalfSpinor;
    l.sign = sign;
    return l;
}

RepLabel RepLabel::highest_weight(Weight w)
{
    RepLabel l;
    l.kind = Kind::HighestWeight;
    l.weight = std::move(w);
    return l;
}

bool RepLabel::operator==(const RepLabel& o) const
{
    if (kind != o.kind)
        return false;
    if (kind == Kind::HalfSpinor)
        return sign == o.sign;
    if (kind == Kind::HighestWeight)
        return weight == o.weight;
    return true;
}

bool RepLabel::operator<(const RepLabel& o) const
{
    if (kind != o.kind)
        return kind < o.kind;
    if (kind == Kind::HalfSpinor)
        return sign > o.sign;  // S+ before S before S-
    if (kind == Kind::HighestWeight)
        return weight < o.weight;
    return false;
}

LieType parse_lie_type(const std::string& text)
{
    if (text.size() < 2)
        throw std::invalid_argument("parse_lie_type: bad tag '" + text + "'");
    Family fam;
    switch (text[0]) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'D': fam = Family::D; break;
        default: throw std::invalid_argument("parse_lie_type: bad family in '" + text + "'");
    }
    size_t used = 0;
    long long rank;
    try {
        rank = std::stoll(text.substr(1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_lie_type: bad rank in '" + text + "'");
    }
    if (used + 1 != text.size() || rank < 1)
        throw std::invalid_argument("parse_lie_type: bad rank in '" + text + "'");
    return LieType{fam, rank};
}

std::string to_string(const LieType& type)
{
    const char fam = type.family == Family::A ? 'A' : type.family == Family::B ? 'B' : 'D';
    return fam + std::to_string(type.rank);
}

static long long parse_half_integer(const std::string& piece)
{
    const size_t slash = piece.find('/');
    const std::string numpart = slash == std::string::npos ? piece : piece.substr(0, slash);
    size_t used = 0;
    long long v;
    try {
        v = std::stoll(numpart, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_weight: bad coordinate '" + piece + "'");
    }
    if (used != numpart.size() || numpart.empty())
        throw std::invalid_argument("parse_weight: bad coordinate '" + piece + "'");
    if (slash == std::string::npos)
        return 2 * v;
    if (piece.substr(slash + 1) != "2")
        throw std::invalid_argument("parse_weight: only halves supported in '" + piece + "'");
    return v;
}

Weight parse_weight(const std::string& text, LieType type)
{
    std::vector<long long> two_c;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        two_c.push_back(parse_half_integer(text.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == text.size())
            break;
    }
    return make_weight(type, std::move(two_c));
}

std::string coords_to_string(const Weight& w)
{
    std::string out;
    for (size_t i = 0; i < w.two_c.size(); ++i) {
        if (i)
            out += ',';
        if (w.two_c[i] % 2 == 0)
            out += std::to_string(w.two_c[i] / 2);
        else
            out += std::to_string(w.two_c[i]) + "/2";
    }
    return out;
}

std::string to_string(const RepLabel& label)
{
    switch (label.kind) {
        case RepLabel::Kind::Trivial:
            return "k";
        case RepLabel::Kind::HalfSpinor:
            return label.sign == 0 ? "S" : label.sign > 0 ? "S+" : "S-";
        case RepLabel::Kind::HighestWeight:
            return "wt(" + coords_to_string(label.weight) + ")";
    }
    return "?";
}

}  // namespace bbw
