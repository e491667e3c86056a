#include "bbw/resolution.hpp"

#include "bbw/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

using namespace bbw;

namespace {

ResolutionTerm term_of(long long t, std::vector<std::pair<int, YoungDiagram>> summands)
{
    ResolutionTerm term;
    term.t = t;
    for (auto& [sign, shape] : summands)
        term.summands.push_back(ResolutionSummand{sign, shape});
    std::sort(term.summands.begin(), term.summands.end());
    return term;
}

long long term_rank(const SpaceParams& sp, const ResolutionTerm& term)
{
    long long spinor_rank = spinor_bundle_rank(sp.ortho_type(), sp.k);
    long long total = 0;
    for (const ResolutionSummand& s : term.summands)
        total += spinor_rank * dim_schur(s.shape, sp.N - sp.k);
    return total;
}

}  // namespace

TEST_CASE("resolution for the smallest ranks")
{
    Resolution r1 = build_resolution(SpaceParams{6, 1}, +1);
    REQUIRE(r1.terms.size() == 2);
    CHECK(r1.terms[0] == term_of(0, {{+1, YoungDiagram{}}}));
    CHECK(r1.terms[1] == term_of(1, {{-1, YoungDiagram{1, 1, 1, 1, 1}}}));

    Resolution r1m = build_resolution(SpaceParams{6, 1}, -1);
    CHECK(r1m.terms[0] == term_of(0, {{-1, YoungDiagram{}}}));
    CHECK(r1m.terms[1] == term_of(1, {{+1, YoungDiagram{1, 1, 1, 1, 1}}}));

    Resolution r2 = build_resolution(SpaceParams{8, 2}, +1);
    REQUIRE(r2.terms.size() == 4);
    CHECK(r2.terms[0] == term_of(0, {{+1, YoungDiagram{}}}));
    CHECK(r2.terms[1] == term_of(1, {{-1, YoungDiagram{1, 1, 1, 1, 1}}}));
    CHECK(r2.terms[2] == term_of(2, {{-1, YoungDiagram{2, 1, 1, 1, 1, 1}}}));
    CHECK(r2.terms[3] == term_of(3, {{+1, YoungDiagram{2, 2, 2, 2, 2, 2}}}));

    // type B carries the single spinor label
    Resolution rb = build_resolution(SpaceParams{7, 1}, +1);
    REQUIRE(rb.terms.size() == 2);
    CHECK(rb.terms[0] == term_of(0, {{0, YoungDiagram{}}}));
    CHECK(rb.terms[1] == term_of(1, {{0, YoungDiagram{1, 1, 1, 1, 1, 1}}}));
}

TEST_CASE("resolution matches the closed-form tables")
{
    for (long long N = 6; N <= 12; ++N) {
        for (long long k = 1; k <= 3; ++k) {
            if (N < 2 * k + 2)
                continue;
            SpaceParams sp{N, k};
            SweepResult sweep = sweep_resolution_example(sp);
            CHECK(sweep.failures.empty());
            CHECK(sweep.checked == (sp.even() ? 2 : 1));
        }
    }
}

TEST_CASE("euler characteristic of the resolution vanishes")
{
    for (long long N = 6; N <= 10; ++N) {
        for (long long k = 1; k <= 3; ++k) {
            if (N < 2 * k + 2)
                continue;
            SpaceParams sp{N, k};
            for (int sign : sp.even() ? std::vector<int>{+1, -1} : std::vector<int>{+1}) {
                Resolution r = build_resolution(sp, sign);
                REQUIRE(r.terms.size() == static_cast<size_t>(k * (k + 1) / 2 + 1));
                long long euler = 0;
                for (const ResolutionTerm& term : r.terms)
                    euler += (term.t % 2 == 0 ? 1 : -1) * term_rank(sp, term);
                CHECK(euler == 0);
            }
        }
    }
}

TEST_CASE("subcategory generators")
{
    GeneratorSet nb61 = spinor_subcat_generators(SpaceParams{6, 1}, false);
    CHECK(!nb61.branching);
    CHECK(nb61.nus == std::vector<YoungDiagram>{YoungDiagram{}, YoungDiagram{1}});
    CHECK(nb61.shapes
          == std::vector<YoungDiagram>{YoungDiagram{}, YoungDiagram{1, 1, 1, 1, 1}});

    GeneratorSet b61 = spinor_subcat_generators(SpaceParams{6, 1}, true);
    CHECK(b61.branching);
    CHECK(b61.nus == nb61.nus);
    CHECK(b61.shapes == nb61.shapes);

    GeneratorSet nb82 = spinor_subcat_generators(SpaceParams{8, 2}, false);
    CHECK(nb82.nus
          == std::vector<YoungDiagram>{YoungDiagram{}, YoungDiagram{1}, YoungDiagram{2, 1},
                                       YoungDiagram{2, 2}});

    GeneratorSet b82 = spinor_subcat_generators(SpaceParams{8, 2}, true);
    CHECK(b82.nus
          == std::vector<YoungDiagram>{YoungDiagram{}, YoungDiagram{1}, YoungDiagram{1, 1},
                                       YoungDiagram{2, 1}, YoungDiagram{2, 2}});

    // branching generators are exactly the diagrams with |head| <= |tail|,
    // and they contain the non-branching (symmetric) ones
    for (long long k = 1; k <= 3; ++k) {
        for (long long N = 2 * k + 4; N <= 12; N += 2) {
            SpaceParams sp{N, k};
            GeneratorSet nb = spinor_subcat_generators(sp, false);
            GeneratorSet b = spinor_subcat_generators(sp, true);
            std::vector<YoungDiagram> expected;
            for (const YoungDiagram& nu : enumerate_diagrams(Rectangle{k, k})) {
                auto [head, tail] = head_tail(nu);
                if (head.size() <= tail.size())
                    expected.push_back(nu);
            }
            CHECK(b.nus == expected);
            for (const YoungDiagram& nu : nb.nus)
                CHECK(std::find(b.nus.begin(), b.nus.end(), nu) != b.nus.end());
            for (size_t i = 0; i < b.nus.size(); ++i)
                CHECK(b.shapes[i] == expand_vertical(b.nus[i], N - 2 * k));
        }
    }
}
