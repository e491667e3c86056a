#include "bbw/verify.hpp"

#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

using namespace bbw;

namespace {

GradedRepList inv(long long degree)
{
    GradedRepList list;
    list.add(degree, RepLabel::trivial(), 1);
    return list;
}

using Totals = std::vector<std::pair<long long, long long>>;

const Totals kDiagonal = {{0, 1}, {1, 1}};

}  // namespace

TEST_CASE("vanishing pairs")
{
    SpaceParams sp61{6, 1};
    SpaceParams sp82{8, 2};

    CHECK(check_vanishing_pair(sp61, YoungDiagram{}, YoungDiagram{}));
    CHECK(check_vanishing_pair(sp61, YoungDiagram{}, YoungDiagram{1}));
    CHECK(check_vanishing_pair(sp61, YoungDiagram{1}, YoungDiagram{1}));
    CHECK(check_vanishing_pair(sp82, YoungDiagram{1}, YoungDiagram{1}));
    CHECK(check_vanishing_pair(sp82, YoungDiagram{2, 1}, YoungDiagram{2, 2}));

    // ((2),(2)) fails both hypotheses, so no vanishing is asserted either way
    CHECK_NOTHROW(check_vanishing_pair(sp82, YoungDiagram{2}, YoungDiagram{2}));

    CHECK_THROWS_AS(check_vanishing_pair(SpaceParams{5, 2}, YoungDiagram{}, YoungDiagram{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_vanishing_pair(sp61, YoungDiagram{2}, YoungDiagram{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_vanishing_pair(sp61, YoungDiagram{}, YoungDiagram{1, 1}),
                    std::invalid_argument);
}

TEST_CASE("corollary vanishing over generator sets")
{
    CHECK(check_corollary_vanishing(SpaceParams{6, 1}, PointType::NonBranching,
                                    PointType::NonBranching));
    CHECK(check_corollary_vanishing(SpaceParams{8, 2}, PointType::NonBranching,
                                    PointType::Branching));
    CHECK(check_corollary_vanishing(SpaceParams{8, 1}, PointType::Branching,
                                    PointType::Branching));
    CHECK_THROWS_AS(check_corollary_vanishing(SpaceParams{7, 1}, PointType::NonBranching,
                                              PointType::NonBranching),
                    std::invalid_argument);
}

TEST_CASE("koszul assembly")
{
    SUBCASE("spread-out entries stay determinate")
    {
        std::vector<GradedRepList> per_m = {inv(0), inv(2)};
        ExtTable table = assemble_koszul(per_m);
        CHECK(table.total == kDiagonal);
        CHECK(!table.indeterminate);
        CHECK(table.per_m == per_m);
    }

    SUBCASE("empty layers")
    {
        ExtTable table = assemble_koszul({GradedRepList{}, GradedRepList{}});
        CHECK(table.total.empty());
        CHECK(!table.indeterminate);
    }

    SUBCASE("entries in differential position are flagged")
    {
        ExtTable table = assemble_koszul({inv(0), inv(2), inv(2)});
        CHECK(table.indeterminate);
        CHECK(table.total == Totals{{0, 2}, {1, 1}});
    }

    SUBCASE("adjacent layers one degree apart are flagged")
    {
        ExtTable table = assemble_koszul({inv(0), inv(0)});
        CHECK(table.indeterminate);
        CHECK(table.total == Totals{{-1, 1}, {0, 1}});
    }

    SUBCASE("non-invariant entries are rejected")
    {
        GradedRepList bad;
        bad.add(0, RepLabel::half_spinor(+1), 1);
        CHECK_THROWS_AS(assemble_koszul({bad}), std::logic_error);
    }
}

TEST_CASE("same-point Ext tables")
{
    SUBCASE("type D, equal signs")
    {
        ExtTable table = ext_same_point_D(SpaceParams{8, 2}, +1, +1);
        REQUIRE(table.per_m.size() == 4);
        CHECK(table.per_m[0] == inv(0));
        CHECK(table.per_m[1] == inv(2));
        CHECK(table.per_m[2].empty());
        CHECK(table.per_m[3].empty());
        CHECK(table.total == kDiagonal);
        CHECK(!table.indeterminate);

        CHECK(ext_same_point_D(SpaceParams{8, 2}, -1, -1).total == kDiagonal);

        ExtTable small = ext_same_point_D(SpaceParams{6, 1}, +1, +1);
        REQUIRE(small.per_m.size() == 2);
        CHECK(small.per_m[0] == inv(0));
        CHECK(small.per_m[1] == inv(2));
        CHECK(small.total == kDiagonal);
    }

    SUBCASE("type D, opposite signs")
    {
        ExtTable table = ext_same_point_D(SpaceParams{8, 2}, +1, -1);
        for (const GradedRepList& layer : table.per_m)
            CHECK(layer.empty());
        CHECK(table.total.empty());
        CHECK(!table.indeterminate);
        CHECK(ext_same_point_D(SpaceParams{8, 2}, -1, +1).total.empty());
    }

    SUBCASE("type B over the reduced space")
    {
        ExtTable table = ext_same_point_B(SpaceParams{7, 2});
        REQUIRE(table.per_m.size() == 4);
        CHECK(table.per_m[0] == inv(0));
        CHECK(table.per_m[1] == inv(2));
        CHECK(table.per_m[2].empty());
        CHECK(table.per_m[3].empty());
        CHECK(table.total == kDiagonal);

        ExtTable small = ext_same_point_B(SpaceParams{5, 1});
        REQUIRE(small.per_m.size() == 2);
        CHECK(small.total == kDiagonal);
    }

    SUBCASE("admissibility")
    {
        CHECK_THROWS_AS(ext_same_point_D(SpaceParams{7, 2}, +1, +1), std::invalid_argument);
        CHECK_THROWS_AS(ext_same_point_D(SpaceParams{6, 2}, +1, +1), std::invalid_argument);
        CHECK_THROWS_AS(ext_same_point_D(SpaceParams{8, 2}, 0, +1), std::invalid_argument);
        CHECK_THROWS_AS(ext_same_point_B(SpaceParams{6, 1}), std::invalid_argument);
        CHECK_THROWS_AS(ext_same_point_B(SpaceParams{5, 2}), std::invalid_argument);
    }
}

TEST_CASE("point-pair report")
{
    CriterionReport report = bondal_orlov_report(2, 1);
    CHECK(report.N == 6);
    REQUIRE(report.cases.size() == 4);
    CHECK(report.cases[0].name == "different-fibers");
    CHECK(report.cases[1].name == "same-fiber-distinct");
    CHECK(report.cases[2].name == "same-point-nonbranching");
    CHECK(report.cases[3].name == "same-point-branching");
    for (const CaseResult& c : report.cases)
        CHECK(c.pass);
    CHECK(report.pass);
    CHECK(!report.indeterminate);
    CHECK(report.cases[2].table.total == kDiagonal);
    CHECK(report.cases[3].table.total == kDiagonal);

    CHECK(bondal_orlov_report(3, 2).pass);

    CHECK_THROWS_AS(bondal_orlov_report(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(bondal_orlov_report(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(bondal_orlov_report(2, 0), std::invalid_argument);
}

TEST_CASE("lemma sweeps")
{
    SweepResult ualpha = sweep_cohomology_ualpha(SpaceParams{6, 1}, 2);
    CHECK(ualpha.checked == 12);  // 6 diagrams in Y_{5,1} times two signs
    CHECK(ualpha.failures.empty());

    SweepResult wt = sweep_wt(SpaceParams{8, 2}, 2);
    CHECK(wt.checked == 36);  // 9 admissible shapes times four sign pairs
    CHECK(wt.failures.empty());

    SweepResult wt_b = sweep_wt(SpaceParams{7, 1}, 1);
    CHECK(wt_b.checked == 3);
    CHECK(wt_b.failures.empty());

    SweepResult vanishing = sweep_vanishing_terms(SpaceParams{6, 1}, 1);
    CHECK(vanishing.checked == 4);  // every pair from Y_{1,1} satisfies a hypothesis
    CHECK(vanishing.failures.empty());

    SweepResult same_d = sweep_same_p_D(SpaceParams{8, 2});
    CHECK(same_d.checked == 4);
    CHECK(same_d.failures.empty());
    CHECK(!same_d.indeterminate);

    SweepResult same_b = sweep_same_p_B(SpaceParams{7, 2});
    CHECK(same_b.checked == 1);
    CHECK(same_b.failures.empty());

    SweepResult resolution = sweep_resolution_example(SpaceParams{10, 3});
    CHECK(resolution.checked == 2);
    CHECK(resolution.failures.empty());

    CHECK_THROWS_AS(sweep_cohomology_ualpha(SpaceParams{5, 2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep_wt(SpaceParams{4, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep_same_p_D(SpaceParams{7, 2}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_same_p_B(SpaceParams{8, 2}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_resolution_example(SpaceParams{12, 4}), std::invalid_argument);
}

TEST_CASE("closed-form resolution tables")
{
    Resolution r = example_resolution(SpaceParams{8, 2}, -1);
    REQUIRE(r.terms.size() == 4);
    CHECK(r.terms[0].summands
          == std::vector<ResolutionSummand>{{-1, YoungDiagram{}}});
    CHECK(r.terms[1].summands
          == std::vector<ResolutionSummand>{{+1, YoungDiagram{1, 1, 1, 1, 1}}});
    CHECK(r.terms[2].summands
          == std::vector<ResolutionSummand>{{+1, YoungDiagram{2, 1, 1, 1, 1, 1}}});
    CHECK(r.terms[3].summands
          == std::vector<ResolutionSummand>{{-1, YoungDiagram{2, 2, 2, 2, 2, 2}}});

    Resolution rb = example_resolution(SpaceParams{7, 2}, +1);
    REQUIRE(rb.terms.size() == 4);
    CHECK(rb.terms[0].summands == std::vector<ResolutionSummand>{{0, YoungDiagram{}}});
    CHECK(rb.terms[1].summands
          == std::vector<ResolutionSummand>{{0, YoungDiagram{1, 1, 1, 1}}});
    CHECK(rb.terms[2].summands
          == std::vector<ResolutionSummand>{{0, YoungDiagram{2, 1, 1, 1, 1}}});
    CHECK(rb.terms[3].summands
          == std::vector<ResolutionSummand>{{0, YoungDiagram{2, 2, 2, 2, 2}}});

    CHECK_THROWS_AS(example_resolution(SpaceParams{12, 4}, +1), std::invalid_argument);
    CHECK_THROWS_AS(example_resolution(SpaceParams{6, 1}, 2), std::invalid_argument);
}
