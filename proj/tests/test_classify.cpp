#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/classify.hpp"
#include "hurwitz/orbifold.hpp"

using namespace hurwitz;

namespace {

// Branch data of a row together with its one free simple branch point, fed
// through the pullback report. Every admissible row must come out apparent
// with excess 1 and a consistent cover genus of 2.
PullbackReport row_pullback(const TableRow& row) {
    std::vector<BranchPartition> ram;
    int n = static_cast<int>(row.signature.cone_orders.size());
    for (int i = 0; i < n; ++i) ram.push_back({i, row.profiles[static_cast<std::size_t>(i)]});
    std::vector<int> free_parts{2};
    for (long k = 2; k < row.degree; ++k) free_parts.push_back(1);
    ram.push_back({n, free_parts});
    return pullback_orbifold(row.signature, ram, row.degree);
}

}  // namespace

TEST_CASE("candidate triples: the eighteen") {
    const std::vector<std::array<int, 3>> expected = {
        {2, 3, 7},  {2, 3, 8},  {2, 3, 9},  {2, 3, 10}, {2, 3, 11}, {2, 3, 12},
        {2, 4, 5},  {2, 4, 6},  {2, 4, 7},  {2, 4, 8},  {2, 5, 5},  {2, 5, 6},
        {2, 6, 6},  {3, 3, 4},  {3, 3, 5},  {3, 3, 6},  {3, 4, 4},  {4, 4, 4}};
    auto got = candidate_triples();
    CHECK(got == expected);

    for (const auto& t : got) {
        OrbifoldSignature s = OrbifoldSignature::make(0, {t[0], t[1], t[2]});
        CHECK(geometry_class(s) == GeometryClass::Hyperbolic);
        CHECK((Rat(1) - Rat(1, t[0]) - Rat(1, t[1])) * t[2] <= 2);
        CHECK(Rat(1, t[0]) + Rat(1, t[1]) >= Rat(1, 3));
    }
}

TEST_CASE("degree test on triples") {
    long d = 0;
    REQUIRE(hypergeometric_degree({2, 3, 7}, d));
    CHECK(d == 42);
    REQUIRE(hypergeometric_degree({4, 4, 4}, d));
    CHECK(d == 4);
    CHECK(!hypergeometric_degree({2, 5, 6}, d));   // 1/gap = 15/2
    CHECK(!hypergeometric_degree({3, 4, 4}, d));   // d = 6 not divisible by 4
    CHECK(!hypergeometric_degree({2, 3, 5}, d));   // spherical
    CHECK(!hypergeometric_degree({2, 4, 4}, d));   // euclidean
}

TEST_CASE("triangle table") {
    auto rows = table_hypergeometric();
    REQUIRE(rows.size() == 12);

    const std::vector<std::array<int, 3>> triples = {
        {2, 3, 7}, {2, 3, 8}, {2, 3, 9}, {2, 3, 12}, {2, 4, 5}, {2, 4, 6},
        {2, 4, 8}, {2, 5, 5}, {2, 6, 6}, {3, 3, 4},  {3, 3, 6}, {4, 4, 4}};
    const std::vector<long> degrees = {42, 24, 18, 12, 20, 12, 8, 10, 6, 12, 6, 4};

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        CHECK(r.signature ==
              OrbifoldSignature::make(0, {triples[i][0], triples[i][1], triples[i][2]}));
        CHECK(r.degree == degrees[i]);
        CHECK(r.free_branch == 1);
        // totally ramified: each profile is d/p copies of p
        REQUIRE(r.profiles.size() == 3);
        for (std::size_t j = 0; j < 3; ++j) {
            std::vector<int> want(static_cast<std::size_t>(r.degree / triples[i][j]),
                                  triples[i][j]);
            CHECK(r.profiles[j] == want);
        }
        // the degree equation: chi = -1/d
        CHECK(euler_characteristic(r.signature) * r.degree == Rat(-1));
    }
}

TEST_CASE("rejected triples") {
    const std::vector<std::array<int, 3>> expected = {{2, 3, 10}, {2, 3, 11}, {2, 4, 7},
                                                      {2, 5, 6},  {3, 3, 5},  {3, 4, 4}};
    CHECK(rejected_triples() == expected);
}

TEST_CASE("general table") {
    auto rows = table_general();
    REQUIRE(rows.size() == 4);

    CHECK(rows[0].signature == OrbifoldSignature::make(0, {2, 2, 2, 3}));
    CHECK(rows[0].degree == 6);
    CHECK(rows[0].profiles == std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}, {3, 3}});

    CHECK(rows[1].signature == OrbifoldSignature::make(0, {2, 2, 2, 4}));
    CHECK(rows[1].degree == 4);
    CHECK(rows[1].profiles == std::vector<std::vector<int>>{{2, 2}, {2, 2}, {2, 2}, {4}});

    CHECK(rows[2].signature == OrbifoldSignature::make(0, {2, 2, 2, 2, 2}));
    CHECK(rows[2].degree == 2);
    CHECK(rows[2].profiles == std::vector<std::vector<int>>{{2}, {2}, {2}, {2}, {2}});

    CHECK(rows[3].signature == OrbifoldSignature::make(1, {2}));
    CHECK(rows[3].degree == 2);
    CHECK(rows[3].profiles == std::vector<std::vector<int>>{{2}});

    for (const auto& r : rows) {
        CHECK(r.free_branch == 1);
        CHECK(euler_characteristic(r.signature) * r.degree == Rat(-1));
    }
}

TEST_CASE("every row pulls back to an apparent genus-2 configuration") {
    auto all = table_hypergeometric();
    auto gen = table_general();
    all.insert(all.end(), gen.begin(), gen.end());
    REQUIRE(all.size() == 16);
    for (const auto& row : all) {
        auto rep = row_pullback(row);
        CHECK(rep.apparent);
        REQUIRE(rep.excess.has_value());
        CHECK(*rep.excess == Rat(1));
        CHECK(rep.genus_if_consistent() == 2);
    }
}

TEST_CASE("row construction guards") {
    // branch excess 2 - 7/6 is not an integer: no admissible row at degree 7
    CHECK_THROWS_AS(totally_ramified_row(OrbifoldSignature::make(0, {2, 3, 7}), 7),
                    std::domain_error);
}

TEST_CASE("row rendering") {
    auto rows = table_hypergeometric();
    CHECK(row_str(rows[0]) == "(0; 2,3,7)  d=42  (2^21 ; 3^14 ; 7^6)  free=1");
    CHECK(row_str(rows[11]) == "(0; 4,4,4)  d=4  (4 ; 4 ; 4)  free=1");
    auto gen = table_general();
    CHECK(row_str(gen[0]) == "(0; 2,2,2,3)  d=6  (2^3 ; 2^3 ; 2^3 ; 3^2)  free=1");
    CHECK(row_str(gen[3]) == "(1; 2)  d=2  (2)  free=1");

    CHECK(profile_str({2, 1, 1}) == "2+1^2");
    CHECK(profile_str({6}) == "6");
    CHECK(profile_str({}) == "-");

    std::string text = render_rows_text(rows);
    CHECK(text.find("(0; 2,6,6)  d=6  (2^3 ; 6 ; 6)  free=1") != std::string::npos);
}
