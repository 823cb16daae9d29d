#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "hurwitz/family.hpp"

using namespace hurwitz;
using detail::mconst;
using detail::mvar;

namespace {

const QuadExt kRt2 = QuadExt::sqrt_of(Rat(2));

std::string joined(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += x + "\n";
    return s;
}

}  // namespace

TEST_CASE("group law on y^2 = x^3 + 1") {
    EPoint<Rat> t{Rat(2), Rat(3), false};
    REQUIRE(t.on_curve());

    SECTION("the rational points form a cyclic group of order six") {
        std::vector<EPoint<Rat>> orbit;
        EPoint<Rat> p = EPoint<Rat>::at_infinity();
        for (int i = 0; i < 6; ++i) {
            p = ec_add(p, t);
            REQUIRE(p.on_curve());
            orbit.push_back(p);
        }
        REQUIRE(orbit[0] == t);
        REQUIRE(orbit[1] == EPoint<Rat>{Rat(0), Rat(1), false});
        REQUIRE(orbit[2] == EPoint<Rat>{Rat(-1), Rat(0), false});
        REQUIRE(orbit[3] == EPoint<Rat>{Rat(0), Rat(-1), false});
        REQUIRE(orbit[4] == EPoint<Rat>{Rat(2), Rat(-3), false});
        REQUIRE(orbit[5].infinite);
    }

    SECTION("chord, inverse pair, and 2-torsion special cases") {
        EPoint<Rat> u{Rat(0), Rat(1), false};
        REQUIRE(ec_add(t, u) == EPoint<Rat>{Rat(-1), Rat(0), false});
        REQUIRE(ec_add(t, ec_neg(t)).infinite);
        REQUIRE(ec_add(EPoint<Rat>{Rat(0), Rat(-1), false}, u).infinite);
        EPoint<Rat> two{Rat(-1), Rat(0), false};
        REQUIRE(ec_double(two).infinite);
    }

    SECTION("off-curve points are rejected") {
        REQUIRE_THROWS_AS(ec_add(EPoint<Rat>{Rat(1), Rat(1), false}, t), std::invalid_argument);
    }

    SECTION("doubling over a quadratic extension") {
        EPoint<QuadExt> s{QuadExt(1), kRt2, false};
        REQUIRE(s.on_curve());
        EPoint<QuadExt> d = ec_double(s);
        REQUIRE(d.on_curve());
        REQUIRE(d.x == QuadExt(Rat(-7) / 8));
        REQUIRE(d.y == QuadExt(Rat(0), Rat(13) / 32, Rat(2)));
    }
}

TEST_CASE("degree-3 map: displayed formula against the group law") {
    const auto& k = FamilyKernel::get();
    MPoly x1p = mvar(Var::x1), y1p = mvar(Var::y1), xtp = mvar(Var::xt), ytp = mvar(Var::yt);
    std::vector<RingRelation> rels = {{Var::yt, xtp.pow(3) + mconst(1)},
                                      {Var::y1, x1p.pow(3) + mconst(1)}};

    SECTION("symbolically: translate by the marked point, then take (y+1)/2") {
        RatExpr x1{x1p}, y1{y1p}, xt{xtp}, yt{ytp};
        RatExpr a = (y1 - yt) / (x1 - xt);
        RatExpr b = (x1 * yt - xt * y1) / (x1 - xt);
        RatExpr x3 = a * a - x1 - xt;
        RatExpr y3 = -(a * x3 + b);
        RatExpr z3 = (y3 + RatExpr{mconst(1)}) / RatExpr{mconst(2)};
        REQUIRE(z3.same(RatExpr{k.deg3_num, k.deg3_den}, rels));
    }

    SECTION("numerator at the conjugate marked point is 8 y_t^3, so the pole is honest") {
        MPoly at_conj = k.deg3_num.subst(Var::x1, mvar(Var::xt)).subst(Var::y1, -mvar(Var::yt));
        REQUIRE(reduce(at_conj - mconst(8) * ytp.pow(3), rels).is_zero());
    }

    SECTION("values at the six rational points, marked point (2, 3)") {
        EPoint<Rat> t{Rat(2), Rat(3), false};
        for (const auto& p : {EPoint<Rat>{Rat(0), Rat(1), false},
                              EPoint<Rat>{Rat(0), Rat(-1), false},
                              EPoint<Rat>{Rat(-1), Rat(0), false}}) {
            EPoint<Rat> sum = ec_add(p, t);
            REQUIRE_FALSE(sum.infinite);
            REQUIRE(deg3_value(p, t) == ProjValue<Rat>::of((sum.y + Rat(1)) / Rat(2)));
        }
        REQUIRE(deg3_value(ec_neg(t), t).infinite);                              // the pole
        REQUIRE(deg3_value(t, t) == ProjValue<Rat>::of(Rat(1)));                 // z of 2(2,3) = (0,1)
        REQUIRE(deg3_value(EPoint<Rat>::at_infinity(), t) == ProjValue<Rat>::of(Rat(2)));
    }

    SECTION("ramification table over a quadratic extension, marked point (1, sqrt 2)") {
        EPoint<QuadExt> t{QuadExt(1), kRt2, false};
        // preimages of 0 and 1: (2(1 -+ y_t)/x_t^2, (4y_t -+ (x_t^3+4))/x_t^3)
        EPoint<QuadExt> r0{QuadExt(2) - QuadExt(2) * kRt2, QuadExt(4) * kRt2 - QuadExt(5), false};
        EPoint<QuadExt> r1{QuadExt(2) + QuadExt(2) * kRt2, QuadExt(4) * kRt2 + QuadExt(5), false};
        REQUIRE(r0.on_curve());
        REQUIRE(r1.on_curve());
        REQUIRE(deg3_value(r0, t) == ProjValue<QuadExt>::of(QuadExt(0)));
        REQUIRE(deg3_value(r1, t) == ProjValue<QuadExt>::of(QuadExt(1)));
        REQUIRE(deg3_value(ec_neg(t), t).infinite);
    }

    SECTION("a 2-torsion marked point is rejected") {
        EPoint<Rat> two{Rat(-1), Rat(0), false};
        REQUIRE_THROWS_AS(deg3_value(EPoint<Rat>{Rat(0), Rat(1), false}, two), std::domain_error);
    }
}

TEST_CASE("double cover down to the cubic") {
    const auto& k = FamilyKernel::get();

    SECTION("the sextic is the pulled-back curve equation, exactly") {
        REQUIRE(k.f == k.Q * (k.P.pow(3) + k.Q.pow(3)));
        MPoly pulled = reduce(mvar(Var::Y, 2) - k.Q * (k.P.pow(3) + k.Q.pow(3)), k.rels);
        REQUIRE(pulled.is_zero());
    }

    SECTION("images of the removable and pole sheets") {
        REQUIRE(deg2_image(Rat(0), Rat(3), Rat(2)) == EPoint<Rat>{Rat(2), Rat(3), false});
        REQUIRE(deg2_image(Rat(0), Rat(-3), Rat(2)) == EPoint<Rat>{Rat(2), Rat(-3), false});
        REQUIRE(deg2_image(QuadExt(0), kRt2, QuadExt(1)) == EPoint<QuadExt>{QuadExt(1), kRt2, false});
        REQUIRE(deg2_image(Rat(1), Rat(0), Rat(2)).infinite);
        REQUIRE(deg2_image(Rat(-1), Rat(0), Rat(2)).infinite);
    }
}

TEST_CASE("closed form equals the composite of the two maps") {
    const auto& k = FamilyKernel::get();

    SECTION("the cleared denominator collapses to a pure power of X") {
        MPoly b = clear_deg2_denominators(k.deg3_den);
        REQUIRE(b == -(mconst(2) * (mvar(Var::xt) + mconst(1)).pow(3) * mvar(Var::X, 6)));
        REQUIRE(b == -((mvar(Var::xt) + mconst(1)) * k.den));
    }

    SECTION("cross-multiplied difference reduces to zero") {
        REQUIRE(composition_defect().is_zero());
        MPoly a = clear_deg2_denominators(k.deg3_num);
        REQUIRE(a.degree(Var::Y) == 1);
        MPoly bracket =
            reduce(a + (mvar(Var::xt) + mconst(1)) * (k.n1 * mvar(Var::Y) + k.n0), k.rels);
        REQUIRE(bracket.is_zero());
    }

    SECTION("weighted degree above 3 is refused") {
        REQUIRE_THROWS_AS(clear_deg2_denominators(mvar(Var::x1, 4)), std::invalid_argument);
        REQUIRE_THROWS_AS(clear_deg2_denominators(mvar(Var::x1, 2) * mvar(Var::y1)),
                          std::invalid_argument);
    }
}

TEST_CASE("norm form and the extra branch value") {
    const auto& k = FamilyKernel::get();
    MPoly xt = mvar(Var::xt), yt = mvar(Var::yt);

    SECTION("the norm form is divisible by X^6 and no more") {
        MPoly h = norm_form();
        for (unsigned i = 0; i < 6; ++i) REQUIRE(h.coeff_of(Var::X, i).is_zero());
        REQUIRE_FALSE(h.coeff_of(Var::X, 6).is_zero());
    }

    SECTION("limit of the closed form at (0, y_t) is the z-image of the doubled point") {
        REQUIRE(branch_value_defect().is_zero());
    }

    SECTION("closed forms of the doubled point") {
        RatExpr v = tangent_double_z();
        RatExpr v_closed{xt.pow(6) + mconst(20) * xt.pow(3) - mconst(8) +
                             mconst(8) * yt * (xt.pow(3) + mconst(1)),
                         mconst(16) * yt * (xt.pow(3) + mconst(1))};
        REQUIRE(v.same(v_closed, k.rels));
        RatExpr x2 = tangent_double_x();
        RatExpr x2_closed{xt * (xt.pow(3) - mconst(8)), mconst(4) * (xt.pow(3) + mconst(1))};
        REQUIRE(x2.same(x2_closed, k.rels));
        // the branch value is the z-image of the double, not its x-coordinate
        REQUIRE_FALSE(v.same(x2_closed, k.rels));
    }

    SECTION("pole-sheet numerator is 8 y_t q") {
        MPoly at_pole =
            (k.n1 * mvar(Var::Y) + k.n0).subst(Var::X, Rat(0)).subst(Var::Y, -mvar(Var::yt));
        REQUIRE(at_pole == mconst(8) * yt * k.q);
    }

    SECTION("Weierstrass sheets over X^2 = 1 take the value (y_t + 1)/2") {
        MPoly at_one = k.n0.subst(Var::X, Rat(1));
        REQUIRE(at_one == (xt + mconst(1)).pow(2) * (yt + mconst(1)));
        MPoly at_minus_one = k.n0.subst(Var::X, Rat(-1));
        REQUIRE(at_minus_one == at_one);
    }

    SECTION("generic fiber form has X-degree 12 with a square leading coefficient") {
        MPoly g = fiber_form();
        REQUIRE(g.degree(Var::X) == 12);
        MPoly root = mconst(2) * (xt + mconst(1)).pow(2) * mvar(Var::z) - (xt + mconst(1)).pow(2) +
                     mconst(3) * yt;
        REQUIRE(g.coeff_of(Var::X, 12) == reduce(root * root, k.rels));
    }
}

TEST_CASE("degenerate loci of the pencil") {
    const auto& k = FamilyKernel::get();
    MPoly xt = mvar(Var::xt);

    SECTION("the sextic discriminant vanishes only on x_t = -1 and q = 0") {
        MPoly disc = sextic_discriminant();
        REQUIRE_FALSE(disc.is_zero());
        REQUIRE(disc.degree(Var::yt) <= 0);
        MPoly rem = disc;
        int a = 0, b = 0;
        while (true) {
            try {
                rem = divexact(rem, xt + mconst(1));
                ++a;
            } catch (const std::domain_error&) {
                break;
            }
        }
        while (true) {
            try {
                rem = divexact(rem, k.q);
                ++b;
            } catch (const std::domain_error&) {
                break;
            }
        }
        REQUIRE(a >= 1);
        REQUIRE(b >= 1);
        REQUIRE(rem.is_constant());
        REQUIRE(rem.constant_value() != 0);
    }

    SECTION("the extra critical point degenerates exactly on a proper locus") {
        MPoly delta = free_fiber_discriminant();
        REQUIRE_FALSE(delta.is_zero());
        REQUIRE(delta.eval({{Var::xt, Rat(2)}, {Var::yt, Rat(3)}}) == 0);
        QuadExt at_rt2 = detail::param_value(delta, QuadExt(1), kRt2);
        REQUIRE_FALSE(at_rt2.is_zero());
    }

    SECTION("structurally degenerate members are rejected up front") {
        REQUIRE_THROWS_AS(SpecializedFamily<Rat>(Rat(-1), Rat(0)), std::domain_error);
        REQUIRE_THROWS_AS(SpecializedFamily<Rat>(Rat(2), Rat(4)), std::invalid_argument);
        // a 2-torsion marked point away from x_t = -1 needs an extension
        QuadExt omega(Rat(1) / 2, Rat(1) / 2, Rat(-3));
        REQUIRE_THROWS_AS(SpecializedFamily<QuadExt>(omega, QuadExt(0)), std::domain_error);
    }
}

TEST_CASE("member at (1, sqrt 2): the full certified report") {
    SpecializedFamily<QuadExt> fam(QuadExt(1), kRt2);
    auto rep = fam.analyze();

    SECTION("admissible with the advertised branching") {
        REQUIRE(rep.admissible);
        REQUIRE(rep.genus == 2);
        REQUIRE(rep.over_zero.parts == std::vector<int>{3, 3});
        REQUIRE(rep.over_one.parts == std::vector<int>{3, 3});
        REQUIRE(rep.over_infinity.parts == std::vector<int>{6});
        REQUIRE(rep.over_free.parts == std::vector<int>{2, 1, 1, 1, 1});
        REQUIRE(rep.rh_total == 14);
        REQUIRE(rep.diagnostics.empty());
    }

    SECTION("branch data of the doubled point") {
        REQUIRE(rep.doubled.x == QuadExt(Rat(-7) / 8));
        REQUIRE(rep.doubled.y == QuadExt(Rat(0), Rat(13) / 32, Rat(2)));
        REQUIRE(rep.free_value == QuadExt(Rat(1) / 2, Rat(13) / 64, Rat(2)));
        // z-image of the double, not its x-coordinate
        REQUIRE(rep.free_value != rep.doubled.x);
        REQUIRE(rep.infinity_value == QuadExt(Rat(1) / 2, Rat(-3) / 8, Rat(2)));
    }

    SECTION("the closed form takes the certified values on the X = 0 and X^2 = 1 sheets") {
        REQUIRE(fam.value_at(QuadExt(0), kRt2) == ProjValue<QuadExt>::of(rep.free_value));
        REQUIRE(fam.value_at(QuadExt(0), -kRt2).infinite);
        QuadExt half_z = (kRt2 + QuadExt(1)) / QuadExt(2);
        REQUIRE(fam.value_at(QuadExt(1), QuadExt(0)) == ProjValue<QuadExt>::of(half_z));
        REQUIRE(fam.value_at(QuadExt(-1), QuadExt(0)) == ProjValue<QuadExt>::of(half_z));
    }

    SECTION("tower consistency at the removable point") {
        EPoint<QuadExt> t{QuadExt(1), kRt2, false};
        EPoint<QuadExt> down = deg2_image(QuadExt(0), kRt2, QuadExt(1));
        REQUIRE(down == t);
        REQUIRE(deg3_value(down, t) == ProjValue<QuadExt>::of(rep.free_value));
    }

    SECTION("fibers over regular values stay honest") {
        auto reg = fam.fiber(QuadExt(5));
        REQUIRE(reg.certified());
        REQUIRE(reg.parts == std::vector<int>{1, 1, 1, 1, 1, 1});
        auto at_inf = fam.fiber(rep.infinity_value);
        REQUIRE_FALSE(at_inf.certified());
        REQUIRE(joined(at_inf.diagnostics).find("X = infinity") != std::string::npos);
        // both sheets over the roots of n1 share one value; the norm form
        // declines to split that x-value rather than guess
        QuadExt shared(Rat(1) / 2, Rat(-13) / 64, Rat(2));
        auto split = fam.fiber(shared);
        REQUIRE_FALSE(split.certified());
        REQUIRE(joined(split.diagnostics).find("both sheets") != std::string::npos);
    }
}

TEST_CASE("members at (3, 2 sqrt 7) and (-2, sqrt -7) are admissible") {
    SECTION("x_t = 3") {
        SpecializedFamily<QuadExt> fam(QuadExt(3), QuadExt(Rat(0), Rat(2), Rat(7)));
        auto rep = fam.analyze();
        REQUIRE(rep.admissible);
        REQUIRE(rep.genus == 2);
        REQUIRE(rep.free_value == QuadExt(Rat(1) / 2, Rat(1261) / 6272, Rat(7)));
        REQUIRE(rep.over_free.parts == std::vector<int>{2, 1, 1, 1, 1});
        REQUIRE(rep.rh_total == 14);
    }
    SECTION("x_t = -2, imaginary extension") {
        SpecializedFamily<QuadExt> fam(QuadExt(-2), QuadExt::sqrt_of(Rat(-7)));
        auto rep = fam.analyze();
        REQUIRE(rep.admissible);
        REQUIRE(rep.genus == 2);
        REQUIRE(rep.free_value == QuadExt(Rat(1) / 2, Rat(-13) / 98, Rat(-7)));
        REQUIRE(rep.over_zero.parts == std::vector<int>{3, 3});
        REQUIRE(rep.over_one.parts == std::vector<int>{3, 3});
        REQUIRE(rep.rh_total == 14);
    }
}

TEST_CASE("every rational member in reach collides") {
    SECTION("(2, 3): extra branch value lands on 1") {
        SpecializedFamily<Rat> fam(Rat(2), Rat(3));
        REQUIRE(fam.sextic() ==
                UPoly<Rat>({Rat(9), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-9)}));
        REQUIRE(fam.genus_check().genus == 2);
        auto rep = fam.analyze();
        REQUIRE(rep.doubled == EPoint<Rat>{Rat(0), Rat(1), false});
        REQUIRE(rep.free_value == 1);
        REQUIRE_FALSE(rep.admissible);
        REQUIRE(joined(rep.diagnostics).find("collides") != std::string::npos);
        REQUIRE(deg6_value(Rat(0), Rat(3), Rat(2), Rat(3)) == ProjValue<Rat>::of(Rat(1)));
    }
    SECTION("(2, -3), (0, 1), (0, -1): the other collisions") {
        REQUIRE(SpecializedFamily<Rat>(Rat(2), Rat(-3)).free_value() == 0);
        REQUIRE(SpecializedFamily<Rat>(Rat(0), Rat(1)).free_value() == 0);
        REQUIRE(SpecializedFamily<Rat>(Rat(0), Rat(-1)).free_value() == 1);
        REQUIRE_FALSE(SpecializedFamily<Rat>(Rat(0), Rat(1)).analyze().admissible);
    }
}

TEST_CASE("scanning integer x_t for members") {
    auto entries = scan_members(-5, 5);
    REQUIRE(entries.size() == 11);
    auto at = [&](long x) -> const ScanEntry& {
        for (const auto& e : entries)
            if (e.xt == x) return e;
        FAIL("missing entry");
        return entries.front();
    };

    SECTION("the three small admissible members") {
        const auto& one = at(1);
        REQUIRE(one.admissible);
        REQUIRE(one.s == 2);
        REQUIRE(one.k == 1);
        REQUIRE(one.profiles ==
                std::vector<std::vector<int>>{{3, 3}, {3, 3}, {6}, {2, 1, 1, 1, 1}});
        const auto& three = at(3);
        REQUIRE(three.admissible);
        REQUIRE(three.k == 2);
        REQUIRE(three.s == 7);
        const auto& minus_two = at(-2);
        REQUIRE(minus_two.admissible);
        REQUIRE(minus_two.s == -7);
        long admissible = 0;
        for (const auto& e : entries) admissible += e.admissible ? 1 : 0;
        REQUIRE(admissible >= 3);
    }

    SECTION("rational members and the degenerate one are diagnosed") {
        REQUIRE(at(-1).diagnostics.size() == 1);
        const auto& zero = at(0);
        REQUIRE(zero.rational_yt());
        REQUIRE_FALSE(zero.admissible);
        const auto& two = at(2);
        REQUIRE(two.rational_yt());
        REQUIRE(two.k == 3);
        REQUIRE_FALSE(two.admissible);
        REQUIRE(joined(two.diagnostics).find("collides") != std::string::npos);
        for (const auto& e : entries) REQUIRE((e.admissible || !e.diagnostics.empty()));
    }
}

TEST_CASE("squarefree split of integers") {
    REQUIRE(squarefree_split(Int(28)) == std::make_pair(Int(2), Int(7)));
    REQUIRE(squarefree_split(Int(9)) == std::make_pair(Int(3), Int(1)));
    REQUIRE(squarefree_split(Int(-7)) == std::make_pair(Int(1), Int(-7)));
    REQUIRE(squarefree_split(Int(1)) == std::make_pair(Int(1), Int(1)));
    REQUIRE(squarefree_split(Int(360)) == std::make_pair(Int(6), Int(10)));
    REQUIRE_THROWS_AS(squarefree_split(Int(0)), std::domain_error);
}
