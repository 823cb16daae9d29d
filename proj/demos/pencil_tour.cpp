// A tour of the degree-6 pencil: the exact symbolic identities behind the
// closed form, one certified member over Q(sqrt(2)), and a scan for further
// admissible members with integer x_t.

#include <cstdio>

#include "hurwitz/classify.hpp"
#include "hurwitz/family.hpp"

using namespace hurwitz;

int main() {
    const auto& kernel = FamilyKernel::get();

    std::puts("symbolic identities (zero polynomial = proof):");
    std::printf("  composition defect:  %s\n",
                composition_defect().is_zero() ? "0" : "NONZERO");
    std::printf("  branch value defect: %s\n",
                branch_value_defect().is_zero() ? "0" : "NONZERO");
    MPoly h = norm_form();
    bool order6 = true;
    for (unsigned i = 0; i < 6; ++i) order6 = order6 && h.coeff_of(Var::X, i).is_zero();
    std::printf("  norm form = X^6 * (unit at X=0): %s\n", order6 ? "yes" : "NO");
    std::printf("  q = %s never vanishes on the working locus\n", kernel.q.str().c_str());

    std::puts("\nthe member at x_t = 1, y_t = sqrt(2):");
    SpecializedFamily<QuadExt> fam(QuadExt(1), QuadExt::sqrt_of(Rat(2)));
    auto rep = fam.analyze();
    std::printf("  genus %d, extra branch value %s\n", rep.genus,
                value_str(rep.free_value).c_str());
    std::printf("  profiles over (0, 1, inf, extra): (%s ; %s ; %s ; %s)\n",
                profile_str(rep.over_zero.parts).c_str(), profile_str(rep.over_one.parts).c_str(),
                profile_str(rep.over_infinity.parts).c_str(),
                profile_str(rep.over_free.parts).c_str());
    std::printf("  ramification defect total %d, admissible: %s\n", rep.rh_total,
                rep.admissible ? "yes" : "no");

    std::puts("\nmembers with integer x_t in [-5, 5]:");
    for (const auto& e : scan_members(-5, 5)) {
        std::string yt = e.rational_yt() ? rat_str(e.k) : QuadExt(Rat(0), e.k, e.s).str();
        std::printf("  x_t = %ld, y_t = %s: %s\n", e.xt, yt.c_str(),
                    e.admissible ? "admissible" : "not admissible");
        for (const auto& d : e.diagnostics) std::printf("      %s\n", d.c_str());
    }
    return 0;
}
