// Prints the full classification of admissible branch data for genus-2
// pullbacks with one free simple branch point: the triangle-base table, the
// non-triangle table, and the verdict on every hyperbolic candidate triple.

#include <cstdio>

#include "hurwitz/classify.hpp"

using namespace hurwitz;

int main() {
    std::puts("triangle bases (totally ramified over each cone point):");
    for (const auto& row : table_hypergeometric()) std::printf("  %s\n", row_str(row).c_str());

    std::puts("\nother admissible bases:");
    for (const auto& row : table_general()) std::printf("  %s\n", row_str(row).c_str());

    std::puts("\nhyperbolic candidate triples and the degree filter:");
    for (const auto& t : candidate_triples()) {
        long d = 0;
        if (hypergeometric_degree(t, d))
            std::printf("  (%d,%d,%d)  d=%ld\n", t[0], t[1], t[2], d);
        else
            std::printf("  (%d,%d,%d)  rejected\n", t[0], t[1], t[2]);
    }
    return 0;
}
