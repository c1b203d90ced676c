// XYZ - ZYX has zero trace at every symmetric tuple, yet it is not a sum of
// commutators; its symmetric part vanishes.

#include <iostream>

#include <tracecert/mateval.hpp>
#include <tracecert/ncpoly.hpp>

int main() {
    using namespace tracecert;
    const auto f = ncpoly::parse("X*Y*Z - Z*Y*X");
    std::cout << "cyclically equivalent to 0: " << std::boolalpha << ncpoly::cyc_equiv(f, ncpoly::NcPoly(3)) << "\n";
    std::cout << "residue after commutators: " << ncpoly::format(ncpoly::commutator_decomposition(f).residue) << "\n";

    double worst = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto A = mateval::sample_contraction_tuple(3, 3, seed);
        worst = std::max(worst, std::abs(mateval::trace_value(f, A)));
    }
    std::cout << "max |tr f(A)| over 10 samples: " << worst << "\n";
    std::cout << "f + f*: " << ncpoly::format(f + adj(f)) << "\n";
}
