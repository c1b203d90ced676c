// (1 - X^2)(1 - Y^2) is trace-nonnegative on contractions. With eps = 1/10 the
// Gram search finds an exact certificate; with eps = 0 every level up to 4
// returns a separating functional instead.

#include <iostream>

#include <tracecert/tsos.hpp>

int main() {
    using namespace tracecert;
    const auto f = ncpoly::parse("(1 - X^2)*(1 - Y^2)", 2);

    auto ok = tsos::certify(f, make_rational(1, 10), 6);
    std::cout << "eps = 1/10: " << tsos::to_string(ok.status) << " at level " << ok.level << ", "
              << ok.certificate->terms.size() << " terms, verify: " << certkit::describe(certkit::verify(*ok.certificate))
              << "\n";

    for (int k = 2; k <= 4; ++k) {
        auto r = tsos::solve(tsos::build_gram(f, 0, k));
        std::cout << "eps = 0, k = " << k << ": " << tsos::to_string(r.status);
        if (r.conditions) std::cout << ", L(f) = " << r.conditions->value;
        std::cout << "\n";
    }
}
