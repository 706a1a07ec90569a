// Walks the 4-pointed path and the pentagon through the main entry points:
// structure classification, powers of I_Δ, local cohomology and the Buchsbaum screen.

#include <iostream>

#include "lcisr/lcisr.hpp"

using namespace lcisr;

int main() {
    const SimplicialComplex path = pointed_path(4);
    const SimplicialComplex pentagon = polygon(5);

    for (const auto& [name, complex] : {std::pair{"4-pointed path", path}, std::pair{"pentagon", pentagon}}) {
        ClassificationReport report = classify(complex);
        std::cout << name << ": lci=" << report.is_lci << " ci=" << report.is_ci
                  << " cm=" << to_string(report.cohen_macaulay) << '\n';
    }

    MonomialIdeal square = power_generators(stanley_reisner_ideal(path), 2);
    std::cout << "G(I^2) of the path:";
    for (const Monomial& m : square.generators()) std::cout << ' ' << m.to_string();
    std::cout << '\n';

    CohomologyReport h = cohomology(path, 2, Field::rationals());
    std::cout << "depth S/I^2 = " << h.depth << " of dim " << h.dim << '\n';
    for (const auto& piece : h.pieces)
        for (const auto& c : piece.contributions) {
            std::cout << "  H^" << piece.index << " at (";
            for (std::size_t k = 0; k < c.degree.a.size(); ++k) std::cout << (k ? "," : "") << c.degree.a[k];
            std::cout << ") dim " << c.dim << '\n';
        }

    for (const ScreenRow& row : screen_buchsbaum_powers(pentagon, 8))
        std::cout << "pentagon l=" << row.power << " bound " << row.bound << ' ' << to_string(row.verdict) << '\n';
}
