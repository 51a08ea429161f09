#ifndef MATCHTOP_HOMOLOGY_HPP
#define MATCHTOP_HOMOLOGY_HPP

#include <vector>

#include <json.hpp>

#include "matchtop/complex.hpp"

namespace matchtop {

// The boundary map C_k -> C_{k-1} with alternating-sign incidence entries.
// k = 0 is the augmentation map onto the empty face (one all-ones row).
struct BoundaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;  // row-major, values in {-1, 0, +1}

    int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k);

// Rank over the rationals by fraction-free integer elimination (128-bit
// intermediates; throws CapabilityError if an intermediate overflows).
long long rank_rational(const BoundaryMatrix& m);

long long rank_gf2(const BoundaryMatrix& m);

// Reduced Betti numbers over Q, indices 0..dim. Empty for the complex {∅}.
std::vector<long long> reduced_betti_numbers(const SimplicialComplex& c);

// Same recipe with GF(2) ranks; agrees with the rational answer whenever the
// homology is 2-torsion free (always, for complexes of dimension <= 1).
std::vector<long long> reduced_betti_numbers_gf2(const SimplicialComplex& c);

long long euler_characteristic(const SimplicialComplex& c);

// True iff every face sigma (the empty face included) has
// beta~_i(link sigma) = 0 for all i < dim(c) - |sigma|.
bool is_cm_homological(const SimplicialComplex& c);

// True iff c is pure and the vanishing condition holds for every nonempty face.
bool is_buchsbaum_homological(const SimplicialComplex& c);

// {betti: [...], euler: int}
nlohmann::ordered_json homology_json(const SimplicialComplex& c);

}  // namespace matchtop

#endif  // MATCHTOP_HOMOLOGY_HPP
