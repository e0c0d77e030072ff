#pragma once

#include <random>

#include "ainfcat/dcoder.hpp"

namespace ainfcat {

/// Deterministic seeded randomness for fixtures; identical seeds give
/// identical structures on every platform that ships mt19937_64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int num, int den) { return range(1, den) <= num; }

private:
    std::mt19937_64 eng_;
};

/// One-object exterior algebra on two odd generators with dy = xy; a small
/// DG category with nonzero differential, products, and cohomology.
DGCategoryInput exterior_dg_input(const Field& f);

/// Seeded random DG category: 2-3 objects, identity diagonals, strictly
/// upper-triangular hom spaces with dims <= 3 per degree in the declared
/// window, a square-zero differential, and compositions sampled from the
/// exact space of chain maps (so Leibniz holds by construction).
DGCategoryInput random_dg_input(std::uint64_t seed, const Field& f);

/// Transport twist of a random DG category plus everything needed to use it
/// as a fixture: the base D, the twisted category, its units, the functor
/// phi : twisted -> D with invertible phi_1, and v with i0 phi_1 = i0^D + v b_1.
struct TwistFixture {
    AInfCategory D;
    Units unitsD;
    AInfCategory cat;
    Units units;
    AInfFunctor phi;
    Units v;
};

/// Deterministic in seed; the result is unital but not strictly unital.
TwistFixture random_twist(std::uint64_t seed, int truncation, const Field& f);

/// Random double (1,1)-coderivation over A with sparse components of the
/// given degree, components n+m <= truncation.
DoubleCoderivation random_dcoder(const AInfCategory& A, Deg degree, int truncation, Rng& rng);

}  // namespace ainfcat
