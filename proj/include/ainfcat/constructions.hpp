#pragma once

#include "ainfcat/sucorr.hpp"

namespace ainfcat {

/// Differential graded model of a unital category C: a DG category D with
/// strict units, an A-infinity functor phi : C -> D that is the identity on
/// objects with phi_1 a quasi-isomorphism, and cycles v with
/// i0^C phi_1 = i0^D + v b_1. The model is required input; building it from
/// C (Yoneda) is out of scope.
struct DGModel {
    AInfCategory D;
    Units unitsD;
    AInfFunctor phi;
    Units v;
};

/// Throws std::invalid_argument naming the first failed condition.
void validate_dg_model(const AInfCategory& C, const Units& unitsC, const DGModel& M);

/// Trivial model of a strictly unital DG category: (C, id, v = 0).
DGModel trivial_model(const AInfCategory& C, const Units& unitsC);

/// Units extracted from a weak unit U : A^su -> A (Prop. on weak units):
/// i0 = i0su U_1 with homotopies read off U_2. Verified exactly before
/// returning; throws on any violated precondition.
UnitData units_from_weak_unit(const Envelope& env, const AInfCategory& A, const AInfFunctor& U);

/// The extension C+ = C (+) kC (+) skC with generators i0su (degree -1) and
/// j (degree -2) per object, its structure b+, and the induced genuine
/// units i0 = i0su - j b+_1.
struct HomotopyUnitalStructure {
    AInfCategory base;
    AInfCategory plus;
    Units i0su;
    std::map<int, BasisRef> i0su_ref, j_ref;
    Units i0;
};

/// A-infinity axioms for C+, the four defining conditions, and membership
/// of i0 in sC.
CheckReport check_fukaya(const HomotopyUnitalStructure& H);

/// The canonical homotopy unital structure of a strictly unital category:
/// j b+_1 = i0su - i0 and b+_n vanishes off sD^{(x)n} for n > 1.
HomotopyUnitalStructure canonical_hu(const AInfCategory& D, const Units& units);

/// Units and homotopies (1 (x) j) b+_2, -(j (x) 1) b+_2 of a homotopy unital
/// structure; both displayed identities are verified exactly.
UnitData units_from_homotopy_unital(const HomotopyUnitalStructure& H);

/// The homotopy-unital construction: builds (C+, b+) and phi+ : C+ -> D+ by
/// the double induction over arity n and the number k of j-arguments,
/// solving a mapping-cone problem for every (n, k, object path).
struct TheoremResult {
    HomotopyUnitalStructure H;
    HomotopyUnitalStructure Dplus;
    AInfFunctor phiplus;  // C+ -> D+
};
TheoremResult homotopy_unital_from_unital(const AInfCategory& C, const UnitData& ud, const DGModel& M);

/// iota_1 : sC -> sC+ is a homotopy equivalence: pi_1 (identity on sC,
/// i0su -> i0, j -> 0) is inverse up to the homotopy h (i0su -> j, else 0);
/// checks id - pi_1 iota_1 = h b+_1 + b+_1 h exactly.
CheckReport verify_iota_equivalence(const HomotopyUnitalStructure& H);

/// Prop. (a) => (b): the n = 1 slice phi_1 = s zeta_1 U of the family of a
/// weak unit, as a double (1,1)-coderivation of degree -1 with B_1 phi = nu;
/// both claims are machine-verified.
DoubleCoderivation h_from_weak_unit(const Envelope& env, const AInfCategory& A, const AInfFunctor& U);

/// Prop. (b) => (a): from h with the coderivation law and B_1 h = nu,
/// build the family phi_0 = id, phi_n = (phi_{n-1} (x) 1) phi and convert it
/// into a weak unit U : A^su -> A with e U = id.
AInfFunctor weak_unit_from_h(const Envelope& env, const AInfCategory& A, const DoubleCoderivation& h);

/// Prop. 5.2: seeds h_{0,0} = i0, k_{0,0} = v, then solves the cone of
/// post-composition with phi_1 for every component pair (n, m) and path.
/// Components are built for n+m <= truncation-1 (the equations reach
/// b_{n+m+1}).
struct SolveHResult {
    DoubleCoderivation h;  // over (id, id), degree -1, h B_1 = nu
    DoubleCoderivation k;  // over (phi, phi), degree -2, k B_1 + iota - h phi = 0
};
SolveHResult solve_h(const AInfCategory& A, const Units& unitsA, const DGModel& M);

/// Theorem: every unital A-infinity category admits a weak unit; the
/// composite of solve_h and weak_unit_from_h.
AInfFunctor weak_unit_from_unital(const Envelope& env, const AInfCategory& A, const Units& unitsA, const DGModel& M);

}  // namespace ainfcat
