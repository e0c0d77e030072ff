#pragma once

#include "ainfcat/coalgebra.hpp"

namespace ainfcat {

/// A-infinity category with arity-truncated structure maps, stored on the
/// suspended quiver: components b_n of degree +1 for 1 <= n <= truncation.
struct AInfCategory {
    Field field;
    QuiverPtr quiver;
    ComponentFamily b;
    int truncation = 0;

    const GradedSpace& hom(int x, int y) const { return quiver->hom(x, y); }
};

/// A-infinity functor with components f_n of degree 0 for 1 <= n <= truncation.
struct AInfFunctor {
    QuiverPtr src, tgt;
    std::vector<int> obj;
    ComponentFamily f;
    int truncation = 0;

    int ob(int x) const { return obj.at(static_cast<std::size_t>(x)); }
};

struct CheckFailure {
    std::string check;   // equation id, e.g. "ainfty m=3"
    std::string where;   // word / object-path witness
    std::string detail;  // residual
};

struct CheckReport {
    bool pass = true;
    std::vector<CheckFailure> failures;
    int truncation = 0;

    void fail(std::string check, std::string where, std::string detail) {
        pass = false;
        failures.push_back({std::move(check), std::move(where), std::move(detail)});
    }
    void merge(const CheckReport& o) {
        if (!o.pass) pass = false;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

using Units = std::map<int, HomElem>;  // degree -1 element of sA(X,X) per object

/// Left-hand side of the A-infinity equation at w:
/// sum over p+k+q = len(w) of (1^p (x) b_k (x) 1^q) b_{p+1+q}.
HomElem ainf_residual(const AInfCategory& A, const TensorWord& w);
CheckReport check_ainfty(const AInfCategory& A);

/// Residual of the functor system at w: sum (f (x) ... (x) f) b  minus
/// sum (1 (x) b (x) 1) f.
HomElem functor_residual(const AInfFunctor& f, const AInfCategory& A, const AInfCategory& B, const TensorWord& w);
CheckReport check_functor(const AInfFunctor& f, const AInfCategory& A, const AInfCategory& B);

AInfFunctor identity_functor(const AInfCategory& A);
AInfFunctor compose_functors(const AInfFunctor& f, const AInfFunctor& g);
inline AInfFunctor compose_functors(const AInfFunctor& f, const AInfFunctor& g, const AInfCategory&,
                                    const AInfCategory&) {
    return compose_functors(f, g);
}
bool functor_equal(const AInfFunctor& f, const AInfFunctor& g, const AInfCategory& A);

/// b_1 restricted to one hom pair, as a graded map.
GradedMap b1_map(const AInfCategory& A, int x, int y);
Complex hom_complex(const AInfCategory& A, int x, int y);
/// Apply an arity-1 component table linearly to an element of sA(x,y).
HomElem apply1(const ComponentFamily& F, int x, int y, const HomElem& e);
/// The map z |-> Koszul-signed (z (x) u) b_2 on sA(x,y), u a degree -1
/// element of sA(y,y); this is the composite (1 (x) u) b_2.
GradedMap right_unit_action(const AInfCategory& A, int x, int y, const HomElem& u);
/// The map z |-> -(u (x) z) b_2 on sA(x,y), i.e. -(u (x) 1) b_2.
GradedMap left_unit_action_neg(const AInfCategory& A, int x, int y, const HomElem& u);

/// Unit cycles with right and left unit homotopies, in the orientation
///   R - 1 = h b_1 + b_1 h,   L - 1 = h' b_1 + b_1 h'
/// where R = (1 (x) i0) b_2 and L = -(i0 (x) 1) b_2.
struct UnitData {
    Units i0;
    std::map<std::pair<int, int>, GradedMap> h;   // right unit homotopies
    std::map<std::pair<int, int>, GradedMap> hp;  // left unit homotopies
};
CheckReport check_unit_data(const AInfCategory& A, const UnitData& ud);

/// Solve the two homotopy equations for every hom pair; absent when some
/// system is inconsistent (the candidate is not a unit). Throws if some
/// i0 is not a cycle.
std::optional<UnitData> solve_unit_homotopies(const AInfCategory& A, const Units& i0);

bool is_strictly_unital(const AInfCategory& A, const Units& i0, CheckReport* report = nullptr);

/// Unital functor test: solves i0^A f_1 - i0^B = v b_1 per object and
/// returns the witnesses v_X, or absent if some class comparison fails.
std::optional<Units> is_unital_functor(const AInfFunctor& f, const AInfCategory& A, const AInfCategory& B,
                                       const Units& unitsA, const Units& unitsB);

/// Strictly unital envelope A^su: one new degree -1 generator per object,
/// governed by the strict-unit equations, plus the strict inclusion e.
struct Envelope {
    AInfCategory cat;
    AInfFunctor e;
    Units i0;                       // the strict units i0^su
    std::map<int, BasisRef> i0ref;  // their basis slots in cat.quiver
};
Envelope envelope_su(const AInfCategory& A);

/// Strict projection A^su -> A for a strictly unital A: identity on sA,
/// i0^su |-> i0. Throws if A is not strictly unital with the given units.
AInfFunctor su_projection(const Envelope& env, const AInfCategory& A, const Units& units);

/// Transport of structure along an invertible component family g with
/// invertible g_1: returns A' with b' solved so that g : A' -> A is an
/// A-infinity functor.
struct Transport {
    AInfCategory cat;
    AInfFunctor g;
};
Transport transport_structure(const AInfCategory& A, const ComponentFamily& g);

/// Inverse component family: gbar with gbar . g = id and g . gbar = id up
/// to the truncation. Throws on non-invertible g_1.
ComponentFamily invert_family(const AInfCategory& A, const ComponentFamily& g);

/// Build a morphism family over a quiver by evaluating fn on every basis
/// word of length 1..N.
ComponentFamily materialize_morphism(const GradedQuiver& srcQ, int N,
                                     const std::function<HomElem(const TensorWord&)>& fn);

/// Unit candidates per object from a bounded cohomology-representative
/// search in degree -1: each representative cycle and each two-term sum.
std::vector<Units> find_unit_candidates(const AInfCategory& A, std::size_t max_combos = 256);

/// Differential graded category in unsuspended degrees, as supplied by the
/// user: hom spaces, differential, bilinear composition on basis pairs, and
/// two-sided units.
struct DGCategoryInput {
    Field field;
    std::vector<std::string> objects;
    std::map<std::pair<int, int>, GradedSpace> hom;
    std::map<std::pair<int, int>, GradedMap> d;
    std::map<std::tuple<int, int, int>, std::map<std::pair<BasisRef, BasisRef>, HomElem>> mult;
    std::map<int, HomElem> unit;

    HomElem compose(int x, int y, int z, const HomElem& a, const HomElem& b) const;
};

struct DGImportError : std::runtime_error {
    explicit DGImportError(const std::string& axiom, const std::string& detail)
        : std::runtime_error("dg_import: " + axiom + " fails: " + detail), axiom(axiom) {}
    std::string axiom;
};

struct DGImport {
    AInfCategory cat;  // on the suspended quiver, b_1 and b_2 only
    Units units;       // strict units s(1_X)
};

/// Checks d^2 = 0, the Leibniz rule (ab)d = (ad)b + (-1)^{|a|} a(bd),
/// associativity, and the two-sided unit laws, then suspends:
///   b_1(sa) = s(a d),   b_2(sa (x) sb) = (-1)^{deg sa} s(a b),   i0 = s 1.
DGImport dg_import(const DGCategoryInput& in, int truncation);

}  // namespace ainfcat
