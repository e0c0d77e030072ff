#pragma once

#include "ainfcat/ainfty.hpp"

namespace ainfcat {

/// Double (f,g)-coderivation of a fixed degree between parallel functors
/// f, g : A -> B, stored by its components r_{n,m} : T^n sA (x) T^m sA -> sB
/// for n+m <= truncation. The full map is recovered on demand through the
/// matrix-coefficient expansion
///   r_{n,m;k} = sum f_{i_1} (x) ... (x) f_{i_p} (x) r_{i,j} (x) g_{j_1} (x) ... (x) g_{j_q}.
struct DoubleCoderivation {
    AInfFunctor f, g;
    Deg degree = 0;
    int truncation = 0;
    std::map<std::pair<int, int>, std::map<std::pair<TensorWord, TensorWord>, HomElem>> comp;

    HomElem component(const TensorWord& w1, const TensorWord& w2) const;
    void set(const TensorWord& w1, const TensorWord& w2, HomElem v);
};

/// A double coderivation given by an arbitrary full-map evaluator (all
/// output lengths), e.g. the alternating counit nu or the unit insertion xi.
struct ExplicitDCoder {
    AInfFunctor f, g;
    Deg degree = 0;
    int truncation = 0;
    std::function<WordSum(const TensorWord&, const TensorWord&)> eval;
};

/// Matrix coefficient of the component-expanded map into T^k sB.
WordSum dcoder_block(const DoubleCoderivation& r, const TensorWord& w1, const TensorWord& w2, int k);
/// All output lengths 0..maxk.
WordSum dcoder_full(const DoubleCoderivation& r, const TensorWord& w1, const TensorWord& w2, int maxk);
ExplicitDCoder as_explicit(const DoubleCoderivation& r);

/// Residuals of the coderivation law
///   r Delta_0 = (Delta_0 (x) 1)(f (x) r) + (1 (x) Delta_0)(r (x) g)
/// on all basis pairs with n+m <= truncation.
CheckReport check_double_coderivation(const ExplicitDCoder& r);
CheckReport check_double_coderivation(const DoubleCoderivation& r);

/// Extract components r_{n,m} = (restriction) pr_1 of an explicit map.
DoubleCoderivation components_of(const ExplicitDCoder& r);

bool dcoder_equal(const DoubleCoderivation& a, const DoubleCoderivation& b);

/// The differential r B_1 = r b - (-1)^{deg r} (1 (x) b + b (x) 1) r, one
/// component at a time; the result carries components for
/// n+m <= min(truncation, N-1) since the first sum reaches b_{n+m+1}.
DoubleCoderivation B1(const DoubleCoderivation& r, const AInfCategory& A, const AInfCategory& B);

/// Push along h : B -> C, giving a double (fh, gh)-coderivation.
DoubleCoderivation post_compose(const DoubleCoderivation& r, const AInfFunctor& h, const AInfCategory& C);
/// Pull along k : D -> A, giving a double (kf, kg)-coderivation.
DoubleCoderivation pre_compose(const AInfFunctor& k, const DoubleCoderivation& r, const AInfCategory& D);

/// nu = (1 (x) eps) - (eps (x) 1), a double (1,1)-coderivation of degree 0.
/// Components: nu_{1,0} = id and nu_{0,1} = -id. (The -1 is forced by
/// nu B_1 = 0 and by xi B_1 = nu together with the strict unit equations.)
ExplicitDCoder nu_explicit(const AInfCategory& C);
DoubleCoderivation nu_dcoder(const AInfCategory& C);

/// xi = (1 (x) i0 (x) 1) mu^(3) for a strictly unital C: insert the strict
/// unit between the two words and concatenate; degree -1, the only
/// component is xi_{0,0} = i0.
ExplicitDCoder xi_explicit(const AInfCategory& C, const Units& units);
DoubleCoderivation xi_dcoder(const AInfCategory& C, const Units& units);

/// nu_n = sum_i (-1)^{n-i} (1^i (x) eps (x) 1^{n-i}) on (n+1)-slot tuples.
TupleSum nu_n_apply(int n, const WordTuple& t);
/// xi_n: interleave n strict units between the n+1 slots and concatenate.
WordSum xi_n_apply(const AInfCategory& C, const Units& units, int n, const WordTuple& t);

/// The recursions xi_n = (xi_{n-1} (x) 1) xi and
/// nu_n = (1^n (x) eps) - (nu_{n-1} (x) 1), plus xi_n eps = 0 for n >= 1.
CheckReport verify_xi_nu_recursions(const AInfCategory& C, const Units& units, int nmax);

/// The two xi_n identity families: the Delta_0 compatibility and
/// xi_n b - (-1)^n sum (1 (x) b (x) 1) xi_n = nu_n xi_{n-1}.
CheckReport verify_xin_identities(const AInfCategory& C, const Units& units, int nmax);

}  // namespace ainfcat
