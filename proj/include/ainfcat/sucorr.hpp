#pragma once

#include "ainfcat/dcoder.hpp"

namespace ainfcat {

/// Element of the cocategory E = (+)_{n>=0} (TsA)^{(x)n+1}[n]: a level n and
/// an (n+1)-slot tuple; its degree is deg(tuple) - n.
struct EElem {
    int level = 0;
    WordTuple t;
    auto operator<=>(const EElem&) const = default;
};
using ESum = FormalSum<EElem>;

/// zeta_n = s^{-n} e^{(x)n+1} xi_n : embed the tuple into A^su and interleave
/// the strict units; a degree-0 isomorphism onto the words with n i0su
/// factors.
WordSum zeta_apply(const Envelope& env, int n, const WordTuple& t);

/// Unique decomposition of an A^su basis word by its i0su positions:
/// word = sign * zeta_level(tuple).
struct ZetaDecomp {
    int level = 0;
    WordTuple t;
    int sign = 1;
};
ZetaDecomp zeta_decompose(const Envelope& env, const TensorWord& w);

/// Dimension equality per (word length, degree) between E and TsA^su on all
/// lengths <= maxlen.
bool zeta_bijective(const Envelope& env, const AInfCategory& A, int maxlen);

/// The only nonzero differential coefficients of E:
///   btilde_{n,n}   = (-1)^n sum_i (1^i (x) b (x) 1^{n-i})
///   btilde_{n,n-1} = nu_n
/// (the shift conjugations are sign-free on basis elements).
ESum btilde(const AInfCategory& A, const EElem& e);

/// The comultiplication coefficients: split one slot and shift both halves;
/// the two shift operators carry Koszul signs.
FormalSum<std::pair<EElem, EElem>> delta_tilde(const EElem& e);

/// b-tilde squares to zero, zeta intertwines the differentials and the
/// comultiplications, on levels <= maxlevel and tuple lengths that keep all
/// words inside the truncation.
CheckReport verify_E(const Envelope& env, const AInfCategory& A, int maxlevel);

/// Collection (phi_0, phi_n) corresponding to an A-infinity functor
/// A^su -> B: phi_0 an A-infinity functor A -> B and maps
/// phi_n : (TsA)^{(x)n+1} -> TsB of degree -n, stored on basis tuples with
/// n + total length <= truncation.
struct PhiFamily {
    AInfFunctor phi0;
    std::vector<std::map<WordTuple, WordSum>> higher;  // index n-1 holds phi_n
    int truncation = 0;

    const WordSum& phi_n(int n, const WordTuple& t) const;
    WordSum phi_full(int n, const WordTuple& t) const;  // phi_0 spreads over 1-slot tuples
};

PhiFamily functor_to_family(const Envelope& env, const AInfFunctor& U, const AInfCategory& A, const AInfCategory& B);

/// Residuals of the three compatibility systems (comultiplication,
/// differential, counit) plus the functor equations of phi_0.
CheckReport check_family(const PhiFamily& F, const AInfCategory& A, const AInfCategory& B);

struct IncompatibleFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inverse of functor_to_family; throws IncompatibleFamily naming the first
/// violated equation when check_family fails.
AInfFunctor family_to_functor(const Envelope& env, const PhiFamily& F, const AInfCategory& A, const AInfCategory& B);

/// The n = 1 slice of a family as a double (phi_0, phi_0)-coderivation of
/// degree -1; satisfies the law and slice B1 = nu post-composed with phi_0.
ExplicitDCoder family_n1_slice(const PhiFamily& F, const AInfCategory& A, const AInfCategory& B);

}  // namespace ainfcat
