#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfcat/matrix.hpp"

namespace ainfcat {

using Deg = int;

/// Reference to one basis element of a graded space: (degree, index within degree).
struct BasisRef {
    Deg deg = 0;
    int idx = 0;
    auto operator<=>(const BasisRef&) const = default;
};

/// Finite-dimensional Z-graded vector space with labeled basis per degree.
class GradedSpace {
public:
    int dim(Deg d) const {
        auto it = basis_.find(d);
        return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
    }
    int total_dim() const;
    bool empty() const { return total_dim() == 0; }
    BasisRef add_basis(Deg d, std::string label);
    const std::string& label(BasisRef r) const { return basis_.at(r.deg).at(static_cast<std::size_t>(r.idx)); }
    std::vector<Deg> degrees() const;  // degrees with nonzero dimension, ascending
    bool same_dims(const GradedSpace& o) const;

private:
    std::map<Deg, std::vector<std::string>> basis_;
};

/// Sparse exact element of a graded space: sorted (BasisRef, coefficient) pairs.
class GradedElem {
public:
    GradedElem() = default;
    void add(BasisRef r, const Scalar& c);
    void add(const GradedElem& o);
    void scale(const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<BasisRef, Scalar>>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    GradedElem operator-() const;
    GradedElem operator+(const GradedElem& o) const;
    GradedElem operator-(const GradedElem& o) const;
    bool operator==(const GradedElem& o) const { return terms_ == o.terms_; }
    /// Degree when homogeneous; throws on mixed or zero elements.
    Deg degree() const;
    std::string to_string(const GradedSpace& space) const;

private:
    std::vector<std::pair<BasisRef, Scalar>> terms_;
};

/// Exact linear map of fixed degree between graded spaces. The block at
/// source degree k is a dim(src,k) x dim(tgt,k+d) matrix; basis element i
/// maps to row i, and composition "first f then g" is f.compose(g).
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(GradedSpace src, GradedSpace tgt, Deg degree, Field f);
    static GradedMap identity(const GradedSpace& s, const Field& f);

    const GradedSpace& src() const { return src_; }
    const GradedSpace& tgt() const { return tgt_; }
    Deg degree() const { return degree_; }
    const Field& field() const { return field_; }

    Matrix& block(Deg k);              // materializes a zero block on demand
    Matrix block(Deg k) const;
    void set(BasisRef from, BasisRef to, const Scalar& c);

    GradedMap compose(const GradedMap& then) const;
    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap scaled(const Scalar& c) const;
    GradedElem apply(const GradedElem& x) const;
    bool is_zero() const;
    bool operator==(const GradedMap& o) const;

private:
    GradedSpace src_, tgt_;
    Deg degree_ = 0;
    Field field_;
    std::map<Deg, Matrix> blocks_;
};

/// Cochain complex: a graded space with a degree +1 differential d, d^2 = 0.
struct Complex {
    GradedSpace space;
    GradedMap d;
    /// Throws unless d has degree 1, matches the space, and squares to zero.
    void validate() const;
};

struct Cohomology {
    std::map<Deg, int> dims;
    std::map<Deg, std::vector<GradedElem>> representatives;  // chosen cycles
    int dim(Deg k) const {
        auto it = dims.find(k);
        return it == dims.end() ? 0 : it->second;
    }
};

/// Kernel-mod-image per degree with representative cycles; rejects d^2 != 0.
Cohomology cohomology(const Complex& C);

bool is_chain_map(const GradedMap& f, const Complex& A, const Complex& B);

/// True iff the induced map on cohomology is bijective in every degree.
/// Rejects maps that do not commute with the differentials.
bool is_quasi_iso(const GradedMap& f, const Complex& A, const Complex& B);

/// The complex of k-linear maps N -> M, graded by map degree, with
/// differential  x |-> x.compose(d_M) - (-1)^{deg x} d_N.compose(x).
struct MapsComplex {
    Complex cplx;
    const GradedSpace* src;  // N
    const GradedSpace* tgt;  // M
    std::map<Deg, std::vector<std::tuple<Deg, int, int>>> index;  // per map degree: (src deg, src idx, tgt idx)

    GradedElem flatten(const GradedMap& f) const;
    GradedMap unflatten(Deg g, const GradedElem& v, const Field& field) const;
};
MapsComplex maps_complex(const GradedSpace& N, const GradedMap& dN, const GradedSpace& M, const GradedMap& dM,
                         const Field& field);

/// Mapping cone data for a degree-0 chain map u: A -> B, with
/// Cone^g = A^{g+1} (+) B^g and (x,y) d = (-x d_A, y d_B + x u).
struct ConeProblem {
    const Complex* A;
    const Complex* B;
    const GradedMap* u;
    GradedElem lambda;  // homogeneous element of A, degree g+2
    GradedElem nu;      // homogeneous element of B, degree g+1
    Deg g;              // degree of the sought cone element
};

enum class ConeStatus { ok, not_cycle, unsolvable };

struct ConeSolution {
    ConeStatus status;
    GradedElem x;  // in A, degree g+1, with -x d_A = lambda
    GradedElem y;  // in B, degree g,   with  y d_B + x u = nu
};

ConeSolution solve_cone(const ConeProblem& P);

}  // namespace ainfcat
