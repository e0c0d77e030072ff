#include "ainfcat/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainfcat {

int GradedSpace::total_dim() const {
    int n = 0;
    for (const auto& [d, v] : basis_) n += static_cast<int>(v.size());
    return n;
}

BasisRef GradedSpace::add_basis(Deg d, std::string label) {
    auto& v = basis_[d];
    v.push_back(std::move(label));
    return BasisRef{d, static_cast<int>(v.size()) - 1};
}

std::vector<Deg> GradedSpace::degrees() const {
    std::vector<Deg> out;
    for (const auto& [d, v] : basis_)
        if (!v.empty()) out.push_back(d);
    return out;
}

bool GradedSpace::same_dims(const GradedSpace& o) const {
    for (Deg d : degrees())
        if (dim(d) != o.dim(d)) return false;
    for (Deg d : o.degrees())
        if (dim(d) != o.dim(d)) return false;
    return true;
}

void GradedElem::add(BasisRef r, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), r,
                               [](const auto& t, const BasisRef& k) { return t.first < k; });
    if (it != terms_.end() && it->first == r) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {r, c});
    }
}

void GradedElem::add(const GradedElem& o) {
    for (const auto& [r, c] : o.terms_) add(r, c);
}

void GradedElem::scale(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& t : terms_) t.second *= c;
}

GradedElem GradedElem::operator-() const {
    GradedElem r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

GradedElem GradedElem::operator+(const GradedElem& o) const {
    GradedElem r = *this;
    r.add(o);
    return r;
}

GradedElem GradedElem::operator-(const GradedElem& o) const {
    GradedElem r = *this;
    r.add(-o);
    return r;
}

Deg GradedElem::degree() const {
    if (terms_.empty()) throw std::logic_error("GradedElem::degree: zero element");
    Deg d = terms_.front().first.deg;
    for (const auto& t : terms_)
        if (t.first.deg != d) throw std::logic_error("GradedElem::degree: inhomogeneous element");
    return d;
}

std::string GradedElem::to_string(const GradedSpace& space) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [r, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*" + space.label(r);
    }
    return s;
}

GradedMap::GradedMap(GradedSpace src, GradedSpace tgt, Deg degree, Field f)
    : src_(std::move(src)), tgt_(std::move(tgt)), degree_(degree), field_(f) {}

GradedMap GradedMap::identity(const GradedSpace& s, const Field& f) {
    GradedMap m(s, s, 0, f);
    for (Deg d : s.degrees()) m.block(d) = Matrix::identity(static_cast<std::size_t>(s.dim(d)), f);
    return m;
}

Matrix& GradedMap::block(Deg k) {
    auto it = blocks_.find(k);
    if (it == blocks_.end())
        it = blocks_.emplace(k, Matrix(static_cast<std::size_t>(src_.dim(k)),
                                       static_cast<std::size_t>(tgt_.dim(k + degree_)), field_))
                 .first;
    return it->second;
}

Matrix GradedMap::block(Deg k) const {
    auto it = blocks_.find(k);
    if (it != blocks_.end()) return it->second;
    return Matrix(static_cast<std::size_t>(src_.dim(k)), static_cast<std::size_t>(tgt_.dim(k + degree_)), field_);
}

void GradedMap::set(BasisRef from, BasisRef to, const Scalar& c) {
    if (to.deg != from.deg + degree_) throw std::logic_error("GradedMap::set: degree mismatch");
    block(from.deg).at(static_cast<std::size_t>(from.idx), static_cast<std::size_t>(to.idx)) = c;
}

GradedMap GradedMap::compose(const GradedMap& then) const {
    GradedMap r(src_, then.tgt_, degree_ + then.degree_, field_);
    for (Deg k : src_.degrees()) {
        if (tgt_.dim(k + degree_) == 0 || then.tgt_.dim(k + r.degree_) == 0) continue;
        r.block(k) = block(k).mul(then.block(k + degree_));
    }
    return r;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    GradedMap r = *this;
    for (Deg k : src_.degrees()) {
        if (tgt_.dim(k + degree_) == 0) continue;
        r.block(k) = block(k) + o.block(k);
    }
    return r;
}

GradedMap GradedMap::operator-(const GradedMap& o) const { return *this + o.scaled(Scalar(field_, -1)); }

GradedMap GradedMap::scaled(const Scalar& c) const {
    GradedMap r = *this;
    for (auto& [k, b] : r.blocks_) b = b.scaled(c);
    return r;
}

GradedElem GradedMap::apply(const GradedElem& x) const {
    GradedElem out;
    for (const auto& [ref, c] : x.terms()) {
        Matrix b = block(ref.deg);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const Scalar& v = b.at(static_cast<std::size_t>(ref.idx), j);
            if (!v.is_zero()) out.add(BasisRef{ref.deg + degree_, static_cast<int>(j)}, c * v);
        }
    }
    return out;
}

bool GradedMap::is_zero() const {
    for (const auto& [k, b] : blocks_)
        if (!b.is_zero()) return false;
    return true;
}

bool GradedMap::operator==(const GradedMap& o) const {
    if (degree_ != o.degree_) return false;
    for (Deg k : src_.degrees())
        if (!(block(k) == o.block(k))) return false;
    return true;
}

void Complex::validate() const {
    if (d.degree() != 1) throw std::logic_error("Complex: differential degree must be 1");
    if (!d.src().same_dims(space) || !d.tgt().same_dims(space))
        throw std::logic_error("Complex: differential does not match the space");
    if (!d.compose(d).is_zero()) throw std::logic_error("Complex: d^2 != 0");
}

Cohomology cohomology(const Complex& C) {
    C.validate();
    const Field& f = C.d.field();
    Cohomology out;
    for (Deg k : C.space.degrees()) {
        int n = C.space.dim(k);
        // cycles: left kernel of the block at k
        auto zbasis = kernel_basis(C.d.block(k).transposed());
        // boundaries: rows of the block at k-1
        Matrix dprev = C.d.block(k - 1);
        std::size_t nprev = dprev.rows();
        Matrix acc(nprev + zbasis.size(), static_cast<std::size_t>(n), f);
        for (std::size_t i = 0; i < nprev; ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) acc.at(i, j) = dprev.at(i, j);
        std::size_t cur_rank = rank(acc);
        std::size_t used = nprev;
        std::vector<GradedElem> reps;
        for (const auto& z : zbasis) {
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) acc.at(used, j) = z[j];
            std::size_t r = rank(acc);
            if (r > cur_rank) {
                cur_rank = r;
                ++used;
                GradedElem e;
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
                    e.add(BasisRef{k, static_cast<int>(j)}, z[j]);
                reps.push_back(std::move(e));
            } else {
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) acc.at(used, j) = Scalar::zero(f);
            }
        }
        if (!reps.empty()) {
            out.dims[k] = static_cast<int>(reps.size());
            out.representatives[k] = std::move(reps);
        }
    }
    return out;
}

bool is_chain_map(const GradedMap& f, const Complex& A, const Complex& B) {
    if (f.degree() != 0) return false;
    return f.compose(B.d) == A.d.compose(f);
}

namespace {

// coordinates of a cycle in the chosen cohomology basis of degree k
std::optional<std::vector<Scalar>> coh_coords(const Complex& C, const Cohomology& H, Deg k, const GradedElem& cycle) {
    const Field& f = C.d.field();
    int n = C.space.dim(k);
    Matrix dprev = C.d.block(k - 1);
    const auto repsIt = H.representatives.find(k);
    std::size_t nreps = repsIt == H.representatives.end() ? 0 : repsIt->second.size();
    Matrix M(dprev.rows() + nreps, static_cast<std::size_t>(n), f);
    for (std::size_t i = 0; i < dprev.rows(); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) M.at(i, j) = dprev.at(i, j);
    for (std::size_t i = 0; i < nreps; ++i)
        for (const auto& [r, c] : repsIt->second[i].terms())
            M.at(dprev.rows() + i, static_cast<std::size_t>(r.idx)) = c;
    std::vector<Scalar> rhs(static_cast<std::size_t>(n), Scalar::zero(f));
    for (const auto& [r, c] : cycle.terms()) {
        if (r.deg != k) return std::nullopt;
        rhs[static_cast<std::size_t>(r.idx)] = c;
    }
    auto sol = solve_linear(M.transposed(), rhs);
    if (!sol) return std::nullopt;
    return std::vector<Scalar>(sol->begin() + static_cast<long>(dprev.rows()), sol->end());
}

}  // namespace

bool is_quasi_iso(const GradedMap& f, const Complex& A, const Complex& B) {
    if (!is_chain_map(f, A, B)) throw std::logic_error("is_quasi_iso: not a chain map");
    Cohomology HA = cohomology(A), HB = cohomology(B);
    std::vector<Deg> degs;
    for (const auto& [k, v] : HA.dims) degs.push_back(k);
    for (const auto& [k, v] : HB.dims)
        if (HA.dims.find(k) == HA.dims.end()) degs.push_back(k);
    for (Deg k : degs) {
        int na = HA.dim(k), nb = HB.dim(k);
        if (na != nb) return false;
        if (na == 0) continue;
        Matrix induced(static_cast<std::size_t>(na), static_cast<std::size_t>(nb), f.field());
        for (int i = 0; i < na; ++i) {
            GradedElem img = f.apply(HA.representatives.at(k)[static_cast<std::size_t>(i)]);
            if (img.is_zero()) continue;
            auto coords = coh_coords(B, HB, k, img);
            if (!coords) return false;
            for (int j = 0; j < nb; ++j)
                induced.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = (*coords)[static_cast<std::size_t>(j)];
        }
        if (rank(induced) != static_cast<std::size_t>(na)) return false;
    }
    return true;
}

namespace {

struct MapsIndexer {
    std::map<std::tuple<Deg, Deg, int, int>, int> pos;  // (map deg g, src deg a, i, j) -> index in degree g
};

}  // namespace

GradedElem MapsComplex::flatten(const GradedMap& f) const {
    GradedElem out;
    Deg g = f.degree();
    auto it = index.find(g);
    if (it == index.end()) {
        if (!f.is_zero()) throw std::logic_error("MapsComplex::flatten: map outside the complex");
        return out;
    }
    const auto& basis = it->second;
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        auto [a, i, j] = basis[bi];
        const Scalar c = f.block(a).at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (!c.is_zero()) out.add(BasisRef{g, static_cast<int>(bi)}, c);
    }
    return out;
}

GradedMap MapsComplex::unflatten(Deg g, const GradedElem& v, const Field& field) const {
    GradedMap f(*src, *tgt, g, field);
    auto it = index.find(g);
    if (it == index.end()) {
        if (!v.is_zero()) throw std::logic_error("MapsComplex::unflatten: element outside the complex");
        return f;
    }
    for (const auto& [r, c] : v.terms()) {
        if (r.deg != g) throw std::logic_error("MapsComplex::unflatten: inhomogeneous element");
        auto [a, i, j] = it->second.at(static_cast<std::size_t>(r.idx));
        f.block(a).at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
    }
    return f;
}

MapsComplex maps_complex(const GradedSpace& N, const GradedMap& dN, const GradedSpace& M, const GradedMap& dM,
                         const Field& field) {
    MapsComplex out;
    out.src = &N;
    out.tgt = &M;
    for (Deg a : N.degrees())
        for (Deg b : M.degrees()) {
            Deg g = b - a;
            for (int i = 0; i < N.dim(a); ++i)
                for (int j = 0; j < M.dim(b); ++j) out.index[g].emplace_back(a, i, j);
        }
    MapsIndexer ix;
    for (auto& [g, v] : out.index) {
        std::sort(v.begin(), v.end());
        for (std::size_t bi = 0; bi < v.size(); ++bi) {
            auto [a, i, j] = v[bi];
            ix.pos[{g, a, i, j}] = static_cast<int>(bi);
            out.cplx.space.add_basis(g, N.label({a, i}) + "=>" + M.label({a + g, j}));
        }
    }
    GradedMap d(out.cplx.space, out.cplx.space, 1, field);
    for (const auto& [g, basis] : out.index) {
        Scalar sgn(field, (g % 2 == 0) ? -1 : 1);  // -(-1)^g
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            auto [a, i, j] = basis[bi];
            // term x.compose(dM): lands at (a, i, j')
            Matrix mb = dM.block(a + g);
            for (std::size_t j2 = 0; j2 < mb.cols(); ++j2) {
                const Scalar& c = mb.at(static_cast<std::size_t>(j), j2);
                if (c.is_zero()) continue;
                int p = ix.pos.at({g + 1, a, i, static_cast<int>(j2)});
                d.block(g).at(bi, static_cast<std::size_t>(p)) += c;
            }
            // term -(-1)^g dN.compose(x): lands at (a-1, i', j)
            Matrix nb = dN.block(a - 1);
            for (std::size_t i2 = 0; i2 < nb.rows(); ++i2) {
                const Scalar& c = nb.at(i2, static_cast<std::size_t>(i));
                if (c.is_zero()) continue;
                int p = ix.pos.at({g + 1, a - 1, static_cast<int>(i2), j});
                d.block(g).at(bi, static_cast<std::size_t>(p)) += sgn * c;
            }
        }
    }
    out.cplx.d = d;
    return out;
}

ConeSolution solve_cone(const ConeProblem& P) {
    const Field& f = P.A->d.field();
    // cycle check: -lambda d_A = 0 and nu d_B + lambda u = 0
    GradedElem c1 = P.A->d.apply(P.lambda);
    GradedElem c2 = P.B->d.apply(P.nu) + P.u->apply(P.lambda);
    if (!c1.is_zero() || !c2.is_zero()) return {ConeStatus::not_cycle, {}, {}};

    // unknowns: x over A-basis at degree g+1, then y over B-basis at degree g
    int na = P.A->space.dim(P.g + 1), nb = P.B->space.dim(P.g);
    int ma = P.A->space.dim(P.g + 2), mb = P.B->space.dim(P.g + 1);
    std::size_t cols = static_cast<std::size_t>(na + nb);
    std::size_t rows = static_cast<std::size_t>(ma + mb);
    // equations: -x dA = lambda (first ma), y dB + x u = nu (last mb); build as M^T x = rhs
    Matrix MT(rows, cols, f);
    Matrix dA = P.A->d.block(P.g + 1);
    Matrix dB = P.B->d.block(P.g);
    Matrix U = P.u->block(P.g + 1);
    for (int i = 0; i < na; ++i) {
        for (int e = 0; e < ma; ++e)
            MT.at(static_cast<std::size_t>(e), static_cast<std::size_t>(i)) =
                -dA.at(static_cast<std::size_t>(i), static_cast<std::size_t>(e));
        for (int e = 0; e < mb; ++e)
            MT.at(static_cast<std::size_t>(ma + e), static_cast<std::size_t>(i)) =
                U.at(static_cast<std::size_t>(i), static_cast<std::size_t>(e));
    }
    for (int i = 0; i < nb; ++i)
        for (int e = 0; e < mb; ++e)
            MT.at(static_cast<std::size_t>(ma + e), static_cast<std::size_t>(na + i)) =
                dB.at(static_cast<std::size_t>(i), static_cast<std::size_t>(e));
    std::vector<Scalar> rhs(rows, Scalar::zero(f));
    for (const auto& [r, c] : P.lambda.terms()) {
        if (r.deg != P.g + 2) return {ConeStatus::not_cycle, {}, {}};
        rhs[static_cast<std::size_t>(r.idx)] = c;
    }
    for (const auto& [r, c] : P.nu.terms()) {
        if (r.deg != P.g + 1) return {ConeStatus::not_cycle, {}, {}};
        rhs[static_cast<std::size_t>(ma + r.idx)] = c;
    }
    auto sol = solve_linear(MT, rhs);
    if (!sol) return {ConeStatus::unsolvable, {}, {}};
    ConeSolution out;
    out.status = ConeStatus::ok;
    for (int i = 0; i < na; ++i) out.x.add(BasisRef{P.g + 1, i}, (*sol)[static_cast<std::size_t>(i)]);
    for (int i = 0; i < nb; ++i) out.y.add(BasisRef{P.g, i}, (*sol)[static_cast<std::size_t>(na + i)]);
    return out;
}

}  // namespace ainfcat
