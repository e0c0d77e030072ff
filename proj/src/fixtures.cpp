#include "ainfcat/fixtures.hpp"

#include <stdexcept>

namespace ainfcat {

DGCategoryInput exterior_dg_input(const Field& f) {
    DGCategoryInput in;
    in.field = f;
    in.objects = {"X"};
    GradedSpace s;
    BasisRef one = s.add_basis(0, "1");
    BasisRef x = s.add_basis(1, "x");
    BasisRef y = s.add_basis(1, "y");
    BasisRef xy = s.add_basis(2, "xy");
    in.hom[{0, 0}] = s;
    GradedMap d(s, s, 1, f);
    d.set(y, xy, Scalar(f, 1));  // dy = xy, dx = 0, d(xy) = 0
    in.d[{0, 0}] = d;
    auto& m = in.mult[{0, 0, 0}];
    auto put = [&](BasisRef a, BasisRef b, BasisRef r, long c) {
        HomElem v;
        v.add(r, Scalar(f, c));
        m[{a, b}] = v;
    };
    for (BasisRef a : {one, x, y, xy}) {
        put(one, a, a, 1);
        if (!(a == one)) put(a, one, a, 1);
    }
    put(x, y, xy, 1);
    put(y, x, xy, -1);
    HomElem u;
    u.add(one, Scalar(f, 1));
    in.unit[0] = u;
    return in;
}

namespace {

// square-zero degree +1 map: a partial matching deg d -> deg d+1, then a
// random change of basis so the matrix does not look like a matching
GradedMap random_differential(Rng& rng, const GradedSpace& s, const Field& f) {
    GradedMap d(s, s, 1, f);
    std::map<Deg, std::vector<bool>> is_target;
    for (Deg deg : s.degrees()) is_target[deg].assign(static_cast<std::size_t>(s.dim(deg)), false);
    for (Deg deg : s.degrees()) {
        if (s.dim(deg + 1) == 0) continue;
        std::vector<int> free_targets;
        for (int j = 0; j < s.dim(deg + 1); ++j) free_targets.push_back(j);
        for (int i = 0; i < s.dim(deg); ++i) {
            if (is_target[deg][static_cast<std::size_t>(i)]) continue;
            if (free_targets.empty() || !rng.chance(1, 2)) continue;
            std::size_t pick = static_cast<std::size_t>(rng.range(0, static_cast<int>(free_targets.size()) - 1));
            int j = free_targets[pick];
            free_targets.erase(free_targets.begin() + static_cast<long>(pick));
            is_target[deg + 1][static_cast<std::size_t>(j)] = true;
            d.set({deg, i}, {deg + 1, j}, Scalar(f, rng.chance(1, 2) ? 1 : -1));
        }
    }
    // conjugate by a random invertible map P: d' = P^{-1} d P keeps d'^2 = 0
    GradedMap P(s, s, 0, f);
    GradedMap Pinv(s, s, 0, f);
    for (Deg deg : s.degrees()) {
        int n = s.dim(deg);
        Matrix M(static_cast<std::size_t>(n), static_cast<std::size_t>(n), f);
        std::optional<Matrix> Mi;
        for (int attempt = 0; attempt < 8 && !Mi; ++attempt) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                        Scalar(f, i == j ? 1 : (rng.chance(1, 3) ? rng.range(-1, 1) : 0));
            Mi = inverse(M);
        }
        if (!Mi) {
            M = Matrix::identity(static_cast<std::size_t>(n), f);
            Mi = M;
        }
        P.block(deg) = M;
        Pinv.block(deg) = *Mi;
    }
    return Pinv.compose(d).compose(P);
}

// complex structure on the tensor product of two hom complexes; returns the
// position of each basis pair in the product space
std::map<std::pair<BasisRef, BasisRef>, BasisRef> tensor_complex(const GradedSpace& a, const GradedMap& da,
                                                                 const GradedSpace& b, const GradedMap& db,
                                                                 const Field& f, GradedSpace& out_space,
                                                                 GradedMap& out_d) {
    std::map<std::pair<BasisRef, BasisRef>, BasisRef> pos;
    for (Deg p : a.degrees())
        for (int i = 0; i < a.dim(p); ++i)
            for (Deg q : b.degrees())
                for (int j = 0; j < b.dim(q); ++j)
                    pos[{{p, i}, {q, j}}] = out_space.add_basis(p + q, a.label({p, i}) + "(x)" + b.label({q, j}));
    out_d = GradedMap(out_space, out_space, 1, f);
    for (const auto& [pq, ref] : pos) {
        auto [ra, rb] = pq;
        GradedElem ea;
        ea.add(ra, Scalar(f, 1));
        for (const auto& [ta, ca] : da.apply(ea)) out_d.set(ref, pos.at({ta, rb}), ca);
        GradedElem eb;
        eb.add(rb, Scalar(f, 1));
        Scalar sgn(f, ra.deg % 2 != 0 ? -1 : 1);
        for (const auto& [tb, cb] : db.apply(eb)) out_d.set(ref, pos.at({ra, tb}), sgn * cb);
    }
    return pos;
}

}  // namespace

DGCategoryInput random_dg_input(std::uint64_t seed, const Field& f) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    DGCategoryInput in;
    in.field = f;
    int nobj = (rng.range(0, 3) == 0) ? 2 : 3;
    for (int i = 0; i < nobj; ++i) in.objects.push_back(std::string(1, static_cast<char>('X' + i)));
    // identity diagonals
    for (int i = 0; i < nobj; ++i) {
        GradedSpace s;
        BasisRef one = s.add_basis(0, "1");
        in.hom[{i, i}] = s;
        in.d[{i, i}] = GradedMap(s, s, 1, f);
        HomElem u;
        u.add(one, Scalar(f, 1));
        in.unit[i] = u;
        auto& m = in.mult[{i, i, i}];
        HomElem v = u;
        m[{one, one}] = v;
    }
    // strictly upper-triangular hom spaces with random small dims
    auto window = [&](int lo, int hi) {
        GradedSpace s;
        for (Deg d = lo; d <= hi; ++d) {
            int dim = rng.chance(1, 4) ? 0 : rng.range(1, 2);
            if (rng.chance(1, 10)) dim = 3;
            for (int i = 0; i < dim; ++i)
                s.add_basis(d, "m" + std::to_string(d) + (i == 0 ? "" : "_" + std::to_string(i)));
        }
        return s;
    };
    for (int i = 0; i < nobj; ++i)
        for (int j = i + 1; j < nobj; ++j) {
            GradedSpace s = (j - i == 1) ? window(0, 1) : window(0, 2);
            if (s.empty()) s.add_basis(0, "m0");  // keep at least one arrow
            in.hom[{i, j}] = s;
            in.d[{i, j}] = random_differential(rng, s, f);
        }
    // unit actions on the off-diagonal spaces
    auto basis_of = [&](int x, int y) {
        std::vector<BasisRef> refs;
        const GradedSpace& s = in.hom.at({x, y});
        for (Deg d : s.degrees())
            for (int i = 0; i < s.dim(d); ++i) refs.push_back({d, i});
        return refs;
    };
    for (int i = 0; i < nobj; ++i)
        for (int j = i + 1; j < nobj; ++j) {
            BasisRef onei = in.unit[i].terms()[0].first;
            BasisRef onej = in.unit[j].terms()[0].first;
            for (BasisRef a : basis_of(i, j)) {
                HomElem va;
                va.add(a, Scalar(f, 1));
                in.mult[{i, i, j}][{onei, a}] = va;
                in.mult[{i, j, j}][{a, onej}] = va;
            }
        }
    // middle compositions: random exact chain maps M_{ij} (x) M_{jk} -> M_{ik}
    for (int i = 0; i < nobj; ++i)
        for (int j = i + 1; j < nobj; ++j)
            for (int k = j + 1; k < nobj; ++k) {
                GradedSpace T;
                GradedMap dT;
                auto pos = tensor_complex(in.hom.at({i, j}), in.d.at({i, j}), in.hom.at({j, k}), in.d.at({j, k}), f,
                                          T, dT);
                auto MC = maps_complex(T, dT, in.hom.at({i, k}), in.d.at({i, k}), f);
                Matrix D0 = MC.cplx.d.block(0);
                auto chain_maps = kernel_basis(D0.transposed());
                if (chain_maps.empty()) continue;
                GradedElem combo;
                for (std::size_t b = 0; b < chain_maps.size(); ++b) {
                    int c = rng.range(-1, 1);
                    if (c == 0) continue;
                    for (std::size_t idx = 0; idx < chain_maps[b].size(); ++idx)
                        combo.add(BasisRef{0, static_cast<int>(idx)}, Scalar(f, c) * chain_maps[b][idx]);
                }
                if (combo.is_zero()) {
                    for (std::size_t idx = 0; idx < chain_maps[0].size(); ++idx)
                        combo.add(BasisRef{0, static_cast<int>(idx)}, chain_maps[0][idx]);
                }
                GradedMap cmap = MC.unflatten(0, combo, f);
                for (const auto& [pq, tref] : pos) {
                    GradedElem e;
                    e.add(tref, Scalar(f, 1));
                    HomElem val = to_homelem(cmap.apply(e));
                    if (!val.is_zero()) in.mult[{i, j, k}][pq] = val;
                }
            }
    return in;
}

TwistFixture random_twist(std::uint64_t seed, int truncation, const Field& f) {
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::uint64_t s = seed + attempt * 0x100000001b3ULL;
        Rng rng(s ^ 0xabcdef12345678ULL);
        DGCategoryInput input = random_dg_input(s, f);
        if (input.objects.size() < 3) continue;  // want nontrivial compositions
        DGImport imp = dg_import(input, truncation);
        const GradedQuiver& Q = *imp.cat.quiver;
        // g_1: random invertible degree-0 blocks; g_2: sparse random
        ComponentFamily g = ComponentFamily::make(ComponentFamily::Kind::morphism, truncation);
        for (int x = 0; x < Q.object_count(); ++x)
            for (int y = 0; y < Q.object_count(); ++y) {
                const GradedSpace& sp = Q.hom(x, y);
                if (sp.empty()) continue;
                for (Deg d : sp.degrees()) {
                    int n = sp.dim(d);
                    Matrix M(static_cast<std::size_t>(n), static_cast<std::size_t>(n), f);
                    std::optional<Matrix> Mi;
                    for (int tries = 0; tries < 8 && !Mi; ++tries) {
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j)
                                M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                                    Scalar(f, i == j ? 1 : (rng.chance(1, 3) ? rng.range(-1, 1) : 0));
                        Mi = inverse(M);
                    }
                    if (!Mi) M = Matrix::identity(static_cast<std::size_t>(n), f);
                    for (int i = 0; i < n; ++i) {
                        TensorWord w;
                        w.path = {x, y};
                        w.factors = {{d, i}};
                        HomElem v;
                        for (int j = 0; j < n; ++j) v.add(BasisRef{d, j}, M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
                        g.set(w, v);
                    }
                }
            }
        if (truncation >= 2)
            for (const auto& w : enumerate_words(Q, 2)) {
                if (!rng.chance(1, 3)) continue;
                const GradedSpace& sp = Q.hom(w.from(), w.to());
                Deg d = w.degree();
                if (sp.dim(d) == 0) continue;
                HomElem v;
                v.add(BasisRef{d, rng.range(0, sp.dim(d) - 1)}, Scalar(f, rng.range(1, 2)));
                g.set(w, v);
            }
        Transport tr = transport_structure(imp.cat, g);
        // candidate units: transport of the strict units, optionally shifted
        // by a coboundary so that v is nonzero
        ComponentFamily gbar = invert_family(imp.cat, g);
        TwistFixture out;
        out.D = imp.cat;
        out.unitsD = imp.units;
        out.cat = tr.cat;
        out.phi = tr.g;
        bool shift_unit = rng.chance(1, 2);
        for (int x = 0; x < Q.object_count(); ++x) {
            HomElem base = imp.units.at(x);
            if (shift_unit) {
                const GradedSpace& sp = Q.hom(x, x);
                if (sp.dim(-2) > 0) {
                    HomElem z;
                    z.add(BasisRef{-2, rng.range(0, sp.dim(-2) - 1)}, Scalar(f, rng.range(1, 2)));
                    base.add(apply1(imp.cat.b, x, x, z));  // i0 + z b_1
                }
            }
            out.units[x] = apply1(gbar, x, x, base);
        }
        if (is_strictly_unital(out.cat, out.units)) continue;  // want a genuinely twisted fixture
        auto v = is_unital_functor(out.phi, out.cat, out.D, out.units, out.unitsD);
        if (!v) continue;
        out.v = *v;
        return out;
    }
    throw std::runtime_error("random_twist: could not build a non-strictly-unital fixture");
}

DoubleCoderivation random_dcoder(const AInfCategory& A, Deg degree, int truncation, Rng& rng) {
    DoubleCoderivation r;
    r.f = r.g = identity_functor(A);
    r.degree = degree;
    r.truncation = truncation;
    const GradedQuiver& Q = *A.quiver;
    for (int n = 0; n <= truncation; ++n)
        for (int m = 0; n + m <= truncation; ++m)
            for (const auto& w1 : enumerate_words(Q, n))
                for (const auto& w2 : enumerate_words(Q, m, w1.to())) {
                    if (!rng.chance(1, 3)) continue;
                    const GradedSpace& s = Q.hom(w1.from(), w2.to());
                    Deg d = w1.degree() + w2.degree() + degree;
                    if (s.dim(d) == 0) continue;
                    HomElem v;
                    v.add(BasisRef{d, rng.range(0, s.dim(d) - 1)}, Scalar(A.field, rng.chance(1, 2) ? 1 : -1));
                    r.set(w1, w2, v);
                }
    return r;
}

}  // namespace ainfcat

