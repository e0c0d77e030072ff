#include "ainfcat/constructions.hpp"

#include <stdexcept>

namespace ainfcat {

namespace {

std::vector<int> identity_obj(const GradedQuiver& Q) {
    std::vector<int> v(static_cast<std::size_t>(Q.object_count()));
    for (int i = 0; i < Q.object_count(); ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

// flattened linear span of a finite set of words, graded by word degree
struct WordSpace {
    GradedSpace space;
    std::map<TensorWord, BasisRef> pos;
    std::map<BasisRef, TensorWord> word;
};

WordSpace make_word_space(const GradedQuiver& Q, const std::vector<TensorWord>& words) {
    WordSpace ws;
    for (const auto& w : words) {
        BasisRef r = ws.space.add_basis(w.degree(), word_label(Q, w));
        ws.pos[w] = r;
        ws.word[r] = w;
    }
    return ws;
}

// differential sum_i 1^i (x) d (x) 1^{n-i} on a word space, where the
// per-factor map is supplied by fn (degree +1); stability of the word set
// under the differential is asserted
GradedMap word_space_differential(const WordSpace& ws, const Field& field,
                                  const std::function<HomElem(int, int, BasisRef)>& fn) {
    GradedMap d(ws.space, ws.space, 1, field);
    for (const auto& [w, ref] : ws.pos) {
        for (int i = 0; i < w.length(); ++i) {
            HomElem v = fn(w.path[static_cast<std::size_t>(i)], w.path[static_cast<std::size_t>(i + 1)],
                           w.factors[static_cast<std::size_t>(i)]);
            if (v.is_zero()) continue;
            bool flip = prefix_degree(w, i) % 2 != 0;
            for (const auto& [tref, c] : v) {
                TensorWord w2 = splice(w, i, 1, tref);
                auto it = ws.pos.find(w2);
                if (it == ws.pos.end()) throw std::logic_error("word space is not stable under the differential");
                d.set(ref, it->second, flip ? -c : c);
            }
        }
    }
    return d;
}

// post-composition with a quiver map as a chain map between maps complexes
GradedMap postcompose_map(const MapsComplex& MCsrc, const MapsComplex& MCtgt, const GradedMap& f1,
                          const Field& field) {
    GradedMap u(MCsrc.cplx.space, MCtgt.cplx.space, 0, field);
    std::map<std::tuple<Deg, Deg, int, int>, int> tpos;
    for (const auto& [g, basis] : MCtgt.index)
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            auto [a, i, j] = basis[bi];
            tpos[{g, a, i, j}] = static_cast<int>(bi);
        }
    for (const auto& [g, basis] : MCsrc.index)
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            auto [a, i, j] = basis[bi];
            Matrix blk = f1.block(a + g);
            for (std::size_t j2 = 0; j2 < blk.cols(); ++j2) {
                const Scalar& c = blk.at(static_cast<std::size_t>(j), j2);
                if (c.is_zero()) continue;
                u.block(g).at(bi, static_cast<std::size_t>(tpos.at({g, a, i, static_cast<int>(j2)}))) = c;
            }
        }
    return u;
}

GradedMap pair_b1(const AInfCategory& A, int x, int y) { return b1_map(A, x, y); }

}  // namespace

void validate_dg_model(const AInfCategory& C, const Units& unitsC, const DGModel& M) {
    if (!check_ainfty(M.D).pass) throw std::invalid_argument("dg model: D fails the A-infinity equations");
    for (int k = 3; k <= M.D.truncation; ++k)
        if (!M.D.b.at(k).table.empty()) throw std::invalid_argument("dg model: D has b_n != 0 for n >= 3");
    if (!is_strictly_unital(M.D, M.unitsD)) throw std::invalid_argument("dg model: D is not strictly unital");
    for (std::size_t i = 0; i < M.phi.obj.size(); ++i)
        if (M.phi.obj[i] != static_cast<int>(i)) throw std::invalid_argument("dg model: phi is not the identity on objects");
    if (!check_functor(M.phi, C, M.D).pass) throw std::invalid_argument("dg model: phi fails the functor equations");
    int n = C.quiver->object_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (C.hom(x, y).empty() && M.D.hom(x, y).empty()) continue;
            Complex hc = hom_complex(C, x, y), hd = hom_complex(M.D, x, y);
            GradedMap f1(C.hom(x, y), M.D.hom(x, y), 0, C.field);
            for (Deg d : C.hom(x, y).degrees())
                for (int i = 0; i < C.hom(x, y).dim(d); ++i) {
                    TensorWord w;
                    w.path = {x, y};
                    w.factors = {{d, i}};
                    for (const auto& [r, c] : M.phi.f.apply(w)) f1.set({d, i}, r, c);
                }
            if (!is_quasi_iso(f1, hc, hd)) throw std::invalid_argument("dg model: phi_1 is not a quasi-isomorphism");
        }
    for (int x = 0; x < n; ++x) {
        if (unitsC.count(x) == 0) continue;
        HomElem lhs = apply1(M.phi.f, x, x, unitsC.at(x));
        HomElem rhs = M.unitsD.at(x);
        auto vit = M.v.find(x);
        if (vit != M.v.end()) rhs.add(apply1(M.D.b, x, x, vit->second));
        if (!(lhs == rhs)) throw std::invalid_argument("dg model: i0 phi_1 = i0^D + v b_1 fails");
    }
}

DGModel trivial_model(const AInfCategory& C, const Units& unitsC) {
    DGModel M;
    M.D = C;
    M.unitsD = unitsC;
    M.phi = identity_functor(C);
    for (const auto& [x, u] : unitsC) M.v[x] = HomElem{};
    return M;
}

UnitData units_from_weak_unit(const Envelope& env, const AInfCategory& A, const AInfFunctor& U) {
    if (!functor_equal(compose_functors(env.e, U), identity_functor(A), A))
        throw std::invalid_argument("units_from_weak_unit: e U != id");
    if (!check_functor(U, env.cat, A).pass)
        throw std::invalid_argument("units_from_weak_unit: U fails the functor equations");
    UnitData ud;
    int n = A.quiver->object_count();
    for (int x = 0; x < n; ++x) ud.i0[x] = apply1(U.f, x, x, env.i0.at(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const GradedSpace& s = A.hom(x, y);
            if (s.empty()) continue;
            // stored right homotopy: -(1 (x) i0su) U_2
            GradedMap h(s, s, -1, A.field);
            GradedMap hp(s, s, -1, A.field);
            for (Deg d : s.degrees())
                for (int i = 0; i < s.dim(d); ++i) {
                    TensorWord wr;
                    wr.path = {x, y, y};
                    wr.factors = {{d, i}, env.i0ref.at(y)};
                    Scalar sr(A.field, d % 2 != 0 ? 1 : -1);  // -(-1)^{deg z}
                    for (const auto& [ref, c] : U.f.apply(wr))
                        h.block(d).at(static_cast<std::size_t>(i), static_cast<std::size_t>(ref.idx)) += sr * c;
                    // stored left homotopy: +(i0su (x) 1) U_2
                    TensorWord wl;
                    wl.path = {x, x, y};
                    wl.factors = {env.i0ref.at(x), {d, i}};
                    for (const auto& [ref, c] : U.f.apply(wl))
                        hp.block(d).at(static_cast<std::size_t>(i), static_cast<std::size_t>(ref.idx)) += c;
                }
            ud.h.emplace(std::make_pair(x, y), std::move(h));
            ud.hp.emplace(std::make_pair(x, y), std::move(hp));
        }
    CheckReport rep = check_unit_data(A, ud);
    if (!rep.pass)
        throw std::logic_error("units_from_weak_unit: extracted data fails " + rep.failures.front().check);
    return ud;
}

namespace {

// extended quiver C+ with refs of the two generators; sC refs are unchanged
struct PlusQuiver {
    std::shared_ptr<GradedQuiver> Q;
    std::map<int, BasisRef> i0su, j;
};

PlusQuiver make_plus_quiver(const GradedQuiver& base) {
    PlusQuiver out;
    out.Q = std::make_shared<GradedQuiver>(base);
    for (int x = 0; x < base.object_count(); ++x) {
        out.i0su[x] = out.Q->hom_mut(x, x).add_basis(-1, "i0su");
        out.j[x] = out.Q->hom_mut(x, x).add_basis(-2, "j");
    }
    return out;
}

// strict-unit values of b_2 on all words containing i0su
void fill_strict_unit_b2(AInfCategory& plus, const std::map<int, BasisRef>& i0su) {
    if (plus.truncation < 2) return;
    const GradedQuiver& Q = *plus.quiver;
    for (int x = 0; x < Q.object_count(); ++x)
        for (int y = 0; y < Q.object_count(); ++y) {
            const GradedSpace& s = Q.hom(x, y);
            for (Deg d : s.degrees())
                for (int i = 0; i < s.dim(d); ++i) {
                    BasisRef r{d, i};
                    HomElem vr;
                    vr.add(r, Scalar(plus.field, d % 2 != 0 ? -1 : 1));
                    TensorWord wr;
                    wr.path = {x, y, y};
                    wr.factors = {r, i0su.at(y)};
                    plus.b.set(wr, vr);
                    HomElem vl;
                    vl.add(r, Scalar(plus.field, -1));
                    TensorWord wl;
                    wl.path = {x, x, y};
                    wl.factors = {i0su.at(x), r};
                    plus.b.set(wl, vl);
                }
        }
}

enum class FactorKind { base, i0su, j };

FactorKind factor_kind(const HomotopyUnitalStructure& H, int x, int y, BasisRef r) {
    if (x == y) {
        if (r == H.i0su_ref.at(x)) return FactorKind::i0su;
        if (r == H.j_ref.at(x)) return FactorKind::j;
    }
    return FactorKind::base;
}

}  // namespace

HomotopyUnitalStructure canonical_hu(const AInfCategory& D, const Units& units) {
    if (!is_strictly_unital(D, units)) throw std::invalid_argument("canonical_hu: input is not strictly unital");
    HomotopyUnitalStructure H;
    H.base = D;
    PlusQuiver pq = make_plus_quiver(*D.quiver);
    H.i0su_ref = pq.i0su;
    H.j_ref = pq.j;
    H.plus.field = D.field;
    H.plus.quiver = pq.Q;
    H.plus.truncation = D.truncation;
    H.plus.b = ComponentFamily::make(ComponentFamily::Kind::coderivation, D.truncation);
    for (int k = 1; k <= D.truncation; ++k) H.plus.b.at(k).table = D.b.at(k).table;
    // j b+_1 = i0su - i0
    for (int x = 0; x < D.quiver->object_count(); ++x) {
        if (units.count(x) == 0) continue;
        HomElem v;
        v.add(pq.i0su.at(x), Scalar(D.field, 1));
        v.add(-units.at(x));
        TensorWord w;
        w.path = {x, x};
        w.factors = {pq.j.at(x)};
        H.plus.b.set(w, v);
    }
    fill_strict_unit_b2(H.plus, pq.i0su);
    for (const auto& [x, r] : pq.i0su) {
        HomElem u;
        u.add(r, Scalar(D.field, 1));
        H.i0su[x] = u;
    }
    H.i0 = units;
    return H;
}

CheckReport check_fukaya(const HomotopyUnitalStructure& H) {
    CheckReport rep;
    rep.truncation = H.plus.truncation;
    const GradedQuiver& Q = *H.plus.quiver;
    rep.merge(check_ainfty(H.plus));
    // (1) i0 = i0su - j b+_1 lies in sC
    for (int x = 0; x < Q.object_count(); ++x) {
        if (H.i0su.count(x) == 0) continue;
        TensorWord w;
        w.path = {x, x};
        w.factors = {H.j_ref.at(x)};
        HomElem i0 = H.i0su.at(x) - H.plus.b.apply(w);
        for (const auto& [r, c] : i0)
            if (factor_kind(H, x, x, r) != FactorKind::base)
                rep.fail("fukaya-1", Q.object_name(x), "i0 has a generator component");
        if (!(i0 == H.i0.at(x))) rep.fail("fukaya-1", Q.object_name(x), "stored i0 mismatch");
    }
    // (2) strictly unital with units i0su
    CheckReport su;
    if (!is_strictly_unital(H.plus, H.i0su, &su)) rep.merge(su);
    // (3) the embedding C -> C+ is strict: b+ restricted to sC words is b
    for (int m = 1; m <= H.base.truncation; ++m)
        for (const auto& w : enumerate_words(*H.base.quiver, m))
            if (!(H.plus.b.apply(w) == H.base.b.apply(w)))
                rep.fail("fukaya-3", word_label(*H.base.quiver, w), "b+ differs from b on sC");
    // (4) words over sC (+) s^2 kC map into sC for n > 1
    for (int m = 2; m <= H.plus.truncation; ++m)
        for (const auto& w : enumerate_words(Q, m)) {
            bool in_domain = true;
            for (int i = 0; i < m && in_domain; ++i)
                if (factor_kind(H, w.path[static_cast<std::size_t>(i)], w.path[static_cast<std::size_t>(i + 1)],
                                w.factors[static_cast<std::size_t>(i)]) == FactorKind::i0su)
                    in_domain = false;
            if (!in_domain) continue;
            for (const auto& [r, c] : H.plus.b.apply(w))
                if (factor_kind(H, w.from(), w.to(), r) != FactorKind::base)
                    rep.fail("fukaya-4", word_label(Q, w), "value leaves sC");
        }
    return rep;
}

UnitData units_from_homotopy_unital(const HomotopyUnitalStructure& H) {
    CheckReport fk = check_fukaya(H);
    if (!fk.pass) throw std::invalid_argument("units_from_homotopy_unital: " + fk.failures.front().check);
    const AInfCategory& C = H.base;
    UnitData ud;
    ud.i0 = H.i0;
    int n = C.quiver->object_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const GradedSpace& s = C.hom(x, y);
            if (s.empty()) continue;
            GradedMap Hh(s, s, -1, C.field);   // (1 (x) j) b+_2, j has even degree: no sign
            GradedMap Hp(s, s, -1, C.field);   // (j (x) 1) b+_2
            for (Deg d : s.degrees())
                for (int i = 0; i < s.dim(d); ++i) {
                    TensorWord wr;
                    wr.path = {x, y, y};
                    wr.factors = {{d, i}, H.j_ref.at(y)};
                    for (const auto& [r, c] : H.plus.b.apply(wr)) Hh.block(d).at(static_cast<std::size_t>(i), static_cast<std::size_t>(r.idx)) += c;
                    TensorWord wl;
                    wl.path = {x, x, y};
                    wl.factors = {H.j_ref.at(x), {d, i}};
                    for (const auto& [r, c] : H.plus.b.apply(wl)) Hp.block(d).at(static_cast<std::size_t>(i), static_cast<std::size_t>(r.idx)) += c;
                }
            // displayed identities: (1 (x) i0) b_2 = 1 + H b_1 + b_1 H
            //                       (i0 (x) 1) b_2 = -1 + H' b_1 + b_1 H'
            GradedMap b1 = pair_b1(C, x, y);
            GradedMap id = GradedMap::identity(s, C.field);
            GradedMap R = right_unit_action(C, x, y, ud.i0.at(y));
            GradedMap Lneg = left_unit_action_neg(C, x, y, ud.i0.at(x));
            if (!(R == id + Hh.compose(b1) + b1.compose(Hh)))
                throw std::logic_error("units_from_homotopy_unital: right identity fails");
            if (!(Lneg.scaled(Scalar(C.field, -1)) ==
                  id.scaled(Scalar(C.field, -1)) + Hp.compose(b1) + b1.compose(Hp)))
                throw std::logic_error("units_from_homotopy_unital: left identity fails");
            ud.h.emplace(std::make_pair(x, y), Hh);
            ud.hp.emplace(std::make_pair(x, y), Hp.scaled(Scalar(C.field, -1)));
        }
    CheckReport rep = check_unit_data(C, ud);
    if (!rep.pass) throw std::logic_error("units_from_homotopy_unital: unit data fails " + rep.failures.front().check);
    return ud;
}

TheoremResult homotopy_unital_from_unital(const AInfCategory& C, const UnitData& ud, const DGModel& M) {
    validate_dg_model(C, ud.i0, M);
    {
        CheckReport r = check_unit_data(C, ud);
        if (!r.pass) throw std::invalid_argument("homotopy_unital_from_unital: unit data fails");
    }
    const Field& F = C.field;
    int N = C.truncation;
    int nobj = C.quiver->object_count();
    TheoremResult out;
    out.Dplus = canonical_hu(M.D, M.unitsD);
    // C+ skeleton
    out.H.base = C;
    PlusQuiver pq = make_plus_quiver(*C.quiver);
    out.H.i0su_ref = pq.i0su;
    out.H.j_ref = pq.j;
    out.H.i0 = ud.i0;
    out.H.plus.field = F;
    out.H.plus.quiver = pq.Q;
    out.H.plus.truncation = N;
    out.H.plus.b = ComponentFamily::make(ComponentFamily::Kind::coderivation, N);
    AInfCategory& plus = out.H.plus;
    for (const auto& [x, r] : pq.i0su) {
        HomElem u;
        u.add(r, Scalar(F, 1));
        out.H.i0su[x] = u;
    }
    // b+_1: b_1 on sC, 0 on i0su, j |-> i0su - i0
    plus.b.at(1).table = C.b.at(1).table;
    for (int x = 0; x < nobj; ++x) {
        if (ud.i0.count(x) == 0) continue;
        HomElem v;
        v.add(pq.i0su.at(x), Scalar(F, 1));
        v.add(-ud.i0.at(x));
        TensorWord w;
        w.path = {x, x};
        w.factors = {pq.j.at(x)};
        plus.b.set(w, v);
    }
    // phi+_1 : sC+ -> sD+ as a component family over the plus quiver
    AInfFunctor phiplus;
    phiplus.src = pq.Q;
    phiplus.tgt = out.Dplus.plus.quiver;
    phiplus.obj = identity_obj(*pq.Q);
    phiplus.truncation = N;
    phiplus.f = ComponentFamily::make(ComponentFamily::Kind::morphism, N);
    for (int k = 1; k <= N; ++k) phiplus.f.at(k).table = M.phi.f.at(k).table;
    for (int x = 0; x < nobj; ++x) {
        {
            TensorWord w;
            w.path = {x, x};
            w.factors = {pq.i0su.at(x)};
            HomElem v;
            v.add(out.Dplus.i0su_ref.at(x), Scalar(F, 1));
            phiplus.f.set(w, v);
        }
        {
            // j phi+_1 = j^D - v  (v stored with i0 phi_1 = i0^D + v b_1)
            TensorWord w;
            w.path = {x, x};
            w.factors = {pq.j.at(x)};
            HomElem v;
            v.add(out.Dplus.j_ref.at(x), Scalar(F, 1));
            auto vit = M.v.find(x);
            if (vit != M.v.end()) v.add(-vit->second);
            phiplus.f.set(w, v);
        }
    }
    // induction over arity n, then over the number k of j-arguments
    for (int n = 2; n <= N; ++n) {
        // sC words: b_n and phi_n
        for (const auto& [w, v] : C.b.at(n).table) plus.b.set(w, v);
        for (const auto& [w, v] : M.phi.f.at(n).table) phiplus.f.set(w, v);
        // i0su-containing words: strict unitality (b+_2 entries; higher vanish)
        if (n == 2) fill_strict_unit_b2(plus, pq.i0su);
        for (int k = 1; k <= n; ++k) {
            // collect the N_k words, grouped by path
            std::map<std::vector<int>, std::vector<TensorWord>> by_path;
            for (const auto& w : enumerate_words(*pq.Q, n)) {
                int js = 0;
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    FactorKind kind = factor_kind(out.H, w.path[static_cast<std::size_t>(i)],
                                                  w.path[static_cast<std::size_t>(i + 1)],
                                                  w.factors[static_cast<std::size_t>(i)]);
                    if (kind == FactorKind::i0su) ok = false;
                    if (kind == FactorKind::j) ++js;
                }
                if (ok && js == k) by_path[w.path].push_back(w);
            }
            for (const auto& [path, words] : by_path) {
                int X = path.front(), Y = path.back();
                // lambda_n and nu_n on each basis word
                std::map<TensorWord, HomElem> lam, nu;
                for (const auto& w : words) {
                    HomElem lv, nv;
                    // sum_{a+r+c=n, 1<r<n} (1^a (x) b+_r (x) 1^c) b+_{a+1+c}  [and with phi+]
                    for (int r = 2; r < n; ++r)
                        for (int a = 0; a + r <= n; ++a)
                            for (const auto& [w2, c] : apply_at(plus.b, w, a, r)) {
                                for (const auto& [ref, cv] : plus.b.apply(w2)) lv.add(ref, c * cv);
                                for (const auto& [ref, cv] : phiplus.f.apply(w2)) nv.add(ref, c * cv);
                            }
                    // -(phi+ expansion) b+_r for 1 < r <= n
                    for (int r = 2; r <= n; ++r)
                        for (const auto& [wD, c] : expand_morphism(phiplus.f, phiplus.obj, w, r)) {
                            for (const auto& [ref, cv] : out.Dplus.plus.b.apply(wD)) nv.add(ref, -(c * cv));
                        }
                    // sum (1^a (x) b-_1 (x) 1^c) btilde_n / phitilde_n
                    for (int a = 0; a < n; ++a) {
                        int xa = w.path[static_cast<std::size_t>(a)];
                        int ya = w.path[static_cast<std::size_t>(a + 1)];
                        if (factor_kind(out.H, xa, ya, w.factors[static_cast<std::size_t>(a)]) != FactorKind::j)
                            continue;  // b-_1 vanishes on sC and i0su
                        bool flip = prefix_degree(w, a) % 2 != 0;
                        HomElem bm;
                        bm.add(pq.i0su.at(xa), Scalar(F, 1));
                        bm.add(-ud.i0.at(xa));
                        for (const auto& [tref, c0] : bm) {
                            TensorWord w2 = splice(w, a, 1, tref);
                            // w2 lies in Q_{k-1}: at most k-1 j factors
                            Scalar c = flip ? -c0 : c0;
                            for (const auto& [ref, cv] : plus.b.apply(w2)) lv.add(ref, c * cv);
                            for (const auto& [ref, cv] : phiplus.f.apply(w2)) nv.add(ref, c * cv);
                        }
                    }
                    // membership: lambda in sC, nu in sD
                    for (const auto& [r, c] : lv)
                        if (factor_kind(out.H, X, Y, r) != FactorKind::base)
                            throw std::logic_error("homotopy_unital_from_unital: lambda leaves sC");
                    for (const auto& [r, c] : nv)
                        if (factor_kind(out.Dplus, X, Y, r) != FactorKind::base)
                            throw std::logic_error("homotopy_unital_from_unital: nu leaves sD");
                    lam[w] = std::move(lv);
                    nu[w] = std::move(nv);
                }
                // cone problem over this path
                WordSpace ws = make_word_space(*pq.Q, words);
                GradedMap dN = word_space_differential(ws, F, [&](int x, int y, BasisRef r) -> HomElem {
                    if (factor_kind(out.H, x, y, r) != FactorKind::base) return {};
                    TensorWord wf;
                    wf.path = {x, y};
                    wf.factors = {r};
                    return C.b.apply(wf);
                });
                auto MCc = maps_complex(ws.space, dN, C.hom(X, Y), pair_b1(C, X, Y), F);
                auto MCd = maps_complex(ws.space, dN, M.D.hom(X, Y), pair_b1(M.D, X, Y), F);
                GradedMap phi1(C.hom(X, Y), M.D.hom(X, Y), 0, F);
                for (Deg d : C.hom(X, Y).degrees())
                    for (int i = 0; i < C.hom(X, Y).dim(d); ++i) {
                        TensorWord wf;
                        wf.path = {X, Y};
                        wf.factors = {{d, i}};
                        for (const auto& [r, c] : M.phi.f.apply(wf)) phi1.set({d, i}, r, c);
                    }
                // the m = n functor equation reads phi+_n d - b+_n phi_1 = nu_n,
                // so the cone is taken over minus the post-composition
                GradedMap u = postcompose_map(MCc, MCd, phi1, F).scaled(Scalar(F, -1));
                GradedMap lam_map(ws.space, C.hom(X, Y), 2, F);
                GradedMap nu_map(ws.space, M.D.hom(X, Y), 1, F);
                for (const auto& [w, v] : lam)
                    for (const auto& [r, c] : v) lam_map.set(ws.pos.at(w), r, c);
                for (const auto& [w, v] : nu)
                    for (const auto& [r, c] : v) nu_map.set(ws.pos.at(w), r, c);
                ConeProblem P{&MCc.cplx, &MCd.cplx, &u, MCc.flatten(lam_map), MCd.flatten(nu_map), 0};
                ConeSolution sol = solve_cone(P);
                if (sol.status == ConeStatus::not_cycle)
                    throw std::logic_error("homotopy_unital_from_unital: cycle check failed");
                if (sol.status == ConeStatus::unsolvable)
                    throw std::logic_error("homotopy_unital_from_unital: cone unsolvable");
                GradedMap bsol = MCc.unflatten(1, sol.x, F);
                GradedMap fsol = MCd.unflatten(0, sol.y, F);
                for (const auto& [w, ref] : ws.pos) {
                    HomElem bv, fv;
                    {
                        Matrix blk = bsol.block(ref.deg);
                        for (std::size_t jj = 0; jj < blk.cols(); ++jj) {
                            const Scalar& c = blk.at(static_cast<std::size_t>(ref.idx), jj);
                            if (!c.is_zero()) bv.add(BasisRef{ref.deg + 1, static_cast<int>(jj)}, c);
                        }
                        Matrix blk2 = fsol.block(ref.deg);
                        for (std::size_t jj = 0; jj < blk2.cols(); ++jj) {
                            const Scalar& c = blk2.at(static_cast<std::size_t>(ref.idx), jj);
                            if (!c.is_zero()) fv.add(BasisRef{ref.deg, static_cast<int>(jj)}, c);
                        }
                    }
                    if (!bv.is_zero()) plus.b.set(w, bv);
                    if (!fv.is_zero()) phiplus.f.set(w, fv);
                }
            }
        }
    }
    out.phiplus = phiplus;
    // final verification: nothing above is trusted
    if (!check_ainfty(plus).pass) throw std::logic_error("homotopy_unital_from_unital: C+ fails the axioms");
    if (!check_functor(phiplus, plus, out.Dplus.plus).pass)
        throw std::logic_error("homotopy_unital_from_unital: phi+ fails the functor equations");
    CheckReport fk = check_fukaya(out.H);
    if (!fk.pass) throw std::logic_error("homotopy_unital_from_unital: " + fk.failures.front().check);
    // phi+ conditions: strict unitality and (sC (+) s^2 kC)^n phi+_n in sD
    for (int x = 0; x < nobj; ++x) {
        TensorWord w;
        w.path = {x, x};
        w.factors = {pq.i0su.at(x)};
        HomElem v = phiplus.f.apply(w);
        HomElem expect;
        expect.add(out.Dplus.i0su_ref.at(x), Scalar(F, 1));
        if (!(v == expect)) throw std::logic_error("homotopy_unital_from_unital: phi+ does not preserve i0su");
    }
    for (int m = 2; m <= N; ++m)
        for (const auto& [w, v] : phiplus.f.at(m).table) {
            bool has_i0su = false, in_sCj = true;
            for (int i = 0; i < m; ++i) {
                FactorKind kind = factor_kind(out.H, w.path[static_cast<std::size_t>(i)],
                                              w.path[static_cast<std::size_t>(i + 1)],
                                              w.factors[static_cast<std::size_t>(i)]);
                if (kind == FactorKind::i0su) has_i0su = true;
                if (kind != FactorKind::base && kind != FactorKind::j) in_sCj = false;
            }
            if (has_i0su) throw std::logic_error("homotopy_unital_from_unital: phi+_n nonzero on an i0su word");
            if (in_sCj)
                for (const auto& [r, c] : v)
                    if (factor_kind(out.Dplus, w.from(), w.to(), r) != FactorKind::base)
                        throw std::logic_error("homotopy_unital_from_unital: phi+_n leaves sD");
        }
    // iota^C phi+ = phi iota^D
    {
        AInfFunctor iotaC;
        iotaC.src = C.quiver;
        iotaC.tgt = pq.Q;
        iotaC.obj = identity_obj(*C.quiver);
        iotaC.truncation = N;
        iotaC.f = ComponentFamily::make(ComponentFamily::Kind::morphism, N);
        for (const auto& w : enumerate_words(*C.quiver, 1)) {
            HomElem v;
            v.add(w.factors[0], Scalar(F, 1));
            iotaC.f.set(w, v);
        }
        AInfFunctor iotaD;
        iotaD.src = M.D.quiver;
        iotaD.tgt = out.Dplus.plus.quiver;
        iotaD.obj = identity_obj(*M.D.quiver);
        iotaD.truncation = N;
        iotaD.f = ComponentFamily::make(ComponentFamily::Kind::morphism, N);
        for (const auto& w : enumerate_words(*M.D.quiver, 1)) {
            HomElem v;
            v.add(w.factors[0], Scalar(F, 1));
            iotaD.f.set(w, v);
        }
        if (!functor_equal(compose_functors(iotaC, phiplus), compose_functors(M.phi, iotaD), C))
            throw std::logic_error("homotopy_unital_from_unital: iota^C phi+ != phi iota^D");
    }
    return out;
}

CheckReport verify_iota_equivalence(const HomotopyUnitalStructure& H) {
    CheckReport rep;
    rep.truncation = H.plus.truncation;
    const Field& F = H.plus.field;
    const GradedQuiver& Q = *H.plus.quiver;
    for (int x = 0; x < Q.object_count(); ++x)
        for (int y = 0; y < Q.object_count(); ++y) {
            const GradedSpace& s = Q.hom(x, y);
            if (s.empty()) continue;
            // pi_1 iota_1 as an endomorphism of sC+: identity on sC,
            // i0su |-> i0 (viewed inside sC+), j |-> 0
            GradedMap pi_iota(s, s, 0, F);
            GradedMap h(s, s, -1, F);
            for (Deg d : s.degrees())
                for (int i = 0; i < s.dim(d); ++i) {
                    BasisRef r{d, i};
                    switch (factor_kind(H, x, y, r)) {
                        case FactorKind::base:
                            pi_iota.set(r, r, Scalar(F, 1));
                            break;
                        case FactorKind::i0su:
                            for (const auto& [t, c] : H.i0.at(x)) pi_iota.set(r, t, c);
                            h.set(r, H.j_ref.at(x), Scalar(F, 1));
                            break;
                        case FactorKind::j:
                            break;
                    }
                }
            GradedMap b1 = pair_b1(H.plus, x, y);
            GradedMap id = GradedMap::identity(s, F);
            if (!(id - pi_iota == h.compose(b1) + b1.compose(h)))
                rep.fail("iota-homotopy", Q.object_name(x) + "," + Q.object_name(y), "");
        }
    return rep;
}

DoubleCoderivation h_from_weak_unit(const Envelope& env, const AInfCategory& A, const AInfFunctor& U) {
    if (!functor_equal(compose_functors(env.e, U), identity_functor(A), A))
        throw std::invalid_argument("h_from_weak_unit: e U != id");
    PhiFamily F = functor_to_family(env, U, A, A);
    ExplicitDCoder slice = family_n1_slice(F, A, A);
    CheckReport law = check_double_coderivation(slice);
    if (!law.pass) throw std::logic_error("h_from_weak_unit: coderivation law fails");
    DoubleCoderivation h = components_of(slice);
    DoubleCoderivation b1h = B1(h, A, A);
    if (!dcoder_equal(b1h, nu_dcoder(A))) throw std::logic_error("h_from_weak_unit: B1 phi != nu");
    return h;
}

AInfFunctor weak_unit_from_h(const Envelope& env, const AInfCategory& A, const DoubleCoderivation& h) {
    if (h.degree != -1) throw std::invalid_argument("weak_unit_from_h: h must have degree -1");
    {
        CheckReport law = check_double_coderivation(h);
        if (!law.pass) throw std::invalid_argument("weak_unit_from_h: coderivation law fails");
        if (!dcoder_equal(B1(h, A, A), nu_dcoder(A))) throw std::invalid_argument("weak_unit_from_h: h B1 != nu");
    }
    int N = A.truncation;
    PhiFamily F;
    F.phi0 = identity_functor(A);
    F.truncation = N;
    F.higher.resize(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n)
        for (const auto& t : enumerate_tuples(*A.quiver, n + 1, N - n)) {
            WordSum val;
            if (n == 1) {
                val = dcoder_full(h, t.slots[0], t.slots[1], N);
            } else {
                WordTuple head;
                head.slots.assign(t.slots.begin(), t.slots.end() - 1);
                auto it = F.higher[static_cast<std::size_t>(n - 2)].find(head);
                if (it != F.higher[static_cast<std::size_t>(n - 2)].end())
                    for (const auto& [w, c] : it->second)
                        val.add_scaled(dcoder_full(h, w, t.slots.back(), N), c);
            }
            if (!val.is_zero()) F.higher[static_cast<std::size_t>(n - 1)][t] = std::move(val);
        }
    AInfFunctor U = family_to_functor(env, F, A, A);
    if (!functor_equal(compose_functors(env.e, U), identity_functor(A), A))
        throw std::logic_error("weak_unit_from_h: e U != id");
    return U;
}

SolveHResult solve_h(const AInfCategory& A, const Units& unitsA, const DGModel& M) {
    validate_dg_model(A, unitsA, M);
    const Field& F = A.field;
    int N = A.truncation;
    DoubleCoderivation nu = nu_dcoder(A);
    DoubleCoderivation iota = pre_compose(M.phi, xi_dcoder(M.D, M.unitsD), A);
    // pre-verify nu B1 = 0 and iota B1 = nu phi
    {
        DoubleCoderivation z = B1(nu, A, A);
        for (const auto& [nm, table] : z.comp)
            if (!table.empty()) throw std::logic_error("solve_h: nu B1 != 0");
        DoubleCoderivation ib = B1(iota, A, M.D);
        DoubleCoderivation nf = post_compose(nu, M.phi, M.D);
        if (!dcoder_equal(ib, nf)) throw std::logic_error("solve_h: iota B1 != nu phi");
    }
    SolveHResult out;
    out.h.f = out.h.g = identity_functor(A);
    out.h.degree = -1;
    out.h.truncation = N - 1;
    out.k.f = out.k.g = M.phi;
    out.k.degree = -2;
    out.k.truncation = N - 1;
    for (int x = 0; x < A.quiver->object_count(); ++x) {
        if (unitsA.count(x) == 0) continue;
        TensorWord e = empty_word(x);
        out.h.set(e, e, unitsA.at(x));
        auto vit = M.v.find(x);
        if (vit != M.v.end() && !vit->second.is_zero()) out.k.set(e, e, vit->second);
    }
    for (int t = 1; t <= N - 1; ++t) {
        for (int n = 0; n <= t; ++n) {
            int m = t - n;
            // per full path of length t
            std::map<std::vector<int>, std::vector<TensorWord>> by_path;
            for (const auto& w : enumerate_words(*A.quiver, t)) by_path[w.path].push_back(w);
            for (const auto& [path, words] : by_path) {
                int X = path.front(), Y = path.back();
                WordSpace ws = make_word_space(*A.quiver, words);
                GradedMap dN = word_space_differential(ws, F, [&](int x, int y, BasisRef r) {
                    TensorWord wf;
                    wf.path = {x, y};
                    wf.factors = {r};
                    return A.b.apply(wf);
                });
                auto MCa = maps_complex(ws.space, dN, A.hom(X, Y), pair_b1(A, X, Y), F);
                auto MCd = maps_complex(ws.space, dN, M.D.hom(X, Y), pair_b1(M.D, X, Y), F);
                GradedMap phi1(A.hom(X, Y), M.D.hom(X, Y), 0, F);
                for (Deg d : A.hom(X, Y).degrees())
                    for (int i = 0; i < A.hom(X, Y).dim(d); ++i) {
                        TensorWord wf;
                        wf.path = {X, Y};
                        wf.factors = {{d, i}};
                        for (const auto& [r, c] : M.phi.f.apply(wf)) phi1.set({d, i}, r, c);
                    }
                GradedMap u = postcompose_map(MCa, MCd, phi1, F);
                // lambda = (htilde B1 - nu)_{n,m}, kappa = (ktilde B1 + iota - htilde phi)_{n,m}
                DoubleCoderivation hB = B1(out.h, A, A);
                DoubleCoderivation kB = B1(out.k, A, M.D);
                DoubleCoderivation hf = post_compose(out.h, M.phi, M.D);
                GradedMap lam_map(ws.space, A.hom(X, Y), 0, F);
                GradedMap kap_map(ws.space, M.D.hom(X, Y), -1, F);
                for (const auto& w : words) {
                    TensorWord w1 = subword(w, 0, n);
                    TensorWord w2 = subword(w, n, m);
                    HomElem lv = hB.component(w1, w2) - nu.component(w1, w2);
                    HomElem kv = kB.component(w1, w2) + iota.component(w1, w2) - hf.component(w1, w2);
                    for (const auto& [r, c] : lv) lam_map.set(ws.pos.at(w), r, c);
                    for (const auto& [r, c] : kv) kap_map.set(ws.pos.at(w), r, c);
                }
                ConeProblem P{&MCa.cplx, &MCd.cplx, &u, MCa.flatten(lam_map), MCd.flatten(kap_map), -2};
                ConeSolution sol = solve_cone(P);
                if (sol.status == ConeStatus::not_cycle) throw std::logic_error("solve_h: cycle check failed");
                if (sol.status == ConeStatus::unsolvable) throw std::logic_error("solve_h: cone unsolvable");
                GradedMap hsol = MCa.unflatten(-1, sol.x, F);
                GradedMap ksol = MCd.unflatten(-2, sol.y, F).scaled(Scalar(F, -1));
                for (const auto& [w, ref] : ws.pos) {
                    TensorWord w1 = subword(w, 0, n);
                    TensorWord w2 = subword(w, n, m);
                    HomElem hv, kv;
                    Matrix hb = hsol.block(ref.deg);
                    for (std::size_t jj = 0; jj < hb.cols(); ++jj) {
                        const Scalar& c = hb.at(static_cast<std::size_t>(ref.idx), jj);
                        if (!c.is_zero()) hv.add(BasisRef{ref.deg - 1, static_cast<int>(jj)}, c);
                    }
                    Matrix kb = ksol.block(ref.deg);
                    for (std::size_t jj = 0; jj < kb.cols(); ++jj) {
                        const Scalar& c = kb.at(static_cast<std::size_t>(ref.idx), jj);
                        if (!c.is_zero()) kv.add(BasisRef{ref.deg - 2, static_cast<int>(jj)}, c);
                    }
                    if (!hv.is_zero()) out.h.set(w1, w2, hv);
                    if (!kv.is_zero()) out.k.set(w1, w2, kv);
                }
            }
        }
    }
    // final re-verification of both equations on the whole truncation
    {
        DoubleCoderivation hB = B1(out.h, A, A);
        if (!dcoder_equal(hB, nu)) throw std::logic_error("solve_h: h B1 != nu after construction");
        DoubleCoderivation kB = B1(out.k, A, M.D);
        DoubleCoderivation hf = post_compose(out.h, M.phi, M.D);
        int tr = std::min(kB.truncation, hf.truncation);
        for (int n = 0; n <= tr; ++n)
            for (int m = 0; n + m <= tr; ++m)
                for (const auto& w1 : enumerate_words(*A.quiver, n))
                    for (const auto& w2 : enumerate_words(*A.quiver, m, w1.to())) {
                        HomElem res = kB.component(w1, w2) + iota.component(w1, w2) - hf.component(w1, w2);
                        if (!res.is_zero()) throw std::logic_error("solve_h: k B1 + iota - h phi != 0");
                    }
    }
    return out;
}

AInfFunctor weak_unit_from_unital(const Envelope& env, const AInfCategory& A, const Units& unitsA,
                                  const DGModel& M) {
    SolveHResult hr = solve_h(A, unitsA, M);
    return weak_unit_from_h(env, A, hr.h);
}

}  // namespace ainfcat
