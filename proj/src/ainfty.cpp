#include "ainfcat/ainfty.hpp"

#include <stdexcept>

namespace ainfcat {

namespace {

std::string homelem_str(const HomElem& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [r, c] : e) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*(" + std::to_string(r.deg) + "," + std::to_string(r.idx) + ")";
    }
    return s;
}

std::vector<int> identity_obj(const GradedQuiver& Q) {
    std::vector<int> v(static_cast<std::size_t>(Q.object_count()));
    for (int i = 0; i < Q.object_count(); ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

}  // namespace

HomElem ainf_residual(const AInfCategory& A, const TensorWord& w) {
    HomElem r;
    int m = w.length();
    for (int k = 1; k <= m; ++k)
        for (int p = 0; p + k <= m; ++p)
            for (const auto& [w2, c] : apply_at(A.b, w, p, k)) {
                HomElem v = A.b.apply(w2);
                for (const auto& [ref, cv] : v) r.add(ref, c * cv);
            }
    return r;
}

CheckReport check_ainfty(const AInfCategory& A) {
    CheckReport rep;
    rep.truncation = A.truncation;
    for (int m = 1; m <= A.truncation; ++m)
        for (const auto& w : enumerate_words(*A.quiver, m)) {
            HomElem r = ainf_residual(A, w);
            if (!r.is_zero()) rep.fail("ainfty m=" + std::to_string(m), word_label(*A.quiver, w), homelem_str(r));
        }
    return rep;
}

HomElem functor_residual(const AInfFunctor& f, const AInfCategory& A, const AInfCategory& B, const TensorWord& w) {
    HomElem lhs;
    int m = w.length();
    for (int n = 1; n <= m; ++n)
        for (const auto& [wb, c] : expand_morphism(f.f, f.obj, w, n)) {
            HomElem v = B.b.apply(wb);
            for (const auto& [ref, cv] : v) lhs.add(ref, c * cv);
        }
    for (int k = 1; k <= m; ++k)
        for (int p = 0; p + k <= m; ++p)
            for (const auto& [w2, c] : apply_at(A.b, w, p, k)) {
                HomElem v = f.f.apply(w2);
                for (const auto& [ref, cv] : v) lhs.add(ref, -(c * cv));
            }
    return lhs;
}

CheckReport check_functor(const AInfFunctor& f, const AInfCategory& A, const AInfCategory& B) {
    CheckReport rep;
    rep.truncation = f.truncation;
    for (int m = 1; m <= f.truncation; ++m)
        for (const auto& w : enumerate_words(*A.quiver, m)) {
            HomElem r = functor_residual(f, A, B, w);
            if (!r.is_zero()) rep.fail("functor m=" + std::to_string(m), word_label(*A.quiver, w), homelem_str(r));
        }
    return rep;
}

ComponentFamily materialize_morphism(const GradedQuiver& srcQ, int N,
                                     const std::function<HomElem(const TensorWord&)>& fn) {
    ComponentFamily F = ComponentFamily::make(ComponentFamily::Kind::morphism, N);
    for (int m = 1; m <= N; ++m)
        for (const auto& w : enumerate_words(srcQ, m)) {
            HomElem v = fn(w);
            if (!v.is_zero()) F.set(w, std::move(v));
        }
    return F;
}

AInfFunctor identity_functor(const AInfCategory& A) {
    AInfFunctor f;
    f.src = f.tgt = A.quiver;
    f.obj = identity_obj(*A.quiver);
    f.truncation = A.truncation;
    f.f = ComponentFamily::make(ComponentFamily::Kind::morphism, A.truncation);
    for (const auto& w : enumerate_words(*A.quiver, 1)) {
        HomElem v;
        v.add(w.factors[0], Scalar(A.field, 1));
        f.f.set(w, v);
    }
    return f;
}

AInfFunctor compose_functors(const AInfFunctor& f, const AInfFunctor& g) {
    if (f.truncation != g.truncation) throw std::logic_error("compose_functors: truncations differ");
    AInfFunctor h;
    h.src = f.src;
    h.tgt = g.tgt;
    h.truncation = f.truncation;
    h.obj.resize(f.obj.size());
    for (std::size_t i = 0; i < f.obj.size(); ++i) h.obj[i] = g.obj.at(static_cast<std::size_t>(f.obj[i]));
    h.f = materialize_morphism(*f.src, h.truncation, [&](const TensorWord& w) {
        HomElem out;
        for (int n = 1; n <= w.length(); ++n)
            for (const auto& [wb, c] : expand_morphism(f.f, f.obj, w, n)) {
                HomElem v = g.f.apply(wb);
                for (const auto& [ref, cv] : v) out.add(ref, c * cv);
            }
        return out;
    });
    return h;
}

bool functor_equal(const AInfFunctor& f, const AInfFunctor& g, const AInfCategory& A) {
    if (f.obj != g.obj || f.truncation != g.truncation) return false;
    for (int m = 1; m <= f.truncation; ++m)
        for (const auto& w : enumerate_words(*A.quiver, m))
            if (!(f.f.apply(w) == g.f.apply(w))) return false;
    return true;
}

GradedMap b1_map(const AInfCategory& A, int x, int y) {
    GradedMap m(A.hom(x, y), A.hom(x, y), 1, A.field);
    const GradedSpace& s = A.hom(x, y);
    for (Deg d : s.degrees())
        for (int i = 0; i < s.dim(d); ++i) {
            TensorWord w;
            w.path = {x, y};
            w.factors = {{d, i}};
            for (const auto& [ref, c] : A.b.apply(w)) m.set({d, i}, ref, c);
        }
    return m;
}

Complex hom_complex(const AInfCategory& A, int x, int y) {
    Complex C;
    C.space = A.hom(x, y);
    C.d = b1_map(A, x, y);
    return C;
}

HomElem apply1(const ComponentFamily& F, int x, int y, const HomElem& e) {
    HomElem out;
    for (const auto& [ref, c] : e) {
        TensorWord w;
        w.path = {x, y};
        w.factors = {ref};
        for (const auto& [r2, c2] : F.apply(w)) out.add(r2, c * c2);
    }
    return out;
}

GradedMap right_unit_action(const AInfCategory& A, int x, int y, const HomElem& u) {
    const GradedSpace& s = A.hom(x, y);
    GradedMap m(s, s, 0, A.field);
    for (Deg d : s.degrees())
        for (int i = 0; i < s.dim(d); ++i) {
            Scalar sgn(A.field, d % 2 != 0 ? -1 : 1);
            for (const auto& [uref, uc] : u) {
                TensorWord w;
                w.path = {x, y, y};
                w.factors = {{d, i}, uref};
                for (const auto& [ref, c] : A.b.apply(w))
                    m.block(d).at(static_cast<std::size_t>(i), static_cast<std::size_t>(ref.idx)) += sgn * uc * c;
            }
        }
    return m;
}

GradedMap left_unit_action_neg(const AInfCategory& A, int x, int y, const HomElem& u) {
    const GradedSpace& s = A.hom(x, y);
    GradedMap m(s, s, 0, A.field);
    for (Deg d : s.degrees())
        for (int i = 0; i < s.dim(d); ++i)
            for (const auto& [uref, uc] : u) {
                TensorWord w;
                w.path = {x, x, y};
                w.factors = {uref, {d, i}};
                for (const auto& [ref, c] : A.b.apply(w))
                    m.block(d).at(static_cast<std::size_t>(i), static_cast<std::size_t>(ref.idx)) -= uc * c;
            }
    return m;
}

CheckReport check_unit_data(const AInfCategory& A, const UnitData& ud) {
    CheckReport rep;
    rep.truncation = A.truncation;
    int n = A.quiver->object_count();
    for (int x = 0; x < n; ++x) {
        auto it = ud.i0.find(x);
        if (it == ud.i0.end()) {
            if (!A.hom(x, x).empty()) rep.fail("unit-missing", A.quiver->object_name(x), "no unit");
            continue;
        }
        HomElem db = apply1(A.b, x, x, it->second);
        if (!db.is_zero()) rep.fail("unit-cycle", A.quiver->object_name(x), homelem_str(db));
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (A.hom(x, y).empty()) continue;
            GradedMap b1 = b1_map(A, x, y);
            GradedMap id = GradedMap::identity(A.hom(x, y), A.field);
            auto hit = ud.h.find({x, y});
            auto hpit = ud.hp.find({x, y});
            if (hit == ud.h.end() || hpit == ud.hp.end()) {
                rep.fail("unit-homotopy-missing", A.quiver->object_name(x) + "," + A.quiver->object_name(y), "");
                continue;
            }
            GradedMap R = right_unit_action(A, x, y, ud.i0.at(y));
            GradedMap L = left_unit_action_neg(A, x, y, ud.i0.at(x));
            if (!(R - id == hit->second.compose(b1) + b1.compose(hit->second)))
                rep.fail("right-unit-homotopy", A.quiver->object_name(x) + "," + A.quiver->object_name(y), "");
            if (!(L - id == hpit->second.compose(b1) + b1.compose(hpit->second)))
                rep.fail("left-unit-homotopy", A.quiver->object_name(x) + "," + A.quiver->object_name(y), "");
        }
    return rep;
}

std::optional<UnitData> solve_unit_homotopies(const AInfCategory& A, const Units& i0) {
    int n = A.quiver->object_count();
    for (int x = 0; x < n; ++x) {
        if (A.hom(x, x).empty() && i0.count(x) == 0) continue;
        HomElem db = apply1(A.b, x, x, i0.at(x));
        if (!db.is_zero()) throw std::invalid_argument("solve_unit_homotopies: candidate unit is not a cycle");
    }
    UnitData ud;
    ud.i0 = i0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const GradedSpace& s = A.hom(x, y);
            if (s.empty()) continue;
            GradedMap b1 = b1_map(A, x, y);
            auto MC = maps_complex(s, b1, s, b1, A.field);
            GradedMap id = GradedMap::identity(s, A.field);
            auto solve_homotopy = [&](const GradedMap& target) -> std::optional<GradedMap> {
                GradedElem t = MC.flatten(target);
                Matrix D = MC.cplx.d.block(-1);
                std::vector<Scalar> rhs(static_cast<std::size_t>(MC.cplx.space.dim(0)), Scalar::zero(A.field));
                for (const auto& [r, c] : t) rhs[static_cast<std::size_t>(r.idx)] = c;
                auto sol = solve_linear(D.transposed(), rhs);
                if (!sol) return std::nullopt;
                GradedElem e;
                for (std::size_t i = 0; i < sol->size(); ++i) e.add(BasisRef{-1, static_cast<int>(i)}, (*sol)[i]);
                return MC.unflatten(-1, e, A.field);
            };
            auto h = solve_homotopy(right_unit_action(A, x, y, i0.at(y)) - id);
            if (!h) return std::nullopt;
            auto hp = solve_homotopy(left_unit_action_neg(A, x, y, i0.at(x)) - id);
            if (!hp) return std::nullopt;
            ud.h.emplace(std::make_pair(x, y), std::move(*h));
            ud.hp.emplace(std::make_pair(x, y), std::move(*hp));
        }
    return ud;
}

bool is_strictly_unital(const AInfCategory& A, const Units& i0, CheckReport* report) {
    CheckReport rep;
    rep.truncation = A.truncation;
    int n = A.quiver->object_count();
    for (int x = 0; x < n; ++x) {
        if (A.hom(x, x).empty() && i0.count(x) == 0) continue;
        if (i0.count(x) == 0) {
            rep.fail("strict-unit-missing", A.quiver->object_name(x), "");
            continue;
        }
        HomElem db = apply1(A.b, x, x, i0.at(x));
        if (!db.is_zero()) rep.fail("strict-unit-cycle", A.quiver->object_name(x), homelem_str(db));
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const GradedSpace& s = A.hom(x, y);
            if (s.empty()) continue;
            if (i0.count(x) == 0 || i0.count(y) == 0) continue;
            GradedMap id = GradedMap::identity(s, A.field);
            if (!(right_unit_action(A, x, y, i0.at(y)) == id))
                rep.fail("strict-right-unit", A.quiver->object_name(x) + "," + A.quiver->object_name(y), "");
            if (!(left_unit_action_neg(A, x, y, i0.at(x)) == id))
                rep.fail("strict-left-unit", A.quiver->object_name(x) + "," + A.quiver->object_name(y), "");
        }
    // words containing a unit are killed by b_n, n >= 3
    for (int arity = 3; arity <= A.truncation; ++arity)
        for (const auto& w : enumerate_words(*A.quiver, arity - 1))
            for (int pos = 0; pos <= w.length(); ++pos) {
                int obj = w.path[static_cast<std::size_t>(pos)];
                if (i0.count(obj) == 0) continue;
                HomElem total;
                for (const auto& [uref, uc] : i0.at(obj)) {
                    TensorWord wu;
                    wu.path.assign(w.path.begin(), w.path.begin() + pos + 1);
                    wu.path.push_back(obj);
                    wu.path.insert(wu.path.end(), w.path.begin() + pos + 1, w.path.end());
                    wu.factors.assign(w.factors.begin(), w.factors.begin() + pos);
                    wu.factors.push_back(uref);
                    wu.factors.insert(wu.factors.end(), w.factors.begin() + pos, w.factors.end());
                    for (const auto& [ref, c] : A.b.apply(wu)) total.add(ref, uc * c);
                }
                if (!total.is_zero())
                    rep.fail("strict-unit-kills b_" + std::to_string(arity),
                             word_label(*A.quiver, w) + " pos " + std::to_string(pos), homelem_str(total));
            }
    if (report) *report = rep;
    return rep.pass;
}

std::optional<Units> is_unital_functor(const AInfFunctor& f, const AInfCategory& A, const AInfCategory& B,
                                       const Units& unitsA, const Units& unitsB) {
    Units v;
    for (int x = 0; x < A.quiver->object_count(); ++x) {
        if (unitsA.count(x) == 0) continue;
        int xf = f.ob(x);
        HomElem t = apply1(f.f, x, x, unitsA.at(x)) - unitsB.at(xf);
        if (t.is_zero()) {
            v[x] = HomElem{};
            continue;
        }
        const GradedSpace& s = B.hom(xf, xf);
        Matrix blk = b1_map(B, xf, xf).block(-2);
        std::vector<Scalar> rhs(static_cast<std::size_t>(s.dim(-1)), Scalar::zero(B.field));
        for (const auto& [r, c] : t) {
            if (r.deg != -1) return std::nullopt;
            rhs[static_cast<std::size_t>(r.idx)] = c;
        }
        auto sol = solve_linear(blk.transposed(), rhs);
        if (!sol) return std::nullopt;
        HomElem vx;
        for (std::size_t i = 0; i < sol->size(); ++i) vx.add(BasisRef{-2, static_cast<int>(i)}, (*sol)[i]);
        v[x] = vx;
    }
    return v;
}

Envelope envelope_su(const AInfCategory& A) {
    Envelope env;
    auto Q = std::make_shared<GradedQuiver>(*A.quiver);
    for (int x = 0; x < Q->object_count(); ++x) env.i0ref[x] = Q->hom_mut(x, x).add_basis(-1, "i0su");
    env.cat.field = A.field;
    env.cat.quiver = Q;
    env.cat.truncation = A.truncation;
    env.cat.b = ComponentFamily::make(ComponentFamily::Kind::coderivation, A.truncation);
    for (int k = 1; k <= A.truncation; ++k) env.cat.b.at(k).table = A.b.at(k).table;
    if (A.truncation >= 2)
        for (int x = 0; x < Q->object_count(); ++x)
            for (int y = 0; y < Q->object_count(); ++y) {
                const GradedSpace& s = Q->hom(x, y);
                for (Deg d : s.degrees())
                    for (int i = 0; i < s.dim(d); ++i) {
                        BasisRef r{d, i};
                        HomElem vr;
                        vr.add(r, Scalar(A.field, d % 2 != 0 ? -1 : 1));
                        TensorWord wr;
                        wr.path = {x, y, y};
                        wr.factors = {r, env.i0ref.at(y)};
                        env.cat.b.set(wr, vr);  // (z (x) i0su) b2 = (-1)^{deg z} z
                        HomElem vl;
                        vl.add(r, Scalar(A.field, -1));
                        TensorWord wl;
                        wl.path = {x, x, y};
                        wl.factors = {env.i0ref.at(x), r};
                        env.cat.b.set(wl, vl);  // (i0su (x) z) b2 = -z
                    }
            }
    for (auto& [x, ref] : env.i0ref) {
        HomElem u;
        u.add(ref, Scalar(A.field, 1));
        env.i0[x] = u;
    }
    env.e.src = A.quiver;
    env.e.tgt = Q;
    env.e.obj = identity_obj(*A.quiver);
    env.e.truncation = A.truncation;
    env.e.f = ComponentFamily::make(ComponentFamily::Kind::morphism, A.truncation);
    for (const auto& w : enumerate_words(*A.quiver, 1)) {
        HomElem v;
        v.add(w.factors[0], Scalar(A.field, 1));
        env.e.f.set(w, v);
    }
    return env;
}

AInfFunctor su_projection(const Envelope& env, const AInfCategory& A, const Units& units) {
    if (!is_strictly_unital(A, units)) throw std::invalid_argument("su_projection: category is not strictly unital");
    AInfFunctor pi;
    pi.src = env.cat.quiver;
    pi.tgt = A.quiver;
    pi.obj = identity_obj(*A.quiver);
    pi.truncation = A.truncation;
    pi.f = ComponentFamily::make(ComponentFamily::Kind::morphism, A.truncation);
    for (const auto& w : enumerate_words(*env.cat.quiver, 1)) {
        int x = w.from(), y = w.to();
        HomElem v;
        if (x == y && w.factors[0] == env.i0ref.at(x))
            v = units.at(x);
        else
            v.add(w.factors[0], Scalar(A.field, 1));
        pi.f.set(w, v);
    }
    return pi;
}

namespace {

std::map<std::pair<int, int>, GradedMap> family_g1_inverse(const AInfCategory& A, const ComponentFamily& g,
                                                           const char* who) {
    const GradedQuiver& Q = *A.quiver;
    std::map<std::pair<int, int>, GradedMap> g1inv;
    for (int x = 0; x < Q.object_count(); ++x)
        for (int y = 0; y < Q.object_count(); ++y) {
            const GradedSpace& s = Q.hom(x, y);
            if (s.empty()) continue;
            GradedMap m(s, s, 0, A.field);
            for (Deg d : s.degrees())
                for (int i = 0; i < s.dim(d); ++i) {
                    TensorWord w;
                    w.path = {x, y};
                    w.factors = {{d, i}};
                    for (const auto& [r, c] : g.apply(w)) m.set({d, i}, r, c);
                }
            GradedMap inv(s, s, 0, A.field);
            for (Deg d : s.degrees()) {
                auto mi = inverse(m.block(d));
                if (!mi) throw std::invalid_argument(std::string(who) + ": g_1 is not invertible");
                inv.block(d) = *mi;
            }
            g1inv.emplace(std::make_pair(x, y), std::move(inv));
        }
    return g1inv;
}

}  // namespace

ComponentFamily invert_family(const AInfCategory& A, const ComponentFamily& g) {
    const GradedQuiver& Q = *A.quiver;
    int N = g.truncation;
    auto g1inv = family_g1_inverse(A, g, "invert_family");
    ComponentFamily gbar = ComponentFamily::make(ComponentFamily::Kind::morphism, N);
    std::vector<int> id_obj = identity_obj(Q);
    for (int m = 1; m <= N; ++m)
        for (const auto& w : enumerate_words(Q, m)) {
            HomElem target;
            if (m == 1) target.add(w.factors[0], Scalar(A.field, 1));
            for (int n = 2; n <= m; ++n)
                for (const auto& [wb, c] : expand_morphism(gbar, id_obj, w, n)) {
                    HomElem v = g.apply(wb);
                    for (const auto& [ref, cv] : v) target.add(ref, -(c * cv));
                }
            if (target.is_zero()) continue;
            HomElem v = to_homelem(g1inv.at({w.from(), w.to()}).apply(to_graded(target)));
            if (!v.is_zero()) gbar.set(w, v);
        }
    return gbar;
}

Transport transport_structure(const AInfCategory& A, const ComponentFamily& g) {
    const GradedQuiver& Q = *A.quiver;
    int N = A.truncation;
    std::vector<int> id_obj = identity_obj(Q);
    auto g1inv = family_g1_inverse(A, g, "transport_structure");
    Transport out;
    out.cat.field = A.field;
    out.cat.quiver = A.quiver;
    out.cat.truncation = N;
    out.cat.b = ComponentFamily::make(ComponentFamily::Kind::coderivation, N);
    for (int m = 1; m <= N; ++m)
        for (const auto& w : enumerate_words(Q, m)) {
            // b'_m g_1 = sum_n (g-expansion) b_n - sum_{k<m} (1 (x) b'_k (x) 1) g
            HomElem rhs;
            for (int n = 1; n <= m; ++n)
                for (const auto& [wb, c] : expand_morphism(g, id_obj, w, n)) {
                    HomElem v = A.b.apply(wb);
                    for (const auto& [ref, cv] : v) rhs.add(ref, c * cv);
                }
            for (int k = 1; k < m; ++k)
                for (int p = 0; p + k <= m; ++p)
                    for (const auto& [w2, c] : apply_at(out.cat.b, w, p, k)) {
                        HomElem v = g.apply(w2);
                        for (const auto& [ref, cv] : v) rhs.add(ref, -(c * cv));
                    }
            if (rhs.is_zero()) continue;
            HomElem v = to_homelem(g1inv.at({w.from(), w.to()}).apply(to_graded(rhs)));
            if (!v.is_zero()) out.cat.b.set(w, v);
        }
    out.g.src = A.quiver;
    out.g.tgt = A.quiver;
    out.g.obj = id_obj;
    out.g.truncation = N;
    out.g.f = g;
    return out;
}

std::vector<Units> find_unit_candidates(const AInfCategory& A, std::size_t max_combos) {
    int n = A.quiver->object_count();
    std::vector<std::vector<HomElem>> per_object(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        if (A.hom(x, x).empty()) continue;
        Cohomology H = cohomology(hom_complex(A, x, x));
        auto it = H.representatives.find(-1);
        if (it == H.representatives.end()) continue;
        std::vector<HomElem> cands;
        for (const auto& r : it->second) cands.push_back(to_homelem(r));
        std::size_t k = cands.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) cands.push_back(cands[i] + cands[j]);
        per_object[static_cast<std::size_t>(x)] = std::move(cands);
    }
    std::vector<Units> combos;
    combos.emplace_back();
    for (int x = 0; x < n; ++x) {
        if (per_object[static_cast<std::size_t>(x)].empty()) continue;
        std::vector<Units> next;
        for (const auto& base : combos) {
            for (const auto& c : per_object[static_cast<std::size_t>(x)]) {
                if (next.size() >= max_combos) break;
                Units u = base;
                u[x] = c;
                next.push_back(std::move(u));
            }
        }
        combos = std::move(next);
        if (combos.empty()) break;
    }
    return combos;
}

HomElem DGCategoryInput::compose(int x, int y, int z, const HomElem& a, const HomElem& b) const {
    HomElem out;
    auto it = mult.find({x, y, z});
    if (it == mult.end()) return out;
    for (const auto& [ra, ca] : a)
        for (const auto& [rb, cb] : b) {
            auto jt = it->second.find({ra, rb});
            if (jt == it->second.end()) continue;
            for (const auto& [r, c] : jt->second) out.add(r, ca * cb * c);
        }
    return out;
}

DGImport dg_import(const DGCategoryInput& in, int truncation) {
    int n = static_cast<int>(in.objects.size());
    auto basis_of = [&](int x, int y) {
        std::vector<BasisRef> refs;
        auto it = in.hom.find({x, y});
        if (it == in.hom.end()) return refs;
        for (Deg d : it->second.degrees())
            for (int i = 0; i < it->second.dim(d); ++i) refs.push_back({d, i});
        return refs;
    };
    auto dmap = [&](int x, int y, const HomElem& e) {
        auto it = in.d.find({x, y});
        if (it == in.d.end()) return HomElem{};
        return to_homelem(it->second.apply(to_graded(e)));
    };
    auto single = [&](BasisRef r) {
        HomElem e;
        e.add(r, Scalar(in.field, 1));
        return e;
    };
    for (const auto& [pair, dm] : in.d) {
        if (dm.degree() != 1) throw DGImportError("differential-degree", "degree != 1");
        if (!dm.compose(dm).is_zero()) throw DGImportError("d-squared", "some hom pair has d^2 != 0");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (BasisRef a : basis_of(x, y))
                    for (BasisRef b : basis_of(y, z)) {
                        HomElem lhs = dmap(x, z, in.compose(x, y, z, single(a), single(b)));
                        HomElem rhs = in.compose(x, y, z, dmap(x, y, single(a)), single(b));
                        HomElem t = in.compose(x, y, z, single(a), dmap(y, z, single(b)));
                        if (a.deg % 2 != 0) t.scale(Scalar(in.field, -1));
                        rhs.add(t);
                        if (!(lhs == rhs)) throw DGImportError("leibniz", "at a basis pair");
                    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int t = 0; t < n; ++t)
                    for (BasisRef a : basis_of(x, y))
                        for (BasisRef b : basis_of(y, z))
                            for (BasisRef c : basis_of(z, t)) {
                                HomElem l = in.compose(x, z, t, in.compose(x, y, z, single(a), single(b)), single(c));
                                HomElem r = in.compose(x, y, t, single(a), in.compose(y, z, t, single(b), single(c)));
                                if (!(l == r)) throw DGImportError("associativity", "at a basis triple");
                            }
    for (int x = 0; x < n; ++x) {
        auto it = in.unit.find(x);
        bool needed = in.hom.count({x, x}) && !in.hom.at({x, x}).empty();
        if (it == in.unit.end()) {
            if (needed) throw DGImportError("unit", "missing unit for " + in.objects[static_cast<std::size_t>(x)]);
            continue;
        }
        if (!dmap(x, x, it->second).is_zero()) throw DGImportError("unit", "d(1) != 0");
        for (int y = 0; y < n; ++y) {
            for (BasisRef a : basis_of(x, y))
                if (!(in.compose(x, x, y, it->second, single(a)) == single(a)))
                    throw DGImportError("unit", "left unit law fails");
            for (BasisRef a : basis_of(y, x))
                if (!(in.compose(y, x, x, single(a), it->second) == single(a)))
                    throw DGImportError("unit", "right unit law fails");
        }
    }
    // suspension: sA degree = degree - 1, labels and per-degree indices kept
    auto Q = std::make_shared<GradedQuiver>(GradedQuiver(in.objects));
    for (const auto& [pair, s] : in.hom)
        for (Deg d : s.degrees())
            for (int i = 0; i < s.dim(d); ++i) Q->hom_mut(pair.first, pair.second).add_basis(d - 1, s.label({d, i}));
    DGImport out;
    out.cat.field = in.field;
    out.cat.quiver = Q;
    out.cat.truncation = truncation;
    out.cat.b = ComponentFamily::make(ComponentFamily::Kind::coderivation, truncation);
    auto shift = [](const HomElem& e) {
        HomElem r;
        for (const auto& [ref, c] : e) r.add(BasisRef{ref.deg - 1, ref.idx}, c);
        return r;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (BasisRef a : basis_of(x, y)) {
                HomElem da = dmap(x, y, single(a));
                if (da.is_zero()) continue;
                TensorWord w;
                w.path = {x, y};
                w.factors = {{a.deg - 1, a.idx}};
                out.cat.b.set(w, shift(da));  // b_1(sa) = s(a d)
            }
    if (truncation >= 2)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (BasisRef a : basis_of(x, y))
                        for (BasisRef b : basis_of(y, z)) {
                            HomElem ab = in.compose(x, y, z, single(a), single(b));
                            if (ab.is_zero()) continue;
                            TensorWord w;
                            w.path = {x, y, z};
                            w.factors = {{a.deg - 1, a.idx}, {b.deg - 1, b.idx}};
                            HomElem v = shift(ab);
                            if ((a.deg - 1) % 2 != 0) v.scale(Scalar(in.field, -1));
                            out.cat.b.set(w, v);  // b_2(sa (x) sb) = (-1)^{deg sa} s(ab)
                        }
    for (int x = 0; x < n; ++x) {
        auto it = in.unit.find(x);
        if (it != in.unit.end()) out.units[x] = shift(it->second);
    }
    return out;
}

}  // namespace ainfcat
