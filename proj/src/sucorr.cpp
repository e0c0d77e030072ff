#include "ainfcat/sucorr.hpp"

namespace ainfcat {

WordSum zeta_apply(const Envelope& env, int n, const WordTuple& t) {
    return xi_n_apply(env.cat, env.i0, n, t);
}

ZetaDecomp zeta_decompose(const Envelope& env, const TensorWord& w) {
    ZetaDecomp out;
    TensorWord cur;
    cur.path.push_back(w.from());
    for (int i = 0; i < w.length(); ++i) {
        int x = w.path[static_cast<std::size_t>(i)];
        int y = w.path[static_cast<std::size_t>(i + 1)];
        BasisRef r = w.factors[static_cast<std::size_t>(i)];
        if (x == y && env.i0ref.count(x) && r == env.i0ref.at(x)) {
            out.t.slots.push_back(cur);
            cur = empty_word(y);
            ++out.level;
        } else {
            cur.path.push_back(y);
            cur.factors.push_back(r);
        }
    }
    out.t.slots.push_back(cur);
    int n = out.level;
    long ex = static_cast<long>(n) * (n - 1) / 2;
    for (int l = 0; l < n; ++l) ex += static_cast<long>(n - l) * out.t.slots[static_cast<std::size_t>(l)].degree();
    out.sign = ex % 2 != 0 ? -1 : 1;
    return out;
}

bool zeta_bijective(const Envelope& env, const AInfCategory& A, int maxlen) {
    for (int m = 0; m <= maxlen; ++m) {
        std::map<Deg, long> su_dims, e_dims;
        for (const auto& w : enumerate_words(*env.cat.quiver, m)) ++su_dims[w.degree()];
        for (int n = 0; n <= m; ++n)
            for (const auto& t : enumerate_tuples(*A.quiver, n + 1, m - n))
                if (t.total_length() == m - n) ++e_dims[t.degree() - n];
        if (su_dims != e_dims) return false;
        // sanity: every word decomposes back to itself
        for (const auto& w : enumerate_words(*env.cat.quiver, m)) {
            ZetaDecomp d = zeta_decompose(env, w);
            WordSum z = zeta_apply(env, d.level, d.t);
            WordSum expect;
            expect.add(w, Scalar(A.field, d.sign));
            if (!(z == expect)) return false;
        }
    }
    return true;
}

ESum btilde(const AInfCategory& A, const EElem& e) {
    ESum out;
    int n = e.level;
    // (-1)^n sum_i (1^i (x) b (x) 1^{n-i}), staying at level n
    for (int i = 0; i <= n; ++i) {
        Deg pre = 0;
        for (int l = 0; l < i; ++l) pre += e.t.slots[static_cast<std::size_t>(l)].degree();
        bool flip = (pre % 2 != 0) != (n % 2 != 0);
        for (const auto& [w, c] : coderivation_full(A.b, e.t.slots[static_cast<std::size_t>(i)])) {
            WordTuple s = e.t;
            s.slots[static_cast<std::size_t>(i)] = w;
            out.add(EElem{n, s}, flip ? -c : c);
        }
    }
    // nu_n down to level n-1
    if (n >= 1)
        for (const auto& [s, c] : nu_n_apply(n, e.t)) out.add(EElem{n - 1, s}, c);
    return out;
}

FormalSum<std::pair<EElem, EElem>> delta_tilde(const EElem& e) {
    FormalSum<std::pair<EElem, EElem>> out;
    int n = e.level;
    for (int i = 0; i <= n; ++i) {
        for (const auto& [cut, c] : cut_comult(e.t.slots[static_cast<std::size_t>(i)], 2)) {
            WordTuple left, right;
            left.slots.assign(e.t.slots.begin(), e.t.slots.begin() + i);
            left.slots.push_back(cut.slots[0]);
            right.slots.push_back(cut.slots[1]);
            right.slots.insert(right.slots.end(), e.t.slots.begin() + i + 1, e.t.slots.end());
            // (s^i (x) s^{n-i}): the right shift moves past the left block and
            // past the left shift operator
            long ex = static_cast<long>(n - i) * ((left.degree() % 2 != 0 ? 1 : 0) + i);
            Scalar cc = ex % 2 != 0 ? -c : c;
            out.add({EElem{i, left}, EElem{n - i, right}}, cc);
        }
    }
    return out;
}

CheckReport verify_E(const Envelope& env, const AInfCategory& A, int maxlevel) {
    CheckReport rep;
    rep.truncation = A.truncation;
    const GradedQuiver& Q = *A.quiver;
    for (int n = 0; n <= maxlevel; ++n) {
        int maxtotal = std::max(0, A.truncation - n);
        for (const auto& t : enumerate_tuples(Q, n + 1, maxtotal)) {
            EElem e{n, t};
            // b-tilde squared (second application needs one more b arity;
            // stay a length short of the truncation)
            if (t.total_length() + n < A.truncation) {
                ESum sq;
                for (const auto& [e2, c] : btilde(A, e)) sq.add_scaled(btilde(A, e2), c);
                if (!sq.is_zero()) rep.fail("btilde-squared n=" + std::to_string(n), word_label(Q, t.slots[0]), "");
            }
            // zeta intertwines the differentials: zeta(btilde(e)) = zeta(e) b^su
            WordSum lhs;
            for (const auto& [e2, c] : btilde(A, e)) lhs.add_scaled(zeta_apply(env, e2.level, e2.t), c);
            WordSum rhs;
            for (const auto& [w, c] : zeta_apply(env, n, t)) rhs.add_scaled(coderivation_full(env.cat.b, w), c);
            if (!(lhs == rhs)) rep.fail("zeta-b n=" + std::to_string(n), word_label(Q, t.slots[0]), "");
            // zeta intertwines the comultiplications
            TupleSum dl;
            for (const auto& [pair, c] : delta_tilde(e))
                for (const auto& [wl, cl] : zeta_apply(env, pair.first.level, pair.first.t))
                    for (const auto& [wr, cr] : zeta_apply(env, pair.second.level, pair.second.t))
                        dl.add(WordTuple{{wl, wr}}, c * cl * cr);
            TupleSum dr;
            for (const auto& [w, c] : zeta_apply(env, n, t)) dr.add_scaled(cut_comult(w, 2), c);
            if (!(dl == dr)) rep.fail("zeta-Delta n=" + std::to_string(n), word_label(Q, t.slots[0]), "");
        }
    }
    return rep;
}

const WordSum& PhiFamily::phi_n(int n, const WordTuple& t) const {
    static const WordSum kZero;
    if (n < 1 || n > static_cast<int>(higher.size())) return kZero;
    const auto& m = higher[static_cast<std::size_t>(n - 1)];
    auto it = m.find(t);
    return it == m.end() ? kZero : it->second;
}

WordSum PhiFamily::phi_full(int n, const WordTuple& t) const {
    if (n == 0) return morphism_full(phi0.f, phi0.obj, t.slots.at(0));
    return phi_n(n, t);
}

PhiFamily functor_to_family(const Envelope& env, const AInfFunctor& U, const AInfCategory& A,
                            const AInfCategory& B) {
    (void)B;
    PhiFamily F;
    F.phi0 = compose_functors(env.e, U);
    F.truncation = A.truncation;
    F.higher.resize(static_cast<std::size_t>(A.truncation));
    for (int n = 1; n <= A.truncation; ++n)
        for (const auto& t : enumerate_tuples(*A.quiver, n + 1, A.truncation - n)) {
            WordSum val;
            for (const auto& [w, c] : zeta_apply(env, n, t)) val.add_scaled(morphism_full(U.f, U.obj, w), c);
            if (!val.is_zero()) F.higher[static_cast<std::size_t>(n - 1)][t] = std::move(val);
        }
    return F;
}

CheckReport check_family(const PhiFamily& F, const AInfCategory& A, const AInfCategory& B) {
    CheckReport rep;
    rep.truncation = F.truncation;
    rep.merge(check_functor(F.phi0, A, B));
    const GradedQuiver& Q = *A.quiver;
    for (int n = 1; n <= F.truncation; ++n)
        for (const auto& t : enumerate_tuples(Q, n + 1, F.truncation - n)) {
            // counit: no length-0 words in the values
            for (const auto& [w, c] : F.phi_n(n, t))
                if (w.length() == 0)
                    rep.fail("family-counit n=" + std::to_string(n), word_label(Q, t.slots[0]), "");
            // comultiplication system
            TupleSum lhs;
            for (const auto& [w, c] : F.phi_n(n, t)) lhs.add_scaled(cut_comult(w, 2), c);
            TupleSum rhs;
            for (int i = 0; i <= n; ++i)
                for (const auto& [cut, c] : cut_comult(t.slots[static_cast<std::size_t>(i)], 2)) {
                    WordTuple left, right;
                    left.slots.assign(t.slots.begin(), t.slots.begin() + i);
                    left.slots.push_back(cut.slots[0]);
                    right.slots.push_back(cut.slots[1]);
                    right.slots.insert(right.slots.end(), t.slots.begin() + i + 1, t.slots.end());
                    // phi_{n-i} moves past the left block and past phi_i
                    long ex = static_cast<long>(n - i) * ((left.degree() % 2 != 0 ? 1 : 0) + i);
                    bool flip = ex % 2 != 0;
                    for (const auto& [wl, cl] : F.phi_full(i, left))
                        for (const auto& [wr, cr] : F.phi_full(n - i, right)) {
                            Scalar cc = c * cl * cr;
                            if (flip) cc = -cc;
                            rhs.add(WordTuple{{wl, wr}}, cc);
                        }
                }
            if (!(lhs == rhs)) rep.fail("family-Delta n=" + std::to_string(n), word_label(Q, t.slots[0]), "");
            // differential system: phi_n b = (-1)^n sum_i (1^i (x) b (x) 1^{n-i}) phi_n + nu_n phi_{n-1}
            WordSum bl;
            for (const auto& [w, c] : F.phi_n(n, t)) bl.add_scaled(coderivation_full(B.b, w), c);
            WordSum br;
            for (int i = 0; i <= n; ++i) {
                Deg pre = 0;
                for (int l = 0; l < i; ++l) pre += t.slots[static_cast<std::size_t>(l)].degree();
                bool flip = (pre % 2 != 0) != (n % 2 != 0);
                for (const auto& [w, c] : coderivation_full(A.b, t.slots[static_cast<std::size_t>(i)])) {
                    WordTuple s = t;
                    s.slots[static_cast<std::size_t>(i)] = w;
                    br.add_scaled(F.phi_n(n, s), flip ? -c : c);
                }
            }
            for (const auto& [s, c] : nu_n_apply(n, t)) br.add_scaled(F.phi_full(n - 1, s), c);
            if (!(bl == br)) rep.fail("family-b n=" + std::to_string(n), word_label(Q, t.slots[0]), "");
        }
    return rep;
}

AInfFunctor family_to_functor(const Envelope& env, const PhiFamily& F, const AInfCategory& A,
                              const AInfCategory& B) {
    CheckReport rep = check_family(F, A, B);
    if (!rep.pass)
        throw IncompatibleFamily("family_to_functor: " + rep.failures.front().check + " at " +
                                 rep.failures.front().where);
    AInfFunctor U;
    U.src = env.cat.quiver;
    U.tgt = F.phi0.tgt;
    U.obj = F.phi0.obj;
    U.truncation = F.truncation;
    U.f = materialize_morphism(*env.cat.quiver, F.truncation, [&](const TensorWord& w) {
        ZetaDecomp d = zeta_decompose(env, w);
        HomElem out;
        for (const auto& [word, c] : F.phi_full(d.level, d.t))
            if (word.length() == 1) out.add(word.factors[0], Scalar(A.field, d.sign) * c);
        return out;
    });
    return U;
}

ExplicitDCoder family_n1_slice(const PhiFamily& F, const AInfCategory& A, const AInfCategory& B) {
    (void)B;
    ExplicitDCoder r;
    r.f = r.g = F.phi0;
    r.degree = -1;
    r.truncation = F.truncation - 1;
    PhiFamily copy = F;
    r.eval = [copy](const TensorWord& w1, const TensorWord& w2) {
        return copy.phi_n(1, WordTuple{{w1, w2}});
    };
    (void)A;
    return r;
}

}  // namespace ainfcat
