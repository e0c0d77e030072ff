#include <doctest.h>

#include "ainfcat/ainfty.hpp"
#include "ainfcat/fixtures.hpp"

using namespace ainfcat;

namespace {
const Field Q = Field::rationals();
Scalar q(long n) { return Scalar(Q, n); }
}  // namespace

TEST_CASE("dg_import: exterior fixture passes all axioms and is strictly unital") {
    auto imp = dg_import(exterior_dg_input(Q), 4);
    CHECK(check_ainfty(imp.cat).pass);
    CHECK(is_strictly_unital(imp.cat, imp.units));
    // b2(i0 (x) i0) = i0 with the chosen signs (unit squares to itself)
    const auto& u = imp.units.at(0);
    TensorWord w;
    w.path = {0, 0, 0};
    w.factors = {u.terms()[0].first, u.terms()[0].first};
    HomElem sq = imp.cat.b.apply(w);
    // (s1 (x) s1) b2 = (-1)^{deg s1} s(1*1) = -s1; composite (1 (x) i0)b2
    // applied to i0 carries the extra Koszul sign and gives back i0
    HomElem expect = u;
    expect.scale(q(-1));
    CHECK(sq == expect);
}

TEST_CASE("dg_import rejects broken input naming the axiom") {
    auto in = exterior_dg_input(Q);
    // x*y := 1 makes (x*y)*y = y differ from x*(y*y) = 0
    auto bad = in;
    HomElem wrong;
    wrong.add(BasisRef{0, 0}, q(1));
    bad.mult[{0, 0, 0}][{BasisRef{1, 0}, BasisRef{1, 1}}] = wrong;
    bool caught = false;
    try {
        dg_import(bad, 3);
    } catch (const DGImportError& e) {
        caught = true;
        CHECK(e.axiom == "associativity");
    }
    CHECK(caught);

    // d(1) = x makes the Leibniz rule fail on (1,1): d(1*1) = x but
    // (d1)*1 + 1*(d1) = 2x
    auto bad2 = in;
    GradedMap d2 = bad2.d.at({0, 0});
    d2.set(BasisRef{0, 0}, BasisRef{1, 0}, q(1));
    bad2.d[{0, 0}] = d2;
    bool caught2 = false;
    try {
        dg_import(bad2, 3);
    } catch (const DGImportError& e) {
        caught2 = true;
        CHECK(e.axiom == "leibniz");
    }
    CHECK(caught2);
}

TEST_CASE("frozen suspension signs are the valid ones (machine search)") {
    // candidates: b1(sa) = e1 s(ad); b2(sa (x) sb) = e2 (-1)^{al*deg sa + be*deg sb} s(ab); i0 = e3 s(1).
    // exactly the tuples with al = 1, be = 0, e3 = e2 must pass; frozen choice is
    // e1 = +1, e2 = +1, al = 1, be = 0, e3 = +1.
    auto in = exterior_dg_input(Q);
    int n_pass = 0;
    bool frozen_passes = false;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            for (int al : {0, 1})
                for (int be : {0, 1})
                    for (int e3 : {1, -1}) {
                        // build the candidate structure by hand
                        auto Qv = std::make_shared<GradedQuiver>(GradedQuiver({"X"}));
                        const GradedSpace& s0 = in.hom.at({0, 0});
                        for (Deg d : s0.degrees())
                            for (int i = 0; i < s0.dim(d); ++i) Qv->hom_mut(0, 0).add_basis(d - 1, s0.label({d, i}));
                        AInfCategory C;
                        C.field = Q;
                        C.quiver = Qv;
                        C.truncation = 3;
                        C.b = ComponentFamily::make(ComponentFamily::Kind::coderivation, 3);
                        auto shift = [](const HomElem& e) {
                            HomElem r;
                            for (const auto& [ref, c] : e) r.add(BasisRef{ref.deg - 1, ref.idx}, c);
                            return r;
                        };
                        auto single = [&](BasisRef r) {
                            HomElem e;
                            e.add(r, q(1));
                            return e;
                        };
                        for (Deg d : s0.degrees())
                            for (int i = 0; i < s0.dim(d); ++i) {
                                HomElem da = to_homelem(in.d.at({0, 0}).apply(to_graded(single({d, i}))));
                                if (da.is_zero()) continue;
                                TensorWord w;
                                w.path = {0, 0};
                                w.factors = {{d - 1, i}};
                                HomElem v = shift(da);
                                v.scale(q(e1));
                                C.b.set(w, v);
                            }
                        for (Deg da : s0.degrees())
                            for (int i = 0; i < s0.dim(da); ++i)
                                for (Deg db : s0.degrees())
                                    for (int j = 0; j < s0.dim(db); ++j) {
                                        HomElem ab = in.compose(0, 0, 0, single({da, i}), single({db, j}));
                                        if (ab.is_zero()) continue;
                                        TensorWord w;
                                        w.path = {0, 0, 0};
                                        w.factors = {{da - 1, i}, {db - 1, j}};
                                        HomElem v = shift(ab);
                                        long ex = static_cast<long>(al) * (da - 1) + static_cast<long>(be) * (db - 1);
                                        long sgn = (ex % 2 != 0 ? -1 : 1) * e2;
                                        v.scale(q(sgn));
                                        C.b.set(w, v);
                                    }
                        Units units;
                        HomElem u = shift(in.unit.at(0));
                        u.scale(q(e3));
                        units[0] = u;
                        bool ok = check_ainfty(C).pass && is_strictly_unital(C, units);
                        if (ok) {
                            ++n_pass;
                            if (e1 == 1 && e2 == 1 && al == 1 && be == 0 && e3 == 1) frozen_passes = true;
                            CHECK(al == 1);
                            CHECK(be == 0);
                            CHECK(e2 == e3);
                        }
                    }
    CHECK(n_pass == 4);
    CHECK(frozen_passes);
}

TEST_CASE("random dg fixtures pass the A-infinity equations at N=4") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        auto imp = dg_import(random_dg_input(seed, Q), 4);
        CHECK(check_ainfty(imp.cat).pass);
        CHECK(is_strictly_unital(imp.cat, imp.units));
    }
}

TEST_CASE("corrupting one structure constant fails check_ainfty at m=3") {
    auto imp = dg_import(exterior_dg_input(Q), 4);
    // flip the sign of b2(s1 (x) s1): associativity of unit actions now
    // fails, e.g. the m=3 equation on (sx, s1, s1) leaves 2*sx
    TensorWord w;
    w.path = {0, 0, 0};
    w.factors = {{-1, 0}, {-1, 0}};
    HomElem v = imp.cat.b.apply(w);
    REQUIRE(!v.is_zero());
    v.scale(q(-1));
    imp.cat.b.set(w, v);
    auto rep = check_ainfty(imp.cat);
    CHECK(!rep.pass);
    bool has_m3 = false;
    for (const auto& f : rep.failures)
        if (f.check == "ainfty m=3") has_m3 = true;
    CHECK(has_m3);
}

TEST_CASE("envelope is strictly unital, passes the axioms, e is a strict functor") {
    auto imp = dg_import(exterior_dg_input(Q), 4);
    auto env = envelope_su(imp.cat);
    CHECK(env.cat.quiver->hom(0, 0).dim(-1) == imp.cat.quiver->hom(0, 0).dim(-1) + 1);
    CHECK(check_ainfty(env.cat).pass);
    CHECK(is_strictly_unital(env.cat, env.i0));
    CHECK(check_functor(env.e, imp.cat, env.cat).pass);
    // two strict unit candidates of degree -1 in the envelope of a dg category
    CHECK(env.cat.quiver->hom(0, 0).dim(-1) == 2);
    // objects unchanged
    CHECK(env.cat.quiver->objects() == imp.cat.quiver->objects());
    // (i0su (x) i0su) b2 = -i0su: the value forced by b^2 = 0 and the
    // Koszul-signed strict unit equations
    TensorWord w;
    w.path = {0, 0, 0};
    w.factors = {env.i0ref.at(0), env.i0ref.at(0)};
    HomElem expect = env.i0.at(0);
    expect.scale(q(-1));
    CHECK(env.cat.b.apply(w) == expect);

    // envelope of a category with empty homs
    AInfCategory empty;
    empty.field = Q;
    empty.quiver = std::make_shared<GradedQuiver>(GradedQuiver({"X"}));
    empty.truncation = 3;
    empty.b = ComponentFamily::make(ComponentFamily::Kind::coderivation, 3);
    auto env2 = envelope_su(empty);
    CHECK(env2.cat.quiver->hom(0, 0).total_dim() == 1);
    CHECK(check_ainfty(env2.cat).pass);
    CHECK(is_strictly_unital(env2.cat, env2.i0));
}

TEST_CASE("su_projection splits the envelope embedding") {
    auto imp = dg_import(exterior_dg_input(Q), 4);
    auto env = envelope_su(imp.cat);
    auto pi = su_projection(env, imp.cat, imp.units);
    CHECK(check_functor(pi, env.cat, imp.cat).pass);
    auto comp = compose_functors(env.e, pi, imp.cat, imp.cat);
    CHECK(functor_equal(comp, identity_functor(imp.cat), imp.cat));
    // pi is strict
    for (int m = 2; m <= pi.truncation; ++m) CHECK(pi.f.at(m).table.empty());
}

TEST_CASE("solve_unit_homotopies: strict units admit homotopies; zero candidate fails") {
    auto imp = dg_import(exterior_dg_input(Q), 4);
    auto ud = solve_unit_homotopies(imp.cat, imp.units);
    REQUIRE(ud);
    CHECK(check_unit_data(imp.cat, *ud).pass);

    // i0 = 0 is a cycle but not a unit (nonzero cohomology)
    Units zero;
    zero[0] = HomElem{};
    CHECK(!solve_unit_homotopies(imp.cat, zero));
}

TEST_CASE("compose_functors: identity neutral, strict composition") {
    auto imp = dg_import(random_dg_input(7, Q), 3);
    auto id = identity_functor(imp.cat);
    auto c = compose_functors(id, id, imp.cat, imp.cat);
    CHECK(functor_equal(c, id, imp.cat));
    auto env = envelope_su(imp.cat);
    auto pi = su_projection(env, imp.cat, imp.units);
    auto epi = compose_functors(env.e, pi, imp.cat, imp.cat);
    CHECK(functor_equal(epi, identity_functor(imp.cat), imp.cat));
}

TEST_CASE("transport twists the structure and stays A-infinity; units survive") {
    auto tw = random_twist(11, 3, Q);
    CHECK(check_ainfty(tw.cat).pass);
    CHECK(check_functor(tw.phi, tw.cat, tw.D).pass);
    CHECK(!is_strictly_unital(tw.cat, tw.units));
    auto ud = solve_unit_homotopies(tw.cat, tw.units);
    REQUIRE(ud);
    CHECK(check_unit_data(tw.cat, *ud).pass);
    // v witnesses that phi is unital: i0 phi_1 = i0^D + v b_1
    for (const auto& [x, vx] : tw.v) {
        HomElem lhs = apply1(tw.phi.f, x, x, tw.units.at(x));
        HomElem rhs = tw.unitsD.at(x) + apply1(tw.D.b, x, x, vx);
        CHECK(lhs == rhs);
    }
    // inverse family composes to the identity
    auto gbar = invert_family(tw.D, tw.phi.f);
    AInfFunctor gbarf;
    gbarf.src = gbarf.tgt = tw.D.quiver;
    gbarf.obj = tw.phi.obj;
    gbarf.truncation = tw.phi.truncation;
    gbarf.f = gbar;
    auto c1 = compose_functors(tw.phi, gbarf, tw.cat, tw.cat);
    CHECK(functor_equal(c1, identity_functor(tw.cat), tw.cat));
    auto c2 = compose_functors(gbarf, tw.phi, tw.D, tw.D);
    CHECK(functor_equal(c2, identity_functor(tw.D), tw.D));
}

TEST_CASE("transport by identity family returns the same structure") {
    auto imp = dg_import(exterior_dg_input(Q), 3);
    auto id = identity_functor(imp.cat);
    auto tr = transport_structure(imp.cat, id.f);
    CHECK(tr.cat.b == imp.cat.b);
}

TEST_CASE("transport with g2 != 0 on a dg category produces b3 != 0 in general") {
    auto imp = dg_import(exterior_dg_input(Q), 3);
    ComponentFamily g = identity_functor(imp.cat).f;
    // g2( sx (x) sy ) = s1 (degree 0 + 0 -> hom degree 0? need matching degree)
    // pick any length-2 word and a target of the same degree
    bool set_g2 = false;
    for (const auto& w : enumerate_words(*imp.cat.quiver, 2)) {
        const GradedSpace& s = imp.cat.quiver->hom(w.from(), w.to());
        if (s.dim(w.degree()) > 0) {
            HomElem v;
            v.add(BasisRef{w.degree(), 0}, q(1));
            g.set(w, v);
            set_g2 = true;
            break;
        }
    }
    REQUIRE(set_g2);
    auto tr = transport_structure(imp.cat, g);
    CHECK(check_ainfty(tr.cat).pass);
    CHECK(check_functor(tr.g, tr.cat, imp.cat).pass);
    bool b3_nonzero = !tr.cat.b.at(3).table.empty();
    CHECK(b3_nonzero);
}

TEST_CASE("is_unital_functor: identity and strict dg functors have v = 0") {
    auto imp = dg_import(exterior_dg_input(Q), 3);
    auto id = identity_functor(imp.cat);
    auto v = is_unital_functor(id, imp.cat, imp.cat, imp.units, imp.units);
    REQUIRE(v);
    for (const auto& [x, vx] : *v) CHECK(vx.is_zero());

    // functor to the zero-cohomology-mismatch: send unit class elsewhere
    // (zero functor is not a functor here; instead test a unit candidate
    // that is a non-cohomologous cycle)
    auto env = envelope_su(imp.cat);
    // e : A -> A^su, units of A^su taken as i0su, but i0^A e = old unit is
    // NOT cohomologous to i0su in A^su... actually it is not even true that
    // they are non-cohomologous; instead corrupt: compare old unit against
    // 2*i0su.
    Units doubled;
    for (const auto& [x, u] : env.i0) {
        HomElem d = u;
        d.scale(q(2));
        doubled[x] = d;
    }
    auto v2 = is_unital_functor(env.e, imp.cat, env.cat, imp.units, doubled);
    CHECK(!v2);
}

TEST_CASE("find_unit_candidates recovers units of a dg category") {
    auto imp = dg_import(exterior_dg_input(Q), 3);
    auto cands = find_unit_candidates(imp.cat);
    bool found = false;
    for (const auto& u : cands) {
        try {
            if (solve_unit_homotopies(imp.cat, u)) {
                found = true;
                break;
            }
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(found);
}
