#include <doctest.h>

#include "ainfcat/dcoder.hpp"
#include "ainfcat/fixtures.hpp"

using namespace ainfcat;

namespace {
const Field Q = Field::rationals();
Scalar q(long n) { return Scalar(Q, n); }
}  // namespace

TEST_CASE("nu is a double (1,1)-coderivation of degree 0 with nu B1 = 0") {
    auto imp = dg_import(exterior_dg_input(Q), 4);
    auto nu = nu_explicit(imp.cat);
    CHECK(check_double_coderivation(nu).pass);
    auto nuc = components_of(nu);
    // components: nu_{1,0} = id, nu_{0,1} = -id, all others zero
    for (const auto& [nm, table] : nuc.comp) {
        CHECK((nm == std::make_pair(1, 0) || nm == std::make_pair(0, 1)));
        for (const auto& [pair, v] : table) {
            const auto& w = nm.first == 1 ? pair.first : pair.second;
            HomElem expect;
            expect.add(w.factors[0], q(nm.first == 1 ? 1 : -1));
            CHECK(v == expect);
        }
    }
    auto b1nu = B1(nuc, imp.cat, imp.cat);
    for (const auto& [nm, table] : b1nu.comp) CHECK(table.empty());
}

TEST_CASE("xi is a degree -1 double coderivation with xi B1 = nu (strictly unital)") {
    auto imp = dg_import(exterior_dg_input(Q), 4);
    auto xi = xi_explicit(imp.cat, imp.units);
    CHECK(xi.degree == -1);
    CHECK(check_double_coderivation(xi).pass);
    auto xic = components_of(xi);
    // only xi_{0,0} = i0
    for (const auto& [nm, table] : xic.comp) {
        CHECK(nm == std::make_pair(0, 0));
        for (const auto& [pair, v] : table) CHECK(v == imp.units.at(pair.first.from()));
    }
    auto b1xi = B1(xic, imp.cat, imp.cat);
    auto nuc = nu_dcoder(imp.cat);
    CHECK(dcoder_equal(b1xi, nuc));
}

TEST_CASE("corrupted r_{1,1} fails the law at (1,1,2)") {
    auto imp = dg_import(exterior_dg_input(Q), 3);
    auto nu = nu_explicit(imp.cat);
    auto corrupted = nu;
    corrupted.eval = [base = nu.eval](const TensorWord& w1, const TensorWord& w2) {
        WordSum out = base(w1, w2);
        if (w1.length() == 1 && w2.length() == 1) out.add(concat(w1, w2), Scalar(Field::rationals(), 1));
        return out;
    };
    auto rep = check_double_coderivation(corrupted);
    CHECK(!rep.pass);
    bool at112 = false;
    for (const auto& f : rep.failures)
        if (f.check.find("(1,1,2)") != std::string::npos) at112 = true;
    CHECK(at112);
}

TEST_CASE("B1 squares to zero on random double coderivations") {
    auto imp = dg_import(random_dg_input(5, Q), 4);
    Rng rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        auto r = random_dcoder(imp.cat, -1 + trial % 3, 3, rng);
        auto b2 = B1(B1(r, imp.cat, imp.cat), imp.cat, imp.cat);
        for (const auto& [nm, table] : b2.comp) CHECK(table.empty());
    }
}

TEST_CASE("post_compose and pre_compose: identity and B1 naturality") {
    auto imp = dg_import(exterior_dg_input(Q), 4);
    auto id = identity_functor(imp.cat);
    Rng rng(7);
    auto r = random_dcoder(imp.cat, -1, 3, rng);

    // identity leaves r unchanged
    CHECK(dcoder_equal(post_compose(r, id, imp.cat), r));
    CHECK(dcoder_equal(pre_compose(id, r, imp.cat), r));

    // chain-map property along a non-strict functor
    auto tw = random_twist(21, 3, Q);
    auto rtw = random_dcoder(tw.cat, -1, 2, rng);
    auto lhs = B1(post_compose(rtw, tw.phi, tw.D), tw.cat, tw.D);
    auto rhs = post_compose(B1(rtw, tw.cat, tw.cat), tw.phi, tw.D);
    CHECK(dcoder_equal(lhs, rhs));
}

TEST_CASE("pre_compose B1 naturality") {
    auto tw = random_twist(31, 3, Q);
    Rng rng(13);
    auto rD = random_dcoder(tw.D, -1, 2, rng);
    auto lhs = B1(pre_compose(tw.phi, rD, tw.cat), tw.cat, tw.D);
    auto rhs = pre_compose(tw.phi, B1(rD, tw.D, tw.D), tw.cat);
    CHECK(dcoder_equal(lhs, rhs));
}

TEST_CASE("strict functor collapses post_compose to r h_1") {
    auto imp = dg_import(exterior_dg_input(Q), 3);
    auto env = envelope_su(imp.cat);
    // e : A -> A^su is strict
    Rng rng(3);
    auto r = random_dcoder(imp.cat, -1, 2, rng);
    auto pushed = post_compose(r, env.e, env.cat);
    for (int n = 0; n <= pushed.truncation; ++n)
        for (int m = 0; n + m <= pushed.truncation; ++m)
            for (const auto& w1 : enumerate_words(*imp.cat.quiver, n))
                for (const auto& w2 : enumerate_words(*imp.cat.quiver, m, w1.to())) {
                    HomElem expect = apply1(env.e.f, w1.from(), w2.to(), r.component(w1, w2));
                    CHECK(pushed.component(w1, w2) == expect);
                }
}

TEST_CASE("xi/nu recursions and the xi_n identity families") {
    auto imp = dg_import(exterior_dg_input(Q), 4);
    CHECK(verify_xi_nu_recursions(imp.cat, imp.units, 3).pass);
    CHECK(verify_xin_identities(imp.cat, imp.units, 3).pass);

    auto imp2 = dg_import(random_dg_input(17, Q), 4);
    CHECK(verify_xi_nu_recursions(imp2.cat, imp2.units, 2).pass);
    CHECK(verify_xin_identities(imp2.cat, imp2.units, 2).pass);
}
