#include <doctest.h>

#include "ainfcat/coalgebra.hpp"

using namespace ainfcat;

namespace {
const Field Q = Field::rationals();
Scalar q(long n) { return Scalar(Q, n); }

GradedQuiver one_object(std::vector<std::pair<Deg, int>> dims) {
    GradedQuiver A({"X"});
    for (auto [d, n] : dims)
        for (int i = 0; i < n; ++i) A.hom_mut(0, 0).add_basis(d, "e" + std::to_string(d) + "_" + std::to_string(i));
    return A;
}
}  // namespace

TEST_CASE("discrete quiver is a unit for the tensor product") {
    auto D = discrete_quiver({"X"});
    CHECK(D.hom(0, 0).dim(0) == 1);
    auto T = tensor_quivers(D, D);
    CHECK(T.hom(0, 0).dim(0) == 1);
    CHECK(T.hom(0, 0).total_dim() == 1);

    auto E = discrete_quiver({});
    CHECK(E.object_count() == 0);

    auto D2 = discrete_quiver({"X", "Y"});
    CHECK(D2.hom(0, 1).total_dim() == 0);
    CHECK(D2.hom(1, 0).total_dim() == 0);

    // A (x) kS and kS (x) A match A degreewise
    auto A = one_object({{1, 1}, {2, 2}});
    auto L = tensor_quivers(A, discrete_quiver({"X"}));
    auto R = tensor_quivers(discrete_quiver({"X"}), A);
    CHECK(L.hom(0, 0).same_dims(A.hom(0, 0)));
    CHECK(R.hom(0, 0).same_dims(A.hom(0, 0)));
}

TEST_CASE("tensor product adds degrees and composes paths") {
    auto A = one_object({{1, 1}});
    auto B = one_object({{2, 1}});
    auto T = tensor_quivers(A, B);
    CHECK(T.hom(0, 0).dim(3) == 1);
    CHECK(T.hom(0, 0).total_dim() == 1);

    GradedQuiver P({"X", "Y"});
    P.hom_mut(0, 1).add_basis(0, "a");
    GradedQuiver R({"X", "Y"});
    R.hom_mut(1, 0).add_basis(0, "b");
    auto PR = tensor_quivers(P, R);
    CHECK(PR.hom(0, 0).total_dim() == 1);
    CHECK(PR.hom(0, 1).total_dim() == 0);
    CHECK(PR.hom(1, 0).total_dim() == 0);
    CHECK(PR.hom(1, 1).total_dim() == 0);

    // associativity on dimensions
    auto T1 = tensor_quivers(tensor_quivers(P, R), P);
    auto T2 = tensor_quivers(P, tensor_quivers(R, P));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(T1.hom(x, y).same_dims(T2.hom(x, y)));
}

TEST_CASE("suspend shifts degrees and composes additively") {
    auto A = one_object({{0, 1}});
    auto S = suspend(A, 1);
    CHECK(S.hom(0, 0).dim(-1) == 1);
    auto S0 = suspend(A, 0);
    CHECK(S0.hom(0, 0).dim(0) == 1);
    auto back = suspend(suspend(A, 1), -1);
    CHECK(back.hom(0, 0).same_dims(A.hom(0, 0)));
    auto S3 = suspend(suspend(A, 1), 2);
    CHECK(S3.hom(0, 0).dim(-3) == 1);
}

TEST_CASE("cut comultiplication: counts, counit, identity") {
    auto A = one_object({{1, 2}});
    TensorWord w;
    w.path = {0, 0, 0};
    w.factors = {{1, 0}, {1, 1}};

    auto c2 = cut_comult(w, 2);
    CHECK(c2.terms().size() == 3);  // ( |f1f2) (f1|f2) (f1f2| )
    for (const auto& [t, c] : c2.terms()) CHECK(c.is_one());

    auto c1 = cut_comult(w, 1);
    REQUIRE(c1.terms().size() == 1);
    CHECK(c1.terms()[0].first.slots[0] == w);

    auto c0 = cut_comult(w, 0);
    CHECK(c0.is_zero());
    auto c0e = cut_comult(empty_word(0), 0);
    CHECK(c0e.terms().size() == 1);

    TensorWord w1 = subword(w, 0, 1);
    CHECK(cut_comult(w1, 3).terms().size() == 3);  // weak compositions of 1 into 3 parts

    // coassociativity on words up to length 4: (cut x id) cut == (id x cut) cut
    for (int len = 0; len <= 4; ++len) {
        TensorWord v;
        v.path.assign(static_cast<std::size_t>(len + 1), 0);
        for (int i = 0; i < len; ++i) v.factors.push_back({1, i % 2});
        TupleSum lhs, rhs;
        for (const auto& [t, c] : cut_comult(v, 2)) {
            for (const auto& [t2, c2] : cut_comult(t.slots[0], 2)) {
                WordTuple u{{t2.slots[0], t2.slots[1], t.slots[1]}};
                lhs.add(u, c * c2);
            }
            for (const auto& [t2, c2] : cut_comult(t.slots[1], 2)) {
                WordTuple u{{t.slots[0], t2.slots[0], t2.slots[1]}};
                rhs.add(u, c * c2);
            }
        }
        CHECK(lhs == rhs);
        // and both equal the triple cut
        CHECK(lhs == cut_comult(v, 3));
        // counit law: (eps (x) 1) cut = id = (1 (x) eps) cut
        TupleSum left, right;
        for (const auto& [t, c] : cut_comult(v, 2)) {
            if (t.slots[0].length() == 0) left.add(WordTuple{{t.slots[1]}}, c);
            if (t.slots[1].length() == 0) right.add(WordTuple{{t.slots[0]}}, c);
        }
        CHECK(left == right);
        REQUIRE(left.terms().size() == 1);
        CHECK(left.terms()[0].first.slots[0] == v);
    }
}

TEST_CASE("koszul_eval signs") {
    auto A = one_object({{1, 1}, {0, 1}});
    // word x (x) y with deg x = 1
    TensorWord w;
    w.path = {0, 0, 0};
    w.factors = {{1, 0}, {0, 0}};

    // all maps of degree 0: sign +1
    auto r0 = koszul_eval({identity_op(), identity_op()}, w);
    REQUIRE(r0.terms().size() == 1);
    CHECK(r0.terms()[0].second.is_one());

    // (1 (x) b1) with deg b1 = 1 picks up -1 moving past x
    SlotOp b1;
    b1.arity = 1;
    b1.degree = 1;
    b1.apply = [](const TensorWord& v) {
        WordSum s;
        TensorWord out = v;
        out.factors[0] = {v.factors[0].deg + 1, 0};
        s.add(out, Scalar(Field::rationals(), 1));
        return s;
    };
    auto r1 = koszul_eval({identity_op(), b1}, w);
    REQUIRE(r1.terms().size() == 1);
    CHECK(r1.terms()[0].second == q(-1));

    // (b1 (x) 1): nothing to the left
    auto r2 = koszul_eval({b1, identity_op()}, w);
    REQUIRE(r2.terms().size() == 1);
    CHECK(r2.terms()[0].second == q(1));
}

TEST_CASE("coderivation and morphism expansion blocks") {
    auto A = one_object({{-1, 1}, {0, 1}, {1, 1}});
    auto F = ComponentFamily::make(ComponentFamily::Kind::coderivation, 3);
    // b1(e0) = e1 (degrees -1 -> 0), plus a b2
    TensorWord w1;
    w1.path = {0, 0};
    w1.factors = {{-1, 0}};
    HomElem v1;
    v1.add({0, 0}, q(1));
    F.set(w1, v1);
    TensorWord w2;
    w2.path = {0, 0, 0};
    w2.factors = {{-1, 0}, {-1, 0}};
    HomElem v2;
    v2.add({-1, 0}, q(1));
    F.set(w2, v2);

    // m=2, n=2: 1(x)b1 + b1(x)1
    auto e22 = expand_coderivation(F, w2, 2);
    // (b1 e0)(x)e0 with sign +, e0(x)(b1 e0) with sign (-1)^{deg e0} = -1
    TensorWord t1 = w2, t2 = w2;
    t1.factors[0] = {0, 0};
    t2.factors[1] = {0, 0};
    WordSum expect;
    expect.add(t1, q(1));
    expect.add(t2, q(-1));
    CHECK(e22 == expect);

    // m=2, n=1: just b2
    auto e21 = expand_coderivation(F, w2, 1);
    TensorWord t3;
    t3.path = {0, 0};
    t3.factors = {{-1, 0}};
    WordSum expect2;
    expect2.add(t3, q(1));
    CHECK(e21 == expect2);

    // m=1, n=3: zero
    CHECK(expand_coderivation(F, w1, 3).is_zero());

    // morphism expansion
    auto G = ComponentFamily::make(ComponentFamily::Kind::morphism, 3);
    HomElem g1v;
    g1v.add({-1, 0}, q(2));
    G.set(w1, g1v);  // g1(e0) = 2 e0
    HomElem g2v;
    g2v.add({-2, 0}, q(0));  // zero entry is dropped
    G.set(w2, HomElem{});
    std::vector<int> obj{0};
    // m = n: g1^{(x)n}
    auto m22 = expand_morphism(G, obj, w2, 2);
    REQUIRE(m22.terms().size() == 1);
    CHECK(m22.terms()[0].second == q(4));
    // m=2, n=1: g2 = 0 here
    CHECK(expand_morphism(G, obj, w2, 1).is_zero());
    // m=1, n=2: no composition of 1 into 2 positive parts
    CHECK(expand_morphism(G, obj, w1, 2).is_zero());
}

TEST_CASE("word enumeration respects endpoints and lengths") {
    GradedQuiver P({"X", "Y"});
    P.hom_mut(0, 1).add_basis(0, "a");
    P.hom_mut(0, 1).add_basis(1, "b");
    P.hom_mut(1, 1).add_basis(2, "c");
    auto all1 = enumerate_words(P, 1);
    CHECK(all1.size() == 3);
    auto xy = enumerate_words(P, 1, 0, 1);
    CHECK(xy.size() == 2);
    auto len2 = enumerate_words(P, 2, 0, 1);
    CHECK(len2.size() == 2);  // a.c and b.c
    auto len0 = enumerate_words(P, 0);
    CHECK(len0.size() == 2);
    auto tuples = enumerate_tuples(P, 2, 1);
    // slot pairs with total length <= 1, composable endpoints
    for (const auto& t : tuples) CHECK(t.slots[0].to() == t.slots[1].from());
}
