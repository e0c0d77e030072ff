#pragma once

#include <functional>

#include "ainfcat/word.hpp"

namespace ainfcat {

/// One arity component: a sparse linear map from basis words of T^k sA into
/// single hom factors of the target. Missing entries are zero.
struct Component {
    int arity = 1;
    Deg degree = 0;
    std::map<TensorWord, HomElem> table;

    HomElem apply(const TensorWord& w) const {
        auto it = table.find(w);
        return it == table.end() ? HomElem{} : it->second;
    }
};

/// Arity-indexed component family of a coderivation (degree +1) or a
/// cocategory morphism (degree 0), truncated at arity N.
struct ComponentFamily {
    enum class Kind { coderivation, morphism };
    Kind kind = Kind::coderivation;
    int truncation = 0;
    std::vector<Component> comp;  // index = arity - 1

    static ComponentFamily make(Kind kind, int truncation);
    Deg op_degree() const { return kind == Kind::coderivation ? 1 : 0; }
    const Component& at(int arity) const { return comp.at(static_cast<std::size_t>(arity - 1)); }
    Component& at(int arity) { return comp.at(static_cast<std::size_t>(arity - 1)); }
    /// Component of arity length(w); zero beyond the truncation.
    HomElem apply(const TensorWord& w) const;
    void set(const TensorWord& w, HomElem v);
    bool operator==(const ComponentFamily& o) const;
};

/// Apply 1^{(x)p} (x) c (x) 1^{(x)q} inside w, where c is the arity-k
/// component of F. Koszul sign: (-1)^{deg(F) * deg(first p factors)}.
WordSum apply_at(const ComponentFamily& F, const TensorWord& w, int p, int k);

/// Matrix coefficient b_{m,n} of the coderivation expanded from components:
/// the sum of all placements with p+k+q = m, p+1+q = n, applied to w.
WordSum expand_coderivation(const ComponentFamily& b, const TensorWord& w, int out_len);

/// Full coderivation value b(w) (output lengths 1..m; empty words go to zero).
WordSum coderivation_full(const ComponentFamily& b, const TensorWord& w);

/// Matrix coefficient f_{m,n}: sum over compositions of m into n positive
/// parts of f_{i_1} (x) ... (x) f_{i_n}, applied to w. Paths are carried
/// through the object map. No signs: morphism components have degree 0.
WordSum expand_morphism(const ComponentFamily& f, const std::vector<int>& obj, const TensorWord& w, int out_len);

/// Full morphism value f(w); the empty word at X goes to the empty word at
/// obj[X] (morphisms of augmented cocategories fix T^0).
WordSum morphism_full(const ComponentFamily& f, const std::vector<int>& obj, const TensorWord& w);

/// Cut comultiplication iterate: all ordered decompositions of w into l
/// (possibly empty) blocks, each with coefficient +1. l = 0 is the counit,
/// supported on length-0 words; l = 1 is the identity.
TupleSum cut_comult(const TensorWord& w, int l);

/// A tensor factor in a Koszul evaluation: consumes `arity` consecutive
/// factors and contributes `degree` to signs of everything to its right.
struct SlotOp {
    int arity = 1;
    Deg degree = 0;
    std::function<WordSum(const TensorWord&)> apply;
};

/// Evaluate g_1 (x) ... (x) g_k on w split into blocks of the declared
/// arities: (-1)^sigma (block_1 g_1) (x) ... (x) (block_k g_k) with
/// sigma = sum_{i<j} deg(g_j) * deg(block_i).
TupleSum koszul_eval(const std::vector<SlotOp>& ops, const TensorWord& w);

SlotOp identity_op();

}  // namespace ainfcat
