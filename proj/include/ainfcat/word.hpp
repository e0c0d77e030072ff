#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ainfcat/quiver.hpp"

namespace ainfcat {

/// One basis tensor word: an object path X0..Xn and one basis factor from
/// each hom space sA(X_{i-1}, X_i). Length 0 is the path-constant word at a
/// single object (basis of T^0).
struct TensorWord {
    std::vector<int> path;          // n+1 objects
    std::vector<BasisRef> factors;  // n factors

    int length() const { return static_cast<int>(factors.size()); }
    int from() const { return path.front(); }
    int to() const { return path.back(); }
    Deg degree() const {
        Deg d = 0;
        for (const auto& f : factors) d += f.deg;
        return d;
    }
    auto operator<=>(const TensorWord&) const = default;
};

TensorWord empty_word(int obj);
TensorWord concat(const TensorWord& a, const TensorWord& b);
/// Factors [i, i+k) with the matching path slice.
TensorWord subword(const TensorWord& w, int i, int k);
/// Replace factors [i, i+k) by a single factor living in hom(path[i], path[i+k]).
TensorWord splice(const TensorWord& w, int i, int k, BasisRef r);
/// Degree of the first i factors, used for Koszul signs.
Deg prefix_degree(const TensorWord& w, int i);
std::string word_label(const GradedQuiver& Q, const TensorWord& w);

/// A composable tuple of words: slot i ends where slot i+1 starts.
struct WordTuple {
    std::vector<TensorWord> slots;

    int slot_count() const { return static_cast<int>(slots.size()); }
    int total_length() const {
        int n = 0;
        for (const auto& w : slots) n += w.length();
        return n;
    }
    Deg degree() const {
        Deg d = 0;
        for (const auto& w : slots) d += w.degree();
        return d;
    }
    auto operator<=>(const WordTuple&) const = default;
};

/// Formal k-linear combination with exact coefficients; terms stay sorted
/// and merged so equality is plain comparison.
template <class T>
class FormalSum {
public:
    FormalSum() = default;
    void add(const T& t, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                                   [](const auto& a, const T& k) { return a.first < k; });
        if (it != terms_.end() && it->first == t) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.insert(it, {t, c});
        }
    }
    void add(const FormalSum& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
    }
    void add_scaled(const FormalSum& o, const Scalar& c) {
        for (const auto& [t, k] : o.terms_) add(t, k * c);
    }
    void scale(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& t : terms_) t.second *= c;
    }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<T, Scalar>>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    FormalSum operator-() const {
        FormalSum r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    FormalSum operator+(const FormalSum& o) const {
        FormalSum r = *this;
        r.add(o);
        return r;
    }
    FormalSum operator-(const FormalSum& o) const {
        FormalSum r = *this;
        r.add(-o);
        return r;
    }
    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

private:
    std::vector<std::pair<T, Scalar>> terms_;
};

using WordSum = FormalSum<TensorWord>;
using TupleSum = FormalSum<WordTuple>;
/// Element of one hom space (the pair is known from context).
using HomElem = FormalSum<BasisRef>;

HomElem to_homelem(const GradedElem& e);
GradedElem to_graded(const HomElem& e);

/// All basis words of the given length, optionally with fixed endpoints.
/// Order: path lexicographic, then factor odometer (rightmost fastest,
/// each factor running through degrees ascending).
std::vector<TensorWord> enumerate_words(const GradedQuiver& Q, int length, std::optional<int> from = {},
                                        std::optional<int> to = {});

/// All basis words of length 0..maxlen.
std::vector<TensorWord> enumerate_words_upto(const GradedQuiver& Q, int maxlen);

/// All composable tuples with the given slot count and total length <= maxtotal.
std::vector<WordTuple> enumerate_tuples(const GradedQuiver& Q, int slots, int maxtotal);

}  // namespace ainfcat
