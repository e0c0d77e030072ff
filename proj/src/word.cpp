#include "ainfcat/word.hpp"

#include <stdexcept>

namespace ainfcat {

TensorWord empty_word(int obj) {
    TensorWord w;
    w.path.push_back(obj);
    return w;
}

TensorWord concat(const TensorWord& a, const TensorWord& b) {
    if (a.to() != b.from()) throw std::logic_error("concat: endpoints do not match");
    TensorWord w = a;
    w.path.insert(w.path.end(), b.path.begin() + 1, b.path.end());
    w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
    return w;
}

TensorWord subword(const TensorWord& w, int i, int k) {
    TensorWord s;
    s.path.assign(w.path.begin() + i, w.path.begin() + i + k + 1);
    s.factors.assign(w.factors.begin() + i, w.factors.begin() + i + k);
    return s;
}

TensorWord splice(const TensorWord& w, int i, int k, BasisRef r) {
    TensorWord s;
    s.path.assign(w.path.begin(), w.path.begin() + i + 1);
    s.path.insert(s.path.end(), w.path.begin() + i + k, w.path.end());
    s.factors.assign(w.factors.begin(), w.factors.begin() + i);
    s.factors.push_back(r);
    s.factors.insert(s.factors.end(), w.factors.begin() + i + k, w.factors.end());
    return s;
}

Deg prefix_degree(const TensorWord& w, int i) {
    Deg d = 0;
    for (int k = 0; k < i; ++k) d += w.factors[static_cast<std::size_t>(k)].deg;
    return d;
}

std::string word_label(const GradedQuiver& Q, const TensorWord& w) {
    std::string s = Q.object_name(w.from());
    for (int i = 0; i < w.length(); ++i) {
        s += "." + Q.hom(w.path[static_cast<std::size_t>(i)], w.path[static_cast<std::size_t>(i + 1)])
                       .label(w.factors[static_cast<std::size_t>(i)]);
        s += "." + Q.object_name(w.path[static_cast<std::size_t>(i + 1)]);
    }
    return s;
}

HomElem to_homelem(const GradedElem& e) {
    HomElem h;
    for (const auto& [r, c] : e.terms()) h.add(r, c);
    return h;
}

GradedElem to_graded(const HomElem& e) {
    GradedElem g;
    for (const auto& [r, c] : e.terms()) g.add(r, c);
    return g;
}

namespace {

void enumerate_factors(const GradedQuiver& Q, const std::vector<int>& path, std::vector<TensorWord>& out) {
    int n = static_cast<int>(path.size()) - 1;
    // collect the basis list of each hom space along the path
    std::vector<std::vector<BasisRef>> choices(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const GradedSpace& s = Q.hom(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)]);
        for (Deg d : s.degrees())
            for (int j = 0; j < s.dim(d); ++j) choices[static_cast<std::size_t>(i)].push_back({d, j});
        if (choices[static_cast<std::size_t>(i)].empty()) return;
    }
    std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
    while (true) {
        TensorWord w;
        w.path = path;
        for (int i = 0; i < n; ++i) w.factors.push_back(choices[static_cast<std::size_t>(i)][pos[static_cast<std::size_t>(i)]]);
        out.push_back(std::move(w));
        int i = n - 1;
        while (i >= 0) {
            if (++pos[static_cast<std::size_t>(i)] < choices[static_cast<std::size_t>(i)].size()) break;
            pos[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

void enumerate_paths(const GradedQuiver& Q, std::vector<int>& path, int remaining, std::optional<int> to,
                     std::vector<TensorWord>& out) {
    if (remaining == 0) {
        if (to && path.back() != *to) return;
        enumerate_factors(Q, path, out);
        return;
    }
    for (int y = 0; y < Q.object_count(); ++y) {
        if (Q.hom(path.back(), y).empty()) continue;
        path.push_back(y);
        enumerate_paths(Q, path, remaining - 1, to, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<TensorWord> enumerate_words(const GradedQuiver& Q, int length, std::optional<int> from,
                                        std::optional<int> to) {
    std::vector<TensorWord> out;
    if (length == 0) {
        for (int x = 0; x < Q.object_count(); ++x) {
            if (from && *from != x) continue;
            if (to && *to != x) continue;
            out.push_back(empty_word(x));
        }
        return out;
    }
    for (int x = 0; x < Q.object_count(); ++x) {
        if (from && *from != x) continue;
        std::vector<int> path{x};
        enumerate_paths(Q, path, length, to, out);
    }
    return out;
}

std::vector<TensorWord> enumerate_words_upto(const GradedQuiver& Q, int maxlen) {
    std::vector<TensorWord> out;
    for (int l = 0; l <= maxlen; ++l) {
        auto v = enumerate_words(Q, l);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

std::vector<WordTuple> enumerate_tuples(const GradedQuiver& Q, int slots, int maxtotal) {
    std::vector<WordTuple> out;
    if (slots == 0) return out;
    struct Frame {
        WordTuple t;
        int used;
    };
    std::vector<Frame> cur;
    for (int l = 0; l <= maxtotal; ++l)
        for (auto& w : enumerate_words(Q, l)) cur.push_back({WordTuple{{w}}, l});
    for (int s = 2; s <= slots; ++s) {
        std::vector<Frame> next;
        for (const auto& fr : cur) {
            int at = fr.t.slots.back().to();
            for (int l = 0; l + fr.used <= maxtotal; ++l)
                for (auto& w : enumerate_words(Q, l, at)) {
                    Frame nf = fr;
                    nf.t.slots.push_back(w);
                    nf.used += l;
                    next.push_back(std::move(nf));
                }
        }
        cur = std::move(next);
    }
    out.reserve(cur.size());
    for (auto& fr : cur) out.push_back(std::move(fr.t));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ainfcat
