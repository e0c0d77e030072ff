#include "ainfcat/coalgebra.hpp"

#include <stdexcept>

namespace ainfcat {

ComponentFamily ComponentFamily::make(Kind kind, int truncation) {
    ComponentFamily F;
    F.kind = kind;
    F.truncation = truncation;
    F.comp.resize(static_cast<std::size_t>(truncation));
    for (int k = 1; k <= truncation; ++k) {
        F.at(k).arity = k;
        F.at(k).degree = F.op_degree();
    }
    return F;
}

HomElem ComponentFamily::apply(const TensorWord& w) const {
    int k = w.length();
    if (k < 1 || k > truncation) return {};
    return at(k).apply(w);
}

void ComponentFamily::set(const TensorWord& w, HomElem v) {
    int k = w.length();
    if (k < 1 || k > truncation) throw std::logic_error("ComponentFamily::set: arity outside truncation");
    if (v.is_zero())
        at(k).table.erase(w);
    else
        at(k).table[w] = std::move(v);
}

bool ComponentFamily::operator==(const ComponentFamily& o) const {
    if (truncation != o.truncation) return false;
    for (int k = 1; k <= truncation; ++k) {
        const auto &a = at(k).table, &b = o.at(k).table;
        for (const auto& [w, v] : a)
            if (!(o.at(k).apply(w) == v)) return false;
        for (const auto& [w, v] : b)
            if (!(at(k).apply(w) == v)) return false;
    }
    return true;
}

WordSum apply_at(const ComponentFamily& F, const TensorWord& w, int p, int k) {
    WordSum out;
    if (k < 1 || k > F.truncation || p + k > w.length()) return out;
    HomElem v = F.at(k).apply(subword(w, p, k));
    if (v.is_zero()) return out;
    bool flip = F.op_degree() % 2 != 0 && prefix_degree(w, p) % 2 != 0;
    for (const auto& [r, c] : v.terms()) {
        Scalar coeff = flip ? -c : c;
        out.add(splice(w, p, k, r), coeff);
    }
    return out;
}

WordSum expand_coderivation(const ComponentFamily& b, const TensorWord& w, int out_len) {
    WordSum out;
    int m = w.length();
    int k = m - out_len + 1;
    if (k < 1 || out_len < 1) return out;
    for (int p = 0; p + k <= m; ++p) out.add(apply_at(b, w, p, k));
    return out;
}

WordSum coderivation_full(const ComponentFamily& b, const TensorWord& w) {
    WordSum out;
    for (int n = 1; n <= w.length(); ++n) out.add(expand_coderivation(b, w, n));
    return out;
}

WordSum expand_morphism(const ComponentFamily& f, const std::vector<int>& obj, const TensorWord& w, int out_len) {
    WordSum out;
    int m = w.length();
    int n = out_len;
    if (n == 0) {
        if (m == 0) out.add(empty_word(obj.at(static_cast<std::size_t>(w.from()))), Scalar(Field::rationals(), 1));
        return out;
    }
    if (m < n) return out;
    // iterate compositions m = i_1 + ... + i_n with i_j >= 1
    std::vector<int> parts(static_cast<std::size_t>(n), 1);
    parts[static_cast<std::size_t>(n - 1)] = m - (n - 1);
    auto emit = [&](const std::vector<int>& ip) {
        // apply f_{i_j} to consecutive blocks; accumulate the tensor product
        std::vector<TensorWord> pieces;
        std::vector<HomElem> values;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            HomElem v = f.apply(subword(w, pos, ip[static_cast<std::size_t>(j)]));
            if (v.is_zero()) return;
            values.push_back(std::move(v));
            pos += ip[static_cast<std::size_t>(j)];
        }
        // cartesian product of the per-block values
        std::vector<std::size_t> sel(static_cast<std::size_t>(n), 0);
        while (true) {
            TensorWord res;
            res.path.push_back(obj.at(static_cast<std::size_t>(w.from())));
            Scalar c;
            bool first = true;
            int pos2 = 0;
            for (int j = 0; j < n; ++j) {
                const auto& [r, cv] = values[static_cast<std::size_t>(j)].terms()[sel[static_cast<std::size_t>(j)]];
                pos2 += ip[static_cast<std::size_t>(j)];
                res.path.push_back(obj.at(static_cast<std::size_t>(w.path[static_cast<std::size_t>(pos2)])));
                res.factors.push_back(r);
                c = first ? cv : c * cv;
                first = false;
            }
            out.add(res, c);
            int j = n - 1;
            while (j >= 0) {
                if (++sel[static_cast<std::size_t>(j)] < values[static_cast<std::size_t>(j)].terms().size()) break;
                sel[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
        }
    };
    // odometer over compositions
    std::vector<int> ip(static_cast<std::size_t>(n), 1);
    int rest = m - n;
    // distribute `rest` extra units over n slots: iterate all weak compositions
    std::vector<int> extra(static_cast<std::size_t>(n), 0);
    extra[0] = rest;
    while (true) {
        for (int j = 0; j < n; ++j) ip[static_cast<std::size_t>(j)] = 1 + extra[static_cast<std::size_t>(j)];
        emit(ip);
        // next weak composition of `rest` into n parts (colex-style enumeration)
        int j = 0;
        while (j < n && extra[static_cast<std::size_t>(j)] == 0) ++j;
        if (j >= n - 1) break;
        int v = extra[static_cast<std::size_t>(j)];
        extra[static_cast<std::size_t>(j)] = 0;
        extra[0] = v - 1;
        extra[static_cast<std::size_t>(j + 1)] += 1;
    }
    return out;
}

WordSum morphism_full(const ComponentFamily& f, const std::vector<int>& obj, const TensorWord& w) {
    WordSum out;
    if (w.length() == 0) {
        out.add(empty_word(obj.at(static_cast<std::size_t>(w.from()))), Scalar(Field::rationals(), 1));
        return out;
    }
    for (int n = 1; n <= w.length(); ++n) out.add(expand_morphism(f, obj, w, n));
    return out;
}

TupleSum cut_comult(const TensorWord& w, int l) {
    TupleSum out;
    int m = w.length();
    if (l == 0) {
        if (m == 0) out.add(WordTuple{}, Scalar(Field::rationals(), 1));
        return out;
    }
    // all cut positions 0 <= c_1 <= ... <= c_{l-1} <= m
    std::vector<int> cuts(static_cast<std::size_t>(l - 1), 0);
    while (true) {
        WordTuple t;
        int prev = 0;
        bool ok = true;
        for (int j = 0; j < l; ++j) {
            int end = (j == l - 1) ? m : cuts[static_cast<std::size_t>(j)];
            if (end < prev) {
                ok = false;
                break;
            }
            t.slots.push_back(subword(w, prev, end - prev));
            prev = end;
        }
        if (ok) out.add(t, Scalar(Field::rationals(), 1));
        // advance: cuts run over nondecreasing sequences in [0, m]
        int j = l - 2;
        while (j >= 0) {
            if (++cuts[static_cast<std::size_t>(j)] <= m) {
                for (int j2 = j + 1; j2 < l - 1; ++j2) cuts[static_cast<std::size_t>(j2)] = cuts[static_cast<std::size_t>(j)];
                break;
            }
            --j;
        }
        if (j < 0 || l == 1) break;
    }
    return out;
}

TupleSum koszul_eval(const std::vector<SlotOp>& ops, const TensorWord& w) {
    TupleSum out;
    int total = 0;
    for (const auto& op : ops) total += op.arity;
    if (total != w.length()) throw std::logic_error("koszul_eval: arity mismatch");
    // Left-factor-first evaluation: applying g_j once g_1..g_{j-1} have
    // already acted, so its Koszul sign counts the blocks to its left AND
    // the degrees of the earlier operators:
    //   sigma = sum_{i<j} deg(g_j) * (deg(block_i) + deg(g_i)).
    // With at most one odd factor this is the plain block rule.
    long sigma = 0;
    {
        int pos = 0;
        long left_deg = 0;
        for (const auto& op : ops) {
            sigma += static_cast<long>(op.degree) * left_deg;
            left_deg += subword(w, pos, op.arity).degree() + op.degree;
            pos += op.arity;
        }
    }
    std::vector<WordSum> values;
    {
        int pos = 0;
        for (const auto& op : ops) {
            values.push_back(op.apply(subword(w, pos, op.arity)));
            if (values.back().is_zero()) return out;
            pos += op.arity;
        }
    }
    std::vector<std::size_t> sel(ops.size(), 0);
    while (true) {
        WordTuple t;
        Scalar c;
        bool first = true;
        for (std::size_t j = 0; j < ops.size(); ++j) {
            const auto& [word, cv] = values[j].terms()[sel[j]];
            t.slots.push_back(word);
            c = first ? cv : c * cv;
            first = false;
        }
        if (sigma % 2 != 0) c = -c;
        out.add(t, c);
        std::size_t j = ops.size();
        while (j > 0) {
            --j;
            if (++sel[j] < values[j].terms().size()) break;
            sel[j] = 0;
            if (j == 0) return out;
        }
    }
}

SlotOp identity_op() {
    SlotOp op;
    op.arity = 1;
    op.degree = 0;
    op.apply = [](const TensorWord& w) {
        WordSum s;
        s.add(w, Scalar(Field::rationals(), 1));
        return s;
    };
    return op;
}

}  // namespace ainfcat
