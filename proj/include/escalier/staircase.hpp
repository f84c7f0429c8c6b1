#pragma once

// Columns, staircases, alternating sign matrices, staircase weights and
// the bijections between all of them.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "escalier/errors.hpp"
#include "escalier/laurent.hpp"
#include "escalier/shapes.hpp"

namespace escalier {

// strictly decreasing list of positive integers, possibly empty
struct Column {
    std::vector<int> entries;

    Column() = default;
    Column(std::initializer_list<int> e) : entries(e) { validate(); }
    explicit Column(std::vector<int> e) : entries(std::move(e)) { validate(); }

    int size() const { return static_cast<int>(entries.size()); }
    bool empty() const { return entries.empty(); }
    int operator[](int i) const { return entries[i]; } // 0-based, decreasing

    // entry at height h, counted 1-based from the bottom of the column
    int at_height(int h) const { return entries[size() - h]; }

    friend bool operator==(const Column&, const Column&) = default;
    friend bool operator<(const Column& a, const Column& b) {
        return a.entries < b.entries;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries[i]);
        }
        return s + "]";
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i] < 1) throw InvalidColumn("entries must be positive");
            if (i > 0 && entries[i] >= entries[i - 1])
                throw InvalidColumn("entries must be strictly decreasing");
        }
    }
};

inline Column full_column(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = n - i;
    return Column(std::move(e));
}

// the two-column staircase condition, bottom aligned: u_i <= v_i, v_{i+1} <= u_i
inline bool interleaves(const Column& v, const Column& u) {
    if (v.size() != u.size() + 1)
        throw LengthMismatch("v must be one entry longer than u");
    for (int i = 0; i < u.size(); ++i)
        if (u[i] > v[i] || v[i + 1] > u[i]) return false;
    return true;
}

// columns of decreasing-by-one lengths, consecutive pairs interleaving
struct Staircase {
    std::vector<Column> columns;

    Staircase() = default;
    Staircase(std::initializer_list<Column> c) : columns(c) { validate(); }
    explicit Staircase(std::vector<Column> c) : columns(std::move(c)) { validate(); }

    int steps() const { return static_cast<int>(columns.size()) - 1; }

    friend bool operator==(const Staircase&, const Staircase&) = default;
    friend bool operator<(const Staircase& a, const Staircase& b) {
        return a.columns < b.columns;
    }

private:
    void validate() const {
        for (std::size_t j = 0; j + 1 < columns.size(); ++j)
            if (!interleaves(columns[j], columns[j + 1]))
                throw InvalidStaircase("consecutive columns do not interleave");
    }
};

// all v of length l(u)+1 with v_1 <= n and vu a staircase, in lexicographic order
inline std::vector<Column> enumerate_predecessors(const Column& u, int n) {
    if (!u.empty() && u[0] > n) throw InvalidColumn("u_1 exceeds n");
    std::vector<Column> out;
    std::vector<int> v;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == u.size() + 1) {
            out.push_back(Column(std::vector<int>(v)));
            return;
        }
        int lo = i < u.size() ? u[i] : 1;
        int hi = i == 0 ? n : std::min(u[i - 1], v.back() - 1);
        for (int val = lo; val <= hi; ++val) {
            v.push_back(val);
            self(self, i + 1);
            v.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// successors: all w of length l(c)-1 with cw a staircase (w_i in [c_{i+1}, c_i])
inline std::vector<Column> enumerate_successors(const Column& c) {
    std::vector<Column> out;
    std::vector<int> w;
    int m = c.size() - 1;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            out.push_back(Column(std::vector<int>(w)));
            return;
        }
        int lo = c[i + 1];
        int hi = i == 0 ? c[i] : std::min(c[i], w.back() - 1);
        for (int val = lo; val <= hi; ++val) {
            w.push_back(val);
            self(self, i + 1);
            w.pop_back();
        }
    };
    if (m < 0) return out;
    rec(rec, 0);
    return out;
}

inline long long enumeration_cap() {
    if (const char* env = std::getenv("ESCALIER_MAX_OBJECTS")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 10'000'000;
}

// stream all staircases with the given first and last columns, column lengths
// descending by one; deterministic depth-first order
inline void for_each_staircase(const Column& first, const Column& last, int n,
                               const std::function<void(const Staircase&)>& fn) {
    if (first.size() <= last.size())
        throw InvalidColumn("first column must be longer than the last");
    if (!first.empty() && first[0] > n) throw InvalidColumn("first entry exceeds n");
    long long cap = enumeration_cap(), count = 0;
    std::vector<Column> chain{first};
    auto rec = [&](auto&& self) -> void {
        const Column& cur = chain.back();
        if (cur.size() == last.size() + 1) {
            if (interleaves(cur, last)) {
                chain.push_back(last);
                if (++count > cap) throw CapExceeded("staircase enumeration cap hit");
                fn(Staircase(std::vector<Column>(chain)));
                chain.pop_back();
            }
            return;
        }
        for (const Column& next : enumerate_successors(cur)) {
            // prune: every later column must stay above the target suffix
            chain.push_back(next);
            self(self);
            chain.pop_back();
        }
    };
    rec(rec);
}

inline std::vector<Staircase> enumerate_staircases(const Column& first,
                                                   const Column& last, int n) {
    std::vector<Staircase> out;
    for_each_staircase(first, last, n, [&](const Staircase& s) { out.push_back(s); });
    return out;
}

// product of the per-entry weights; vars[j] attaches to column j+2 (the first
// column carries weight 1)
inline LaurentPoly staircase_weight(const Staircase& t,
                                    const std::vector<Variable>& vars) {
    if (static_cast<int>(vars.size()) != t.steps())
        throw InvalidStaircase("need one variable per column step");
    LaurentPoly w(1);
    for (std::size_t j = 1; j < t.columns.size(); ++j) {
        const Column& prev = t.columns[j - 1];
        const Column& cur = t.columns[j];
        LaurentPoly xv(vars[j - 1]);
        for (int h = 1; h <= cur.size(); ++h) {
            int b = cur.at_height(h);
            int a = prev.at_height(h);
            int c = prev.at_height(h + 1);
            if (b == a) {
                w *= xv * LaurentPoly::term(Monomial::of(y(b), -1), 1) - LaurentPoly(1);
            } else if (b < c) {
                w *= xv * LaurentPoly::term(Monomial::of(y(b), -1), 1);
            }
            // b == c contributes 1
        }
    }
    return w;
}

// ---------------------------------------------------------------------------
// alternating sign matrices

struct AsmMatrix {
    std::vector<std::vector<int>> rows; // entries in {-1,0,1}

    AsmMatrix() = default;
    explicit AsmMatrix(std::vector<std::vector<int>> r) : rows(std::move(r)) {
        validate();
    }

    int size() const { return static_cast<int>(rows.size()); }

    friend bool operator==(const AsmMatrix&, const AsmMatrix&) = default;

private:
    void validate() const {
        int n = size();
        for (auto& r : rows)
            if (static_cast<int>(r.size()) != n) throw NotAnAsm("matrix is not square");
        for (int i = 0; i < n; ++i) {
            int s = 0;
            for (int j = 0; j < n; ++j) {
                if (rows[i][j] < -1 || rows[i][j] > 1) throw NotAnAsm("entries must be -1, 0 or 1");
                s += rows[i][j];
                if (s < 0 || s > 1) throw NotAnAsm("row partial sums must be 0 or 1");
            }
            if (s != 1) throw NotAnAsm("row sums must be 1");
        }
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int i = 0; i < n; ++i) {
                s += rows[i][j];
                if (s < 0 || s > 1) throw NotAnAsm("column partial sums must be 0 or 1");
            }
            if (s != 1) throw NotAnAsm("column sums must be 1");
        }
    }
};

inline int minus_ones(const AsmMatrix& a) {
    int k = 0;
    for (auto& r : a.rows)
        for (int v : r) k += v == -1;
    return k;
}

// column of length k records the 1-positions of row k of the partial-sum matrix
inline Staircase asm_to_staircase(const AsmMatrix& a) {
    int n = a.size();
    std::vector<Column> cols(n);
    std::vector<int> sums(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) sums[j] += a.rows[i][j];
        std::vector<int> positions;
        for (int j = n - 1; j >= 0; --j)
            if (sums[j] == 1) positions.push_back(j + 1);
        cols[n - 1 - i] = Column(std::move(positions));
    }
    return Staircase(std::move(cols));
}

inline AsmMatrix staircase_to_asm(const Staircase& t) {
    int n = static_cast<int>(t.columns.size());
    for (int j = 0; j < n; ++j)
        if (t.columns[j].size() != n - j)
            throw NotFullStaircase("columns must have lengths n, ..., 1");
    std::vector<std::vector<int>> partial(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int e : t.columns[n - 1 - i].entries) partial[i][e - 1] = 1;
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[i][j] = partial[i][j] - (i > 0 ? partial[i - 1][j] : 0);
    return AsmMatrix(std::move(rows)); // constructor validates
}

// exhaustive generation, entry by entry with alternating-sign pruning
inline std::vector<AsmMatrix> enumerate_asms(int n) {
    std::vector<AsmMatrix> out;
    std::vector<std::vector<int>> acc;
    std::vector<int> colsum(n, 0);
    std::vector<int> cur(n, 0);
    auto rec_entry = [&](auto&& self, int i, int j, int rowsum) -> void {
        if (j == n) {
            if (rowsum != 1) return;
            acc.push_back(cur);
            if (i == n - 1) {
                bool ok = true;
                for (int c = 0; c < n; ++c) ok = ok && colsum[c] == 1;
                if (ok) out.push_back(AsmMatrix(std::vector<std::vector<int>>(acc)));
            } else {
                std::vector<int> saved = cur;
                self(self, i + 1, 0, 0);
                cur = saved;
            }
            acc.pop_back();
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            int rs = rowsum + v;
            int cs = colsum[j] + v;
            if (rs < 0 || rs > 1 || cs < 0 || cs > 1) continue;
            if (i == n - 1 && cs != 1) continue; // columns must close at 1
            cur[j] = v;
            colsum[j] = cs;
            self(self, i, j + 1, rs);
            colsum[j] -= v;
            cur[j] = 0;
        }
    };
    rec_entry(rec_entry, 0, 0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// canonical completion

// Extend t to a full staircase with columns of lengths n, ..., 1.  On the
// right the forced weight-neutral step drops the bottom entry of each
// column; on the left we prepend, among the interleaving predecessors, the
// one maximizing the number of weight-1 configurations (ties: largest).
inline Staircase canonical_completion(const Staircase& t, int n) {
    if (t.columns.empty()) throw InvalidStaircase("empty staircase");
    if (t.columns.front().size() > n || t.columns.front()[0] > n)
        throw NoCanonicalCompletion("first column does not fit in n");
    std::vector<Column> cols = t.columns;
    while (cols.back().size() > 1) {
        std::vector<int> e = cols.back().entries;
        e.pop_back();
        cols.push_back(Column(std::move(e)));
    }
    std::vector<Column> prefix;
    Column first = cols.front();
    while (first.size() < n) {
        std::vector<Column> cands = enumerate_predecessors(first, n);
        if (cands.empty()) throw NoCanonicalCompletion("no interleaving predecessor");
        const Column* best = nullptr;
        int best_score = -1;
        for (const Column& w : cands) {
            int score = 0;
            for (int h = 1; h <= first.size(); ++h)
                score += first.at_height(h) == w.at_height(h + 1);
            if (score > best_score || (score == best_score && best->entries < w.entries)) {
                best = &w;
                best_score = score;
            }
        }
        prefix.push_back(*best);
        first = *best;
    }
    std::reverse(prefix.begin(), prefix.end());
    prefix.insert(prefix.end(), cols.begin(), cols.end());
    return Staircase(std::move(prefix));
}

// ---------------------------------------------------------------------------
// level sequences and the ribbon bijection

// <u>_m = #{j : u_j > m} for m = 1..u_1 (values may be any finite set)
inline std::vector<int> level_vector(const std::vector<int>& values) {
    int top = 0;
    for (int v : values) top = std::max(top, v);
    std::vector<int> lv(top, 0);
    for (int m = 1; m <= top; ++m)
        for (int v : values) lv[m - 1] += v > m;
    return lv;
}

struct LevelSequence {
    std::vector<int> levels;
    friend bool operator==(const LevelSequence&, const LevelSequence&) = default;
};

inline LevelSequence level_sequence(const Column& u) {
    if (u.empty()) throw EmptyColumn("level sequence of an empty column");
    return {level_vector(u.entries)};
}

// increasing complement of u in [1..n]
inline std::vector<int> complement(const Column& u, int n) {
    if (!u.empty() && u[0] > n) throw InvalidColumn("u_1 exceeds n");
    std::vector<bool> in(n + 1, false);
    for (int v : u.entries) in[v] = true;
    std::vector<int> c;
    for (int v = 1; v <= n; ++v)
        if (!in[v]) c.push_back(v);
    return c;
}

// p(u,n) = [u~_1 - 1, ..., u~_k - k], weakly increasing
inline Partition p_map(const Column& u, int n) {
    std::vector<int> t = complement(u, n);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] -= static_cast<int>(i) + 1;
    return Partition(std::move(t));
}

// Lemma 1: v -> (p(u,n) + 1^k) / p(v,n) on interleaving pairs
inline SkewShape column_ribbon_bijection(const Column& v, const Column& u, int n) {
    if (!interleaves(v, u)) throw NotInterleaving("vu is not a staircase");
    if (v[0] > n) throw InvalidColumn("v_1 exceeds n");
    int k = n - u.size();
    Partition outer = p_map(u, n);
    std::vector<int> op = outer.parts;
    for (int& p : op) ++p;
    SkewShape s(Partition(std::move(op)), p_map(v, n).padded(k));
    if (!is_ribbon(s)) throw NotInterleaving("image is not a ribbon");
    return s;
}

// inverse: recover v from the inner shape mu = p(v,n)
inline Column ribbon_to_column(const Partition& mu, int n) {
    std::vector<int> tilde = mu.parts;
    for (std::size_t i = 0; i < tilde.size(); ++i) tilde[i] += static_cast<int>(i) + 1;
    std::vector<bool> in(n + 1, false);
    for (int v : tilde) {
        if (v < 1 || v > n || in[v]) throw InvalidColumn("not a valid p-image");
        in[v] = true;
    }
    std::vector<int> col;
    for (int v = n; v >= 1; --v)
        if (!in[v]) col.push_back(v);
    return Column(std::move(col));
}

} // namespace escalier
