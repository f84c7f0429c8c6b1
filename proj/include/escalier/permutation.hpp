#pragma once

// Permutations with finite support, Lehmer codes, reduced words and the
// dominant / Grassmannian classification.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "escalier/errors.hpp"

namespace escalier {

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
        validate();
        trim();
    }

    static Permutation identity() { return {}; }

    // simple transposition s_i
    static Permutation transposition(int i) {
        std::vector<int> w(i + 1);
        std::iota(w.begin(), w.end(), 1);
        std::swap(w[i - 1], w[i]);
        return Permutation(std::move(w));
    }

    // maximal permutation [n, ..., 1]
    static Permutation reversal(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = n - i;
        return Permutation(std::move(w));
    }

    int operator()(int i) const {
        return i <= static_cast<int>(w_.size()) ? w_[i - 1] : i;
    }

    // size of the trimmed support
    int size() const { return static_cast<int>(w_.size()); }
    bool is_identity() const { return w_.empty(); }

    std::vector<int> one_line(int n = 0) const {
        std::vector<int> w = w_;
        for (int i = static_cast<int>(w.size()) + 1; i <= n; ++i) w.push_back(i);
        return w;
    }

    // (a*b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        int n = std::max(a.size(), b.size());
        std::vector<int> w(n);
        for (int i = 1; i <= n; ++i) w[i - 1] = a(b(i));
        return Permutation(std::move(w));
    }

    Permutation inverse() const {
        std::vector<int> w(w_.size());
        for (int i = 1; i <= size(); ++i) w[w_[i - 1] - 1] = i;
        return Permutation(std::move(w));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.w_ < b.w_;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ",";
            s += std::to_string(w_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> w_; // trailing fixed points trimmed

    void validate() const {
        int n = static_cast<int>(w_.size());
        std::vector<bool> seen(n, false);
        for (int v : w_) {
            if (v < 1 || v > n || seen[v - 1])
                throw NotAPermutation("not a permutation of 1..n");
            seen[v - 1] = true;
        }
    }
    void trim() {
        while (!w_.empty() && w_.back() == static_cast<int>(w_.size())) w_.pop_back();
    }
};

struct Code {
    std::vector<int> entries;

    std::vector<int> trimmed() const {
        std::vector<int> e = entries;
        while (!e.empty() && e.back() == 0) e.pop_back();
        return e;
    }
    friend bool operator==(const Code& a, const Code& b) {
        return a.trimmed() == b.trimmed();
    }
};

// c_i = #{j > i : sigma_j < sigma_i}
inline Code code(const Permutation& sigma) {
    int n = sigma.size();
    std::vector<int> w = sigma.one_line(n);
    Code c;
    c.entries.resize(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[j] < w[i]) ++c.entries[i];
    return c;
}

inline Permutation permutation_from_code(const Code& c) {
    std::vector<int> e = c.trimmed();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0) throw InvalidCode("code entries must be nonnegative");
    int n = static_cast<int>(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        n = std::max(n, e[i] + static_cast<int>(i) + 1);
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) {
        int ci = i < static_cast<int>(e.size()) ? e[i] : 0;
        if (ci >= static_cast<int>(avail.size()))
            throw InvalidCode("code entry too large");
        w.push_back(avail[ci]);
        avail.erase(avail.begin() + ci);
    }
    return Permutation(std::move(w));
}

inline int length(const Permutation& sigma) {
    int l = 0;
    for (int c : code(sigma).entries) l += c;
    return l;
}

// lexicographically smallest reduced word [i1,...,il] with
// sigma = s_{i1} s_{i2} ... s_{il}
inline std::vector<int> reduced_word(const Permutation& sigma) {
    std::vector<int> word;
    Permutation p = sigma;
    while (!p.is_identity()) {
        Permutation inv = p.inverse();
        // the valid first letters are the i with inv(i) > inv(i+1)
        int i = 1;
        while (inv(i) < inv(i + 1)) ++i;
        word.push_back(i);
        p = Permutation::transposition(i) * p;
    }
    return word;
}

inline std::vector<int> descents(const Permutation& sigma) {
    std::vector<int> d;
    for (int i = 1; i < sigma.size(); ++i)
        if (sigma(i) > sigma(i + 1)) d.push_back(i);
    return d;
}

struct Classification {
    enum Kind { Dominant, Grassmannian, General } kind;
    int descent = 0; // set when Grassmannian
};

inline Classification classify(const Permutation& sigma) {
    std::vector<int> c = code(sigma).entries;
    if (std::is_sorted(c.begin(), c.end(), std::greater<int>()))
        return {Classification::Dominant, 0};
    std::vector<int> d = descents(sigma);
    if (d.size() == 1) return {Classification::Grassmannian, d[0]};
    return {Classification::General, 0};
}

// at most one descent (identity qualifies, with descent 0)
inline bool is_grassmannian(const Permutation& sigma, int* descent_out = nullptr) {
    std::vector<int> d = descents(sigma);
    if (d.size() > 1) return false;
    if (descent_out) *descent_out = d.empty() ? 0 : d[0];
    return true;
}

// one-line permutation [a..., b...] from two increasing lists partitioning 1..n
inline Permutation concat_permutation(const std::vector<int>& a,
                                      const std::vector<int>& b) {
    if (!std::is_sorted(a.begin(), a.end(), std::less_equal<int>()) ||
        !std::is_sorted(b.begin(), b.end(), std::less_equal<int>()))
        throw NotAPermutation("both halves must be strictly increasing");
    std::vector<int> w = a;
    w.insert(w.end(), b.begin(), b.end());
    return Permutation(std::move(w)); // constructor validates
}

} // namespace escalier
