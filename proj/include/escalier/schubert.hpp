#pragma once

// Divided differences, Schubert polynomials in two sets of variables,
// complete functions of alphabet differences, flagged multi-Schur
// determinants and the branching / expansion rules.

#include <algorithm>
#include <map>
#include <vector>

#include "escalier/errors.hpp"
#include "escalier/laurent.hpp"
#include "escalier/permutation.hpp"
#include "escalier/shapes.hpp"

namespace escalier {

// ---------------------------------------------------------------------------
// divided differences

// d_i : f -> (f - f^{s_i}) / (x_i - x_{i+1})
inline LaurentPoly divided_difference(const LaurentPoly& f, int i) {
    return exact_div_linear(f - swap_x(f, i), i);
}

// d_sigma along a reduced word, rightmost letter applied first, so that
// d_sigma d_tau = d_{sigma tau} whenever lengths add
inline LaurentPoly divided_difference_perm(LaurentPoly f, const Permutation& sigma) {
    std::vector<int> word = reduced_word(sigma);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        f = divided_difference(f, *it);
    return f;
}

// relabel the x variables by w: x_i -> x_{w(i)}
inline LaurentPoly permute_x(const LaurentPoly& f, const Permutation& w, int n) {
    std::map<Variable, LaurentPoly> sub;
    for (int i = 1; i <= n; ++i)
        if (w(i) != i) sub.emplace(x(i), LaurentPoly(x(w(i))));
    return substitute(f, sub);
}

namespace detail {

inline void foreach_permutation(int n, auto&& fn) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

} // namespace detail

// d_omega as the signed symmetrization divided by the Vandermonde; equal to
// divided_difference_perm(f, reversal(n)) but computed along the other route
inline LaurentPoly max_divided_difference(const LaurentPoly& f, int n) {
    LaurentPoly sum;
    detail::foreach_permutation(n, [&](const std::vector<int>& wv) {
        Permutation w(wv);
        int sign = length(w) % 2 == 0 ? 1 : -1;
        sum += LaurentPoly(Rational(sign)) * permute_x(f, w, n);
    });
    LaurentPoly q = sum;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) q = exact_div_by_difference(q, x(i), x(j));
    return q;
}

// ---------------------------------------------------------------------------
// Schubert polynomials

// Y_v(x,y) = prod_i prod_{j<=v_i} (x_i - y_j) for weakly decreasing v
inline LaurentPoly dominant_schubert(const Code& v) {
    std::vector<int> e = v.trimmed();
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] < e[i + 1]) throw NotDominant("code is not weakly decreasing");
    LaurentPoly p(1);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int j = 1; j <= e[i]; ++j)
            p *= LaurentPoly(x(static_cast<int>(i) + 1)) - LaurentPoly(y(j));
    return p;
}

// X_sigma(x,y) = d_{sigma^{-1} omega_n}(Y_{rho_n}) on the trimmed support
inline LaurentPoly schubert(const Permutation& sigma) {
    int n = sigma.size();
    if (n <= 1) return LaurentPoly(1);
    Code rho;
    for (int i = n - 1; i >= 0; --i) rho.entries.push_back(i);
    LaurentPoly top = dominant_schubert(rho);
    Permutation tau = sigma.inverse() * Permutation::reversal(n);
    return divided_difference_perm(top, tau);
}

inline LaurentPoly schubert(const Code& c) {
    return schubert(permutation_from_code(c));
}

// ---------------------------------------------------------------------------
// alphabets and complete functions

// formal difference of two multisets of variables, A - B
struct Alphabet {
    std::vector<Variable> plus, minus;

    static Alphabet x_prefix(int r) {
        Alphabet a;
        for (int i = 1; i <= r; ++i) a.plus.push_back(x(i));
        return a;
    }
    static Alphabet y_prefix(int k) {
        Alphabet a;
        for (int i = 1; i <= k; ++i) a.plus.push_back(y(i));
        return a;
    }
    static Alphabet z_prefix(int r) {
        Alphabet a;
        for (int i = 1; i <= r; ++i) a.plus.push_back(z(i));
        return a;
    }
    static Alphabet of(std::vector<Variable> vars) {
        Alphabet a;
        a.plus = std::move(vars);
        return a;
    }

    Alphabet negated() const { return Alphabet{minus, plus}; }

    int cardinality() const {
        return static_cast<int>(plus.size()) - static_cast<int>(minus.size());
    }

    // union with multiset cancellation between the two sides
    friend Alphabet operator+(const Alphabet& a, const Alphabet& b) {
        std::vector<Variable> p = a.plus, m = a.minus;
        p.insert(p.end(), b.plus.begin(), b.plus.end());
        m.insert(m.end(), b.minus.begin(), b.minus.end());
        std::sort(p.begin(), p.end());
        std::sort(m.begin(), m.end());
        std::vector<Variable> cp, cm;
        std::set_difference(p.begin(), p.end(), m.begin(), m.end(),
                            std::back_inserter(cp));
        std::set_difference(m.begin(), m.end(), p.begin(), p.end(),
                            std::back_inserter(cm));
        return Alphabet{std::move(cp), std::move(cm)};
    }
    friend Alphabet operator-(const Alphabet& a, const Alphabet& b) {
        return a + b.negated();
    }
};

// S_m(A - B): coefficient of t^m in prod_{b in B}(1 - t b) / prod_{a in A}(1 - t a)
inline LaurentPoly complete_function(int m, const Alphabet& a) {
    if (m < 0) return {};
    std::vector<LaurentPoly> h(m + 1);
    h[0] = LaurentPoly(1);
    for (Variable v : a.plus)
        for (int k = 1; k <= m; ++k) h[k] += LaurentPoly(v) * h[k - 1];
    for (Variable v : a.minus)
        for (int k = m; k >= 1; --k) h[k] -= LaurentPoly(v) * h[k - 1];
    return h[m];
}

// ---------------------------------------------------------------------------
// determinants

// Laplace expansion row by row, memoized over column subsets; no division,
// fine at the sizes arising here (<= ~9)
inline LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& a) {
    int n = static_cast<int>(a.size());
    for (auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatch("matrix is not square");
    // dp[mask] = determinant of the minor on rows 0..popcount(mask)-1 and columns mask
    std::vector<std::map<unsigned, LaurentPoly>> memo(n + 1);
    memo[0].emplace(0u, LaurentPoly(1));
    for (int row = 0; row < n; ++row) {
        for (auto& [mask, minor] : memo[row]) {
            if (minor.is_zero() && row > 0) continue;
            int sign = 1; // alternates over the columns still available
            for (int col = 0; col < n; ++col) {
                if (mask & (1u << col)) continue;
                if (!a[row][col].is_zero()) {
                    LaurentPoly contrib = LaurentPoly(Rational(sign)) * a[row][col] * minor;
                    auto [it, inserted] =
                        memo[row + 1].emplace(mask | (1u << col), contrib);
                    if (!inserted) it->second += contrib;
                }
                sign = -sign;
            }
        }
    }
    auto it = memo[n].find((1u << n) - 1);
    return it == memo[n].end() ? LaurentPoly() : it->second;
}

// ---------------------------------------------------------------------------
// Grassmannian determinantal forms

// det |S_{v_j+1-i}(x^r - y^{v_j})| with v = [sigma_1-1, ..., sigma_r-1];
// `shift` raises every index uniformly (Eq. of the uniform index increase)
inline LaurentPoly grassmannian_determinant_shifted(const Permutation& sigma,
                                                    int shift) {
    int r = 0;
    if (!is_grassmannian(sigma, &r))
        throw NotGrassmannian("permutation has more than one descent");
    if (sigma.is_identity()) {
        if (shift != 0)
            throw NotGrassmannian("shifted determinant needs an explicit descent");
        return LaurentPoly(1);
    }
    std::vector<int> v(r);
    for (int j = 0; j < r; ++j) v[j] = sigma(j + 1) - 1;
    Alphabet xr = Alphabet::x_prefix(r);
    std::vector<std::vector<LaurentPoly>> m(r, std::vector<LaurentPoly>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            m[i - 1][j - 1] = complete_function(
                v[j - 1] + 1 - i + shift, xr - Alphabet::y_prefix(v[j - 1]));
    return determinant(m);
}

inline LaurentPoly grassmannian_determinant(const Permutation& sigma) {
    return grassmannian_determinant_shifted(sigma, 0);
}

// x_1...x_r X_sigma(x,y) as a determinant with all indices raised by one
inline LaurentPoly shift_grassmannian(const Permutation& sigma, int r) {
    if (sigma.is_identity()) {
        LaurentPoly p(1);
        for (int i = 1; i <= r; ++i) p *= LaurentPoly(x(i));
        return p;
    }
    int d = 0;
    if (!is_grassmannian(sigma, &d))
        throw NotGrassmannian("permutation has more than one descent");
    if (d != r) throw NotGrassmannian("descent does not match r");
    return grassmannian_determinant_shifted(sigma, 1);
}

// flagged multi-Schur determinant det |S_{v_j - u_i + j - i}(columns_j + flags_i)|
inline LaurentPoly multi_schur(const std::vector<int>& v, const std::vector<int>& u,
                               const std::vector<Alphabet>& columns,
                               const std::vector<Alphabet>& flags) {
    std::size_t n = v.size();
    if (u.size() != n || columns.size() != n || flags.size() != n)
        throw DimensionMismatch("v, u, columns and flags must have equal length");
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = complete_function(
                v[j] - u[i] + static_cast<int>(j) - static_cast<int>(i),
                columns[j] + flags[i]);
    return determinant(m);
}

// Flag suppression: a flag that removes at most n-1, ..., 1, 0 letters from
// rows 1, ..., n may be dropped without changing the determinant (removing p
// letters expands a row into at most p lower rows via elementary functions)
inline bool flag_drop_check(const std::vector<int>& v, const std::vector<int>& u,
                            const std::vector<Alphabet>& columns,
                            const std::vector<Alphabet>& flags) {
    int n = static_cast<int>(flags.size());
    for (int i = 0; i < n; ++i)
        if (!flags[i].plus.empty() ||
            static_cast<int>(flags[i].minus.size()) > n - 1 - i)
            throw PreconditionViolated("flag cardinality bound violated");
    std::vector<Alphabet> empty(n);
    return multi_schur(v, u, columns, flags) == multi_schur(v, u, columns, empty);
}

// ---------------------------------------------------------------------------
// Newton / Schubert-basis expansion

namespace detail {

inline void foreach_code_of_weight_at_most(int positions, int budget,
                                           std::vector<int>& code, auto&& fn) {
    if (static_cast<int>(code.size()) == positions) {
        fn(code);
        return;
    }
    for (int c = 0; c <= budget; ++c) {
        code.push_back(c);
        foreach_code_of_weight_at_most(positions, budget - c, code, fn);
        code.pop_back();
    }
}

inline LaurentPoly specialize_x_to_y(const LaurentPoly& f) {
    std::map<Variable, LaurentPoly> sub;
    for (Variable v : f.support())
        if (v.family == Family::X) sub.emplace(v, LaurentPoly(y(v.index)));
    return substitute(f, sub);
}

} // namespace detail

// coefficients c_sigma = (d_sigma f)|_{x=y}, so that f = sum c_sigma X_sigma
inline std::map<Permutation, LaurentPoly> newton_expand(const LaurentPoly& f, int n) {
    int degree = 0;
    for (auto& [m, c] : f.terms()) {
        int d = 0;
        for (auto& [v, e] : m.exponents())
            if (v.family == Family::X) {
                if (e < 0) throw PreconditionViolated("f must be polynomial in x");
                d += e;
            }
        degree = std::max(degree, d);
    }
    std::map<Permutation, LaurentPoly> out;
    std::vector<int> c;
    detail::foreach_code_of_weight_at_most(n + degree, degree, c, [&](const std::vector<int>& cv) {
        Permutation sigma = permutation_from_code(Code{cv});
        if (out.count(sigma)) return;
        LaurentPoly coeff = detail::specialize_x_to_y(divided_difference_perm(f, sigma));
        if (!coeff.is_zero()) out.emplace(std::move(sigma), std::move(coeff));
    });
    return out;
}

// ---------------------------------------------------------------------------
// branching and expansion rules for Grassmannian polynomials
//
// An increasing partition with at most r parts is the code of a Grassmannian
// permutation with descent at most r; Y_lambda(x^r, y) below is that Schubert
// polynomial, computed through the determinantal form.

inline LaurentPoly grassmannian_poly(const Partition& lambda, int r) {
    Partition p = lambda.padded(r);
    Code c;
    c.entries = p.parts;
    return grassmannian_determinant(permutation_from_code(c));
}

// Y_lambda(x^r,y) = sum_mu psi^h(lambda/mu; r) Y_mu(x^{r-1},y) over
// horizontal strips lambda/mu, mu with r-1 parts
inline std::vector<std::pair<Partition, LaurentPoly>>
branch_last_variable(const Partition& lambda, int r) {
    if (lambda.size() > r) throw Error("lambda has more than r parts");
    Partition lam = lambda.padded(r);
    std::vector<std::pair<Partition, LaurentPoly>> out;
    // mu_j in [lam_j, lam_{j+1}] for j = 1..r-1 (interlacing)
    std::vector<int> mu;
    auto rec = [&](auto&& self, int j) -> void {
        if (j == r) {
            Partition m{std::vector<int>(mu)};
            out.emplace_back(m, psi_h(lam, m, r, x(r)));
            return;
        }
        for (int v = lam[j - 1]; v <= lam[j]; ++v) {
            if (!mu.empty() && v < mu.back()) continue;
            mu.push_back(v);
            self(self, j + 1);
            mu.pop_back();
        }
    };
    if (r == 0) {
        out.emplace_back(Partition{}, LaurentPoly(1));
        return out;
    }
    rec(rec, 1);
    return out;
}

// x_1...x_r Y_nu(x,y) = sum_mu psi^v(zeta/mu; r) Y_mu(x,y), zeta = nu + 1^r
inline std::vector<std::pair<Partition, LaurentPoly>>
vertical_strip_expand(const Partition& nu, int r) {
    if (nu.size() > r) throw Error("nu has more than r parts");
    Partition n = nu.padded(r);
    std::vector<int> zeta(n.parts);
    for (int& p : zeta) ++p;
    std::vector<std::pair<Partition, LaurentPoly>> out;
    for (unsigned eps = 0; eps < (1u << r); ++eps) {
        std::vector<int> mu(zeta);
        for (int i = 0; i < r; ++i)
            if (eps & (1u << i)) --mu[i];
        if (!std::is_sorted(mu.begin(), mu.end())) continue; // non-conform, discarded
        Partition m{std::vector<int>(mu)};
        out.emplace_back(m, psi_v(Partition{std::vector<int>(zeta)}, m, r));
    }
    std::sort(out.begin(), out.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

// x_1...x_r Y_nu(x^r,y) = sum_mu theta(zeta/mu) Y_mu(x^{r-1},y) over ribbons
// zeta/mu, mu with r-1 parts; theta is taken at x = x_r
inline std::vector<std::pair<Partition, LaurentPoly>>
ribbon_expand(const Partition& nu, int r) {
    if (nu.size() > r) throw Error("nu has more than r parts");
    if (r == 0) return {{Partition{}, LaurentPoly(1)}};
    Partition n = nu.padded(r);
    std::vector<int> zeta(n.parts);
    for (int& p : zeta) ++p;
    Partition zp{std::vector<int>(zeta)};
    std::vector<std::pair<Partition, LaurentPoly>> out;
    std::vector<int> mu;
    auto rec = [&](auto&& self, int j) -> void {
        if (j == r) {
            SkewShape s(zp, Partition{std::vector<int>(mu)});
            if (is_ribbon(s))
                out.emplace_back(Partition{std::vector<int>(mu)},
                                 theta_weight(s, x(r)));
            return;
        }
        for (int v = mu.empty() ? 0 : mu.back(); v <= zeta[j]; ++v) {
            mu.push_back(v);
            self(self, j + 1);
            mu.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace escalier
