#pragma once

// Partition functions of staircase families: brute-force sums of weights,
// the three closed forms (full-to-column, column-to-column determinant,
// column-to-empty), 2-enumeration, and the verification suites.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "escalier/errors.hpp"
#include "escalier/laurent.hpp"
#include "escalier/schubert.hpp"
#include "escalier/staircase.hpp"

namespace escalier {

// ---------------------------------------------------------------------------
// brute force

inline std::vector<Variable> default_vars(Family f, int count) {
    std::vector<Variable> v;
    for (int i = 1; i <= count; ++i) v.push_back(Variable{f, i});
    return v;
}

// sum of staircase weights over all staircases from `first` down to `last`
inline LaurentPoly F_between_brute(const Column& first, const Column& last, int n,
                                   const std::vector<Variable>& vars) {
    LaurentPoly sum;
    for_each_staircase(first, last, n, [&](const Staircase& t) {
        sum += staircase_weight(t, vars);
    });
    return sum;
}

inline LaurentPoly F_full_brute(int n, const Column& u) {
    if (!u.empty() && u[0] > n) throw InvalidColumn("u_1 exceeds n");
    if (u.size() == n) return LaurentPoly(1); // the single-column staircase
    return F_between_brute(full_column(n), u, n,
                           default_vars(Family::X, n - u.size()));
}

inline LaurentPoly F_two_column_brute(const Column& u, const Column& v,
                                      std::vector<Variable> vars = {}) {
    if (vars.empty()) vars = default_vars(Family::Z, u.size() - v.size());
    return F_between_brute(u, v, u.empty() ? 1 : u[0], vars);
}

inline LaurentPoly F_to_empty_brute(const Column& u) {
    if (u.empty()) return LaurentPoly(1);
    return F_between_brute(u, Column{}, u[0], default_vars(Family::X, u.size()));
}

// ---------------------------------------------------------------------------
// closed forms

struct ClosedFormCertificate {
    LaurentPoly prefactor;
    LaurentPoly core;
    LaurentPoly assembled; // prefactor * core
    std::string description;
};

namespace detail {

inline Monomial x_rho_mono(int r) {
    Monomial m;
    for (int i = 1; i < r; ++i) m.multiply_by(x(i), r - i);
    return m;
}

inline LaurentPoly x_rho(int r) { return LaurentPoly::term(x_rho_mono(r), 1); }

inline LaurentPoly y_power(const std::vector<int>& exps, int sign) {
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i]) m.multiply_by(y(static_cast<int>(i) + 1), sign * exps[i]);
    return LaurentPoly::term(m, 1);
}

} // namespace detail

// F(n,u) = x^{rho_r} y^{-<u~>} X_{[u~, u^w]}(x, y), r = n - l(u)
inline ClosedFormCertificate F_full_closed(int n, const Column& u) {
    if (!u.empty() && u[0] > n) throw InvalidColumn("u_1 exceeds n");
    int r = n - u.size();
    if (r < 0) throw InvalidColumn("column longer than n");
    if (r == 0) return {LaurentPoly(1), LaurentPoly(1), LaurentPoly(1), "F(n,[n..1]) = 1"};
    std::vector<int> word = complement(u, n); // u~, increasing
    LaurentPoly pre = detail::x_rho(r) * detail::y_power(level_vector(word), -1);
    for (int i = u.size() - 1; i >= 0; --i) word.push_back(u[i]); // u^w
    Permutation sigma(word);
    LaurentPoly core = schubert(sigma);
    std::ostringstream d;
    d << "x^rho_" << r << " y^-<u~> X_" << sigma.str() << "(x,y)";
    return {pre, core, pre * core, d.str()};
}

// F(u,v;z) = z^{rho_r} y^{<v>-<u>} S_{alpha/[0^r,gamma]}(z - y^{beta_j} // flags)
inline ClosedFormCertificate F_two_column_closed(const Column& u, const Column& v,
                                                 int n,
                                                 std::vector<Variable> z_vars = {}) {
    int k = n - u.size();
    int r = u.size() - v.size();
    if (k < 1 || r < 1) throw InvalidColumn("need l(v) < l(u) < n");
    if (!u.empty() && u[0] > n) throw InvalidColumn("u_1 exceeds n");
    if (z_vars.empty()) z_vars = default_vars(Family::Z, r);
    if (static_cast<int>(z_vars.size()) != r)
        throw LengthMismatch("need one z variable per step");

    std::vector<int> vt = complement(v, n); // length k+r
    std::vector<int> ut = complement(u, n); // length k
    std::vector<int> beta(k + r), alpha(k + r), gamma(k);
    for (int j = 0; j < k + r; ++j) {
        beta[j] = vt[j] - 1;
        alpha[j] = beta[j] + r - j; // beta_j + r - j + 1, 1-based
    }
    for (int i = 0; i < k; ++i) gamma[i] = ut[i] - i - 1;

    std::vector<Alphabet> columns(k + r), flags(k + r);
    for (int j = 0; j < k + r; ++j) {
        columns[j].plus = z_vars;
        for (int b = 1; b <= beta[j]; ++b) columns[j].minus.push_back(y(b));
    }
    for (int i = 0; i < k; ++i)
        flags[r + i] = Alphabet::y_prefix(i + 1 + gamma[i]);

    std::vector<int> lower(k + r, 0);
    for (int i = 0; i < k; ++i) lower[r + i] = gamma[i];
    LaurentPoly core = multi_schur(alpha, lower, columns, flags);

    // y^{<v>-<u>}, level sequences zero-padded to a common length
    std::vector<int> lv = v.empty() ? std::vector<int>{} : level_vector(v.entries);
    std::vector<int> lu = level_vector(u.entries);
    std::vector<int> diff(std::max(lv.size(), lu.size()), 0);
    for (std::size_t i = 0; i < lv.size(); ++i) diff[i] += lv[i];
    for (std::size_t i = 0; i < lu.size(); ++i) diff[i] -= lu[i];
    // z^{rho_r} (z_1...z_r)^{-r}: the determinant S_alpha carries the full
    // (z_1...z_r)^r raised from S_beta, of which F only owns z^{rho_r}
    Monomial zr;
    for (int j = 0; j < r; ++j) zr.multiply_by(z_vars[j], -1 - j);
    LaurentPoly pre = LaurentPoly::term(zr, 1) * detail::y_power(diff, 1);
    std::ostringstream d;
    d << "z^(rho_r - r) y^(<v>-<u>) S_alpha/[0^r,gamma], beta=[";
    for (int j = 0; j < k + r; ++j) d << (j ? "," : "") << beta[j];
    d << "], gamma=[";
    for (int i = 0; i < k; ++i) d << (i ? "," : "") << gamma[i];
    d << "]";
    return {pre, core, pre * core, d.str()};
}

// F(u,[]) = x^{rho_r} y^{-<u>} X_{[u^w, u~]}(0, -y); for u_r = k > 1 the
// certificate of the shifted column with every y_i renamed to y_{i+k-1}
inline ClosedFormCertificate F_to_empty_closed(const Column& u) {
    if (u.empty()) throw EmptyColumn("column-to-empty closed form");
    int r = u.size();
    int k = u[r - 1];
    if (k > 1) {
        std::vector<int> shifted = u.entries;
        for (int& e : shifted) e -= k - 1;
        ClosedFormCertificate c = F_to_empty_closed(Column(std::move(shifted)));
        std::map<Variable, LaurentPoly> ren;
        for (const LaurentPoly* p : {&c.prefactor, &c.core})
            for (Variable var : p->support())
                if (var.family == Family::Y)
                    ren.emplace(var, LaurentPoly(y(var.index + k - 1)));
        c.prefactor = substitute(c.prefactor, ren);
        c.core = substitute(c.core, ren);
        c.assembled = c.prefactor * c.core;
        c.description += " with y_i -> y_i+" + std::to_string(k - 1);
        return c;
    }
    int n = u[0];
    std::vector<int> word;
    for (int i = r - 1; i >= 0; --i) word.push_back(u[i]); // u^w
    for (int t : complement(u, n)) word.push_back(t);      // u~
    Permutation sigma(word);
    LaurentPoly core = schubert(sigma);
    std::map<Variable, LaurentPoly> sub;
    for (Variable var : core.support()) {
        if (var.family == Family::X) sub.emplace(var, LaurentPoly(0));
        if (var.family == Family::Y)
            sub.emplace(var, LaurentPoly(Rational(-1)) * LaurentPoly(var));
    }
    core = substitute(core, sub);
    LaurentPoly pre = detail::x_rho(r) * detail::y_power(level_vector(u.entries), -1);
    std::ostringstream d;
    d << "x^rho_" << r << " y^-<u> X_" << sigma.str() << "(0, -y)";
    return {pre, core, pre * core, d.str()};
}

// ---------------------------------------------------------------------------
// 2-enumeration

inline Rational two_enumeration(const LaurentPoly& f) {
    std::map<Variable, LaurentPoly> sub;
    for (Variable v : f.support())
        sub.emplace(v, LaurentPoly(v.family == Family::Y ? Rational(1) : Rational(2)));
    LaurentPoly s = substitute(f, sub);
    if (s.is_zero()) return Rational(0);
    if (s.terms().size() != 1 || !s.terms().begin()->first.is_unit())
        throw Error("specialization did not produce a constant");
    return s.terms().begin()->second;
}

// sum of 2^{#(-1)} over all ASMs whose staircase passes through column u
inline Integer asm_two_weight_sum(int n, const Column& u) {
    Integer total = 0;
    for (const AsmMatrix& a : enumerate_asms(n)) {
        Staircase t = asm_to_staircase(a);
        if (t.columns[n - u.size()] == u)
            total += Integer(1) << minus_ones(a);
    }
    return total;
}

// ---------------------------------------------------------------------------
// verification suites

struct CaseResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string witness; // counterexample payload on failure
};

struct Report {
    std::vector<CaseResult> cases;
    bool all_pass() const {
        for (auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    int passed() const {
        int k = 0;
        for (auto& c : cases) k += c.pass;
        return k;
    }
};

namespace detail {

inline void record(Report& rep, const std::string& suite, const std::string& name,
                   bool pass, const std::string& witness = "") {
    rep.cases.push_back({suite, name, pass, pass ? "" : witness});
}

// all columns u (possibly empty) with entries in [1..n]
inline std::vector<Column> all_columns(int n) {
    std::vector<Column> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> e;
        for (int v = n; v >= 1; --v)
            if (mask & (1u << (v - 1))) e.push_back(v);
        out.push_back(Column(std::move(e)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string poly_pair(const LaurentPoly& brute, const LaurentPoly& closed) {
    return "brute = " + render(brute) + " ; closed = " + render(closed);
}

inline void verify_theorem1(Report& rep, int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (const Column& u : all_columns(n)) {
            LaurentPoly brute = F_full_brute(n, u);
            ClosedFormCertificate c = F_full_closed(n, u);
            record(rep, "theorem1", "F(" + std::to_string(n) + "," + u.str() + ")",
                   brute == c.assembled, poly_pair(brute, c.assembled));
        }
}

inline void verify_theorem2(Report& rep, int max_n) {
    for (int n = 2; n <= max_n; ++n)
        for (const Column& u : all_columns(n)) {
            if (u.empty() || u.size() == n) continue; // need k >= 1, r >= 1 below
            for (const Column& v : all_columns(n)) {
                if (v.size() >= u.size()) continue;
                LaurentPoly brute = F_two_column_brute(u, v);
                ClosedFormCertificate c = F_two_column_closed(u, v, n);
                record(rep, "theorem2",
                       "F(" + u.str() + "," + v.str() + ") n=" + std::to_string(n),
                       brute == c.assembled, poly_pair(brute, c.assembled));
            }
        }
}

inline void verify_theorem3(Report& rep, int max_n) {
    for (const Column& u : all_columns(max_n)) {
        if (u.empty()) continue;
        LaurentPoly brute = F_to_empty_brute(u);
        ClosedFormCertificate c = F_to_empty_closed(u);
        record(rep, "theorem3", "F(" + u.str() + ",[])", brute == c.assembled,
               poly_pair(brute, c.assembled));
        if (u[u.size() - 1] == 1) {
            // enlarging n only appends fixed points to the indexing permutation
            std::vector<int> small, large;
            for (int i = u.size() - 1; i >= 0; --i) small.push_back(u[i]);
            large = small;
            for (int t : complement(u, u[0])) small.push_back(t);
            for (int t : complement(u, u[0] + 2)) large.push_back(t);
            record(rep, "theorem3", "n-invariance " + u.str(),
                   Permutation(small) == Permutation(large),
                   "complement permutations differ");
        }
    }
}

inline void verify_bijections(Report& rep, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<AsmMatrix> asms = enumerate_asms(n);
        bool round = true;
        std::string bad;
        for (const AsmMatrix& a : asms)
            if (!(staircase_to_asm(asm_to_staircase(a)) == a)) {
                round = false;
                bad = "asm round-trip failed";
            }
        record(rep, "bijections",
               "asm round-trip n=" + std::to_string(n) + " (" +
                   std::to_string(asms.size()) + " matrices)",
               round, bad);
    }
    for (int n = 1; n <= max_n + 1; ++n)
        for (const Column& u : all_columns(n)) {
            if (u.size() >= n) continue;
            std::vector<Column> preds = enumerate_predecessors(u, n);
            bool ok = true;
            std::string bad;
            for (const Column& v : preds) {
                SkewShape s = column_ribbon_bijection(v, u, n);
                // the inner shape is p(v,n) padded with one zero to k parts
                std::vector<int> mu(s.inner().parts.begin() + 1, s.inner().parts.end());
                Column back = ribbon_to_column(Partition(std::move(mu)), n);
                if (!(back == v)) {
                    ok = false;
                    bad = "ribbon inverse failed for v=" + v.str();
                }
            }
            record(rep, "bijections",
                   "ribbon round-trip u=" + u.str() + " n=" + std::to_string(n) +
                       " (" + std::to_string(preds.size()) + " columns)",
                   ok, bad);
        }
}

inline void verify_symmetry(Report& rep, int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (const Column& u : all_columns(n)) {
            int r = n - u.size();
            if (r == 0) continue;
            LaurentPoly f =
                F_full_brute(n, u) * LaurentPoly::term(detail::x_rho_mono(r).inverse(), 1);
            std::vector<Variable> xs = default_vars(Family::X, r);
            record(rep, "symmetry", "F(" + std::to_string(n) + "," + u.str() + ")x^-rho",
                   is_symmetric_in(f, xs), render(f));
        }
    for (int n = 2; n <= max_n; ++n)
        for (const Column& u : all_columns(n)) {
            if (u.size() < 2 || u[0] != n) continue; // fix u_1 = n to avoid repeats
            for (const Column& v : all_columns(n)) {
                if (v.size() + 2 != u.size()) continue;
                LaurentPoly f = F_two_column_brute(u, v);
                f *= LaurentPoly::term(Monomial::of(z(1), -1), 1);
                record(rep, "symmetry",
                       "F(" + u.str() + "," + v.str() + ")z1^-1 in z1,z2",
                       is_symmetric_in(f, {z(1), z(2)}), render(f));
            }
        }
}

inline void verify_two_enum(Report& rep, int max_n) {
    for (int n = 1; n <= std::min(max_n, 4); ++n)
        for (const Column& u : all_columns(n)) {
            if (u.empty() || u.size() == n) continue;
            // split at u: spec2(F(n,u)) * spec2(F(u,[])) against the ASM class
            Rational lhs = two_enumeration(F_full_brute(n, u)) *
                           two_enumeration(F_to_empty_brute(u));
            Integer rhs = asm_two_weight_sum(n, u);
            record(rep, "two_enum", "class n=" + std::to_string(n) + " u=" + u.str(),
                   lhs == Rational(rhs),
                   "spec = " + lhs.str() + " ; asm sum = " + rhs.str());
        }
    for (int n = 1; n <= max_n; ++n) {
        Integer total = 0;
        for (const AsmMatrix& a : enumerate_asms(n)) total += Integer(1) << minus_ones(a);
        Integer expect = Integer(1) << (n * (n - 1) / 2);
        record(rep, "two_enum", "full grid n=" + std::to_string(n), total == expect,
               total.str() + " != " + expect.str());
    }
}

inline void verify_appendix(Report& rep, int max_r) {
    // branching, vertical strips, ribbon expansion, and their composition,
    // for all increasing partitions inside a 3x3 box and r <= max_r
    std::vector<Partition> shapes;
    for (int a = 0; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c) {
                std::vector<int> parts;
                for (int v : {a, b, c})
                    if (v) parts.push_back(v);
                Partition p(parts);
                if (std::find(shapes.begin(), shapes.end(), p) == shapes.end())
                    shapes.push_back(p);
            }
    for (int r = 1; r <= max_r; ++r)
        for (const Partition& nu : shapes) {
            if (static_cast<int>(nu.parts.size()) > r) continue;
            LaurentPoly lhs = grassmannian_poly(nu, r);
            // Eq. (4): branching on the last variable
            LaurentPoly sum;
            for (auto& [mu, w] : branch_last_variable(nu, r))
                sum += w * grassmannian_poly(mu, r - 1);
            record(rep, "appendix", "branch r=" + std::to_string(r) + " nu=" + nu.str(),
                   lhs == sum, poly_pair(lhs, sum));
            // vertical strips: x_1..x_r Y_nu = sum over conform zeta - eps
            LaurentPoly xs(1);
            for (int i = 1; i <= r; ++i) xs *= LaurentPoly(x(i));
            LaurentPoly vsum;
            for (auto& [zeta, w] : vertical_strip_expand(nu, r))
                vsum += w * grassmannian_poly(zeta, r);
            record(rep, "appendix", "vstrip r=" + std::to_string(r) + " nu=" + nu.str(),
                   xs * lhs == vsum, poly_pair(xs * lhs, vsum));
            // ribbon expansion and the theta = psi^v o psi^h composition
            std::vector<int> zparts = nu.padded(r).parts;
            for (int& p : zparts) ++p;
            Partition zeta(std::move(zparts));
            LaurentPoly rsum;
            bool decompo = true;
            for (auto& [mu, w] : ribbon_expand(nu, r)) {
                rsum += w * grassmannian_poly(mu, r - 1);
                // sum psi^v(zeta/eta) psi^h(eta/mu) over mu <= eta <= zeta
                LaurentPoly composed;
                Partition mup = mu.padded(r);
                std::vector<int> eta;
                auto rec = [&](auto&& self, int i) -> void {
                    if (i == r) {
                        try {
                            Partition ep{std::vector<int>(eta)};
                            composed += psi_v(zeta, ep, r) * psi_h(ep, mup, r, x(r));
                        } catch (const Error&) {
                            // non-strip intermediates contribute nothing
                        }
                        return;
                    }
                    int lo = std::max(mup[i], eta.empty() ? 0 : eta.back());
                    for (int v = lo; v <= zeta[i]; ++v) {
                        eta.push_back(v);
                        self(self, i + 1);
                        eta.pop_back();
                    }
                };
                rec(rec, 0);
                if (!(composed == w)) decompo = false; // w is theta(zeta/mu)
            }
            record(rep, "appendix", "ribbon r=" + std::to_string(r) + " nu=" + nu.str(),
                   xs * lhs == rsum, poly_pair(xs * lhs, rsum));
            record(rep, "appendix",
                   "decompo r=" + std::to_string(r) + " nu=" + nu.str(), decompo,
                   "psi^v o psi^h != theta for some ribbon");
        }
}

} // namespace detail

inline Report verify(const std::string& suite, int max_n) {
    Report rep;
    bool known = false;
    auto want = [&](const char* s) {
        bool w = suite == s || suite == "all";
        known = known || suite == s;
        return w;
    };
    if (want("theorem1")) detail::verify_theorem1(rep, max_n);
    if (want("theorem2")) detail::verify_theorem2(rep, max_n);
    if (want("theorem3")) detail::verify_theorem3(rep, max_n);
    if (want("appendix")) detail::verify_appendix(rep, std::min(max_n, 3));
    if (want("bijections")) detail::verify_bijections(rep, max_n);
    if (want("symmetry")) detail::verify_symmetry(rep, max_n);
    if (want("two_enum")) detail::verify_two_enum(rep, max_n);
    if (!known && suite != "all") throw Error("unknown suite: " + suite);
    return rep;
}

} // namespace escalier
