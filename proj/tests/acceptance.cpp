// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// All equalities are exact symbolic identities.

#include <iostream>
#include <random>
#include <string>

#include "escalier/escalier.hpp"

using namespace escalier;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail = "") {
    std::cout << "criterion " << number << " [" << name << "]: "
              << (pass ? "pass" : "FAIL");
    if (!pass && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::string first_failure(const Report& r) {
    for (const CaseResult& c : r.cases)
        if (!c.pass) return c.name + ": " + c.witness;
    return "";
}

LaurentPoly random_xy_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> idx(1, 3);
    std::uniform_int_distribution<int> num(-4, 4);
    LaurentPoly p;
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        for (int v = 1; v <= 3; ++v) m.multiply_by(x(v), expo(rng));
        m.multiply_by(y(idx(rng)), expo(rng));
        p += LaurentPoly::term(m, Rational(num(rng)));
    }
    return p;
}

} // namespace

int main() {
    // 1. full-to-column closed form, exhaustive n <= 5
    {
        Report r = verify("theorem1", 5);
        bool counts = enumerate_staircases(full_column(3), Column{1}, 3).size() == 2 &&
                      enumerate_staircases(full_column(3), Column{2}, 3).size() == 3 &&
                      enumerate_staircases(full_column(3), Column{3}, 3).size() == 2;
        report(1, "theorem1", r.all_pass() && counts, first_failure(r));
    }

    // 2. two-column determinant: worked 4x4 example plus exhaustive n <= 4
    {
        Column u{6, 5, 3, 1}, v{5, 2};
        bool worked = F_two_column_closed(u, v, 6).assembled == F_two_column_brute(u, v);
        Report r = verify("theorem2", 4);
        report(2, "theorem2", worked && r.all_pass(),
               worked ? first_failure(r) : "worked 4x4 example diverges");
    }

    // 3. column-to-empty closed form: u_r = 1 with u_1 <= 5, shift rule u_1 <= 6
    {
        bool ok = true;
        std::string detail;
        for (const Column& u : detail::all_columns(6)) {
            if (u.empty()) continue;
            if (u[u.size() - 1] == 1 && u[0] > 5) continue;
            if (F_to_empty_closed(u).assembled != F_to_empty_brute(u)) {
                ok = false;
                detail = "F(" + u.str() + ",[])";
                break;
            }
        }
        bool pair = F_to_empty_closed(Column{5, 3, 1}).assembled ==
                        F_to_empty_brute(Column{5, 3, 1}) &&
                    F_to_empty_closed(Column{6, 4, 2}).assembled ==
                        F_to_empty_brute(Column{6, 4, 2});
        report(3, "theorem3", ok && pair, detail);
    }

    // 4. appendix identities: worked six-term expansion + sweeps in a 3x3 box
    {
        auto terms = vertical_strip_expand(Partition{2, 2, 3}, 3);
        std::map<Partition, LaurentPoly> got(terms.begin(), terms.end());
        LaurentPoly y3(y(3)), y4(y(4)), y6(y(6));
        bool six =
            terms.size() == 6 && got.at(Partition{3, 3, 4}) == LaurentPoly(1) &&
            got.at(Partition{2, 3, 4}) == y3 && got.at(Partition{3, 3, 3}) == y6 &&
            got.at(Partition{2, 2, 4}) == y3 * y4 &&
            got.at(Partition{2, 3, 3}) == y3 * y6 &&
            got.at(Partition{2, 2, 3}) == y3 * y4 * y6;
        Report r = verify("appendix", 3);
        report(4, "appendix", six && r.all_pass(),
               six ? first_failure(r) : "six-term expansion diverges");
    }

    // 5. Schubert engine invariants
    {
        std::mt19937 rng(424243);
        std::uniform_int_distribution<int> pick(1, 2);
        bool ok = true;
        std::string detail;
        for (int i = 0; i < 500 && ok; ++i) {
            LaurentPoly f = random_xy_poly(rng);
            int k = pick(rng);
            if (divided_difference(divided_difference(f, k), k) != LaurentPoly()) {
                ok = false;
                detail = "d^2 != 0";
            }
            LaurentPoly a =
                divided_difference(divided_difference(divided_difference(f, 1), 2), 1);
            LaurentPoly b =
                divided_difference(divided_difference(divided_difference(f, 2), 1), 2);
            if (a != b) {
                ok = false;
                detail = "braid relation fails";
            }
        }
        // Grassmannian determinant = divided-difference Schubert over S5
        std::vector<int> w{1, 2, 3, 4, 5};
        do {
            Permutation s(w);
            if (!is_grassmannian(s) || s.is_identity()) continue;
            if (grassmannian_determinant(s) != schubert(s)) {
                ok = false;
                detail = "determinant diverges at " + s.str();
                break;
            }
        } while (std::next_permutation(w.begin(), w.end()));
        // x -> y specialization over S4
        std::vector<int> w4{1, 2, 3, 4};
        do {
            Permutation s(w4);
            LaurentPoly p = schubert(s);
            std::map<Variable, LaurentPoly> sub;
            for (Variable v : p.support())
                if (v.family == Family::X) sub.emplace(v, LaurentPoly(y(v.index)));
            LaurentPoly spec = substitute(p, sub);
            if (spec != (s.is_identity() ? LaurentPoly(1) : LaurentPoly())) {
                ok = false;
                detail = "specialization diverges at " + s.str();
                break;
            }
        } while (std::next_permutation(w4.begin(), w4.end()));
        // Eq. (1) shift on the worked section-5 shapes
        for (auto& word : {std::vector<int>{1, 3, 4, 6, 2, 5}, std::vector<int>{2, 4, 1, 3, 5, 6}}) {
            Permutation s(word);
            int d = 0;
            is_grassmannian(s, &d);
            LaurentPoly xs(1);
            for (int i = 1; i <= d; ++i) xs *= LaurentPoly(x(i));
            if (shift_grassmannian(s, d) != xs * schubert(s)) {
                ok = false;
                detail = "shift equation fails at " + s.str();
            }
        }
        // flag drop on the worked 4x4 shapes: in S_alpha with columns
        // x^2 + z - y^{beta_j}, the row alphabets x^2 may be thinned to
        // 0, 0, x^1, x^2 without changing the determinant
        {
            std::vector<int> beta{0, 2, 3, 5};
            std::vector<Alphabet> cols(4), flags(4);
            for (int j = 0; j < 4; ++j) {
                cols[j].plus = {x(1), x(2), z(1), z(2)};
                cols[j].minus = Alphabet::y_prefix(beta[j]).plus;
            }
            flags[0].minus = {x(1), x(2)};
            flags[1].minus = {x(1), x(2)};
            flags[2].minus = {x(2)};
            if (!flag_drop_check({2, 3, 3, 4}, {0, 0, 0, 0}, cols, flags)) {
                ok = false;
                detail = "flag drop fails";
            }
        }
        // Newton expansion round-trip on 100 random polynomials of degree <= 3
        std::mt19937 rng2(99173);
        std::uniform_int_distribution<int> deg(0, 3);
        std::uniform_int_distribution<int> var(1, 3);
        std::uniform_int_distribution<int> num2(-4, 4);
        for (int i = 0; i < 100 && ok; ++i) {
            LaurentPoly f;
            for (int t = 0; t < 3; ++t) {
                Monomial m;
                int d = deg(rng2);
                for (int s = 0; s < d; ++s) m.multiply_by(x(var(rng2)), 1);
                f += LaurentPoly::term(m, Rational(num2(rng2)));
            }
            LaurentPoly back;
            for (auto& [sigma, coeff] : newton_expand(f, 3)) back += coeff * schubert(sigma);
            if (back != f) {
                ok = false;
                detail = "newton round-trip fails";
            }
        }
        report(5, "schubert engine", ok, detail);
    }

    // 6. bijections: ASM <-> staircase (n <= 5), column <-> ribbon (n <= 6)
    {
        Report r = verify("bijections", 5);
        bool eleven = enumerate_predecessors(Column{5, 3, 2}, 6).size() == 11;
        std::size_t asm5 = enumerate_asms(5).size();
        report(6, "bijections", r.all_pass() && eleven && asm5 == 429,
               first_failure(r));
    }

    // 7. symmetry of F x^{-rho} and of F(u,v;z1,z2) z1^{-1}
    {
        Report r = verify("symmetry", 5);
        report(7, "symmetry", r.all_pass(), first_failure(r));
    }

    // 8. 2-enumeration per class (n <= 4) and full totals (n <= 5)
    {
        Report r = verify("two_enum", 5);
        report(8, "two-enumeration", r.all_pass(), first_failure(r));
    }

    if (failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED" << std::endl;
    return 1;
}
