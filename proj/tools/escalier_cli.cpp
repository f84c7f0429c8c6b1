// Command line front end: enumeration, partition functions, Schubert
// polynomials, conversions, specializations and the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "escalier/escalier.hpp"
#include "escalier/json_io.hpp"

using namespace escalier;

namespace {

Column parse_column(const std::string& s) {
    std::vector<int> e;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) e.push_back(std::stoi(tok));
    return Column(std::move(e));
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> e;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) e.push_back(std::stoi(tok));
    return e;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_poly(const LaurentPoly& p, bool as_json, bool latex = false) {
    if (as_json)
        std::cout << to_json(p).dump(2) << "\n";
    else
        std::cout << render(p, latex ? Format::Latex : Format::Text) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Staircase / alternating-sign-matrix partition function toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured JSON output");

    // enumerate -------------------------------------------------------------
    auto* enu = app.add_subcommand("enumerate", "enumerate columns, staircases or ASMs");
    std::string enu_pred, enu_first, enu_last;
    int enu_n = 0, enu_asms = -1;
    enu->add_option("--predecessors", enu_pred, "column u: list all v with vu a staircase");
    enu->add_option("--first", enu_first, "first column of the staircases");
    enu->add_option("--last", enu_last, "last column of the staircases");
    enu->add_option("--n", enu_n, "bound on entries");
    enu->add_option("--asms", enu_asms, "list all n x n alternating sign matrices");

    // pf --------------------------------------------------------------------
    auto* pf = app.add_subcommand("pf", "partition function of a staircase family");
    int pf_full = 0;
    std::string pf_last, pf_u, pf_v, pf_empty, pf_method = "brute";
    int pf_n = 0;
    pf->add_option("--full", pf_full, "F(n, last): full staircases through --last");
    pf->add_option("--last", pf_last, "final column for --full");
    pf->add_option("--u", pf_u, "first column for a two-column query");
    pf->add_option("--v", pf_v, "last column for a two-column query");
    pf->add_option("--n", pf_n, "ambient n for the two-column closed form");
    pf->add_option("--empty", pf_empty, "F(u, []): staircases down to the empty column");
    pf->add_option("--method", pf_method, "brute | closed")
        ->check(CLI::IsMember({"brute", "closed"}));

    // schubert ----------------------------------------------------------------
    auto* sch = app.add_subcommand("schubert", "double Schubert polynomial");
    std::string sch_perm, sch_code;
    sch->add_option("--perm", sch_perm, "one-line permutation, comma separated");
    sch->add_option("--code", sch_code, "Lehmer code, comma separated");

    // convert -----------------------------------------------------------------
    auto* conv = app.add_subcommand("convert", "ASM <-> staircase conversion");
    std::string conv_asm, conv_stair;
    conv->add_option("--asm", conv_asm, "JSON file with an ASM ('-' for stdin)");
    conv->add_option("--staircase", conv_stair, "JSON file with a full staircase");

    // specialize ----------------------------------------------------------------
    auto* spec = app.add_subcommand("specialize", "2-enumeration: x -> 2, y -> 1");
    int spec_full = 0;
    std::string spec_last, spec_empty;
    spec->add_option("--full", spec_full, "specialize F(n, last)");
    spec->add_option("--last", spec_last, "final column for --full");
    spec->add_option("--empty", spec_empty, "specialize F(u, [])");

    // verify ----------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite = "all";
    int ver_max_n = 4;
    ver->add_option("--suite", ver_suite, "theorem1|theorem2|theorem3|appendix|bijections|symmetry|two_enum|all");
    ver->add_option("--max-n", ver_max_n, "size bound for the sweeps");

    // render ----------------------------------------------------------------
    auto* ren = app.add_subcommand("render", "pretty-print a polynomial");
    std::string ren_file = "-", ren_expr;
    bool ren_latex = false;
    ren->add_option("--file", ren_file, "polynomial JSON file ('-' for stdin)");
    ren->add_option("--expr", ren_expr, "polynomial expression to parse");
    ren->add_flag("--latex", ren_latex, "LaTeX output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enu) {
            if (enu_asms >= 0) {
                nlohmann::json arr = nlohmann::json::array();
                for (const AsmMatrix& a : enumerate_asms(enu_asms)) {
                    if (as_json) {
                        arr.push_back(to_json(a));
                    } else {
                        for (auto& row : a.rows) {
                            for (std::size_t j = 0; j < row.size(); ++j)
                                std::cout << (j ? " " : "") << row[j];
                            std::cout << "\n";
                        }
                        std::cout << "\n";
                    }
                }
                if (as_json) std::cout << arr.dump(2) << "\n";
            } else if (enu->count("--predecessors")) {
                if (enu_n <= 0) throw CLI::ValidationError("--n is required");
                nlohmann::json arr = nlohmann::json::array();
                for (const Column& v : enumerate_predecessors(parse_column(enu_pred), enu_n)) {
                    if (as_json)
                        arr.push_back(to_json(v));
                    else
                        std::cout << v.str() << "\n";
                }
                if (as_json) std::cout << arr.dump(2) << "\n";
            } else if (enu->count("--first")) {
                if (enu_n <= 0) throw CLI::ValidationError("--n is required");
                nlohmann::json arr = nlohmann::json::array();
                for_each_staircase(parse_column(enu_first), parse_column(enu_last), enu_n,
                                   [&](const Staircase& t) {
                                       if (as_json) {
                                           arr.push_back(to_json(t));
                                       } else {
                                           for (const Column& c : t.columns)
                                               std::cout << c.str() << " ";
                                           std::cout << "\n";
                                       }
                                   });
                if (as_json) std::cout << arr.dump(2) << "\n";
            } else {
                throw CLI::ValidationError("nothing to enumerate");
            }
        } else if (*pf) {
            bool closed = pf_method == "closed";
            if (pf->count("--full")) {
                Column u = parse_column(pf_last);
                if (closed) {
                    ClosedFormCertificate c = F_full_closed(pf_full, u);
                    if (as_json)
                        std::cout << to_json(c).dump(2) << "\n";
                    else
                        print_poly(c.assembled, false);
                } else {
                    print_poly(F_full_brute(pf_full, u), as_json);
                }
            } else if (pf->count("--u") && pf->count("--v")) {
                Column u = parse_column(pf_u), v = parse_column(pf_v);
                if (closed) {
                    int n = pf_n > 0 ? pf_n : (u.empty() ? 1 : u[0]);
                    ClosedFormCertificate c = F_two_column_closed(u, v, n);
                    if (as_json)
                        std::cout << to_json(c).dump(2) << "\n";
                    else
                        print_poly(c.assembled, false);
                } else {
                    print_poly(F_two_column_brute(u, v), as_json);
                }
            } else if (pf->count("--empty")) {
                Column u = parse_column(pf_empty);
                if (closed) {
                    ClosedFormCertificate c = F_to_empty_closed(u);
                    if (as_json)
                        std::cout << to_json(c).dump(2) << "\n";
                    else
                        print_poly(c.assembled, false);
                } else {
                    print_poly(F_to_empty_brute(u), as_json);
                }
            } else {
                throw CLI::ValidationError("specify --full/--last, --u/--v or --empty");
            }
        } else if (*sch) {
            LaurentPoly p;
            if (sch->count("--perm"))
                p = schubert(Permutation(parse_ints(sch_perm)));
            else if (sch->count("--code"))
                p = schubert(Code{parse_ints(sch_code)});
            else
                throw CLI::ValidationError("specify --perm or --code");
            print_poly(p, as_json);
        } else if (*conv) {
            if (conv->count("--asm")) {
                AsmMatrix a = asm_from_json(nlohmann::json::parse(read_input(conv_asm)));
                Staircase t = asm_to_staircase(a);
                if (as_json) {
                    std::cout << to_json(t).dump(2) << "\n";
                } else {
                    for (const Column& c : t.columns) std::cout << c.str() << "\n";
                }
            } else if (conv->count("--staircase")) {
                Staircase t = staircase_from_json(nlohmann::json::parse(read_input(conv_stair)));
                AsmMatrix a = staircase_to_asm(t);
                if (as_json) {
                    std::cout << to_json(a).dump(2) << "\n";
                } else {
                    for (auto& row : a.rows) {
                        for (std::size_t j = 0; j < row.size(); ++j)
                            std::cout << (j ? " " : "") << row[j];
                        std::cout << "\n";
                    }
                }
            } else {
                throw CLI::ValidationError("specify --asm or --staircase");
            }
        } else if (*spec) {
            LaurentPoly f;
            if (spec->count("--full"))
                f = F_full_brute(spec_full, parse_column(spec_last));
            else if (spec->count("--empty"))
                f = F_to_empty_brute(parse_column(spec_empty));
            else
                throw CLI::ValidationError("specify --full/--last or --empty");
            Rational r = two_enumeration(f);
            if (as_json)
                std::cout << nlohmann::json{{"value", r.str()}}.dump(2) << "\n";
            else
                std::cout << r << "\n";
        } else if (*ver) {
            Report rep = verify(ver_suite, ver_max_n);
            if (as_json) {
                std::cout << to_json(rep).dump(2) << "\n";
            } else {
                for (const CaseResult& c : rep.cases)
                    if (!c.pass)
                        std::cout << "FAIL [" << c.suite << "] " << c.name << ": "
                                  << c.witness << "\n";
                std::cout << rep.passed() << "/" << rep.cases.size() << " cases passed\n";
            }
            return rep.all_pass() ? 0 : 3;
        } else if (*ren) {
            LaurentPoly p = ren->count("--expr")
                                ? parse_poly(ren_expr)
                                : poly_from_json(nlohmann::json::parse(read_input(ren_file)));
            print_poly(p, as_json, ren_latex);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
