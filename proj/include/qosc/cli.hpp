// cli
// ---
// Command-line frontend.  One subcommand per public operation; global
// --format text|json.  Exit codes: 0 success, 1 domain error (the error name
// verbatim on standard error), 2 parse error (malformed expressions, unknown
// flags, missing arguments).  JSON output is deterministic: objects carry
// sorted keys and all scalars are canonical strings.
#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qosc/blocks.hpp>
#include <qosc/center.hpp>
#include <qosc/parse.hpp>
#include <qosc/repn.hpp>

namespace qosc::cli {

using nlohmann::json;

namespace detail {

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// "q^-4  [= +q^-4]" / "2  [not a signed power of q]": every weight-bearing
// output reports the signed-power classification.
inline std::string weight_text(const Weight& r) {
    std::string s = r.to_string();
    if (auto sp = r.signed_power())
        s += "  [= " + std::string(sp->first < 0 ? "-" : "+") + "q^" +
             std::to_string(sp->second) + "]";
    else
        s += "  [not a signed power of q]";
    return s;
}

inline json weight_json(const Weight& r) {
    json j;
    j["value"] = r.to_string();
    if (auto sp = r.signed_power())
        j["signed_power"] = json{{"eps", sp->first}, {"n", sp->second}};
    else
        j["signed_power"] = nullptr;
    return j;
}

inline json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void print_matrix(std::ostream& out, const std::string& name, const Matrix& m) {
    out << name << " =\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? ", " : "") << m.at(i, j).to_string();
        out << "]\n";
    }
}

inline json module_json(const ModuleMatrices& M, bool with_matrices) {
    json j;
    json labels = json::array();
    for (auto& [i, l] : M.basis_labels) labels.push_back(json::array({i, l}));
    j["basis_labels"] = std::move(labels);
    j["dim"] = M.dim();
    if (with_matrices) {
        j["matrices"] = json{{"E", matrix_json(M.E)},   {"F", matrix_json(M.F)},
                             {"K", matrix_json(M.K)},   {"K^-1", matrix_json(M.Kinv)},
                             {"X", matrix_json(M.X)},   {"Y", matrix_json(M.Y)}};
    }
    return j;
}

inline void print_module_matrices(std::ostream& out, const ModuleMatrices& M) {
    print_matrix(out, "E", M.E);
    print_matrix(out, "F", M.F);
    print_matrix(out, "K", M.K);
    print_matrix(out, "K^-1", M.Kinv);
    print_matrix(out, "X", M.X);
    print_matrix(out, "Y", M.Y);
}

// Word input for normal-form / multiply: letters in FYLKXE, spaces ignored.
inline PbwElement element_of_word(const std::string& text, const CenterPolynomial& p) {
    Word w = word_from_string(strip_spaces(text));
    return PbwElement::from_free(reduction_system(p).normal_form(FreeElement::term(w)));
}

inline std::string roots_text(const std::set<long>& roots) {
    std::string s = "{";
    for (long n : roots) s += (s.size() > 1 ? ", " : "") + std::to_string(n);
    return s + "}";
}

} // namespace detail

// Shared output plumbing: each handler either fills a json object or writes
// plain text, depending on the --format flag.
struct Io {
    bool as_json = false;
    std::ostream& out;
};

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"Exact computations in the rank-1 quantized symplectic oscillator "
                 "algebra over Q(q)"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // Option targets.  Subcommands share names; each keeps its own copies.
    struct {
        std::string p = "0", expr, lhs, rhs, r, bounds;
        long m = 0, n = 0, nmax = 0;
        std::size_t max_span = 200;
        bool matrices = false;
    } a;

    // Let --format appear on either side of the subcommand name.
    app.fallthrough();

    CLI::App* nf = app.add_subcommand("normal-form", "Normal form of a generator word");
    nf->add_option("--expr", a.expr, "Word in the letters F Y L K X E (L = K^-1)")
        ->required();
    nf->add_option("--p", a.p, "Deformation polynomial p(C)");

    CLI::App* cc = app.add_subcommand("confluence-check",
                                      "Resolve every overlap ambiguity of the rule set");
    cc->add_option("--p", a.p, "Deformation polynomial p(C)");

    CLI::App* mu = app.add_subcommand("multiply", "Product of two generator words");
    mu->add_option("--lhs", a.lhs, "Left word")->required();
    mu->add_option("--rhs", a.rhs, "Right word")->required();
    mu->add_option("--p", a.p, "Deformation polynomial p(C)")->required();

    CLI::App* al = app.add_subcommand("alpha", "The scalar alpha_{r,m}");
    al->add_option("--p", a.p)->required();
    al->add_option("--r", a.r, "Highest weight")->required();
    al->add_option("--m", a.m)->required();

    CLI::App* ar = app.add_subcommand("alpha-roots", "All n >= 1 with alpha_{r,n+1} = 0");
    ar->add_option("--p", a.p)->required();
    ar->add_option("--r", a.r)->required();

    CLI::App* mv = app.add_subcommand("maximal-vectors",
                                      "Basis of maximal vectors at depth n in Z(r)");
    mv->add_option("--p", a.p)->required();
    mv->add_option("--r", a.r)->required();
    mv->add_option("--n", a.n)->required();

    CLI::App* sv = app.add_subcommand("structure-vector",
                                      "The recursive vector v_{t_n} in Z(r)");
    sv->add_option("--p", a.p)->required();
    sv->add_option("--r", a.r)->required();
    sv->add_option("--n", a.n)->required();

    CLI::App* si = app.add_subcommand("simple",
                                      "Finite-dimensional simple module V(r), if any");
    si->add_option("--p", a.p)->required();
    si->add_option("--r", a.r)->required();
    si->add_flag("--matrices", a.matrices, "Print the generator matrices");

    CLI::App* cs = app.add_subcommand("composition-series",
                                      "Composition series of the Verma module Z(r)");
    cs->add_option("--p", a.p)->required();
    cs->add_option("--r", a.r)->required();

    CLI::App* bl = app.add_subcommand("block", "Linkage block of the weight r");
    bl->add_option("--p", a.p)->required();
    bl->add_option("--r", a.r)->required();

    CLI::App* ss = app.add_subcommand("semisimple-check",
                                      "Bounded semisimplicity criterion over r = ±q^n");
    ss->add_option("--p", a.p)->required();
    ss->add_option("--nmax", a.nmax)->required();

    CLI::App* ce = app.add_subcommand("center", "Centralizer within PBW degree bounds");
    ce->add_option("--p", a.p)->required();
    ce->add_option("--bounds", a.bounds, "max a,b,|c|,d,e for F^a Y^b K^c X^d E^e")
        ->required();
    ce->add_option("--max-span", a.max_span, "Candidate-count guard")
        ->capture_default_str();

    CLI::App* cx = app.add_subcommand(
        "counterexample-c0zero",
        "The 3-dimensional non-semisimple module in the undeformed regime");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.get_name() << ": " << e.what() << "\n";
        return 2;
    }

    Io io{format == "json", out};
    json j;

    try {
        if (nf->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            PbwElement val = detail::element_of_word(a.expr, p);
            if (io.as_json) {
                j["command"] = "normal-form";
                j["expr"] = detail::strip_spaces(a.expr);
                j["p"] = p.to_string("C");
                j["normal_form"] = val.to_string();
            } else {
                io.out << val.to_string() << "\n";
            }
        } else if (cc->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            auto report = reduction_system(p).verify_confluence();
            std::size_t resolved = 0;
            for (auto& amb : report) resolved += amb.resolved;
            if (io.as_json) {
                j["command"] = "confluence-check";
                j["p"] = p.to_string("C");
                j["total"] = report.size();
                j["resolved"] = resolved;
                json list = json::array();
                for (auto& amb : report)
                    list.push_back(json{{"word", word_to_string(amb.word)},
                                        {"resolved", amb.resolved}});
                j["ambiguities"] = std::move(list);
            } else {
                io.out << resolved << "/" << report.size() << " resolved\n";
                for (auto& amb : report)
                    io.out << word_to_string(amb.word) << " "
                           << (amb.resolved ? "resolved" : "UNRESOLVED") << "\n";
            }
        } else if (mu->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            PbwElement val = multiply(detail::element_of_word(a.lhs, p),
                                      detail::element_of_word(a.rhs, p), p);
            if (io.as_json) {
                j["command"] = "multiply";
                j["lhs"] = detail::strip_spaces(a.lhs);
                j["rhs"] = detail::strip_spaces(a.rhs);
                j["p"] = p.to_string("C");
                j["product"] = val.to_string();
            } else {
                io.out << val.to_string() << "\n";
            }
        } else if (al->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            Weight r = parse_weight(a.r);
            Scalar val = alpha(p, r, a.m);
            if (io.as_json) {
                j["command"] = "alpha";
                j["p"] = p.to_string("C");
                j["r"] = detail::weight_json(r);
                j["m"] = a.m;
                j["value"] = val.to_string();
            } else {
                io.out << "r = " << detail::weight_text(r) << "\n";
                io.out << "alpha_{r," << a.m << "} = " << val.to_string() << "\n";
            }
        } else if (ar->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            Weight r = parse_weight(a.r);
            std::set<long> roots = alpha_root_set(p, r);
            if (io.as_json) {
                j["command"] = "alpha-roots";
                j["p"] = p.to_string("C");
                j["r"] = detail::weight_json(r);
                j["roots"] = roots;
            } else {
                io.out << "r = " << detail::weight_text(r) << "\n";
                io.out << "alpha roots: " << detail::roots_text(roots) << "\n";
            }
        } else if (mv->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            Weight r = parse_weight(a.r);
            auto basis = maximal_vectors(p, r, a.n);
            if (io.as_json) {
                j["command"] = "maximal-vectors";
                j["p"] = p.to_string("C");
                j["r"] = detail::weight_json(r);
                j["n"] = a.n;
                j["count"] = basis.size();
                json list = json::array();
                for (auto& v : basis) list.push_back(v.to_string());
                j["basis"] = std::move(list);
            } else {
                io.out << "r = " << detail::weight_text(r) << "\n";
                io.out << "count: " << basis.size() << "\n";
                for (auto& v : basis) io.out << "  " << v.to_string() << "\n";
            }
        } else if (sv->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            Weight r = parse_weight(a.r);
            VermaElement v = structure_vector(p, r, a.n);
            if (io.as_json) {
                j["command"] = "structure-vector";
                j["p"] = p.to_string("C");
                j["r"] = detail::weight_json(r);
                j["n"] = a.n;
                j["vector"] = v.to_string();
            } else {
                io.out << "r = " << detail::weight_text(r) << "\n";
                io.out << v.to_string() << "\n";
            }
        } else if (si->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            Weight r = parse_weight(a.r);
            auto fd = finite_dim_test(p, r);
            if (io.as_json) {
                j["command"] = "simple";
                j["p"] = p.to_string("C");
                j["r"] = detail::weight_json(r);
                j["finite"] = fd.has_value();
                if (fd) {
                    ModuleMatrices M = build_simple(p, r);
                    RelationReport rep = verify_module_relations(M, p);
                    j["first_alpha_root"] = fd->first;
                    j["module"] = detail::module_json(M, a.matrices);
                    j["relations_pass"] = rep.all_pass;
                }
            } else {
                io.out << "r = " << detail::weight_text(r) << "\n";
                if (!fd) {
                    io.out << "V(r) is infinite dimensional\n";
                } else {
                    ModuleMatrices M = build_simple(p, r);
                    RelationReport rep = verify_module_relations(M, p);
                    io.out << "dim " << fd->second << "\n";
                    io.out << "first alpha root: " << fd->first << "\n";
                    io.out << "relations: " << (rep.all_pass ? "all pass" : "FAIL") << "\n";
                    if (a.matrices) detail::print_module_matrices(io.out, M);
                }
            }
        } else if (cs->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            Weight r = parse_weight(a.r);
            CompositionSeries series = composition_series(p, r);
            if (io.as_json) {
                j["command"] = "composition-series";
                j["p"] = p.to_string("C");
                j["r"] = detail::weight_json(r);
                json fs = json::array();
                for (auto& f : series.factors) {
                    json e;
                    e["highest_weight"] = f.highest_weight.to_string();
                    if (f.dim) e["dim"] = *f.dim;
                    else e["dim"] = nullptr;
                    fs.push_back(std::move(e));
                }
                j["factors"] = std::move(fs);
                json chain = json::array();
                for (auto& w : series.verma_chain) chain.push_back(w.to_string());
                j["verma_chain"] = std::move(chain);
                j["notes"] = series.notes;
            } else {
                io.out << "r = " << detail::weight_text(r) << "\n";
                io.out << "factors:\n";
                for (auto& f : series.factors) {
                    io.out << "  V(" << f.highest_weight.to_string() << ")";
                    if (f.dim) io.out << " dim " << *f.dim;
                    io.out << "\n";
                }
                io.out << "verma chain:";
                for (auto& w : series.verma_chain) io.out << " " << w.to_string();
                io.out << "\n";
                for (auto& note : series.notes) io.out << "note: " << note << "\n";
            }
        } else if (bl->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            Weight r = parse_weight(a.r);
            BlockReport rep = block_report(p, r);
            if (io.as_json) {
                j["command"] = "block";
                j["p"] = p.to_string("C");
                j["r"] = detail::weight_json(r);
                j["r0"] = detail::weight_json(rep.r0);
                j["N"] = rep.N;
                json S = json::array(), T = json::array();
                for (auto& w : rep.S) S.push_back(w.to_string());
                for (auto& w : rep.T) T.push_back(w.to_string());
                j["S"] = std::move(S);
                j["T"] = std::move(T);
                json edges = json::array();
                for (auto& e : rep.edges)
                    edges.push_back(json{{"from", e.from.to_string()},
                                         {"to", e.to.to_string()},
                                         {"reason", e.reason}});
                j["edges"] = std::move(edges);
            } else {
                io.out << "r = " << detail::weight_text(r) << "\n";
                io.out << "r0 = " << detail::weight_text(rep.r0) << "  (N = " << rep.N
                       << ")\n";
                io.out << "S:";
                for (auto& w : rep.S) io.out << " " << w.to_string();
                io.out << "\nT:";
                for (auto& w : rep.T) io.out << " " << w.to_string();
                io.out << "\nedges:\n";
                for (auto& e : rep.edges)
                    io.out << "  " << e.from.to_string() << " -> " << e.to.to_string()
                           << ": " << e.reason << "\n";
            }
        } else if (ss->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            SemisimplicityReport rep = semisimplicity_check(p, a.nmax);
            if (io.as_json) {
                j["command"] = "semisimple-check";
                j["p"] = p.to_string("C");
                j["n_max"] = rep.n_max;
                j["pass"] = rep.pass;
                json ws = json::array();
                for (auto& w : rep.witnesses)
                    ws.push_back(json{{"eps", w.eps}, {"n", w.n}, {"roots_m", w.roots_m}});
                j["witnesses"] = std::move(ws);
                j["statement"] = rep.statement;
            } else {
                io.out << (rep.pass ? "PASS" : "FAIL") << " (n_max = " << rep.n_max
                       << ")\n";
                for (auto& w : rep.witnesses) {
                    io.out << "witness: eps = " << (w.eps < 0 ? "-1" : "+1")
                           << ", n = " << w.n << ", roots m =";
                    for (long m : w.roots_m) io.out << " " << m;
                    io.out << "\n";
                }
                io.out << rep.statement << "\n";
            }
        } else if (ce->parsed()) {
            CenterPolynomial p = parse_center_poly(a.p);
            std::vector<long> b;
            std::stringstream ssb(detail::strip_spaces(a.bounds));
            std::string piece;
            while (std::getline(ssb, piece, ',')) {
                try {
                    std::size_t used = 0;
                    long v = std::stol(piece, &used);
                    if (used != piece.size() || v < 0) throw std::invalid_argument(piece);
                    b.push_back(v);
                } catch (const std::exception&) {
                    throw ParseError("--bounds expects five nonnegative integers "
                                     "a,b,c,d,e",
                                     0);
                }
            }
            if (b.size() != 5)
                throw ParseError("--bounds expects five nonnegative integers a,b,c,d,e",
                                 0);
            CentralizerResult res =
                centralizer_basis({p, b[0], b[1], b[2], b[3], b[4], a.max_span});
            if (io.as_json) {
                j["command"] = "center";
                j["p"] = p.to_string("C");
                j["bounds"] = b;
                j["span"] = res.span_size;
                j["dimension"] = res.dimension;
                json basis = json::array();
                for (auto& x : res.basis) basis.push_back(x.to_string());
                j["basis"] = std::move(basis);
            } else {
                io.out << "span: " << res.span_size << " weight-zero candidates\n";
                io.out << "dimension: " << res.dimension << "\n";
                io.out << "basis:\n";
                for (auto& x : res.basis) io.out << "  " << x.to_string() << "\n";
            }
        } else if (cx->parsed()) {
            auto [M, lat] = c0_zero_counterexample();
            RelationReport rep = verify_module_relations(M, CenterPolynomial{});
            if (io.as_json) {
                j["command"] = "counterexample-c0zero";
                j["module"] = detail::module_json(M, true);
                j["relations_pass"] = rep.all_pass;
                json subs = json::array();
                for (auto& s : lat.submodule_supports) subs.push_back(s);
                j["submodule_supports"] = std::move(subs);
                j["v0_line_has_complement"] = lat.v0_line_has_complement;
                j["verdict"] = lat.verdict;
            } else {
                io.out << "verdict: " << lat.verdict << "\n";
                io.out << "relations (p = 0): " << (rep.all_pass ? "all pass" : "FAIL")
                       << "\n";
                io.out << "proper invariant eigenline supports:";
                for (auto& s : lat.submodule_supports) {
                    io.out << " {";
                    for (std::size_t i = 0; i < s.size(); ++i)
                        io.out << (i ? "," : "") << s[i];
                    io.out << "}";
                }
                io.out << "\n";
                io.out << "v0 line has complement: "
                       << (lat.v0_line_has_complement ? "yes" : "no") << "\n";
                detail::print_module_matrices(io.out, M);
            }
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 1;
    }

    if (io.as_json) out << j.dump(2) << "\n";
    return 0;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace qosc::cli
