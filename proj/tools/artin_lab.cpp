// artin_lab: command-line front end for the verification library.
//
// Exit codes: 0 success, 1 internal verification failure, 2 input or usage error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/chevalley/chevalley.hpp"
#include "artin/density/density.hpp"
#include "artin/io/json_io.hpp"
#include "artin/langlands/params.hpp"
#include "artin/matgroup/charpoly_stats.hpp"
#include "artin/matgroup/modules.hpp"
#include "artin/recover/recover.hpp"
#include "artin/satake/satake.hpp"

namespace {

using namespace artin;
using json = nlohmann::json;
using arith::Int;
using arith::Rational;

struct Output {
    std::string path;
    void write(const json& report) const {
        const std::string text = report.dump(2) + "\n";
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw invalid_input("cannot open " + path + " for writing");
        f << text;
    }
};

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw invalid_input("cannot open " + path);
    return f;
}

void check_distinct_paths(const std::vector<std::string>& inputs, const std::string& out) {
    std::set<std::string> seen;
    for (const auto& p : inputs) {
        const auto c = std::filesystem::weakly_canonical(p).string();
        if (!seen.insert(c).second) throw invalid_input("input path given twice: " + p);
    }
    if (!out.empty() && out != "-" && seen.count(std::filesystem::weakly_canonical(out).string()))
        throw invalid_input("output path coincides with an input: " + out);
}

Rational parse_eta(const std::string& s) {
    const Rational eta = arith::parse_rational(s);
    if (eta <= 0 || eta >= 1) throw invalid_input("eta must lie in (0, 1)");
    return eta;
}

json charpoly_json(const matgroup::CharPoly& f) { return json(f); }

// ---------------------------------------------------------------------------

struct GroupArgs {
    std::string in, eta, out;
    std::size_t N = 1, cap = matgroup::default_cap;
};

int group_analyze(const GroupArgs& a) {
    check_distinct_paths({a.in}, a.out);
    const Rational eta = parse_eta(a.eta);
    if (a.N == 0) throw invalid_input("N must be positive");
    auto f = open_input(a.in);
    const auto G = io::read_group(io::read_json_file(f, a.in), a.in, a.cap);
    const auto& F = G.field();
    const auto h = matgroup::charpoly_histogram(G);
    const auto c = matgroup::check_C_property(G, h, eta, a.N);
    const auto ss = matgroup::is_semisimple(G);
    const bool irreducible = matgroup::is_irreducible(F, G.n(), G.generators());
    json r;
    r["group"] = io::group_json(G);
    r["order"] = G.order();
    r["conjugacy_classes"] = G.conjugacy_classes().size();
    r["abelian"] = matgroup::is_abelian(G, matgroup::whole(G));
    r["solvable"] = matgroup::is_solvable(G);
    r["largest_normal_p_subgroup_order"] = matgroup::count(matgroup::largest_normal_p_subgroup(G));
    json hist = json::array();
    for (const auto& [poly, cnt] : matgroup::ranked_classes(h)) hist.push_back({{"charpoly", charpoly_json(poly)}, {"count", cnt}});
    r["charpoly_histogram"] = hist;
    r["M_G"] = h.max_count();
    json cj;
    cj["eta"] = arith::to_string(eta);
    cj["N"] = a.N;
    cj["holds"] = c.holds;
    cj["witness_size"] = c.witness_size;
    cj["required"] = arith::to_string(c.required);
    cj["witness_classes"] = json::array();
    for (const auto& w : c.witness_classes) cj["witness_classes"].push_back(charpoly_json(w));
    r["C_property"] = cj;
    r["C_property_verdict"] = c.holds ? "holds" : "fails";
    r["semisimple"] = {{"semisimple", ss.semisimple},
                       {"coprime_order", ss.coprime_order},
                       {"socle_dim", ss.socle_dim},
                       {"summand_dims", [&] {
                            json d = json::array();
                            for (const auto& W : ss.decomposition) d.push_back(W.dim());
                            return d;
                        }()}};
    r["irreducible"] = irreducible;
    if (irreducible) {
        const auto w = matgroup::wedderburn_rewrite(G);
        r["wedderburn"] = {{"r", w.r},
                           {"m", w.m},
                           {"extension_q", w.extension ? w.extension->q() : F.q()},
                           {"identity_holds", w.identity_holds},
                           {"absolutely_irreducible", w.absolutely_irreducible}};
        if (!w.identity_holds) {
            Output{a.out}.write(r);
            throw verification_failure("characteristic polynomial identity failed after rewriting");
        }
    }
    Output{a.out}.write(r);
    return 0;
}

// ---------------------------------------------------------------------------

struct ChevalleyArgs {
    std::string family, out;
    unsigned n = 2;
    std::uint32_t q = 3;
    std::size_t cap = matgroup::default_cap;
};

int chevalley_verify(const ChevalleyArgs& a) {
    const auto spec = chevalley::make_spec(chevalley::parse_family(a.family), a.n, a.q);
    const auto G = chevalley::make_group(spec, a.cap);
    const auto b = chevalley::verify_order_bounds(spec);
    const auto cls = chevalley::census(spec, G);
    json r;
    r["spec"] = spec.label();
    r["order"] = spec.order.str();
    r["dim"] = spec.dim;
    r["rank"] = spec.rank;
    r["order_bounds"] = {{"linear_lower", b.linear_lower.str()},
                         {"linear_upper", b.linear_upper.str()},
                         {"linear_ok", b.linear_ok},
                         {"sqrt_ok", b.sqrt_ok}};
    bool all = b.linear_ok && b.sqrt_ok;
    json arr = json::array();
    for (const auto& c : cls) {
        json e;
        e["representative"] = [&] {
            json m = json::array();
            for (unsigned i = 0; i < G.n(); ++i)
                for (unsigned j = 0; j < G.n(); ++j) m.push_back(c.representative.at(i, j));
            return m;
        }();
        e["charpoly"] = charpoly_json(c.charpoly);
        e["d"] = c.d;
        e["l"] = c.l;
        e["class_size"] = c.class_size;
        e["centralizer_order"] = c.centralizer_order;
        e["unipotent_observed"] = c.unipotent_observed;
        e["unipotent_predicted"] = c.unipotent_predicted.str();
        e["M_observed"] = c.M_observed;
        e["M_predicted"] = arith::to_string(c.M_predicted);
        e["sandwich_lower"] = arith::to_string(c.sandwich_lower);
        e["sandwich_upper"] = arith::to_string(c.sandwich_upper);
        e["steinberg_ok"] = c.steinberg_ok;
        e["count_ok"] = c.count_ok;
        e["sandwich_ok"] = c.sandwich_ok;
        all = all && c.steinberg_ok && c.count_ok && c.sandwich_ok;
        arr.push_back(e);
    }
    r["semisimple_classes"] = arr;
    r["all_checks_pass"] = all;
    Output{a.out}.write(r);
    if (!all) {
        std::cerr << "error: a counting or bound check failed for " << spec.label() << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct SatakeArgs {
    std::string in, out, s = "11/10", slack = "10";
    std::uint64_t P = 0;
    std::vector<std::string> sigma;
};

int satake_check(const SatakeArgs& a) {
    check_distinct_paths({a.in}, a.out);
    auto f = open_input(a.in);
    auto S = io::read_satake(io::read_jsonl(f, a.in), a.in);
    const auto& K = S.field();
    json r;
    r["n"] = S.n();
    r["N"] = S.conductor().str();
    r["field"] = K->label();
    json primes = json::array();
    bool integral_all = true;
    for (auto p : S.primes()) {
        json e;
        e["p"] = p;
        json H = json::array();
        for (const auto& c : satake::hecke_poly(S, p)) H.push_back(io::algebraic_json(c));
        e["hecke_poly"] = H;
        e["integral"] = satake::check_integrality(S, p);
        integral_all = integral_all && e["integral"].get<bool>();
        if (S.has_parameters(p)) {
            bool dual = true;
            for (unsigned m = 0; m <= S.n(); ++m) dual = dual && satake::check_duality(S, p, m);
            e["duality"] = dual;
            const auto prod = satake::product_form(K, S.parameters_at(p));
            if (!(prod == satake::hecke_poly(S, p)))
                throw verification_failure("Hecke polynomial disagrees with the product form at p = " + std::to_string(p));
        }
        primes.push_back(e);
    }
    r["primes"] = primes;
    r["integral"] = integral_all;
    if (!a.sigma.empty()) {
        std::vector<Rational> img;
        for (const auto& x : a.sigma) img.push_back(arith::parse_rational(x));
        if (img.size() > K->degree()) throw invalid_input("--sigma has too many coordinates");
        img.resize(K->degree(), Rational(0));
        const auto T = satake::galois_conjugate(S, arith::AlgebraicNumber(K, img));
        json conj = json::array();
        for (auto p : T.primes()) {
            json c = json::array();
            for (const auto& x : T.coeffs_at(p)) c.push_back(io::algebraic_json(x));
            conj.push_back({{"p", p}, {"a", c}});
        }
        r["conjugate"] = conj;
    }
    if (a.P > 0) {
        const Rational s = arith::parse_rational(a.s);
        const Rational slack = arith::parse_rational(a.slack);
        json rk = json::array();
        for (unsigned m = 1; m <= S.n(); ++m) {
            const auto res = satake::rankin_partial_sum(S, m, s, a.P, slack);
            rk.push_back({{"m", m},
                          {"sum_lower", arith::to_string(res.sum.lo)},
                          {"sum_upper", arith::to_string(res.sum.hi)},
                          {"terms", res.terms},
                          {"bound", std::to_string(static_cast<double>(res.bound))},
                          {"below_bound", res.below_bound}});
        }
        r["rankin"] = {{"s", arith::to_string(s)}, {"P", a.P}, {"slack", arith::to_string(slack)}, {"sums", rk}};
    }
    Output{a.out}.write(r);
    return 0;
}

// ---------------------------------------------------------------------------

struct DensityArgs {
    std::string in, out, eta;
    std::string N;
    std::uint64_t P = 0;
    std::vector<std::string> s_grid{"11/10", "101/100", "1001/1000", "10001/10000"};
};

int density_scan(const DensityArgs& a) {
    check_distinct_paths({a.in}, a.out);
    const Rational eta = parse_eta(a.eta);
    auto f = open_input(a.in);
    const auto S = io::read_satake(io::read_jsonl(f, a.in), a.in);
    const Int N = a.N.empty() ? S.conductor() : io::to_int(json(a.N), "--N");
    const Rational c = density::threshold_c(eta, S.n(), S.field()->degree());
    const auto Yc = density::enumerate_Y(S.field(), c);
    const auto X = density::classify_X(S, c, N);
    const auto primes = S.primes();
    const std::uint64_t P = a.P ? a.P : (primes.empty() ? 2 : primes.back());
    std::vector<Rational> grid;
    for (const auto& x : a.s_grid) grid.push_back(arith::parse_rational(x));
    const auto T = density::densup_estimate(X.primes, grid, P);
    json r;
    r["c"] = arith::to_string(c);
    r["eta"] = arith::to_string(eta);
    r["Y_c_size"] = Yc.size();
    r["Y_c_boundary_uncertain"] = Yc.uncertain_count();
    r["scale_N"] = N.str();
    r["Y_N2c_size"] = X.Y_size;
    std::size_t inX = 0;
    for (auto p : X.primes)
        if (p <= P) ++inX;
    r["X_c_count"] = inX;
    r["X_c_primes"] = X.primes;
    r["X_c_boundary_uncertain"] = X.uncertain_primes;
    r["primes_classified"] = X.classified;
    r["finite_tuple_count"] = X.tuples.size();
    r["finite_tuple_bound"] = X.tuple_bound.str();
    r["finite_bound_holds"] = X.finite_bound_holds;
    json rows = json::array();
    for (const auto& row : T.rows)
        rows.push_back({{"s", arith::to_string(row.s)},
                        {"ratio_lower", std::to_string(static_cast<double>(arith::to_long_double(row.ratio.lo)))},
                        {"ratio_upper", std::to_string(static_cast<double>(arith::to_long_double(row.ratio.hi)))},
                        {"estimate", std::to_string(static_cast<double>(row.estimate))}});
    r["densup_table"] = {{"cutoff", P}, {"kind", "truncated estimate, not a limit"}, {"rows", rows}, {"monotone", T.monotone}};
    Output{a.out}.write(r);
    if (!X.finite_bound_holds) {
        std::cerr << "error: non-exceptional tuple count exceeds |Y(N^2 c)|^n\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct ParamsArgs {
    std::string out;
    unsigned random = 100;
    unsigned seed = 1;
};

int params_verify(const ParamsArgs& a) {
    json r;
    bool all = true;
    json g = json::array();
    for (const auto& c : langlands::verify_gsp4_conjugacy()) {
        g.push_back({{"check", c.name},
                     {"holds", c.holds},
                     {"similitude", c.similitude ? json(arith::to_string(*c.similitude)) : json(nullptr)}});
        all = all && c.holds;
    }
    r["gsp4_conjugacy"] = g;
    const auto K = arith::NumberField::cyclotomic(4);
    const auto zero = arith::AlgebraicNumber::from_rational(K, 0);
    std::mt19937_64 rng(a.seed);
    auto rnd = [&]() {
        while (true) {
            std::vector<Rational> c{Rational(static_cast<long long>(rng() % 9) - 4),
                                    Rational(static_cast<long long>(rng() % 9) - 4)};
            arith::AlgebraicNumber x(K, c);
            if (!x.is_zero()) return x;
        }
    };
    unsigned split_ok = 0, inert_ok = 0;
    for (unsigned t = 0; t < a.random; ++t) {
        langlands::LocalParameterPair sp{true, {rnd(), rnd()}, {rnd(), rnd()}, std::nullopt};
        split_ok += langlands::check_wedge_asai_identity(sp, 1).holds;
        arith::Matrix<arith::AlgebraicNumber> m(2, 2, zero);
        do {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) m(i, j) = rnd();
        } while ((m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_zero());
        langlands::LocalParameterPair in{false, {}, {}, m};
        inert_ok += langlands::check_wedge_asai_identity(in, -1).holds;
    }
    r["wedge_asai"] = {{"split_passed", split_ok}, {"inert_passed", inert_ok}, {"trials", a.random}, {"seed", a.seed}};
    all = all && split_ok == a.random && inert_ok == a.random;
    r["infinity_types"] = json::array();
    for (const auto& s : std::vector<langlands::SignVector>{{1, 1, 1, 1}, {1, -1}, {1, -1, -1, 1}}) {
        const auto t = langlands::infinity_type(s);
        r["infinity_types"].push_back({{"signs", s}, {"characters", t.characters}, {"signature", {t.plus, t.minus}}});
    }
    r["all_checks_pass"] = all;
    Output{a.out}.write(r);
    if (!all) {
        std::cerr << "error: an exact identity failed\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct RecoverArgs {
    std::vector<std::string> tables;
    std::string K, out, lift_group;
    unsigned A = 0, lift_k = 6;
    std::vector<unsigned> conj_orders;
};

int recover_run(const RecoverArgs& a) {
    std::vector<std::string> inputs = a.tables;
    inputs.push_back(a.K);
    if (!a.lift_group.empty()) inputs.push_back(a.lift_group);
    check_distinct_paths(inputs, a.out);
    auto kf = open_input(a.K);
    const auto K = io::read_field(io::read_json_file(kf, a.K), a.K);
    std::vector<recover::ModLFrobTable> tabs;
    for (const auto& path : a.tables) {
        auto f = open_input(path);
        tabs.push_back(io::read_table(io::read_jsonl(f, path), path));
    }
    if (tabs.front().entries.empty()) throw invalid_input(a.tables.front() + " has no entries");
    const unsigned n = static_cast<unsigned>(tabs.front().entries.begin()->second.size()) - 1;
    const auto Y = recover::enumerate_Y(a.A, n);
    const auto cert = recover::match_frobenius(tabs, Y, *K);
    json r;
    r["A"] = cert.A;
    r["n"] = cert.n;
    r["Y_size"] = Y.size();
    r["L"] = cert.L;
    json places = json::array();
    for (const auto& p : cert.places)
        places.push_back({{"ell", p.ell}, {"root", p.root}, {"zeta_M_image", p.zeta_M}, {"M", cert.M}});
    r["admissible_primes"] = places;
    json matches = json::array();
    for (const auto& m : cert.matches) {
        const auto& R = Y.polys[m.index];
        json e{{"p", m.p}, {"unique", m.unique}, {"root_orders", R.orders}, {"polynomial", R.describe()}};
        if (R.integer_coeffs) {
            json c = json::array();
            for (const auto& x : *R.integer_coeffs) c.push_back(x.str());
            e["coeffs"] = c;
        }
        matches.push_back(e);
    }
    r["matches"] = matches;
    r["dropped_primes"] = cert.dropped;
    r["bound_consistent"] = cert.bound_consistent;
    if (!a.conj_orders.empty()) {
        std::vector<unsigned> ex;
        for (auto d : a.conj_orders) {
            if (d == 0 || Y.M % d != 0) throw invalid_input("conjugation root order " + std::to_string(d) + " is not below A");
            ex.push_back(Y.M / d % Y.M);
        }
        const auto sig = recover::conjugation_signature(recover::make_cyclo_poly(ex, Y.M));
        const auto t = langlands::infinity_type(sig);
        r["signature"] = sig;
        r["infinity_type"] = t.characters;
    }
    if (!a.lift_group.empty()) {
        auto gf = open_input(a.lift_group);
        const auto G = io::read_group(io::read_json_file(gf, a.lift_group), a.lift_group);
        const auto L = recover::schur_zassenhaus_lift(G, a.lift_k);
        json lt;
        lt["ell"] = L.ell;
        lt["k"] = L.k;
        lt["modulus"] = L.modulus;
        lt["relations_checked"] = L.relations_checked;
        lt["homomorphism"] = L.homomorphism;
        lt["reduces_to_input"] = L.reduces_to_input;
        json steps = json::array();
        for (const auto& s : L.transcript) steps.push_back({{"precision", s.precision}, {"defects_before", s.defects_before}});
        lt["steps"] = steps;
        json gens = json::array();
        for (auto gi : L.generator_indices) gens.push_back(L.images[gi].a);
        lt["generator_images"] = gens;
        r["lift"] = lt;
        if (!L.homomorphism || !L.reduces_to_input) {
            Output{a.out}.write(r);
            throw verification_failure("lifted assignment is not a homomorphism modulo l^k");
        }
    }
    Output{a.out}.write(r);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification laboratory for Artin representations from automorphic data"};
    app.require_subcommand(1);

    auto* group = app.add_subcommand("group", "finite matrix groups")->require_subcommand(1);
    GroupArgs ga;
    auto* g_an = group->add_subcommand("analyze", "structure, characteristic polynomials, C(eta, N)");
    g_an->add_option("--in", ga.in, "group JSON")->required();
    g_an->add_option("--eta", ga.eta, "eta as a/b")->required();
    g_an->add_option("--N", ga.N, "number of characteristic polynomials")->required();
    g_an->add_option("--cap", ga.cap, "element cap");
    g_an->add_option("--out", ga.out, "report path (default stdout)");

    auto* chev = app.add_subcommand("chevalley", "groups of Lie type")->require_subcommand(1);
    ChevalleyArgs ca;
    auto* c_ver = chev->add_subcommand("verify", "counting formula, Steinberg count, order bounds");
    c_ver->add_option("--family", ca.family, "SL or Sp")->required();
    c_ver->add_option("--n", ca.n, "matrix degree")->required();
    c_ver->add_option("--q", ca.q, "field size")->required();
    c_ver->add_option("--cap", ca.cap, "element cap");
    c_ver->add_option("--out", ca.out, "report path (default stdout)");

    auto* sat = app.add_subcommand("satake", "Satake systems")->require_subcommand(1);
    SatakeArgs sa;
    auto* s_chk = sat->add_subcommand("check", "Hecke polynomials, duality, integrality, Rankin sums");
    s_chk->add_option("--in", sa.in, "system JSONL")->required();
    s_chk->add_option("--P", sa.P, "Rankin cutoff (0 skips)");
    s_chk->add_option("--s", sa.s, "Rankin exponent as a/b");
    s_chk->add_option("--slack", sa.slack, "constant added to the Rankin bound");
    s_chk->add_option("--sigma", sa.sigma, "image of the field generator, power-basis coordinates");
    s_chk->add_option("--out", sa.out, "report path (default stdout)");

    auto* den = app.add_subcommand("density", "exceptional sets")->require_subcommand(1);
    DensityArgs da;
    auto* d_scan = den->add_subcommand("scan", "Y(c), X(c) and truncated upper-density estimates");
    d_scan->add_option("--in", da.in, "system JSONL")->required();
    d_scan->add_option("--eta", da.eta, "eta as a/b")->required();
    d_scan->add_option("--N", da.N, "scale (default: conductor)");
    d_scan->add_option("--P", da.P, "prime cutoff (default: largest stored prime)");
    d_scan->add_option("--s", da.s_grid, "grid of s values as a/b");
    d_scan->add_option("--out", da.out, "report path (default stdout)");

    auto* par = app.add_subcommand("params", "archimedean and quadratic-induction identities")->require_subcommand(1);
    ParamsArgs pa;
    auto* p_ver = par->add_subcommand("verify", "GSp4 conjugacy and exterior-square identities");
    p_ver->add_option("--random", pa.random, "random pairs per case");
    p_ver->add_option("--seed", pa.seed, "random seed");
    p_ver->add_option("--out", pa.out, "report path (default stdout)");

    auto* rec = app.add_subcommand("recover", "Frobenius polynomial recovery")->require_subcommand(1);
    RecoverArgs ra;
    auto* r_run = rec->add_subcommand("run", "match mod-l tables against Y and certify");
    r_run->add_option("--tables", ra.tables, "table JSONL files")->required();
    r_run->add_option("--A", ra.A, "root-of-unity order bound")->required();
    r_run->add_option("--K", ra.K, "Hecke field JSON")->required();
    r_run->add_option("--conj-orders", ra.conj_orders, "root orders of the conjugation class polynomial");
    r_run->add_option("--lift-group", ra.lift_group, "group JSON over F_l to lift");
    r_run->add_option("--lift-k", ra.lift_k, "lift precision");
    r_run->add_option("--out", ra.out, "certificate path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (g_an->parsed()) return group_analyze(ga);
        if (c_ver->parsed()) return chevalley_verify(ca);
        if (s_chk->parsed()) return satake_check(sa);
        if (d_scan->parsed()) return density_scan(da);
        if (p_ver->parsed()) return params_verify(pa);
        if (r_run->parsed()) return recover_run(ra);
    } catch (const artin::verification_failure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const artin::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
