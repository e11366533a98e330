// designforge: construct, convert, project, bound, and verify spherical and
// Gaussian designs from the command line. Randomized subcommands take an
// explicit --seed and are reproducible byte for byte; each file-producing
// run also writes a <out>.manifest with input/output digests.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "designforge/designforge.hpp"

namespace df = designforge;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "designforge 1.0.0";

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw df::Error("cannot open '" + path + "' for digest");
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

// One manifest per run: subcommand, flags, seed, tool version, digests.
struct Manifest {
    std::string subcommand;
    std::map<std::string, std::string> flags;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;

    void write_next_to(const std::string& primary_output) const {
        json j;
        j["tool"] = kToolVersion;
        j["subcommand"] = subcommand;
        j["flags"] = flags;
        if (seed) j["seed"] = *seed;
        json in = json::object(), out = json::object();
        for (const auto& p : inputs) in[p] = "fnv1a64:" + hex64(fnv1a64_file(p));
        for (const auto& p : outputs) out[p] = "fnv1a64:" + hex64(fnv1a64_file(p));
        j["inputs"] = in;
        j["outputs"] = out;
        std::ofstream f(primary_output + ".manifest");
        if (!f) throw df::Error("cannot write manifest for '" + primary_output + "'");
        f << j.dump(2) << "\n";
    }
};

std::vector<int> parse_alpha(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw df::Error("--alpha must list at least one exponent");
    return out;
}

df::Measure parse_measure(const std::string& s) {
    if (s == "sphere") return df::Measure::Sphere;
    if (s == "gaussian") return df::Measure::Gaussian;
    throw df::Error("unknown measure '" + s + "' (want sphere|gaussian)");
}

void print_quadrature(const df::Quadrature& q) {
    std::cout << "nodes: " << q.size() << ", matched degree " << q.matched_degree
              << "\n";
    for (int i = 0; i < q.size(); ++i)
        std::cout << df::format_double(q.nodes[i]) << " "
                  << df::format_double(q.weights[i]) << "\n";
}

void print_report(const df::VerificationReport& rep) {
    std::cout << "strength: " << rep.strength_tested << "\n";
    std::cout << "mode: " << (rep.mode == df::VerifyMode::Exact ? "exact" : "float")
              << "\n";
    for (std::size_t deg = 0; deg < rep.per_degree_max_residual.size(); ++deg)
        std::cout << "degree " << deg << ": max residual "
                  << df::format_double(rep.per_degree_max_residual[deg]) << "\n";
    std::cout << "worst monomial: " << rep.worst_monomial.to_string()
              << " residual " << df::format_double(rep.worst_residual) << "\n";
    if (rep.mode == df::VerifyMode::Exact)
        std::cout << "exact zero: " << (rep.exact_zero ? "yes" : "no") << "\n";
    std::cout << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
}

void write_orbit_file(const df::OrbitDesign& design, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw df::Error("cannot open '" + path + "' for writing");
    out << "orbit v1\n";
    out << "measure: " << df::to_string(design.measure) << "\n";
    out << "dimension: " << design.dimension << "\n";
    out << "t: " << design.t << "\n";
    out << "strength: " << design.strength << "\n";
    out << "generators: " << design.generators.size() << "\n";
    for (std::size_t j = 0; j < design.generators.size(); ++j) {
        out << "w: " << design.weights[j].to_string() << "\n";
        out << "a:";
        for (const auto& e : design.generators[j]) out << " " << df::to_string(e);
        out << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherical and Gaussian design toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    int exit_code = 0;

    // ---- moments ----
    auto* moments = app.add_subcommand(
        "moments", "exact monomial moments of the sphere, Gaussian, and radial measures");
    moments->require_subcommand(1);
    struct {
        int d = 3;
        std::string alpha;
        int k = 0;
    } mom;
    auto* mom_sphere = moments->add_subcommand(
        "sphere", "moment of x^alpha over the uniform probability measure on S^{d-1}");
    mom_sphere->add_option("--d", mom.d, "ambient dimension")->required();
    mom_sphere->add_option("--alpha", mom.alpha, "comma-separated exponents")
        ->required();
    mom_sphere->callback([&] {
        auto e = parse_alpha(mom.alpha);
        df::Rational v = df::sphere_moment(df::MultiIndex(e), mom.d);
        std::cout << "exact: " << df::to_string(v) << "\n";
        std::cout << "float: " << df::format_double(df::to_double(v)) << "\n";
    });
    auto* mom_gauss = moments->add_subcommand(
        "gaussian", "moment of x^alpha over the Gaussian measure e^{-pi|x|^2} dx");
    mom_gauss->add_option("--alpha", mom.alpha, "comma-separated exponents")
        ->required();
    mom_gauss->callback([&] {
        auto e = parse_alpha(mom.alpha);
        df::PiValue v = df::gaussian_moment(df::MultiIndex(e));
        std::cout << "exact: " << v.to_string() << "\n";
        std::cout << "float: " << df::format_double(v.to_double()) << "\n";
    });
    auto* mom_radial = moments->add_subcommand(
        "radial", "k-th moment of the radial part of the Gaussian in R^d");
    mom_radial->add_option("--d", mom.d, "ambient dimension")->required();
    mom_radial->add_option("--k", mom.k, "moment order")->required();
    mom_radial->callback([&] {
        df::PiValue v = df::radial_moment(mom.k, mom.d);
        std::cout << "exact: " << v.to_string() << "\n";
        std::cout << "float: " << df::format_double(v.to_double()) << "\n";
    });

    // ---- quad ----
    auto* quad = app.add_subcommand("quad", "one-dimensional moment matching");
    quad->require_subcommand(1);
    struct {
        int d = 3, t = 3, q = 2;
        std::uint64_t seed = 0;
    } qd;
    auto* quad_radial = quad->add_subcommand(
        "radial", "Gauss rule for the radial measure sigma_d r^{d-1} e^{-pi r^2}");
    quad_radial->add_option("--d", qd.d, "ambient dimension")->required();
    quad_radial->add_option("--t", qd.t, "strength to match")->required();
    quad_radial->callback([&] { print_quadrature(df::radial_design(qd.d, qd.t)); });
    auto* quad_search = quad->add_subcommand(
        "search1d", "search for q points whose uniform average matches the "
                    "Gaussian moments up to t");
    quad_search->add_option("--t", qd.t, "strength")->required();
    quad_search->add_option("--q", qd.q, "point count")->required();
    quad_search->add_option("--seed", qd.seed, "random seed")->required();
    quad_search->callback([&] {
        auto pts = df::unweighted_1d_gaussian_design(qd.t, qd.q, qd.seed);
        if (!pts) {
            std::cout << "search failed\n";
            exit_code = 1;
            return;
        }
        for (double x : *pts) std::cout << df::format_double(x) << "\n";
    });

    // ---- twise ----
    auto* twise = app.add_subcommand("twise", "t-wise independent symbol arrays");
    twise->require_subcommand(1);
    struct {
        int q = 2, d = 3, t = 2;
        std::uint64_t seed = 0;
        std::string out, file;
    } tw;
    auto* tw_con = twise->add_subcommand(
        "construct", "t-wise independent multiset in {0..q-1}^d from a finite-field "
                     "dual family");
    tw_con->add_option("--q", tw.q, "symbol count (prime power)")->required();
    tw_con->add_option("--d", tw.d, "coordinates")->required();
    tw_con->add_option("--t", tw.t, "independence strength")->required();
    tw_con->add_option("--seed", tw.seed, "random seed")->required();
    tw_con->add_option("--out", tw.out, "output array file")->required();
    tw_con->callback([&] {
        auto arr = df::twise_construct(tw.q, tw.d, tw.t, tw.seed);
        df::write_array(arr, tw.out);
        std::cout << "rows: " << arr.size() << "\n";
        Manifest m{"twise construct",
                   {{"q", std::to_string(tw.q)},
                    {"d", std::to_string(tw.d)},
                    {"t", std::to_string(tw.t)},
                    {"out", tw.out}},
                   tw.seed,
                   {},
                   {tw.out}};
        m.write_next_to(tw.out);
    });
    auto* tw_ver = twise->add_subcommand("verify",
                                         "exhaustive t-wise independence check");
    tw_ver->add_option("file", tw.file, "array file")->required();
    tw_ver->add_option("--t", tw.t, "independence strength")->required();
    tw_ver->callback([&] {
        auto arr = df::read_array(tw.file);
        auto ce = df::twise_verify(arr, tw.t);
        if (!ce) {
            std::cout << "PASS\n";
            return;
        }
        std::cout << "FAIL positions";
        for (int p : ce->positions) std::cout << " " << p;
        std::cout << " pattern";
        for (int v : ce->pattern) std::cout << " " << v;
        std::cout << " count " << ce->count << "\n";
        exit_code = 1;
    });

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "design constructions");
    construct->require_subcommand(1);
    struct {
        int d = 3, t = 3, q = 2;
        std::uint64_t seed = 0;
        std::string measure = "gaussian";
        std::string out, array_out, materialize;
    } con;
    auto* con_cp = construct->add_subcommand(
        "cross-polytope", "the 2d vertices +-e_i: an exact spherical 3-design");
    con_cp->add_option("--d", con.d, "ambient dimension")->required();
    con_cp->add_option("--out", con.out, "output design file")->required();
    con_cp->callback([&] {
        auto X = df::cross_polytope(con.d);
        df::write_design(X, con.out);
        std::cout << "points: " << X.size() << "\n";
        Manifest m{"construct cross-polytope",
                   {{"d", std::to_string(con.d)}, {"out", con.out}},
                   std::nullopt,
                   {},
                   {con.out}};
        m.write_next_to(con.out);
    });
    auto* con_prod = construct->add_subcommand(
        "product", "unweighted Gaussian t-design from a t-wise independent array "
                   "over a 1-D design");
    con_prod->add_option("--d", con.d, "ambient dimension")->required();
    con_prod->add_option("--t", con.t, "strength")->required();
    con_prod->add_option("--q", con.q, "1-D design size (prime power)")->required();
    con_prod->add_option("--seed", con.seed, "random seed")->required();
    con_prod->add_option("--out", con.out, "output design file")->required();
    con_prod->add_option("--array", con.array_out, "also write the symbol array");
    con_prod->callback([&] {
        auto prod = df::gaussian_product_design(con.d, con.t, con.q, con.seed);
        df::write_design(prod.set, con.out);
        std::cout << "points: " << prod.set.size() << "\n";
        Manifest m{"construct product",
                   {{"d", std::to_string(con.d)},
                    {"t", std::to_string(con.t)},
                    {"q", std::to_string(con.q)},
                    {"out", con.out}},
                   con.seed,
                   {},
                   {con.out}};
        if (!con.array_out.empty()) {
            df::write_array(prod.array, con.array_out);
            m.outputs.push_back(con.array_out);
        }
        m.write_next_to(con.out);
    });
    auto* con_signed = construct->add_subcommand(
        "signed", "signed design of strength 2t as a weighted union of "
                  "sign-symmetric orbits, weights solved exactly");
    con_signed->add_option("--d", con.d, "ambient dimension")->required();
    con_signed->add_option("--t", con.t, "half strength (design strength is 2t)")
        ->required();
    con_signed->add_option("--measure", con.measure, "sphere|gaussian")->required();
    con_signed->add_option("--seed", con.seed, "random seed")->required();
    con_signed->add_option("--out", con.out, "output orbit file")->required();
    con_signed->add_option("--materialize", con.materialize,
                           "also write the explicit signed design file");
    con_signed->callback([&] {
        auto design =
            df::signed_design(con.d, con.t, parse_measure(con.measure), con.seed);
        write_orbit_file(design, con.out);
        std::cout << "generators: " << design.generators.size()
                  << ", materialized points: " << design.materialized_size()
                  << "\n";
        Manifest m{"construct signed",
                   {{"d", std::to_string(con.d)},
                    {"t", std::to_string(con.t)},
                    {"measure", con.measure},
                    {"out", con.out}},
                   con.seed,
                   {},
                   {con.out}};
        if (!con.materialize.empty()) {
            df::write_design(df::materialize_orbit_design(design), con.materialize);
            m.outputs.push_back(con.materialize);
        }
        m.write_next_to(con.out);
    });

    // ---- convert ----
    auto* convert = app.add_subcommand("convert",
                                       "spherical <-> Gaussian design conversion");
    convert->require_subcommand(1);
    struct {
        std::string in, out;
        int t = 3;
        bool skip_check = false;
    } cv;
    auto* cv_s2g = convert->add_subcommand(
        "s2g", "scale a spherical design over the radial Gauss rule");
    cv_s2g->add_option("input", cv.in, "input design file")->required();
    cv_s2g->add_option("--t", cv.t, "strength")->required();
    cv_s2g->add_option("--out", cv.out, "output design file")->required();
    cv_s2g->add_flag("--skip-check", cv.skip_check,
                     "skip the input design verification");
    cv_s2g->callback([&] {
        auto X = df::read_design(cv.in);
        auto G = df::spherical_to_gaussian(X, cv.t, cv.skip_check);
        df::write_design(G, cv.out);
        std::cout << "points: " << G.size() << "\n";
        Manifest m{"convert s2g",
                   {{"t", std::to_string(cv.t)}, {"in", cv.in}, {"out", cv.out}},
                   std::nullopt,
                   {cv.in},
                   {cv.out}};
        m.write_next_to(cv.out);
    });
    auto* cv_g2s = convert->add_subcommand(
        "g2s", "normalize a Gaussian design to the sphere and symmetrize");
    cv_g2s->add_option("input", cv.in, "input design file")->required();
    cv_g2s->add_option("--t", cv.t, "strength")->required();
    cv_g2s->add_option("--out", cv.out, "output design file")->required();
    cv_g2s->callback([&] {
        auto X = df::read_design(cv.in);
        auto S = df::gaussian_to_spherical(X, cv.t);
        df::write_design(S, cv.out);
        std::cout << "points: " << S.size() << "\n";
        Manifest m{"convert g2s",
                   {{"t", std::to_string(cv.t)}, {"in", cv.in}, {"out", cv.out}},
                   std::nullopt,
                   {cv.in},
                   {cv.out}};
        m.write_next_to(cv.out);
    });

    // ---- project ----
    auto* project = app.add_subcommand(
        "project", "project a design to a lower dimension (Gaussian directly, "
                   "spherical through the Gaussian chain)");
    struct {
        std::string in, out;
        int k = 2, t = 3;
    } pj;
    project->add_option("input", pj.in, "input design file")->required();
    project->add_option("--k", pj.k, "target dimension")->required();
    project->add_option("--t", pj.t, "strength")->required();
    project->add_option("--out", pj.out, "output design file")->required();
    project->callback([&] {
        auto X = df::read_design(pj.in);
        df::WeightedPointSet out =
            X.measure == df::Measure::Gaussian
                ? df::project_gaussian(X, pj.k)
                : df::project_spherical(X, pj.k, pj.t);
        df::write_design(out, pj.out);
        std::cout << "points: " << out.size() << "\n";
        Manifest m{"project",
                   {{"k", std::to_string(pj.k)},
                    {"t", std::to_string(pj.t)},
                    {"in", pj.in},
                    {"out", pj.out}},
                   std::nullopt,
                   {pj.in},
                   {pj.out}};
        m.write_next_to(pj.out);
    });

    // ---- verify ----
    auto* verify = app.add_subcommand(
        "verify", "moment-residual report for a design file (exit 0 pass, 1 fail, "
                  "2 error)");
    struct {
        std::string in;
        int t = 3;
        std::string mode = "float";
        double tol = 1e-9;
    } vf;
    verify->add_option("input", vf.in, "input design file")->required();
    verify->add_option("--t", vf.t, "strength to test")->required();
    verify->add_option("--mode", vf.mode, "exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--tol", vf.tol, "float-mode tolerance");
    verify->callback([&] {
        auto X = df::read_design(vf.in);
        auto rep = df::verify_design(
            X, vf.t, vf.mode == "exact" ? df::VerifyMode::Exact : df::VerifyMode::Float,
            vf.tol);
        print_report(rep);
        exit_code = rep.pass ? 0 : 1;
    });

    // ---- certify ----
    auto* certify = app.add_subcommand(
        "certify", "approximation certificate for a spherical design file");
    struct {
        std::string in;
        std::string mode = "l2";
        int t = 2;
    } ct;
    certify->add_option("input", ct.in, "input design file")->required();
    certify->add_option("--mode", ct.mode, "l2|tensor")
        ->check(CLI::IsMember({"l2", "tensor"}));
    certify->add_option("--t", ct.t, "strength")->required();
    certify->callback([&] {
        auto X = df::read_design(ct.in);
        if (ct.mode == "l2") {
            auto cert = df::epsilon_l2(X, ct.t);
            std::cout << "method: " << cert.method_name() << "\n";
            std::cout << "strength: " << cert.strength << "\n";
            std::cout << "pair sum: " << df::format_double(cert.pair_sum) << "\n";
            std::cout << "epsilon: " << df::format_double(cert.epsilon_achieved)
                      << "\n";
        } else {
            double disc = df::tensor_discrepancy(X, ct.t);
            std::cout << "method: tensor-gram\n";
            std::cout << "strength: " << 2 * ct.t << "\n";
            std::cout << "epsilon: " << df::format_double(disc) << "\n";
        }
    });

    // ---- bound ----
    auto* bound = app.add_subcommand("bound", "design-size lower bounds");
    bound->require_subcommand(1);
    struct {
        int d = 3, t = 3;
        double eps = 0.0;
    } bd;
    auto* bd_del = bound->add_subcommand(
        "delsarte", "linear programming lower bound for spherical t-designs");
    bd_del->add_option("--d", bd.d, "ambient dimension")->required();
    bd_del->add_option("--t", bd.t, "strength")->required();
    bd_del->callback(
        [&] { std::cout << df::delsarte_bound(bd.d, bd.t).get_str() << "\n"; });
    auto* bd_dim = bound->add_subcommand(
        "dim", "dimension counts: polynomial function spaces and harmonics");
    bd_dim->add_option("--d", bd.d, "ambient dimension")->required();
    bd_dim->add_option("--t", bd.t, "degree")->required();
    bd_dim->callback([&] {
        std::cout << "dim P_t sphere: " << df::dim_P_sphere(bd.d, bd.t).get_str()
                  << "\n";
        std::cout << "dim P_t gaussian: " << df::dim_P_gaussian(bd.d, bd.t).get_str()
                  << "\n";
        std::cout << "dim W_t: " << df::dim_W(bd.d, bd.t).get_str() << "\n";
    });
    auto* bd_lp = bound->add_subcommand(
        "lp", "lower bound for eps-approximate 2t-designs from the squared "
              "Gegenbauer certificate");
    bd_lp->add_option("--d", bd.d, "ambient dimension")->required();
    bd_lp->add_option("--t", bd.t, "half strength")->required();
    bd_lp->add_option("--eps", bd.eps, "approximation parameter")->required();
    bd_lp->callback([&] {
        std::cout << df::format_double(df::approx_lower_bound(bd.d, bd.t, bd.eps))
                  << "\n";
    });

    // ---- approx ----
    auto* approx = app.add_subcommand(
        "approx", "probabilistic constructions of approximate designs");
    approx->require_subcommand(1);
    struct {
        int d = 3, t = 1;
        double eps = 0.1;
        std::uint64_t seed = 0;
        std::string out;
    } ap;
    auto* ap_l2 = approx->add_subcommand(
        "l2", "uniform points accepted by the pairwise Gegenbauer certificate");
    ap_l2->add_option("--d", ap.d, "ambient dimension")->required();
    ap_l2->add_option("--t", ap.t, "strength")->required();
    ap_l2->add_option("--eps", ap.eps, "target epsilon")->required();
    ap_l2->add_option("--seed", ap.seed, "random seed")->required();
    ap_l2->add_option("--out", ap.out, "output design file")->required();
    ap_l2->callback([&] {
        auto X = df::construct_l2_approx(ap.d, ap.t, ap.eps, ap.seed);
        df::write_design(X, ap.out);
        auto cert = df::epsilon_l2(X, ap.t);
        std::cout << "points: " << X.size() << "\n";
        std::cout << "epsilon: " << df::format_double(cert.epsilon_achieved) << "\n";
        Manifest m{"approx l2",
                   {{"d", std::to_string(ap.d)},
                    {"t", std::to_string(ap.t)},
                    {"eps", df::format_double(ap.eps)},
                    {"out", ap.out}},
                   ap.seed,
                   {},
                   {ap.out}};
        m.write_next_to(ap.out);
    });
    auto* ap_tensor = approx->add_subcommand(
        "tensor", "uniform points accepted by the moment-tensor discrepancy");
    ap_tensor->add_option("--d", ap.d, "ambient dimension")->required();
    ap_tensor->add_option("--t", ap.t, "half strength (tensor order 2t)")
        ->required();
    ap_tensor->add_option("--eps", ap.eps, "target epsilon")->required();
    ap_tensor->add_option("--seed", ap.seed, "random seed")->required();
    ap_tensor->add_option("--out", ap.out, "output design file")->required();
    ap_tensor->callback([&] {
        auto X = df::construct_tensor_approx(ap.d, ap.t, ap.eps, ap.seed);
        df::write_design(X, ap.out);
        std::cout << "points: " << X.size() << "\n";
        std::cout << "epsilon: "
                  << df::format_double(df::tensor_discrepancy(X, ap.t)) << "\n";
        Manifest m{"approx tensor",
                   {{"d", std::to_string(ap.d)},
                    {"t", std::to_string(ap.t)},
                    {"eps", df::format_double(ap.eps)},
                    {"out", ap.out}},
                   ap.seed,
                   {},
                   {ap.out}};
        m.write_next_to(ap.out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage errors exit 2
    } catch (const df::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const df::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return verify->parsed() ? 2 : 1;  // verify reserves 1 for FAIL
    }
    return exit_code;
}
