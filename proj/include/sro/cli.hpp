#pragma once

// Command-line surface. Exit codes: 0 success, 1 domain failure (condition
// violated, precondition failed, malformed data), 2 usage error (bad
// flags/arguments). Summary records are single-line key=value; graphs go
// out as graph6, edge lists, or a one-object JSON line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sro/algebraic.hpp"
#include "sro/construct.hpp"
#include "sro/exact.hpp"
#include "sro/graph.hpp"
#include "sro/kappa.hpp"
#include "sro/spectral.hpp"

namespace sro {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace cli_detail {

inline long long parse_int_strict(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw UsageError(what + ": expected an integer, got '" + s + "'");
    }
    if (pos != s.size())
        throw UsageError(what + ": expected an integer, got '" + s + "'");
    return v;
}

// "b,c", "k/n", "p/q"
inline std::pair<long long, long long> parse_int_pair(const std::string& s, char sep,
                                                      const std::string& what) {
    const auto cut = s.find(sep);
    if (cut == std::string::npos || cut == 0 || cut + 1 >= s.size())
        throw UsageError(what + ": expected the form <int>" + sep + "<int>, got '" + s + "'");
    return {parse_int_strict(s.substr(0, cut), what), parse_int_strict(s.substr(cut + 1), what)};
}

inline Graph load_graph(const std::string& path, std::istream& in) {
    if (path == "-")
        return edge_list_parse(in);
    std::ifstream file(path);
    if (!file)
        throw UsageError("cannot open '" + path + "'");
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::string line;
        while (std::getline(file, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (!line.empty())
                return graph6_decode(line);
        }
        throw std::invalid_argument("no graph6 record in '" + path + "'");
    }
    return edge_list_parse(file);
}

inline std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    std::string s = buf;
    if (s == "-0.000000000000")  // tiny negatives round to signed zero
        s.erase(0, 1);
    return s;
}

// graph + key=value pairs, rendered per --format
struct Record {
    const Graph* graph = nullptr;
    std::vector<std::pair<std::string, std::string>> keys;
    std::vector<std::pair<std::string, long long>> ints;    // jsonl keeps these numeric
    std::vector<std::pair<std::string, double>> numbers;

    void key(std::string k, std::string v) { keys.emplace_back(std::move(k), std::move(v)); }
    void int_(std::string k, long long v) { ints.emplace_back(std::move(k), v); }
    void num(std::string k, double v) { numbers.emplace_back(std::move(k), v); }

    void emit(const std::string& format, std::ostream& out) const {
        if (format == "jsonl") {
            nlohmann::json j;
            if (graph)
                j["graph6"] = graph6_encode(*graph);
            for (const auto& [k, v] : keys)
                j[k] = v;
            for (const auto& [k, v] : ints)
                j[k] = v;
            for (const auto& [k, v] : numbers)
                j[k] = v;
            out << j.dump() << '\n';
            return;
        }
        if (graph) {
            if (format == "edges")
                out << edge_list_string(*graph);
            else
                out << graph6_encode(*graph) << '\n';
        }
        std::string line;
        for (const auto& [k, v] : keys)
            line += (line.empty() ? "" : " ") + k + "=" + v;
        for (const auto& [k, v] : ints)
            line += (line.empty() ? "" : " ") + k + "=" + std::to_string(v);
        for (const auto& [k, v] : numbers)
            line += (line.empty() ? "" : " ") + k + "=" + fmt12(v);
        if (!line.empty())
            out << line << '\n';
    }
};

inline int enumeration_cap() {
    int cap = 8;
    if (const char* env = std::getenv("SRO_MAX_ORDER")) {
        const long long v = parse_int_strict(env, "SRO_MAX_ORDER");
        if (v < 1)
            throw UsageError("SRO_MAX_ORDER must be >= 1");
        if (v > cap)
            cap = static_cast<int>(std::min<long long>(v, kMaxSearchOrder));
    }
    return cap;
}

}  // namespace cli_detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
    using cli_detail::Record;
    using cli_detail::fmt12;
    using cli_detail::load_graph;
    using cli_detail::parse_int_pair;

    CLI::App app{"spectral radius constructions and kappa search"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"g6", "edges", "jsonl"};

    // realize
    auto* realize_cmd = app.add_subcommand("realize", "graph whose radius is a quadratic's root");
    std::string realize_quad;
    long long realize_M = 0;
    std::string realize_fmt = "g6";
    realize_cmd->add_option("--quadratic", realize_quad, "b,c of x^2 + b*x + c")->required();
    auto* m_opt = realize_cmd->add_option("--M", realize_M, "block multiplicity (even, > m)");
    realize_cmd->add_option("--format", realize_fmt)->check(CLI::IsMember(formats));
    realize_cmd->callback([&] {
        const auto [b, c] = parse_int_pair(realize_quad, ',', "--quadratic");
        std::optional<long long> M;
        if (m_opt->count())
            M = realize_M;
        const Realization r = realize_quadratic(b, c, M);
        if (verify_equitable(r.graph, r.blocks) != r.quotient)
            throw std::logic_error("realize: quotient re-check failed");
        if (r.graph.order() <= 500 && std::abs(spectral_radius(r.graph) - r.lambda) > 1e-9)
            throw std::logic_error("realize: numeric radius mismatch");
        Record rec;
        rec.graph = &r.graph;
        rec.num("lambda1", r.lambda);
        rec.emit(realize_fmt, out);
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "decide 2cos(2*pi*k/n) realizability");
    std::string classify_trig;
    std::string classify_fmt = "g6";
    classify_cmd->add_option("--trig", classify_trig, "k/n")->required();
    classify_cmd->add_option("--format", classify_fmt)->check(CLI::IsMember(formats));
    classify_cmd->callback([&] {
        const auto [k, n] = parse_int_pair(classify_trig, '/', "--trig");
        if (k < INT32_MIN || k > INT32_MAX || n < INT32_MIN || n > INT32_MAX)
            throw std::invalid_argument("classify: k/n out of range");
        const ClassifyResult r = classify_leq2(static_cast<int>(k), static_cast<int>(n));
        Record rec;
        Graph witness(1);
        if (r.kind == ClassifyKind::path_order) {
            rec.key("result", "path_order");
            rec.int_("q", r.q);
            rec.num("lambda", r.lambda);
            witness = path(r.q - 1);
            rec.graph = &witness;
        } else if (r.kind == ClassifyKind::special_two) {
            rec.key("result", "special_two");
            rec.num("lambda", r.lambda);
            witness = complete(3);
            rec.graph = &witness;
        } else {
            rec.key("result", "rejected");
            rec.key("reason",
                    r.reason == RejectReason::not_positive ? "not_positive" : "not_dominant");
            rec.num("lambda", r.lambda);
            if (r.reason == RejectReason::not_dominant) {
                rec.int_("conjugate_k", r.conjugate_k);
                rec.num("conjugate", r.conjugate_value);
            }
        }
        rec.emit(classify_fmt, out);
    });

    // kappa
    auto* kappa_cmd = app.add_subcommand("kappa", "least order realizing the target radius");
    std::string kappa_quad;
    long long kappa_int = 0;
    int kappa_max_order = 8, kappa_jobs = 1;
    bool kappa_no_prune = false;
    auto* kq = kappa_cmd->add_option("--quadratic", kappa_quad, "b,c of x^2 + b*x + c");
    auto* ki = kappa_cmd->add_option("--integer", kappa_int, "integer target");
    kq->excludes(ki);
    ki->excludes(kq);
    kappa_cmd->add_option("--max-order", kappa_max_order, "search this far (default 8)");
    kappa_cmd->add_flag("--no-prune", kappa_no_prune, "disable order skipping");
    kappa_cmd->add_option("--jobs", kappa_jobs, "worker threads")->check(CLI::Range(1, 256));
    kappa_cmd->callback([&] {
        if (!kq->count() && !ki->count())
            throw UsageError("kappa: pass --quadratic b,c or --integer t");
        const int cap = cli_detail::enumeration_cap();
        if (kappa_max_order < 1)
            throw UsageError("kappa: --max-order must be >= 1");
        if (kappa_max_order > cap)
            throw UsageError("kappa: --max-order above the cap of " + std::to_string(cap) +
                             " (SRO_MAX_ORDER raises it to at most " +
                             std::to_string(kMaxSearchOrder) + ")");
        SearchTarget target = SearchTarget::integer(1);
        if (kq->count()) {
            const auto [b, c] = parse_int_pair(kappa_quad, ',', "--quadratic");
            target = SearchTarget::quadratic(b, c);
        } else {
            target = SearchTarget::integer(kappa_int);
        }
        const KappaResult r = kappa(target, kappa_max_order, !kappa_no_prune, kappa_jobs, &err);
        if (r.outcome == KappaOutcome::found)
            out << "kappa=" << r.order << " witness=" << graph6_encode(*r.witness) << '\n';
        else
            out << "kappa=not_found max_order=" << r.order << '\n';
    });

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "adjacency eigenvalues, descending");
    std::string spectrum_path;
    double spectrum_tol = kDefaultTol;
    spectrum_cmd->add_option("graph", spectrum_path, "edge-list file, *.g6 file, or -")
        ->required();
    spectrum_cmd->add_option("--tol", spectrum_tol, "eigensolver tolerance");
    spectrum_cmd->callback([&] {
        if (!(spectrum_tol > 0))
            throw UsageError("spectrum: --tol must be positive");
        const Graph g = load_graph(spectrum_path, in);
        for (double v : spectrum(g, spectrum_tol).eigenvalues)
            out << fmt12(v) << '\n';
    });

    // charpoly
    auto* charpoly_cmd = app.add_subcommand("charpoly", "exact characteristic polynomial");
    std::string charpoly_path;
    charpoly_cmd->add_option("graph", charpoly_path, "edge-list file, *.g6 file, or -")
        ->required();
    charpoly_cmd->callback([&] { out << char_poly(load_graph(charpoly_path, in)).to_string() << '\n'; });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "certify a graph's radius against a target");
    std::string verify_path, verify_quad;
    verify_cmd->add_option("graph", verify_path, "edge-list file, *.g6 file, or -")->required();
    verify_cmd->add_option("--quadratic", verify_quad, "b,c of x^2 + b*x + c")->required();
    verify_cmd->callback([&] {
        const auto [b, c] = parse_int_pair(verify_quad, ',', "--quadratic");
        const Graph g = load_graph(verify_path, in);
        const RadiusCertificate cert = verify_radius(g, SearchTarget::quadratic(b, c));
        out << "ok=" << (cert.ok() ? 1 : 0) << " divisible=" << (cert.divisible ? 1 : 0)
            << " largest=" << (cert.largest ? 1 : 0) << " numeric=" << (cert.numeric ? 1 : 0)
            << " lambda1=" << fmt12(cert.lambda1) << '\n';
        if (!cert.ok())
            err << "verify: " << cert.failure() << '\n';
    });

    // family
    auto* family_cmd = app.add_subcommand("family", "named witness families");
    family_cmd->require_subcommand(1);
    std::string family_fmt = "g6";
    family_cmd->add_option("--format", family_fmt)->check(CLI::IsMember(formats));
    int fam_n = 0, fam_m = 0, fam_k = 0;
    auto emit_family = [&](const Graph& g) {
        Record rec;
        rec.graph = &g;
        rec.emit(family_fmt, out);
    };
    auto* fam_bip = family_cmd->add_subcommand("bipartite", "K_{n,n+m}");
    fam_bip->add_option("n", fam_n)->required();
    fam_bip->add_option("m", fam_m)->required();
    fam_bip->callback([&] { emit_family(family_bipartite_witness(fam_n, fam_m)); });
    auto* fam_join = family_cmd->add_subcommand("join", "K_{n-m} joined to m isolated vertices");
    fam_join->add_option("n", fam_n)->required();
    fam_join->add_option("m", fam_m)->required();
    fam_join->callback([&] { emit_family(family_join_witness(fam_n, fam_m)); });
    auto* fam_path = family_cmd->add_subcommand("path", "path on n vertices");
    fam_path->add_option("n", fam_n)->required();
    fam_path->callback([&] { emit_family(path(fam_n)); });
    auto* fam_complete = family_cmd->add_subcommand("complete", "complete graph on n vertices");
    fam_complete->add_option("n", fam_n)->required();
    fam_complete->callback([&] { emit_family(complete(fam_n)); });
    auto* fam_regular = family_cmd->add_subcommand("regular", "k-regular circulant on n vertices");
    fam_regular->add_option("n", fam_n)->required();
    fam_regular->add_option("k", fam_k)->required();
    fam_regular->callback([&] { emit_family(regular_graph(fam_n, fam_k)); });
    for (auto* fam : {fam_bip, fam_join, fam_path, fam_complete, fam_regular})
        fam->add_option("--format", family_fmt)->check(CLI::IsMember(formats));

    // product
    auto* product_cmd = app.add_subcommand("product", "Cartesian (radii add) or Kronecker (multiply)");
    bool prod_sum = false, prod_prod = false;
    std::string prod_a, prod_b;
    std::string product_fmt = "g6";
    product_cmd->add_flag("--sum", prod_sum, "Cartesian product");
    product_cmd->add_flag("--prod", prod_prod, "Kronecker product");
    product_cmd->add_option("g1", prod_a)->required();
    product_cmd->add_option("g2", prod_b)->required();
    product_cmd->add_option("--format", product_fmt)->check(CLI::IsMember(formats));
    product_cmd->callback([&] {
        if (prod_sum == prod_prod)
            throw UsageError("product: pass exactly one of --sum, --prod");
        const Graph a = load_graph(prod_a, in);
        const Graph b = load_graph(prod_b, in);
        const Graph g = prod_sum ? realize_sum(a, b) : realize_product(a, b);
        Record rec;
        rec.graph = &g;
        rec.emit(product_fmt, out);
    });

    // signless
    auto* signless_cmd =
        app.add_subcommand("signless", "graph realizing the signless-Laplacian radius");
    std::string signless_path;
    std::string signless_fmt = "g6";
    signless_cmd->add_option("graph", signless_path, "edge-list file, *.g6 file, or -")
        ->required();
    signless_cmd->add_option("--format", signless_fmt)->check(CLI::IsMember(formats));
    signless_cmd->callback([&] {
        const Graph g = load_graph(signless_path, in);
        const double mu = signless_laplacian_radius(g);
        const Graph realized = realize_signless_laplacian_radius(g);
        Record rec;
        rec.graph = &realized;
        rec.num("mu", mu);
        rec.emit(signless_fmt, out);
    });

    // hoffman
    auto* hoffman_cmd = app.add_subcommand("hoffman", "limit value alpha_n");
    int hoffman_n = 0;
    hoffman_cmd->add_option("n", hoffman_n)->required();
    hoffman_cmd->callback([&] { out << fmt12(hoffman_alpha(hoffman_n)) << '\n'; });

    // equiangular
    auto* equi_cmd = app.add_subcommand("equiangular", "max equiangular lines at angle arccos(alpha)");
    std::string equi_alpha;
    long long equi_dim = 0, equi_kappa = 0;
    equi_cmd->add_option("--alpha", equi_alpha, "p/q")->required();
    equi_cmd->add_option("--dim", equi_dim, "ambient dimension")->required();
    auto* equi_kopt = equi_cmd->add_option("--kappa", equi_kappa, "kappa of (1-alpha)/(2*alpha)");
    equi_cmd->callback([&] {
        const auto [p, q] = parse_int_pair(equi_alpha, '/', "--alpha");
        const BigRat lambda = lambda_from_alpha(p, q);
        long long k = 0;
        if (equi_kopt->count()) {
            k = equi_kappa;
        } else if (boost::multiprecision::denominator(lambda) == 1) {
            k = boost::multiprecision::numerator(lambda).convert_to<long long>() + 1;
        } else {
            throw std::invalid_argument(
                "equiangular: lambda = " + lambda.str() +
                " is not a positive integer; pass --kappa explicitly");
        }
        out << equiangular_count(equi_dim, k) << '\n';
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace sro
