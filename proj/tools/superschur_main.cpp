#include "superschur/errors.hpp"
#include "superschur/hook_system.hpp"
#include "superschur/json_io.hpp"
#include "superschur/partition.hpp"
#include "superschur/polynomial.hpp"
#include "superschur/tu.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ss = superschur;
using ss::ojson;

namespace {

int default_jobs() {
    if (const char* env = std::getenv("SUPERSCHUR_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct RunConfig {
    std::string shape_text;
    int k = 0;
    int l = 0;
    std::string method = "tableau";
    bool sweep = false;
    int max_size = 6;
    int max_k = 2;
    int max_l = 2;
    std::string format = "json";
    int cap_vertex_dim = 6;
    int cap_tu = 8;
    int jobs = default_jobs();
    std::string matrix_file;
    std::string objective_text;
    std::string out_path;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(cfg.out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
        f << text << "\n";
    }
}

void emit_json(const RunConfig& cfg, const ojson& j) { emit(cfg, j.dump(2)); }

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    if (text.empty()) return out;
    std::stringstream sstr(text);
    std::string item;
    while (std::getline(sstr, item, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid integer entry: '" + item + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("invalid integer entry: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string coord_header(int k, int l) {
    std::string h;
    for (int i = 1; i <= k; ++i) h += "a" + std::to_string(i) + ",";
    for (int j = 1; j <= l; ++j) h += "b" + std::to_string(j) + ",";
    if (!h.empty()) h.pop_back();
    return h;
}

std::string poly_csv(const ss::SparsePolynomial& p, int k, int l) {
    std::string out = coord_header(k, l);
    out = out.empty() ? "coef" : out + ",coef";
    for (const auto& [e, c] : p.terms()) {
        out += "\n";
        for (int v : e) out += std::to_string(v) + ",";
        out += c.str();
    }
    return out;
}

std::string points_csv(const std::vector<std::vector<long long>>& pts, int k, int l) {
    std::string out = coord_header(k, l);
    for (const auto& p : pts) {
        out += "\n";
        for (std::size_t i = 0; i < p.size(); ++i)
            out += (i ? "," : "") + std::to_string(p[i]);
    }
    return out;
}

std::string rational_str(const ss::Rational& x) {
    return boost::multiprecision::denominator(x) == 1
               ? boost::multiprecision::numerator(x).str()
               : x.str();
}

std::string report_csv(const ss::VerificationReport& rep) {
    std::string out = "item,value";
    for (const auto& [name, ok] : rep.checks)
        out += "\n" + name + "," + (ok ? "true" : "false");
    for (const auto& [name, n] : rep.counts) out += "\n" + name + "," + std::to_string(n);
    return out;
}

ojson shape_header_json(const ss::Partition& lam, int k, int l) {
    ojson j;
    j["shape"] = ss::to_json(lam);
    j["k"] = k;
    j["l"] = l;
    return j;
}

int cmd_compute(const RunConfig& cfg) {
    const ss::Partition lam = ss::Partition::from_string(cfg.shape_text);
    const int d = cfg.k + cfg.l;
    const bool hook = ss::is_hook(lam, cfg.k, cfg.l);
    if (!hook)
        std::cerr << "warning: " << lam.to_string() << " is not a (" << cfg.k << ","
                  << cfg.l << ")-hook partition; the polynomial is zero\n";

    ojson j = shape_header_json(lam, cfg.k, cfg.l);
    j["method"] = cfg.method;
    int rc = 0;
    ss::SparsePolynomial primary(d);
    if (cfg.method == "both") {
        const auto pt = hook ? ss::schur_super_tableau(lam, cfg.k, cfg.l)
                             : ss::SparsePolynomial(d);
        const auto pd = hook ? ss::schur_super_det(lam, cfg.k, cfg.l)
                             : ss::SparsePolynomial(d);
        j["tableau"] = ss::to_json(pt);
        j["det"] = ss::to_json(pd);
        const bool equal = pt == pd;
        j["equal"] = equal;
        primary = pt;
        if (!equal) rc = 1;
    } else {
        primary = !hook ? ss::SparsePolynomial(d)
                 : cfg.method == "det" ? ss::schur_super_det(lam, cfg.k, cfg.l)
                                       : ss::schur_super_tableau(lam, cfg.k, cfg.l);
        j["polynomial"] = ss::to_json(primary);
    }
    if (cfg.format == "csv")
        emit(cfg, poly_csv(primary, cfg.k, cfg.l));
    else
        emit_json(cfg, j);
    return rc;
}

int cmd_support(const RunConfig& cfg) {
    const ss::Partition lam = ss::Partition::from_string(cfg.shape_text);
    if (!ss::is_hook(lam, cfg.k, cfg.l))
        std::cerr << "warning: " << lam.to_string() << " is not a (" << cfg.k << ","
                  << cfg.l << ")-hook partition; the support is empty\n";
    const auto poly = ss::schur_super_tableau(lam, cfg.k, cfg.l);
    std::vector<std::vector<long long>> pts;
    for (const auto& e : poly.support()) pts.emplace_back(e.begin(), e.end());
    if (cfg.format == "csv") {
        emit(cfg, points_csv(pts, cfg.k, cfg.l));
    } else {
        ojson j = shape_header_json(lam, cfg.k, cfg.l);
        j["points"] = pts;
        emit_json(cfg, j);
    }
    return 0;
}

int cmd_lattice(const RunConfig& cfg) {
    const ss::Partition lam = ss::Partition::from_string(cfg.shape_text);
    const auto sys = ss::build_system(lam, cfg.k, cfg.l);
    const auto pts = ss::enumerate_lattice(sys);
    if (cfg.format == "csv") {
        emit(cfg, points_csv(pts.points, cfg.k, cfg.l));
    } else {
        ojson j = shape_header_json(lam, cfg.k, cfg.l);
        j["points"] = ss::to_json(pts);
        emit_json(cfg, j);
    }
    return 0;
}

int cmd_vertices(const RunConfig& cfg) {
    const ss::Partition lam = ss::Partition::from_string(cfg.shape_text);
    const auto sys = ss::build_system(lam, cfg.k, cfg.l);
    const auto verts = ss::enumerate_vertices(sys, cfg.cap_vertex_dim);
    if (cfg.format == "csv") {
        std::string out = coord_header(cfg.k, cfg.l);
        for (const auto& v : verts) {
            out += "\n";
            for (std::size_t i = 0; i < v.size(); ++i)
                out += (i ? "," : "") + rational_str(v[i]);
        }
        emit(cfg, out);
    } else {
        ojson j = shape_header_json(lam, cfg.k, cfg.l);
        ojson arr = ojson::array();
        for (const auto& v : verts) arr.push_back(ss::to_json(v));
        j["vertices"] = std::move(arr);
        emit_json(cfg, j);
    }
    return 0;
}

int cmd_verify_snp(const RunConfig& cfg) {
    if (!cfg.sweep) {
        const ss::Partition lam = ss::Partition::from_string(cfg.shape_text);
        const auto rep = ss::verify_snp(lam, cfg.k, cfg.l);
        if (cfg.format == "csv") {
            emit(cfg, report_csv(rep));
        } else {
            ojson j = shape_header_json(lam, cfg.k, cfg.l);
            j["report"] = ss::to_json(rep);
            emit_json(cfg, j);
        }
        return rep.all_pass() ? 0 : 1;
    }

    // sweep instances ordered by shape, then k, then l; workers fill a
    // pre-sized slot table so the output does not depend on the job count
    struct Task {
        ss::Partition lam;
        int k, l;
    };
    std::vector<Task> tasks;
    for (const auto& lam : ss::partitions_up_to(cfg.max_size))
        for (int k = 0; k <= cfg.max_k; ++k)
            for (int l = 0; l <= cfg.max_l; ++l) {
                if (k == 0 && l == 0) continue;
                if (!ss::is_hook(lam, k, l)) continue;
                tasks.push_back({lam, k, l});
            }

    std::vector<ss::VerificationReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    const int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                reports[i] = ss::verify_snp(tasks[i].lam, tasks[i].k, tasks[i].l);
        });
    for (auto& w : workers) w.join();

    bool all = true;
    for (const auto& r : reports) all = all && r.all_pass();

    if (cfg.format == "csv") {
        std::string out = "shape,k,l,all_pass";
        for (std::size_t i = 0; i < tasks.size(); ++i)
            out += "\n\"" + tasks[i].lam.to_string() + "\"," + std::to_string(tasks[i].k) + "," +
                   std::to_string(tasks[i].l) + "," + (reports[i].all_pass() ? "true" : "false");
        emit(cfg, out);
    } else {
        ojson sweep;
        sweep["max_size"] = cfg.max_size;
        sweep["max_k"] = cfg.max_k;
        sweep["max_l"] = cfg.max_l;
        ojson inst = ojson::array();
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            ojson j = shape_header_json(tasks[i].lam, tasks[i].k, tasks[i].l);
            j["report"] = ss::to_json(reports[i]);
            inst.push_back(std::move(j));
        }
        ojson j;
        j["sweep"] = std::move(sweep);
        j["count"] = tasks.size();
        j["all_pass"] = all;
        j["instances"] = std::move(inst);
        emit_json(cfg, j);
    }
    return all ? 0 : 1;
}

int cmd_tu(const RunConfig& cfg) {
    if (!cfg.matrix_file.empty()) {
        std::ifstream f(cfg.matrix_file);
        if (!f) throw std::invalid_argument("cannot open matrix file: " + cfg.matrix_file);
        ojson mj;
        try {
            f >> mj;
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed matrix file: ") + e.what());
        }
        const ss::IntMatrix m = ss::matrix_from_json(mj);

        ojson checks;
        bool interval_known = true, interval = false;
        try {
            interval = ss::is_interval(m);
        } catch (const std::invalid_argument&) {
            interval_known = false; // entries outside {0,1}
        }
        checks["interval"] = interval_known ? ojson(interval) : ojson(nullptr);

        bool tu = false;
        bool capped = false;
        std::string cap_msg;
        try {
            tu = ss::is_totally_unimodular(m, cfg.cap_tu);
            checks["tu"] = tu;
        } catch (const ss::cap_exceeded& e) {
            capped = true;
            cap_msg = e.what();
            checks["tu"] = nullptr;
        }
        ojson counts;
        counts["rows"] = m.rows;
        counts["cols"] = m.cols;
        ojson j;
        j["checks"] = std::move(checks);
        j["counts"] = std::move(counts);
        if (cfg.format == "csv") {
            std::string out = "item,value";
            out += "\ninterval," + std::string(interval_known ? (interval ? "true" : "false") : "unknown");
            out += "\ntu," + std::string(capped ? "unknown" : (tu ? "true" : "false"));
            emit(cfg, out);
        } else {
            emit_json(cfg, j);
        }
        if (capped) {
            std::cerr << "error: " << cap_msg << "\n";
            return 3;
        }
        return tu ? 0 : 1;
    }

    const ss::Partition lam = ss::Partition::from_string(cfg.shape_text);
    const auto rep = ss::certify_atilde_tu(lam, cfg.k, cfg.l, cfg.cap_tu);
    if (cfg.format == "csv") {
        std::string out = "item,value";
        out += "\nnormalized_zero_one," + std::string(rep.zero_one_pass ? "true" : "false");
        out += "\nnormalized_interval," + std::string(rep.interval_pass ? "true" : "false");
        out += "\nexhaustive_tu," +
               std::string(!rep.exhaustive_checked ? "skipped" : (rep.exhaustive_pass ? "true" : "false"));
        out += "\ncertified," + std::string(rep.certified() ? "true" : "false");
        emit(cfg, out);
    } else {
        ojson j = shape_header_json(lam, cfg.k, cfg.l);
        j["report"] = ss::to_json(rep);
        emit_json(cfg, j);
    }
    return rep.certified() ? 0 : 1;
}

int cmd_rado(const RunConfig& cfg) {
    const ss::Partition mu = ss::Partition::from_string(cfg.shape_text);
    const auto rep = ss::rado_check(mu, cfg.k);
    if (cfg.format == "csv") {
        emit(cfg, report_csv(rep));
    } else {
        ojson j;
        j["shape"] = ss::to_json(mu);
        j["k"] = cfg.k;
        j["report"] = ss::to_json(rep);
        emit_json(cfg, j);
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_maximize(const RunConfig& cfg) {
    const ss::Partition lam = ss::Partition::from_string(cfg.shape_text);
    const auto sys = ss::build_system(lam, cfg.k, cfg.l);
    const auto c = parse_int_list(cfg.objective_text);
    const auto opt = ss::maximize_linear(sys, c);
    if (cfg.format == "csv") {
        std::string out = coord_header(cfg.k, cfg.l);
        out = out.empty() ? "value" : out + ",value";
        out += "\n";
        for (long long v : opt.point) out += std::to_string(v) + ",";
        out += std::to_string(opt.value);
        emit(cfg, out);
    } else {
        ojson j = shape_header_json(lam, cfg.k, cfg.l);
        j["c"] = c;
        j["value"] = opt.value;
        j["point"] = opt.point;
        emit_json(cfg, j);
    }
    return 0;
}

void add_shape_opts(CLI::App* cmd, RunConfig& cfg, bool with_l = true) {
    cmd->add_option("--shape", cfg.shape_text,
                    "partition as comma-separated integers; empty string is the empty partition");
    cmd->add_option("--k", cfg.k, "number of x variables")->check(CLI::NonNegativeNumber);
    if (with_l)
        cmd->add_option("--l", cfg.l, "number of y variables")->check(CLI::NonNegativeNumber);
}

void add_io_opts(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"supersymmetric Schur polynomials, their Newton polytopes, and TU certificates"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* compute = app.add_subcommand("compute", "compute S_lambda(x;y)");
    add_shape_opts(compute, cfg);
    compute->add_option("--method", cfg.method, "tableau | det | both")
        ->check(CLI::IsMember({"tableau", "det", "both"}));
    add_io_opts(compute, cfg);

    auto* support = app.add_subcommand("support", "exponent vectors of S_lambda");
    add_shape_opts(support, cfg);
    add_io_opts(support, cfg);

    auto* lattice = app.add_subcommand("lattice", "integer points of the polytope");
    add_shape_opts(lattice, cfg);
    add_io_opts(lattice, cfg);

    auto* vertices = app.add_subcommand("vertices", "exact vertices of the polytope");
    add_shape_opts(vertices, cfg);
    vertices->add_option("--cap-vertex-dim", cfg.cap_vertex_dim, "dimension cap for vertex enumeration")
        ->check(CLI::PositiveNumber);
    add_io_opts(vertices, cfg);

    auto* verify = app.add_subcommand("verify-snp", "saturation checks for S_lambda");
    add_shape_opts(verify, cfg);
    verify->add_flag("--sweep", cfg.sweep, "verify every hook shape within the bounds");
    verify->add_option("--max-size", cfg.max_size, "sweep bound on |lambda|")->check(CLI::PositiveNumber);
    verify->add_option("--max-k", cfg.max_k, "sweep bound on k")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-l", cfg.max_l, "sweep bound on l")->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", cfg.jobs, "parallel workers for sweeps (default SUPERSCHUR_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    add_io_opts(verify, cfg);

    auto* tu = app.add_subcommand("tu", "total unimodularity certificates");
    add_shape_opts(tu, cfg);
    tu->add_option("--matrix", cfg.matrix_file, "check a matrix from a JSON file instead");
    tu->add_option("--cap-tu", cfg.cap_tu, "cap on the exhaustive minor order")->check(CLI::PositiveNumber);
    add_io_opts(tu, cfg);

    auto* rado = app.add_subcommand("rado", "classical support check for s_mu");
    add_shape_opts(rado, cfg, /*with_l=*/false);
    add_io_opts(rado, cfg);

    auto* maximize = app.add_subcommand("maximize", "maximize c.u over the polytope");
    add_shape_opts(maximize, cfg);
    maximize->add_option("--c", cfg.objective_text, "objective as comma-separated integers");
    add_io_opts(maximize, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(compute)) return cmd_compute(cfg);
        if (app.got_subcommand(support)) return cmd_support(cfg);
        if (app.got_subcommand(lattice)) return cmd_lattice(cfg);
        if (app.got_subcommand(vertices)) return cmd_vertices(cfg);
        if (app.got_subcommand(verify)) return cmd_verify_snp(cfg);
        if (app.got_subcommand(tu)) return cmd_tu(cfg);
        if (app.got_subcommand(rado)) return cmd_rado(cfg);
        if (app.got_subcommand(maximize)) return cmd_maximize(cfg);
    } catch (const ss::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
