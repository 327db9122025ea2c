// Batch front end: runs the proof or one of its stages and writes the
// resulting certificates (JSON) and data series (CSV) into --out-dir.

#include <cubeslice/certifier.hpp>
#include <cubeslice/exact_volume.hpp>
#include <cubeslice/integral_oracle.hpp>
#include <cubeslice/parallel.hpp>
#include <cubeslice/report.hpp>
#include <cubeslice/xt_pipeline.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace cubeslice;

namespace {

enum ExitCode { ok = 0, failed = 1, usage = 2, unexpected = 3 };

struct RunConfig {
    double a = 1.1;
    int order = 7;
    int truncation = 20;
    double subdiv_width = 0.001;
    Subdivision subdivision = Subdivision::Bisection;
    int n_tail = 160;
    int panels = 10000;
    std::string out_dir = ".";
    unsigned jobs = 0;
    bool verbose = false;
    bool timing = true;

    std::optional<double> R;
    std::optional<int> force_n0;
    bool skip_exact = false;
    int max_n = 200;
    int digits = 12;

    PipelineConfig pipeline() const {
        PipelineConfig p;
        p.a = a;
        p.order = order;
        p.N = truncation;
        p.subdiv_width = subdiv_width;
        p.subdivision = subdivision;
        p.jobs = resolve_jobs(jobs);
        return p;
    }
};

void note(const RunConfig& cfg, const std::string& msg) {
    if (cfg.verbose) std::cerr << "cubeslice: " << msg << '\n';
}

void write_file(const RunConfig& cfg, const std::string& name, const std::string& content) {
    fs::create_directories(cfg.out_dir);
    const fs::path path = fs::path(cfg.out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw Error("write to " + path.string() + " failed");
    note(cfg, "wrote " + path.string());
}

int cmd_prove(const RunConfig& cfg) {
    ProofConfig pc;
    pc.pipeline = cfg.pipeline();
    pc.n_tail = cfg.n_tail;
    pc.R_override = cfg.R;
    pc.force_n0 = cfg.force_n0;
    pc.run_exact = !cfg.skip_exact;
    pc.jobs = pc.pipeline.jobs;
    const ProofReport report = full_proof(pc);
    write_file(cfg, "proof_report.json", proof_report_json(report, cfg.timing));
    for (const auto& s : report.stages) note(cfg, s.name + (s.ok ? " ok: " : " FAILED: ") + s.message);
    if (!report.verdict) {
        const StageReport* f = report.failed_stage();
        std::cerr << "cubeslice: proof failed at stage " << (f ? f->name : "unknown") << ": "
                  << (f ? f->message : "incomplete") << '\n';
        return failed;
    }
    std::cout << "verdict: increasing for all n >= 3 (R <= " << *report.R << ", n0 = " << *report.n0 << ")\n";
    return ok;
}

int cmd_bound_r(const RunConfig& cfg) {
    const PipelineConfig pc = cfg.pipeline();
    const SweepResult s = sweep(pc);
    write_file(cfg, "bound_r.json", sweep_json(s, pc));
    std::cout << "R <= " << s.R() << " over " << s.x_table.rows.size() << " pieces\n";
    return s.round_trip_ok ? ok : failed;
}

int cmd_find_n0(const RunConfig& cfg) {
    double R = 0.0;
    if (cfg.R) {
        R = *cfg.R;
    } else {
        R = sweep(cfg.pipeline()).R();
        note(cfg, "R from sweep: " + std::to_string(R));
    }
    const GapBoundParams p = GapBoundParams::with_R(R, cfg.a);
    const GapCertificate g = find_n0(p, cfg.n_tail);
    write_file(cfg, "n0_certificate.json", gap_certificate_json(g, p));
    std::cout << "n0 = " << g.n0 << " (tail certificate at " << g.n_tail << (g.tail.valid ? " valid" : " INVALID")
              << ")\n";
    return g.verdict ? ok : failed;
}

int cmd_tables(const RunConfig& cfg) {
    const SweepResult s = sweep(cfg.pipeline());
    write_file(cfg, "table_x.csv", coefficient_table_csv(s.x_table));
    write_file(cfg, "table_t.csv", coefficient_table_csv(s.t_table));
    return s.round_trip_ok ? ok : failed;
}

int cmd_verify_exact(const RunConfig& cfg) {
    if (cfg.max_n < 3) throw PreconditionError("--max-n must be >= 3");
    const MonotonicityCertificate c = verify_range(2, cfg.max_n, resolve_jobs(cfg.jobs));
    write_file(cfg, "verify_exact.csv", verify_exact_csv(c));
    bool all_from_three = true;
    for (const auto& s : c.steps) {
        if (s.n >= 3) all_from_three = all_from_three && s.increasing;
    }
    std::cout << "steps 3.." << cfg.max_n - 1 << (all_from_three ? " all increasing" : " NOT all increasing")
              << "; step 2 " << (c.steps.front().increasing ? "increasing" : "decreasing") << '\n';
    return all_from_three ? ok : failed;
}

int cmd_figures(const RunConfig& cfg) {
    write_file(cfg, "volumes.csv", volumes_csv(1, cfg.max_n, cfg.digits));
    write_file(cfg, "gaps.csv", gaps_csv(2, cfg.max_n - 1, cfg.digits));

    std::vector<double> grid;
    for (int i = 1; i <= 110; ++i) grid.push_back(i / 100.0);
    write_file(cfg, "remainder_widths.csv", remainder_widths_csv(grid, {5, 10, 15, 20}, 0));

    // Cross-check of the closed form against the integral.
    std::ostringstream oracle;
    oracle << "n,integral_lo,integral_hi,exact_contained\n";
    bool contained = true;
    QuadratureConfig qc;
    qc.panels = cfg.panels;
    qc.a = cfg.a;
    for (int n : {3, 5, 10, 25, 50}) {
        const Interval in = enclose_I(n, qc);
        const bool c = in.contains(volume_enclosure(n));
        contained = contained && c;
        char line[128];
        std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%s\n", n, in.lo(), in.hi(), c ? "true" : "false");
        oracle << line;
    }
    write_file(cfg, "integral_check.csv", oracle.str());
    return contained ? ok : failed;
}

void add_pipeline_options(CLI::App* sub, RunConfig& cfg) {
    static const std::map<std::string, Subdivision> modes{{"bisection", Subdivision::Bisection},
                                                          {"uniform", Subdivision::Uniform}};
    sub->add_option("--a", cfg.a, "right end of the t range")->capture_default_str();
    sub->add_option("--order", cfg.order, "Taylor order K")->capture_default_str();
    sub->add_option("--truncation", cfg.truncation, "series truncation index N")->capture_default_str();
    sub->add_option("--subdiv-width", cfg.subdiv_width, "maximum piece width")->capture_default_str();
    sub->add_option("--subdivision", cfg.subdivision, "bisection or uniform")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->default_str("bisection");
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Verified monotonicity of the diagonal cube section volume"};
    app.require_subcommand(1);
    app.add_option("--out-dir", cfg.out_dir, "directory for output files")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads (0: CUBESLICE_JOBS or hardware)")->capture_default_str();
    app.add_flag("-v,--verbose", cfg.verbose, "log progress to stderr");

    auto* prove = app.add_subcommand("prove", "run the full proof and write proof_report.json");
    add_pipeline_options(prove, cfg);
    prove->add_option("--n-tail", cfg.n_tail, "last dimension checked individually")->capture_default_str();
    prove->add_option("--R", cfg.R, "use this bound on |t^(7)| instead of sweeping");
    prove->add_option("--force-n0", cfg.force_n0, "skip the n0 search and certify from this n0");
    prove->add_flag("--skip-exact", cfg.skip_exact, "do not run the exact small-dimension check");
    prove->add_flag("!--no-timing", cfg.timing, "omit timing fields from the report");

    auto* bound_r = app.add_subcommand("bound-r", "sweep [0, a] and write bound_r.json");
    add_pipeline_options(bound_r, cfg);

    auto* n0 = app.add_subcommand("find-n0", "certify n0 and write n0_certificate.json");
    add_pipeline_options(n0, cfg);
    n0->add_option("--n-tail", cfg.n_tail, "last dimension checked individually")->capture_default_str();
    n0->add_option("--R", cfg.R, "use this bound on |t^(7)| instead of sweeping");

    auto* tables = app.add_subcommand("tables", "write table_x.csv and table_t.csv");
    add_pipeline_options(tables, cfg);

    auto* exact = app.add_subcommand("verify-exact", "decide steps 2..max-n-1 exactly, write verify_exact.csv");
    exact->add_option("--max-n", cfg.max_n, "largest dimension compared")->capture_default_str();

    auto* figures = app.add_subcommand("figures", "write volumes.csv, gaps.csv, remainder_widths.csv, integral_check.csv");
    figures->add_option("--max-n", cfg.max_n, "largest dimension")->capture_default_str();
    figures->add_option("--digits", cfg.digits, "fractional digits of decimal bounds")->capture_default_str();
    figures->add_option("--a", cfg.a, "integration cutoff for the integral check")->capture_default_str();
    figures->add_option("--panels", cfg.panels, "quadrature panels for the integral check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*prove) return cmd_prove(cfg);
        if (*bound_r) return cmd_bound_r(cfg);
        if (*n0) return cmd_find_n0(cfg);
        if (*tables) return cmd_tables(cfg);
        if (*exact) return cmd_verify_exact(cfg);
        if (*figures) return cmd_figures(cfg);
    } catch (const PreconditionError& e) {
        std::cerr << "cubeslice: invalid input: " << e.what() << '\n';
        return usage;
    } catch (const SubintervalFailure& e) {
        std::cerr << "cubeslice: subinterval " << e.index() << ' ' << e.piece().to_string() << ": " << e.what()
                  << '\n';
        return failed;
    } catch (const std::exception& e) {
        std::cerr << "cubeslice: " << e.what() << '\n';
        return failed;
    }
    return unexpected;
}
