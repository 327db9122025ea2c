#include <cubeslice/report.hpp>

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace cubeslice {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json iv(const Interval& x) { return ordered_json::array({x.lo(), x.hi()}); }

ordered_json iv_list(const std::vector<Interval>& xs) {
    ordered_json out = ordered_json::array();
    for (const auto& x : xs) out.push_back(iv(x));
    return out;
}

ordered_json tail_json(const TailCertificate& t) {
    return {{"n_tail", t.n_tail},
            {"gap_at_tail", iv(t.gap_at_tail)},
            {"error_to_main_ratio_sum", iv(t.ratio_sum)},
            {"step_ratio_power", iv(t.step_ratio_power)},
            {"step_ratio_exp", iv(t.step_ratio_exp)},
            {"valid", t.valid}};
}

ordered_json gap_json(const GapCertificate& g) {
    ordered_json bounds = ordered_json::array();
    for (std::size_t i = 0; i < g.bounds.size(); ++i) {
        bounds.push_back({{"n", g.n0 + static_cast<int>(i)}, {"bound", iv(g.bounds[i])}});
    }
    return {{"n0", g.n0}, {"n_tail", g.n_tail}, {"verdict", g.verdict}, {"tail", tail_json(g.tail)},
            {"bounds", bounds}};
}

ordered_json sweep_summary(const SweepResult& s) {
    return {{"R", s.R()},
            {"derivative_bound", iv(s.derivative_bound)},
            {"pieces", s.x_table.rows.size()},
            {"direct_successes", s.direct_successes},
            {"round_trip_ok", s.round_trip_ok},
            {"x_hull", iv_list(s.x_table.hull)},
            {"t_hull", iv_list(s.t_table.hull)}};
}

} // namespace

std::string proof_report_json(const ProofReport& r, bool include_timing) {
    ordered_json j;
    j["verdict"] = r.verdict;
    j["R"] = r.R ? ordered_json(*r.R) : ordered_json(nullptr);
    j["R_source"] = r.R_from_sweep ? "sweep" : (r.R ? "supplied" : "none");
    j["n0"] = r.n0 ? ordered_json(*r.n0) : ordered_json(nullptr);
    j["N_tail"] = r.n_tail;

    ordered_json stages = ordered_json::array();
    for (const auto& s : r.stages) {
        ordered_json e = {{"name", s.name}, {"ok", s.ok}, {"message", s.message}};
        if (include_timing) e["seconds"] = s.seconds;
        stages.push_back(e);
    }
    j["stages"] = stages;
    if (const StageReport* f = r.failed_stage()) j["failed_stage"] = f->name;

    j["coverage"] = {{"exact_from", r.coverage.exact_from},
                     {"exact_through", r.coverage.exact_through},
                     {"analytic_from", r.coverage.analytic_from},
                     {"spliced", r.coverage.spliced}};
    if (r.exact) {
        j["exact_range"] = {{"steps_from", r.exact->n_lo},
                            {"steps_through", r.exact->n_hi - 1},
                            {"verdict", r.exact->verdict}};
    }
    if (r.main_term) {
        j["main_term"] = {{"coefficient_1_over_n", r.main_term->c2.get_str()},
                          {"coefficient_1_over_n2", r.main_term->c4.get_str()},
                          {"sampled_n", r.main_term->sampled_n},
                          {"ok", r.main_term->ok}};
    }
    if (r.sweep) j["sweep"] = sweep_summary(*r.sweep);
    if (r.gap) j["gap_certificate"] = gap_json(*r.gap);
    return j.dump(2) + "\n";
}

std::string sweep_json(const SweepResult& s, const PipelineConfig& cfg) {
    ordered_json j;
    j["config"] = {{"a", cfg.a},
                   {"subdiv_width", cfg.subdiv_width},
                   {"subdivision", cfg.subdivision == Subdivision::Bisection ? "bisection" : "uniform"},
                   {"N", cfg.N},
                   {"order", cfg.order}};
    j["result"] = sweep_summary(s);
    return j.dump(2) + "\n";
}

std::string gap_certificate_json(const GapCertificate& g, const GapBoundParams& p) {
    ordered_json j;
    j["params"] = {{"a", p.a}, {"R", p.R}, {"sqrt_six_over_pi", iv(p.sqrt_six_over_pi)}};
    j["certificate"] = gap_json(g);
    return j.dump(2) + "\n";
}

std::string coefficient_table_csv(const CoeffTable& t) {
    std::ostringstream out;
    out << "order,lo,hi\n";
    for (std::size_t k = 0; k < t.hull.size(); ++k) {
        out << k << ',' << fmt(t.hull[k].lo()) << ',' << fmt(t.hull[k].hi()) << '\n';
    }
    return out.str();
}

std::string verify_exact_csv(const MonotonicityCertificate& c) {
    std::ostringstream out;
    out << "n,increasing\n";
    for (const auto& s : c.steps) out << s.n << ',' << (s.increasing ? "true" : "false") << '\n';
    return out.str();
}

std::string volumes_csv(int n_lo, int n_hi, int digits) {
    std::ostringstream out;
    out << "n,volume_lo,volume_hi,below_limit\n";
    const Interval pi_iv = pi();
    for (int n = n_lo; n <= n_hi; ++n) {
        const DecimalBounds b = volume_decimal(n, digits);
        out << n << ',' << b.lo << ',' << b.hi << ',' << (n >= 2 ? to_string(below_limit(n, pi_iv)) : "") << '\n';
    }
    return out.str();
}

std::string gaps_csv(int n_lo, int n_hi, int digits) {
    std::ostringstream out;
    out << "n,gap_lo,gap_hi,increasing\n";
    for (int n = n_lo; n <= n_hi; ++n) {
        const DecimalBounds b = gap_decimal(n, digits);
        out << n << ',' << b.lo << ',' << b.hi << ',' << (is_increasing_step(n) ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string remainder_widths_csv(const std::vector<double>& t_grid, const std::vector<int>& truncations, int m) {
    std::ostringstream out;
    out << "t,N,m,sinc_remainder,log1p_over_t_remainder\n";
    for (int N : truncations) {
        for (double t : t_grid) {
            const RemainderWidths w = remainder_widths({N, m}, t);
            out << fmt(t) << ',' << N << ',' << m << ',' << fmt(w.sinc) << ',';
            if (w.log1p_over_t) out << fmt(*w.log1p_over_t);
            out << '\n';
        }
    }
    return out.str();
}

} // namespace cubeslice
