#include <cubeslice/certifier.hpp>

#include <cubeslice/parallel.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <string>

namespace cubeslice {

namespace {

Interval to_iv(int n) { return Interval(static_cast<double>(n)); }

// n^(-5/2) = 1 / (n^2 sqrt n)
Interval inverse_power_five_halves(int n) {
    const Interval x = to_iv(n);
    return recip(sqr(x) * sqrt(x));
}

} // namespace

GapBoundParams GapBoundParams::with_R(double R, double a) {
    GapBoundParams p;
    p.a = a;
    p.R = R;
    p.sqrt_six_over_pi = cubeslice::sqrt_six_over_pi();
    return p;
}

void GapBoundParams::validate() const {
    if (!(a > 1.0)) throw PreconditionError("gap bound: a must exceed 1");
    if (!(R >= 0.0) || !std::isfinite(R)) throw PreconditionError("gap bound: R must be finite and nonnegative");
    if (!(sqrt_six_over_pi.lo() > 0.0)) throw PreconditionError("gap bound: sqrt(6/pi) enclosure not set");
}

Interval sqrt_six_over_pi() { return sqrt(Interval(6.0) / pi()); }

Interval e1(int n, const GapBoundParams& p) { return Interval(2.0) * pow_int(Interval(p.a), -n); }

Interval e2(int n, const GapBoundParams& p) {
    return Interval(p.R) / Interval(2.0) * inverse_power_five_halves(n);
}

Interval e3(int n, const GapBoundParams&) {
    return Interval(5.0) * exp(-to_iv(n) / Interval(6.0));
}

Interval main_term(int n, const GapBoundParams& p) {
    return p.sqrt_six_over_pi * Interval(3.0) / (Interval(20.0) * to_iv(n) * to_iv(n + 1));
}

Interval gap_lower_bound(int n, const GapBoundParams& p) {
    if (n < 3) throw PreconditionError("gap_lower_bound: n must be >= 3");
    return main_term(n, p) - Interval(4.0) * pow_int(Interval(p.a), -n) -
           Interval(p.R) * inverse_power_five_halves(n) - Interval(10.0) * exp(-to_iv(n) / Interval(6.0));
}

TailCertificate tail_certificate(int n_tail, const GapBoundParams& p) {
    p.validate();
    TailCertificate c;
    c.n_tail = n_tail;
    c.gap_at_tail = gap_lower_bound(n_tail, p);
    const Interval errors = Interval(4.0) * pow_int(Interval(p.a), -n_tail) +
                            Interval(p.R) * inverse_power_five_halves(n_tail) +
                            Interval(10.0) * exp(-to_iv(n_tail) / Interval(6.0));
    c.ratio_sum = errors / main_term(n_tail, p);
    const Interval growth = to_iv(n_tail + 2) / to_iv(n_tail);
    c.step_ratio_power = growth / Interval(p.a);
    c.step_ratio_exp = growth * exp(Interval(-1.0) / Interval(6.0));
    c.valid = c.gap_at_tail.strictly_positive() && c.ratio_sum.hi() < 1.0 && c.step_ratio_power.hi() <= 1.0 &&
              c.step_ratio_exp.hi() <= 1.0;
    return c;
}

GapCertificate certify_from(const GapBoundParams& p, int n0, int n_tail) {
    p.validate();
    if (n_tail < 30) throw PreconditionError("certify: N_tail must be >= 30");
    if (n0 < 3 || n0 > n_tail) throw PreconditionError("certify: need 3 <= n0 <= N_tail");
    GapCertificate g;
    g.n0 = n0;
    g.n_tail = n_tail;
    bool all_positive = true;
    for (int n = n0; n <= n_tail; ++n) {
        g.bounds.push_back(gap_lower_bound(n, p));
        all_positive = all_positive && g.bounds.back().strictly_positive();
    }
    g.tail = tail_certificate(n_tail, p);
    g.verdict = all_positive && g.tail.valid;
    return g;
}

GapCertificate find_n0(const GapBoundParams& p, int n_tail) {
    p.validate();
    if (n_tail < 30) throw PreconditionError("find_n0: N_tail must be >= 30");
    if (!gap_lower_bound(n_tail, p).strictly_positive()) {
        throw Error("find_n0: gap bound is not positive at N_tail = " + std::to_string(n_tail) +
                    " (R = " + std::to_string(p.R) + "); increase N_tail or supply a smaller R");
    }
    int n0 = n_tail;
    while (n0 > 3 && gap_lower_bound(n0 - 1, p).strictly_positive()) --n0;
    GapCertificate g = certify_from(p, n0, n_tail);
    if (!g.tail.valid) throw Error("find_n0: tail certificate at N_tail = " + std::to_string(n_tail) + " failed");
    return g;
}

MainTermCheck main_term_coeffs_check() {
    // t(x) = x - x^3/60 - 13 x^5/151200 + ..., so t'(x) = sum_p c_p x^p.
    const ExactRational t_coeffs[] = {0, 1, 0, ExactRational(-1, 60), 0, ExactRational(-13, 151200)};
    ExactRational c[5];
    for (int p = 0; p <= 4; ++p) c[p] = ExactRational(p + 1) * t_coeffs[p + 1];

    // (2 sqrt n / pi) int_0^inf e^(-n x^2/6) x^p dx = sqrt(6/pi) (3/n)^(p/2) (p-1)!!  (p even)
    // so the coefficient of n^(-p/2) is c_p 3^(p/2) (p-1)!!.
    auto moment_factor = [](int p) {
        ExactRational f = 1;
        for (int i = 0; i < p / 2; ++i) f *= 3;
        for (int j = p - 1; j > 1; j -= 2) f *= j;
        return f;
    };

    MainTermCheck r;
    r.c2 = c[2] * moment_factor(2);
    r.c4 = c[4] * moment_factor(4);
    const bool exact_ok = c[0] == 1 && c[1] == 0 && c[3] == 0 && c[2] == ExactRational(-1, 20) &&
                          c[4] == ExactRational(-13, 30240) && r.c2 == ExactRational(-3, 20) &&
                          r.c4 == ExactRational(-13, 1120);

    // Interval route: integrate each moment separately and compare.
    bool interval_ok = true;
    const Interval pi_iv = pi();
    for (int n : {3, 10, 50, 145, 1000}) {
        r.sampled_n.push_back(n);
        const Interval ni = to_iv(n);
        const Interval sigma2 = Interval(3.0) / ni;
        const Interval half_gauss = Interval(0.5) * sqrt(Interval(6.0) * pi_iv / ni);
        Interval lhs(0.0);
        for (int p : {0, 2, 4}) {
            Interval moment = half_gauss * pow_int(sigma2, p / 2);
            for (int j = p - 1; j > 1; j -= 2) moment = moment * to_iv(j);
            lhs = lhs + enclose(c[p]) * moment;
        }
        lhs = lhs * Interval(2.0) * sqrt(ni) / pi_iv;
        const Interval rhs = sqrt_six_over_pi() * (Interval(1.0) - Interval(3.0) / (Interval(20.0) * ni) -
                                                   Interval(13.0) / (Interval(1120.0) * sqr(ni)));
        interval_ok = interval_ok && overlaps(lhs, rhs);
    }
    r.ok = exact_ok && interval_ok;
    return r;
}

const StageReport* ProofReport::failed_stage() const {
    for (const auto& s : stages) {
        if (!s.ok) return &s;
    }
    return nullptr;
}

namespace {

// Runs one stage, records its outcome, and returns whether it succeeded.
bool run_stage(ProofReport& report, const std::string& name, const std::function<std::string()>& body) {
    StageReport s;
    s.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        s.message = body();
        s.ok = true;
    } catch (const std::exception& e) {
        s.ok = false;
        s.message = e.what();
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.stages.push_back(std::move(s));
    return report.stages.back().ok;
}

} // namespace

ProofReport full_proof(const ProofConfig& cfg) {
    ProofReport report;
    report.n_tail = cfg.n_tail;

    bool ok = run_stage(report, "bound_r", [&]() -> std::string {
        if (cfg.R_override) {
            report.R = *cfg.R_override;
            return "R supplied by caller";
        }
        PipelineConfig pc = cfg.pipeline;
        if (pc.jobs == 0) pc.jobs = cfg.jobs;
        report.sweep = sweep(pc);
        report.R = report.sweep->R();
        report.R_from_sweep = true;
        if (!report.sweep->round_trip_ok) throw Error("inverse series round trip failed on some subinterval");
        if (!(*report.R < 1.0)) throw Error("R = " + std::to_string(*report.R) + " fails the sanity bound R < 1");
        return "R <= " + std::to_string(*report.R);
    });

    ok = run_stage(report, "main_term", [&]() -> std::string {
        report.main_term = main_term_coeffs_check();
        if (!report.main_term->ok) throw Error("main-term constants do not reproduce 3/20 and 13/1120");
        return "constants 3/20 and 13/1120 re-derived";
    }) && ok;

    if (ok) {
        ok = run_stage(report, "find_n0", [&]() -> std::string {
            const GapBoundParams p = GapBoundParams::with_R(*report.R, cfg.pipeline.a);
            report.gap = cfg.force_n0 ? certify_from(p, *cfg.force_n0, cfg.n_tail) : find_n0(p, cfg.n_tail);
            report.n0 = report.gap->n0;
            if (!report.gap->verdict) {
                throw Error("gap bound not certified positive from n0 = " + std::to_string(report.gap->n0));
            }
            return "n0 = " + std::to_string(report.gap->n0);
        });
    }

    if (ok && cfg.run_exact) {
        ok = run_stage(report, "exact_range", [&]() -> std::string {
            report.exact = verify_range(3, *report.n0 + 1, cfg.jobs == 0 ? resolve_jobs(0) : cfg.jobs);
            if (!report.exact->verdict) throw Error("exact comparison found a non-increasing step");
            return "steps 3.." + std::to_string(*report.n0) + " increasing";
        });
    }

    ok = run_stage(report, "splice", [&]() -> std::string {
        Coverage& c = report.coverage;
        if (!report.n0) throw Error("no analytic range");
        c.analytic_from = *report.n0;
        if (!report.exact) throw Error("no exact range; small dimensions are unverified");
        c.exact_from = report.exact->n_lo;
        c.exact_through = report.exact->n_hi - 1;
        c.spliced = c.exact_from == 3 && c.exact_through >= c.analytic_from;
        if (!c.spliced) throw Error("exact and analytic ranges leave a gap");
        return "exact 3.." + std::to_string(c.exact_through) + ", analytic from " + std::to_string(c.analytic_from);
    }) && ok;

    report.verdict = ok && report.failed_stage() == nullptr;
    return report;
}

} // namespace cubeslice
