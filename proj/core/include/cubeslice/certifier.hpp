#ifndef CUBESLICE_CERTIFIER_HPP
#define CUBESLICE_CERTIFIER_HPP

#include <cubeslice/exact_volume.hpp>
#include <cubeslice/interval.hpp>
#include <cubeslice/xt_pipeline.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cubeslice {

// Inputs of the Laplace-method lower bound
//
//   I(n+1) - I(n) > sqrt(6/pi) 3/(20 n (n+1)) - 4 a^-n - R n^-5/2 - 10 e^-n/6
//
// where R bounds |t^(7)| on [0, x(a)].
struct GapBoundParams {
    double a = 1.1;
    double R = 0.0;                 // upper bound on |t^(7)|
    Interval sqrt_six_over_pi;      // enclosure of sqrt(6/pi)

    static GapBoundParams with_R(double R, double a = 1.1);
    void validate() const;
};

Interval sqrt_six_over_pi();

// Tail of the integral beyond a: 2 a^-n.
Interval e1(int n, const GapBoundParams& p);
// Lagrange remainder of t'(x) after the x^4 term: (R/2) n^-5/2.
Interval e2(int n, const GapBoundParams& p);
// Gaussian tail of the polynomial part beyond x(a) > 1: 5 e^-n/6.
Interval e3(int n, const GapBoundParams& p);

// sqrt(6/pi) * 3 / (20 n (n+1)).
Interval main_term(int n, const GapBoundParams& p);

// Enclosure of the right-hand side of the bound above; n >= 3.
Interval gap_lower_bound(int n, const GapBoundParams& p);

// Positivity of the bound for every n >= n_tail, from checks at n_tail only:
// the three error/main ratios sum below 1 at n_tail, and each ratio is
// nonincreasing from there on. For c*beta^n terms the step ratio is
// beta (n+2)/n, decreasing in n, so checking it at n_tail suffices; the
// R term's ratio is n^-1/2 (1 + 1/n), decreasing for all n.
struct TailCertificate {
    int n_tail = 0;
    Interval gap_at_tail;
    Interval ratio_sum;           // (4a^-n + R n^-5/2 + 10 e^-n/6) / main, at n_tail
    Interval step_ratio_power;    // (n+2)/n / a
    Interval step_ratio_exp;      // (n+2)/n * e^-1/6
    bool valid = false;
};

TailCertificate tail_certificate(int n_tail, const GapBoundParams& p);

struct GapCertificate {
    int n0 = 0;
    int n_tail = 0;
    std::vector<Interval> bounds; // gap_lower_bound(n) for n = n0 .. n_tail
    TailCertificate tail;
    bool verdict = false;
};

// Smallest n0 <= n_tail with a positive bound on all of [n0, n_tail], plus the
// tail certificate at n_tail. Requires n_tail >= 30; throws Error if the
// bound is not positive at n_tail.
GapCertificate find_n0(const GapBoundParams& p, int n_tail);

// Checks that the bound is positive on [n0, n_tail] and certifies the tail,
// for a caller-chosen n0.
GapCertificate certify_from(const GapBoundParams& p, int n0, int n_tail);

// Re-derives the Gaussian main-term constants 3/20 and 13/1120 from the
// coefficients of t(x) and half-line Gaussian moments, exactly, then checks
// the interval evaluation at a few n.
struct MainTermCheck {
    ExactRational c2;  // coefficient of 1/n   (expected -3/20)
    ExactRational c4;  // coefficient of 1/n^2 (expected -13/1120)
    std::vector<int> sampled_n;
    bool ok = false;
};

MainTermCheck main_term_coeffs_check();

struct ProofConfig {
    PipelineConfig pipeline;
    int n_tail = 160;
    std::optional<double> R_override; // skip the sweep and use this R
    std::optional<int> force_n0;      // skip the n0 search
    bool run_exact = true;
    unsigned jobs = 0;
};

struct StageReport {
    std::string name;
    bool ok = false;
    std::string message;
    double seconds = 0.0;
};

// {3..exact_through} decided exactly, {analytic_from, ...} by the bound.
struct Coverage {
    int exact_from = 0;
    int exact_through = 0;
    int analytic_from = 0;
    bool spliced = false; // exact_from == 3 and exact_through >= analytic_from
};

struct ProofReport {
    std::optional<double> R;
    bool R_from_sweep = false;
    std::optional<SweepResult> sweep;
    std::optional<int> n0;
    int n_tail = 0;
    std::optional<GapCertificate> gap;
    std::optional<MonotonicityCertificate> exact;
    std::optional<MainTermCheck> main_term;
    Coverage coverage;
    std::vector<StageReport> stages;
    bool verdict = false;

    const StageReport* failed_stage() const;
};

ProofReport full_proof(const ProofConfig& cfg);

} // namespace cubeslice

#endif
