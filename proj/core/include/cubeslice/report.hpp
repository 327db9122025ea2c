#ifndef CUBESLICE_REPORT_HPP
#define CUBESLICE_REPORT_HPP

#include <cubeslice/certifier.hpp>
#include <cubeslice/exact_volume.hpp>
#include <cubeslice/series_bounds.hpp>
#include <cubeslice/xt_pipeline.hpp>

#include <string>
#include <vector>

namespace cubeslice {

// Serializers for certificates (JSON) and tabular data (CSV). Every emitter
// is a pure function of its inputs; only fields named "seconds" carry timing.
// Intervals are written as [lo, hi] with round-trip precision.

std::string proof_report_json(const ProofReport& report, bool include_timing = true);
std::string sweep_json(const SweepResult& sweep, const PipelineConfig& cfg);
std::string gap_certificate_json(const GapCertificate& cert, const GapBoundParams& params);

// order,lo,hi with one row per Taylor order.
std::string coefficient_table_csv(const CoeffTable& table);

// n,increasing for each decided step.
std::string verify_exact_csv(const MonotonicityCertificate& cert);

// n,volume_lo,volume_hi,below_limit for n in [n_lo, n_hi], decimal bounds
// with `digits` fractional digits rounded outward.
std::string volumes_csv(int n_lo, int n_hi, int digits);

// n,gap_lo,gap_hi,increasing where gap = I(n+1) - I(n), for n in [n_lo, n_hi].
std::string gaps_csv(int n_lo, int n_hi, int digits);

// t,N,m,sinc_remainder,log1p_over_t_remainder. The last column is empty
// where the bound is undefined (t >= 1).
std::string remainder_widths_csv(const std::vector<double>& t_grid, const std::vector<int>& truncations, int m);

} // namespace cubeslice

#endif
