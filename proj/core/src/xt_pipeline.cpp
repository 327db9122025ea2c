#include <cubeslice/xt_pipeline.hpp>

#include <cubeslice/parallel.hpp>
#include <cubeslice/series_bounds.hpp>

#include <cmath>
#include <string>

namespace cubeslice {

namespace {

constexpr double kHalfPiLo = 0x1.921fb54442d18p+0;

struct PieceResult {
    TaylorSeries x;
    TaylorSeries t;
    bool direct_used;
    bool round_trip;
};

} // namespace

SubintervalFailure::SubintervalFailure(std::size_t index, Interval piece, const std::string& why)
    : Error("subinterval " + std::to_string(index) + " " + piece.to_string() + ": " + why),
      index_(index),
      piece_(piece) {}

void PipelineConfig::validate() const {
    if (!(a > 1.0 && a < kHalfPiLo)) throw PreconditionError("pipeline: a must satisfy 1 < a < pi/2");
    if (!(subdiv_width > 0.0)) throw PreconditionError("pipeline: subdivision width must be positive");
    if (order < 1 || order > 20) throw PreconditionError("pipeline: order must be in [1, 20]");
    if (N < order) throw PreconditionError("pipeline: truncation N must be >= order");
}

std::size_t PipelineConfig::piece_count() const {
    if (subdivision == Subdivision::Bisection) {
        std::size_t n = 1;
        while (a / static_cast<double>(n) > subdiv_width) n *= 2;
        return n;
    }
    const double q = a / subdiv_width;
    const double r = std::nearbyint(q);
    const double n = (std::fabs(q - r) <= 1e-9 * r) ? r : std::ceil(q);
    return static_cast<std::size_t>(std::max(1.0, n));
}

TaylorSeries x_series_scheme(const Interval& t0, const PipelineConfig& cfg) {
    const int K = cfg.order;
    const TaylorSeries t = TaylorSeries::variable(t0, K);
    const TaylorSeries F = sinc_quotient_series(t0, cfg.N, K);
    const TaylorSeries F2 = t * t * F;
    // g is expanded about the whole range of F2 over t0, so the composition
    // holds for every point of t0.
    const TaylorSeries g = log1p_over_t_series(F2[0], cfg.N, K);
    const TaylorSeries h = compose(g, F2) * scale(F, Interval(-6.0));
    return t * sqrt(h);
}

std::optional<TaylorSeries> x_series_direct(const Interval& t0, const PipelineConfig& cfg) {
    if (!cfg.use_direct || t0.lo() < cfg.direct_threshold || t0.lo() <= 0.0) return std::nullopt;
    const int K = cfg.order;
    std::vector<Interval> sin_coeffs(static_cast<std::size_t>(K) + 1);
    const Interval s = sin(t0);
    const Interval c = cos(t0);
    Interval inv_fact(1.0);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) inv_fact = inv_fact / Interval(static_cast<double>(k));
        const Interval d = (k % 4 == 0) ? s : (k % 4 == 1) ? c : (k % 4 == 2) ? -s : -c;
        sin_coeffs[static_cast<std::size_t>(k)] = d * inv_fact;
    }
    try {
        const TaylorSeries sin_t(t0, std::move(sin_coeffs));
        const TaylorSeries sinc = divide(sin_t, TaylorSeries::variable(t0, K));
        return sqrt(scale(log(sinc), Interval(-6.0)));
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

Interval x_at(const Interval& t, const PipelineConfig& cfg) {
    const Interval F = sinc_quotient_coeff(t, TruncationParams{cfg.N, 0});
    const Interval F2 = sqr(t) * F;
    const Interval g = log1p_over_t_coeff(F2, TruncationParams{cfg.N, 0});
    return t * sqrt(g * (Interval(-6.0) * F));
}

bool round_trip_encloses_identity(const TaylorSeries& t_series, const TaylorSeries& x_series) {
    const TaylorSeries id = compose(t_series, x_series);
    if (id.order() >= 1 && !id[1].contains(1.0)) return false;
    for (int k = 2; k <= id.order(); ++k) {
        if (!id[k].contains(0.0)) return false;
    }
    return true;
}

SweepResult sweep(const PipelineConfig& cfg) {
    cfg.validate();
    const std::vector<Interval> pieces = subdivide(Interval(0.0, cfg.a), cfg.piece_count());

    auto process = [&](std::size_t i) -> PieceResult {
        const Interval& piece = pieces[i];
        try {
            TaylorSeries x = x_series_scheme(piece, cfg);
            bool direct_used = false;
            if (auto direct = x_series_direct(piece, cfg)) {
                x = intersect(x, *direct);
                direct_used = true;
            }
            if (!x[1].strictly_positive()) {
                throw SubintervalFailure(i, piece, "x'(t) enclosure " + x[1].to_string() + " reaches zero");
            }
            TaylorSeries t = invert(x, piece);
            const bool rt = round_trip_encloses_identity(t, x);
            return PieceResult{std::move(x), std::move(t), direct_used, rt};
        } catch (const SubintervalFailure&) {
            throw;
        } catch (const Error& e) {
            throw SubintervalFailure(i, piece, e.what());
        }
    };

    std::vector<PieceResult> results = parallel_map<PieceResult>(pieces.size(), resolve_jobs(cfg.jobs), process);

    SweepResult out;
    const auto K = static_cast<std::size_t>(cfg.order);
    out.x_table.hull = std::vector<Interval>(results.front().x.coeffs().begin(), results.front().x.coeffs().end());
    out.t_table.hull = std::vector<Interval>(results.front().t.coeffs().begin(), results.front().t.coeffs().end());
    out.round_trip_ok = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const PieceResult& r = results[i];
        for (std::size_t k = 0; k <= K; ++k) {
            out.x_table.hull[k] = hull(out.x_table.hull[k], r.x.coeffs()[k]);
            out.t_table.hull[k] = hull(out.t_table.hull[k], r.t.coeffs()[k]);
        }
        out.x_table.rows.push_back({pieces[i], {r.x.coeffs().begin(), r.x.coeffs().end()}});
        out.t_table.rows.push_back({r.t.center(), {r.t.coeffs().begin(), r.t.coeffs().end()}});
        out.direct_successes += r.direct_used ? 1 : 0;
        out.round_trip_ok = out.round_trip_ok && r.round_trip;
    }

    Interval kfact(1.0);
    for (int k = 2; k <= cfg.order; ++k) kfact = kfact * Interval(static_cast<double>(k));
    const Interval top = kfact * Interval(out.t_table.hull[K].mag());
    out.derivative_bound = Interval::from_ordered(0.0, top.hi());
    return out;
}

} // namespace cubeslice
