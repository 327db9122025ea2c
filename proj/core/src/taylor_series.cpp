#include <cubeslice/taylor_series.hpp>

#include <cmath>
#include <functional>
#include <string>

namespace cubeslice {

namespace {

constexpr int kMaxPartitionOrder = 20;

Interval from_u64(std::uint64_t u) {
    const double d = static_cast<double>(u);
    if (static_cast<std::uint64_t>(d) == u) return Interval(d);
    return Interval::from_ordered(rounding::next_down(d), rounding::next_up(d));
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<Partition> enumerate_partitions(int k) {
    std::vector<Partition> out;
    std::vector<int> b(static_cast<std::size_t>(k), 0);
    // Choose b_i for i = k, k-1, ..., 1 with the remaining sum fixed.
    std::function<void(int, int)> rec = [&](int part, int remaining) {
        if (part == 1) {
            b[0] = remaining;
            Partition p;
            p.multiplicity = b;
            for (int v : b) p.parts += v;
            std::uint64_t denom = 1;
            for (int v : b) denom *= factorial_u64(v);
            p.multinomial = factorial_u64(p.parts) / denom;
            out.push_back(std::move(p));
            return;
        }
        for (int count = remaining / part; count >= 0; --count) {
            b[static_cast<std::size_t>(part - 1)] = count;
            rec(part - 1, remaining - count * part);
        }
        b[static_cast<std::size_t>(part - 1)] = 0;
    };
    rec(k, k);
    return out;
}

const std::vector<std::vector<Partition>>& partition_table() {
    static const std::vector<std::vector<Partition>> table = [] {
        std::vector<std::vector<Partition>> t(kMaxPartitionOrder + 1);
        for (int k = 1; k <= kMaxPartitionOrder; ++k) t[static_cast<std::size_t>(k)] = enumerate_partitions(k);
        return t;
    }();
    return table;
}

Interval common_center(const TaylorSeries& s, const TaylorSeries& r) {
    if (s.order() != r.order()) {
        throw PreconditionError("series orders differ: " + std::to_string(s.order()) + " vs " +
                                std::to_string(r.order()));
    }
    auto c = try_intersect(s.center(), r.center());
    if (!c) {
        throw PreconditionError("series centers " + s.center().to_string() + " and " +
                                r.center().to_string() + " do not intersect");
    }
    return *c;
}

} // namespace

std::span<const Partition> partitions(int k) {
    if (k < 1 || k > kMaxPartitionOrder) {
        throw PreconditionError("partitions: k must be in [1, " + std::to_string(kMaxPartitionOrder) + "]");
    }
    return partition_table()[static_cast<std::size_t>(k)];
}

TaylorSeries::TaylorSeries(Interval center, std::vector<Interval> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("a Taylor series needs at least one coefficient");
    for (const auto& c : coeffs_) {
        if (!std::isfinite(c.lo()) || !std::isfinite(c.hi())) {
            throw DomainError("non-finite Taylor coefficient " + c.to_string());
        }
    }
}

TaylorSeries TaylorSeries::constant(const Interval& center, const Interval& value, int order) {
    if (order < 0) throw PreconditionError("negative series order");
    std::vector<Interval> c(static_cast<std::size_t>(order) + 1, Interval(0.0));
    c[0] = value;
    return TaylorSeries(center, std::move(c));
}

TaylorSeries TaylorSeries::variable(const Interval& center, int order) {
    TaylorSeries s = constant(center, center, order);
    if (order >= 1) s.coeffs_[1] = Interval(1.0);
    return s;
}

Interval TaylorSeries::derivative(int m) const {
    return from_u64(factorial_u64(m)) * (*this)[m];
}

TaylorSeries operator+(const TaylorSeries& s, const TaylorSeries& r) {
    const Interval c = common_center(s, r);
    std::vector<Interval> out(s.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = s.coeffs()[k] + r.coeffs()[k];
    return TaylorSeries(c, std::move(out));
}

TaylorSeries operator-(const TaylorSeries& s, const TaylorSeries& r) {
    const Interval c = common_center(s, r);
    std::vector<Interval> out(s.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = s.coeffs()[k] - r.coeffs()[k];
    return TaylorSeries(c, std::move(out));
}

TaylorSeries operator*(const TaylorSeries& s, const TaylorSeries& r) {
    const Interval c = common_center(s, r);
    const int order = s.order();
    std::vector<Interval> out(static_cast<std::size_t>(order) + 1, Interval(0.0));
    for (int k = 0; k <= order; ++k) {
        Interval acc(0.0);
        for (int i = 0; i <= k; ++i) acc = acc + s[i] * r[k - i];
        out[static_cast<std::size_t>(k)] = acc;
    }
    return TaylorSeries(c, std::move(out));
}

TaylorSeries scale(const TaylorSeries& s, const Interval& factor) {
    std::vector<Interval> out(s.coeffs().begin(), s.coeffs().end());
    for (auto& c : out) c = c * factor;
    return TaylorSeries(s.center(), std::move(out));
}

TaylorSeries divide(const TaylorSeries& s, const TaylorSeries& r) {
    const Interval c = common_center(s, r);
    if (r[0].contains_zero()) {
        throw DomainError("series division: leading coefficient " + r[0].to_string() + " contains zero");
    }
    const int order = s.order();
    std::vector<Interval> q(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Interval acc = s[k];
        for (int j = 0; j < k; ++j) acc = acc - q[static_cast<std::size_t>(j)] * r[k - j];
        q[static_cast<std::size_t>(k)] = acc / r[0];
    }
    return TaylorSeries(c, std::move(q));
}

TaylorSeries sqrt(const TaylorSeries& s) {
    if (!(s[0].lo() > 0.0)) {
        throw DomainError("series sqrt: leading coefficient " + s[0].to_string() +
                          " is not bounded away from zero");
    }
    const int order = s.order();
    std::vector<Interval> r(static_cast<std::size_t>(order) + 1);
    r[0] = sqrt(s[0]);
    const Interval two_r0 = Interval(2.0) * r[0];
    for (int k = 1; k <= order; ++k) {
        Interval acc = s[k];
        for (int j = 1; j <= k - 1; ++j) acc = acc - r[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = acc / two_r0;
    }
    return TaylorSeries(s.center(), std::move(r));
}

TaylorSeries log(const TaylorSeries& s) {
    if (!(s[0].lo() > 0.0)) {
        throw DomainError("series log: leading coefficient " + s[0].to_string() + " is not positive");
    }
    const int order = s.order();
    std::vector<Interval> l(static_cast<std::size_t>(order) + 1);
    l[0] = ln(s[0]);
    for (int k = 1; k <= order; ++k) {
        Interval acc(0.0);
        for (int j = 1; j <= k - 1; ++j) {
            acc = acc + Interval(static_cast<double>(j)) * l[static_cast<std::size_t>(j)] * s[k - j];
        }
        l[static_cast<std::size_t>(k)] = (s[k] - acc / Interval(static_cast<double>(k))) / s[0];
    }
    return TaylorSeries(s.center(), std::move(l));
}

TaylorSeries compose(const TaylorSeries& g, const TaylorSeries& f) {
    if (g.order() != f.order()) throw PreconditionError("compose: series orders differ");
    if (!g.center().contains(f[0])) {
        throw PreconditionError("compose: outer series center " + g.center().to_string() +
                                " does not contain inner value range " + f[0].to_string());
    }
    const int order = f.order();
    std::vector<Interval> out(static_cast<std::size_t>(order) + 1);
    out[0] = g[0];
    for (int k = 1; k <= order; ++k) {
        Interval acc(0.0);
        for (const Partition& p : partitions(k)) {
            Interval term = from_u64(p.multinomial) * g[p.parts];
            for (int i = 1; i <= k; ++i) {
                const int b = p.multiplicity[static_cast<std::size_t>(i - 1)];
                if (b > 0) term = term * pow_int(f[i], b);
            }
            acc = acc + term;
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return TaylorSeries(f.center(), std::move(out));
}

TaylorSeries invert(const TaylorSeries& x, const Interval& t0) {
    const int order = x.order();
    if (order >= 1 && x[1].contains_zero()) {
        throw DomainError("invert: first-order coefficient " + x[1].to_string() + " contains zero");
    }
    std::vector<Interval> t(static_cast<std::size_t>(order) + 1);
    t[0] = t0;
    if (order >= 1) {
        const Interval inv_x1 = recip(x[1]);
        t[1] = inv_x1;
        for (int k = 2; k <= order; ++k) {
            Interval acc(0.0);
            for (const Partition& p : partitions(k)) {
                if (p.parts == k) continue;
                const int b1 = p.multiplicity[0];
                Interval term = from_u64(p.multinomial) * t[static_cast<std::size_t>(p.parts)] *
                                pow_int(inv_x1, k - b1);
                for (int i = 2; i <= k; ++i) {
                    const int b = p.multiplicity[static_cast<std::size_t>(i - 1)];
                    if (b > 0) term = term * pow_int(x[i], b);
                }
                acc = acc + term;
            }
            t[static_cast<std::size_t>(k)] = -acc;
        }
    }
    return TaylorSeries(x[0], std::move(t));
}

Interval evaluate(const TaylorSeries& s, const Interval& dx) {
    Interval acc = s[s.order()];
    for (int k = s.order() - 1; k >= 0; --k) acc = acc * dx + s[k];
    return acc;
}

TaylorSeries intersect(const TaylorSeries& a, const TaylorSeries& b) {
    const Interval c = common_center(a, b);
    std::vector<Interval> out(a.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        auto r = try_intersect(a.coeffs()[k], b.coeffs()[k]);
        if (!r) {
            throw SoundnessError("coefficient " + std::to_string(k) + " enclosures " +
                                 a.coeffs()[k].to_string() + " and " + b.coeffs()[k].to_string() +
                                 " are disjoint");
        }
        out[k] = *r;
    }
    return TaylorSeries(c, std::move(out));
}

} // namespace cubeslice
