#include "quaddyn/arch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "quaddyn/rational.hpp"

namespace quaddyn {

namespace {

constexpr double kSlack = 1e-9;  // double-rounding allowance

bool finite_cx(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double escape_radius(Cx c) { return std::max(2.0, std::abs(c)) + 1.0; }

double uniform01(std::uint64_t& state) {
    return (double)(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

EscCore escape_rate_core(Cx c, Cx z, double tol, int cap) {
    const double R = escape_radius(c);
    const double ac = std::abs(c);
    EscCore out;
    for (int n = 0; n <= cap; n++) {
        if (std::abs(z) > R) {
            // lambda = 2^{-n} log|z_n| + sum_{k>=n} 2^{-(k+1)} log|1 + c/z_k^2|
            double lam = std::ldexp(std::log(std::abs(z)), -n);
            double tail_bound;
            int k = n;
            for (;;) {
                double az2 = std::abs(z) * std::abs(z);
                double w = ac / az2;
                // Remaining tail from step k: the orbit at least doubles
                // past R, so the terms decay faster than 8^{-j}.
                tail_bound = std::ldexp(w / (1.0 - w), -(k + 1)) * (8.0 / 7.0);
                if (tail_bound < 0.25 * tol || az2 > 1e200) break;
                lam += std::ldexp(std::log(std::abs(1.0 + c / (z * z))), -(k + 1));
                z = z * z + c;
                k++;
            }
            double err = tail_bound + kSlack;
            out.lo = std::max(0.0, lam - err);
            out.hi = lam + err;
            out.escaped = true;
            out.iterations = k;
            return out;
        }
        z = z * z + c;
    }
    double hi = std::ldexp(std::log(R + 1.0), -cap);
    if (hi == 0.0) hi = std::numeric_limits<double>::denorm_min();
    out.lo = 0.0;
    out.hi = hi;
    out.escaped = false;
    out.iterations = cap;
    return out;
}

EscapeValue escape_rate_arch(Cx c, Cx z, double tol, int cap) {
    if (!finite_cx(c) || !finite_cx(z)) throw std::domain_error("escape_rate_arch: non-finite input");
    if (!(tol > 0)) throw std::domain_error("escape_rate_arch: tol must be > 0");
    EscCore e = escape_rate_core(c, z, tol, cap);
    EscapeValue v;
    v.value = Interval::hull(e.lo, e.hi);
    v.escaped = e.escaped;
    v.iterations_used = e.iterations;
    return v;
}

namespace {

struct Chain {
    Cx z;
    Cx c;
    std::uint64_t rng;

    explicit Chain(Cx c_, std::uint64_t seed) : z(2.0, 0.0), c(c_), rng(seed) {}

    Cx step() {
        Cx w = std::sqrt(z - c);
        if (splitmix64(rng) & 1) w = -w;
        z = w;
        return z;
    }
};

}  // namespace

std::vector<Cx> sample_equilibrium(Cx c, long count, long burn_in, std::uint64_t seed) {
    if (count < 1) throw std::domain_error("sample_equilibrium: count must be >= 1");
    if (burn_in < 16) throw std::domain_error("sample_equilibrium: burn_in must be >= 16");
    if (!finite_cx(c)) throw std::domain_error("sample_equilibrium: non-finite c");
    Chain ch(c, mix_seed(seed, 0x5a3));
    for (long i = 0; i < burn_in; i++) ch.step();
    std::vector<Cx> out;
    out.reserve(count);
    for (long i = 0; i < count; i++) out.push_back(ch.step());
    return out;
}

namespace {

struct WorkerResult {
    double sum = 0;
    double halfwidth_sum = 0;
    std::vector<double> batch_means;
};

constexpr long kBatchLen = 250;
constexpr int kMcCap = 48;
constexpr double kMcTol = 1e-9;

void mc_worker(Cx c_eval, Cx c_sample, long n_samples, std::uint64_t stream_seed,
               WorkerResult* out) {
    Chain ch(c_sample, stream_seed);
    for (int i = 0; i < 64; i++) ch.step();
    double sum = 0, batch_sum = 0;
    long in_batch = 0;
    double hw = 0;
    for (long i = 0; i < n_samples; i++) {
        Cx z = ch.step();
        EscCore e = escape_rate_core(c_eval, z, kMcTol, kMcCap);
        double lam = e.mid();
        sum += lam;
        hw += e.halfwidth();
        batch_sum += lam;
        if (++in_batch == kBatchLen) {
            out->batch_means.push_back(batch_sum / kBatchLen);
            batch_sum = 0;
            in_batch = 0;
        }
    }
    out->sum = sum;
    out->halfwidth_sum = hw;
}

MCEstimate finish(std::vector<WorkerResult>& results, long samples, std::uint64_t seed) {
    double sum = 0, hw = 0;
    std::vector<double> batches;
    for (auto& r : results) {
        sum += r.sum;
        hw += r.halfwidth_sum;
        batches.insert(batches.end(), r.batch_means.begin(), r.batch_means.end());
    }
    MCEstimate est;
    est.mean = sum / (double)samples;
    est.mean_halfwidth = hw / (double)samples;
    est.samples = samples;
    est.seed = seed;
    if (batches.size() >= 2) {
        double var = 0;
        for (double b : batches) var += (b - est.mean) * (b - est.mean);
        var /= (double)(batches.size() - 1);
        est.std_err = std::sqrt(var / (double)batches.size());
    }
    return est;
}

MCEstimate one_sided(Cx c_eval, Cx c_sample, long samples, std::uint64_t seed,
                     int workers, std::uint64_t dir_salt) {
    if (workers < 1) workers = 1;
    long base = samples / workers, rem = samples % workers;
    std::vector<WorkerResult> results(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; w++) {
        long n = base + (w < rem ? 1 : 0);
        std::uint64_t s = mix_seed(seed, (dir_salt << 32) | (std::uint64_t)w);
        if (workers == 1)
            mc_worker(c_eval, c_sample, n, s, &results[w]);
        else
            threads.emplace_back(mc_worker, c_eval, c_sample, n, s, &results[w]);
    }
    for (auto& t : threads) t.join();
    return finish(results, samples, seed);
}

}  // namespace

MCEstimate arch_energy_mc_one_sided(Cx c_eval, Cx c_sample, long samples,
                                    std::uint64_t seed, int workers) {
    if (samples < 100) throw std::domain_error("arch_energy_mc: samples must be >= 100");
    return one_sided(c_eval, c_sample, samples, seed, workers, 1);
}

MCEstimate arch_energy_mc(Cx c1, Cx c2, long samples, std::uint64_t seed, int workers) {
    if (samples < 100) throw std::domain_error("arch_energy_mc: samples must be >= 100");
    if (!finite_cx(c1) || !finite_cx(c2)) throw std::domain_error("arch_energy_mc: non-finite input");
    MCEstimate a = one_sided(c1, c2, samples, seed, workers, 1);
    MCEstimate b = one_sided(c2, c1, samples, seed, workers, 2);
    MCEstimate est;
    est.mean = 0.5 * (a.mean + b.mean);
    est.std_err = 0.5 * std::sqrt(a.std_err * a.std_err + b.std_err * b.std_err);
    est.mean_halfwidth = 0.5 * (a.mean_halfwidth + b.mean_halfwidth);
    est.samples = samples;
    est.seed = seed;
    return est;
}

namespace {

// Midpoint rule at n nodes; also accumulates the mean lambda half-width.
std::pair<double, double> circle_midpoint(Cx c, long n) {
    double sum = 0, hw = 0;
    for (long j = 0; j < n; j++) {
        double th = 2.0 * M_PI * ((double)j + 0.5) / (double)n;
        EscCore e = escape_rate_core(c, Cx(std::cos(th), std::sin(th)), 1e-10, 64);
        sum += e.mid();
        hw += e.halfwidth();
    }
    return {sum / (double)n, hw / (double)n};
}

}  // namespace

Interval energy_circle_oracle(Cx c, long nodes) {
    if (nodes < 64) throw std::domain_error("energy_circle_oracle: nodes must be >= 64");
    auto [fine, hw] = circle_midpoint(c, nodes);
    auto [coarse, hw2] = circle_midpoint(c, nodes / 2);
    (void)hw2;
    double err = 2.0 * std::abs(fine - coarse) + hw + kSlack;
    return Interval::hull(std::max(0.0, fine - err), fine + err);
}

ArchBounds arch_bounds_thm(Cx c1, Cx c2) {
    double dmax = std::max(std::abs(c1), std::abs(c2));
    double d = std::abs(c1 - c2);
    ArchBounds b;
    b.lower = std::max(0.0, std::log(d)) / 16.0 - std::log(2000.0) / 16.0;
    if (d == 0) b.lower = -std::log(2000.0) / 16.0;
    b.upper = 0.5 * std::max(0.0, std::log(dmax)) + std::log(8.0);
    if (dmax == 0) b.upper = std::log(8.0);
    if (dmax >= 1000.0 && d >= 3.0 / std::sqrt(dmax))
        b.strong_lower = std::log(dmax) / 64.0;
    return b;
}

ArchEpsilonBound arch_epsilon_bound(Cx c, double r, double L) {
    if (!(r > 0 && r < 0.25)) throw std::domain_error("arch_epsilon_bound: need 0 < r < 1/4");
    if (!(L >= 27)) throw std::domain_error("arch_epsilon_bound: need L >= 27");
    double m = std::max(std::abs(c), L);
    ArchEpsilonBound out;
    out.radius = std::pow(m, -3.0 * std::log(1.0 / r));
    out.bound = r * std::log(m);
    return out;
}

double prop92_lower(Cx c1, Cx c2, double M, double s) {
    if (!(M >= 1000)) throw std::domain_error("prop92_lower: need M >= 1000");
    if (!(s >= M * M)) throw std::domain_error("prop92_lower: need s >= M^2");
    if (std::abs(c1) > M || std::abs(c2) > M)
        throw std::domain_error("prop92_lower: need max{|c1|,|c2|} <= M");
    double d = std::abs(c1 - c2);
    return d * d / (32.0 * std::pow(s, 4)) - 1.17 * std::pow(M, 3) / std::pow(s, 6);
}

namespace {

std::vector<Cx> zeros_of_iterate(Cx c, int n) {
    // Backward orbit of 0 to depth n: all sign choices of nested sqrt(w - c).
    std::vector<Cx> level = {Cx(0, 0)};
    for (int k = 0; k < n; k++) {
        std::vector<Cx> next;
        next.reserve(level.size() * 2);
        for (Cx w : level) {
            Cx s = std::sqrt(w - c);
            next.push_back(s);
            next.push_back(-s);
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

BatteryReport distortion_battery(Cx c, long samples, std::uint64_t seed) {
    double ac = std::abs(c);
    if (ac < 25.0)
        throw std::domain_error("distortion_battery: escape-disk claims need |c| >= 25");
    if (samples < 100) throw std::domain_error("distortion_battery: samples must be >= 100");

    BatteryReport rep;
    auto points = sample_equilibrium(c, samples, 64, seed);
    double logc = std::log(ac);

    // Disk measures: level-n disks of radius |2c|^{-(n-1)/2} carry 2^{-n}.
    for (int n = 1; n <= 3; n++) {
        auto centers = zeros_of_iterate(c, n);
        double eps_n = std::pow(2.0 * ac, -0.5 * (n - 1));
        double expect = std::ldexp(1.0, -n);
        for (size_t ci = 0; ci < centers.size(); ci++) {
            double sum = 0, bsum = 0;
            std::vector<double> batches;
            long in_batch = 0;
            for (auto& z : points) {
                double ind = std::abs(z - centers[ci]) < eps_n ? 1.0 : 0.0;
                sum += ind;
                bsum += ind;
                if (++in_batch == kBatchLen) {
                    batches.push_back(bsum / kBatchLen);
                    bsum = 0;
                    in_batch = 0;
                }
            }
            double frac = sum / (double)points.size();
            double var = 0;
            for (double b : batches) var += (b - frac) * (b - frac);
            double sigma = batches.size() >= 2
                               ? std::sqrt(var / (double)(batches.size() - 1) / (double)batches.size())
                               : 0.0;
            // few batches underestimate; never report below the iid binomial
            double binom = std::sqrt(frac * (1.0 - frac) / (double)points.size());
            sigma = std::max({sigma, binom, 1e-6});
            BatteryClaim cl;
            cl.claim = "measure_level" + std::to_string(n) + "_disk" + std::to_string(ci);
            cl.observed = frac;
            cl.bound = expect;
            cl.sigma = sigma;
            cl.pass = std::abs(frac - expect) <= 3.0 * sigma;
            rep.claims.push_back(cl);
        }
    }

    // Escape lower bound outside D_n: lambda >= 2^{-(n+1)} log|c|.
    std::uint64_t rng = mix_seed(seed, 0xD15C);
    for (int n = 1; n <= 3; n++) {
        auto centers = zeros_of_iterate(c, n);
        double eps_n = std::pow(2.0 * ac, -0.5 * (n - 1));
        double bound = std::ldexp(logc, -(n + 1));
        double worst = std::numeric_limits<double>::infinity();
        long tested = 0;
        double box = 2.0 * std::sqrt(ac);
        while (tested < 500) {
            Cx z((2.0 * uniform01(rng) - 1.0) * box, (2.0 * uniform01(rng) - 1.0) * box);
            bool outside = true;
            for (auto& ct : centers)
                if (std::abs(z - ct) <= eps_n) {
                    outside = false;
                    break;
                }
            if (!outside) continue;
            worst = std::min(worst, escape_rate_core(c, z, 1e-9, 256).lo);
            tested++;
        }
        BatteryClaim cl;
        cl.claim = "escape_lower_level" + std::to_string(n);
        cl.observed = worst;
        cl.bound = bound;
        cl.sigma = 0;
        cl.pass = worst >= bound - kSlack;
        rep.claims.push_back(cl);
    }

    // Shrinking rate: lambda <= 2^{-(n-1)} log|c| within
    // 1/(5 * 3^n * |c|^{(n-2)/2}) of the Julia set.
    for (int n = 1; n <= 3; n++) {
        double dist = 1.0 / (5.0 * std::pow(3.0, n) * std::pow(ac, 0.5 * (n - 2)));
        double bound = std::ldexp(logc, -(n - 1));
        double worst = 0;
        long m = std::min<long>(500, (long)points.size());
        for (long i = 0; i < m; i++) {
            double u = 0.99 * uniform01(rng);
            double phi = 2.0 * M_PI * uniform01(rng);
            Cx z = points[i] + Cx(u * dist * std::cos(phi), u * dist * std::sin(phi));
            worst = std::max(worst, escape_rate_core(c, z, 1e-9, 256).hi);
        }
        BatteryClaim cl;
        cl.claim = "shrinking_rate_level" + std::to_string(n);
        cl.observed = worst;
        cl.bound = bound;
        cl.sigma = 0;
        cl.pass = worst <= bound + kSlack;
        rep.claims.push_back(cl);
    }

    for (auto& cl : rep.claims) rep.all_pass = rep.all_pass && cl.pass;
    return rep;
}

}  // namespace quaddyn
