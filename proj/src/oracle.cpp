#include "mbasym/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "mbasym/special.hpp"

namespace mbasym {

namespace {

constexpr mpfr_rnd_t RND = MPFR_RNDN;
constexpr long CHUNK = 32768;

// --- rational-exponent fast path ------------------------------------------------
//
// The summand needs n^g and (n^2+a^2)^(-mu) a few million times.  Table-grade
// exponents are small rationals (1/2, -9/4, 3, ...), so base^e compiles to
// integer powers and k-th roots; anything else falls back to mpfr_pow.
struct CompiledPow {
    enum class Mode { Zero, IntPow, RootPow, General };
    Mode mode = Mode::General;
    long p = 0;
    unsigned long q = 1;

    static CompiledPow compile(const Real& e) {
        CompiledPow c;
        if (e.is_zero()) {
            c.mode = Mode::Zero;
            return c;
        }
        if (e.is_integer() && abs(e) <= 200) {
            c.mode = Mode::IntPow;
            c.p = e.to_long();
            return c;
        }
        for (unsigned long q = 2; q <= 12; ++q) {
            Real eq = e * static_cast<long>(q);
            if (eq.is_integer() && abs(eq) <= 200) {
                c.mode = Mode::RootPow;
                c.p = eq.to_long();
                c.q = q;
                return c;
            }
        }
        return c; // General
    }

    // dst = base^e for base > 0; e_full is the exact exponent (General mode).
    void apply(mpfr_ptr dst, mpfr_srcptr base, mpfr_srcptr e_full) const {
        switch (mode) {
            case Mode::Zero:
                mpfr_set_ui(dst, 1, RND);
                break;
            case Mode::IntPow:
                mpfr_pow_si(dst, base, p, RND);
                break;
            case Mode::RootPow:
                mpfr_pow_si(dst, base, p, RND);
                mpfr_rootn_ui(dst, dst, q, RND);
                break;
            case Mode::General:
                mpfr_pow(dst, base, e_full, RND);
                break;
        }
    }
};

// RAII block of mpfr_t scratch registers at one precision.
class Workspace {
public:
    Workspace(int count, long bits) : v_(static_cast<size_t>(count)) {
        for (auto& x : v_) mpfr_init2(x, bits);
    }
    ~Workspace() {
        for (auto& x : v_) mpfr_clear(x);
    }
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;
    mpfr_ptr operator[](int i) { return v_[static_cast<size_t>(i)]; }

private:
    std::vector<mpfr_t> v_;
};

// Read-only state shared by all chunk workers.
struct SharedCtx {
    long wp = 0;  // working digits for amplitudes/terms
    long wp2 = 0; // working digits for phases (absorbs |x| before sin/cos)
    long wbits = 0, wbits2 = 0;
    bool alternating = false;
    bool ykernel = false;
    long k_cap = 0;

    // at wp2 digits:
    Real dx;      // b/a: phase step
    Real sin_dx;  // sin(b/a)
    Real cos_dx;  // cos(b/a)
    Real phase0;  // -(nu/2 + 1/4) pi, so omega_n = n dx + phase0
    Real sin_np;  // sin(nu pi), rotating to the -nu phase
    Real cos_np;

    // at wp digits:
    Real a2;        // a^2
    Real sqrt_2_pi; // sqrt(2/pi)
    Real tiny;      // 10^-(wp+5): expansion-term cutoff
    Real g_exp;     // g
    Real neg_mu;    // -mu
    Real cot_np;    // Y-kernel weights
    Real csc_np;
    std::vector<Real> dk; // (4 nu^2 - (2k+1)^2) / (8 (k+1))

    CompiledPow g_pow;
    CompiledPow u_pow;

    SharedCtx()
        : dx(Real::zero(1)), sin_dx(Real::zero(1)), cos_dx(Real::zero(1)),
          phase0(Real::zero(1)), sin_np(Real::zero(1)), cos_np(Real::zero(1)),
          a2(Real::zero(1)), sqrt_2_pi(Real::zero(1)), tiny(Real::zero(1)),
          g_exp(Real::zero(1)), neg_mu(Real::zero(1)), cot_np(Real::zero(1)),
          csc_np(Real::zero(1)) {}
};

// Sum of the terms for n in [n0, n1), all of which lie in the large-argument
// region x = n b/a >= x_cross.  P and Q come from the same coefficient
// recurrence as bessel_j's large-argument branch; the phase never goes
// through sin/cos per term — it starts exact at n0 and advances by the fixed
// rotation (cos dx, sin dx).
Real hankel_chunk(const SharedCtx& sh, long n0, long n1) {
    Workspace ph(8, sh.wbits2); // x om c s c2 s2 tc ts
    mpfr_ptr x = ph[0], om = ph[1], c = ph[2], s = ph[3], c2 = ph[4], s2 = ph[5],
             tc = ph[6], ts = ph[7];
    Workspace wk(12, sh.wbits); // invx t P Q u v w1 w2 w3 w4 term acc
    mpfr_ptr invx = wk[0], t = wk[1], P = wk[2], Q = wk[3], u = wk[4], v = wk[5],
             w1 = wk[6], w2 = wk[7], w3 = wk[8], w4 = wk[9], term = wk[10],
             acc = wk[11];

    mpfr_set_zero(acc, +1);
    mpfr_mul_ui(x, sh.dx.raw(), static_cast<unsigned long>(n0), RND);
    mpfr_add(om, x, sh.phase0.raw(), RND);
    mpfr_sin_cos(s, c, om, RND);

    for (long n = n0; n < n1; ++n) {
        // P(x), Q(x) by the descending-coefficient recurrence.
        mpfr_ui_div(invx, 1, x, RND);
        mpfr_set_ui(P, 1, RND);
        mpfr_set_zero(Q, +1);
        mpfr_set_ui(t, 1, RND);
        int sign_q = +1, sign_p = -1;
        long k = 0;
        for (;; ++k) {
            if (k >= sh.k_cap) {
                throw PrecisionError(
                    "direct_sum: large-argument expansion did not reach the "
                    "cutoff (internal)");
            }
            mpfr_mul(t, t, sh.dk[static_cast<size_t>(k)].raw(), RND);
            mpfr_mul(t, t, invx, RND);
            if ((k + 1) % 2 == 1) {
                if (sign_q > 0) mpfr_add(Q, Q, t, RND); else mpfr_sub(Q, Q, t, RND);
                sign_q = -sign_q;
            } else {
                if (sign_p > 0) mpfr_add(P, P, t, RND); else mpfr_sub(P, P, t, RND);
                sign_p = -sign_p;
            }
            if (mpfr_cmpabs(t, sh.tiny.raw()) < 0) break;
        }

        // amp = sqrt(2/(pi x))
        mpfr_sqrt(w1, invx, RND);
        mpfr_mul(w1, w1, sh.sqrt_2_pi.raw(), RND);

        // kernel value
        mpfr_mul(w2, P, c, RND);
        mpfr_mul(w3, Q, s, RND);
        mpfr_sub(w2, w2, w3, RND);
        mpfr_mul(w2, w2, w1, RND); // J_nu(x)
        if (sh.ykernel) {
            // phase for -nu: omega + nu pi
            mpfr_mul(c2, c, sh.cos_np.raw(), RND);
            mpfr_mul(tc, s, sh.sin_np.raw(), RND);
            mpfr_sub(c2, c2, tc, RND);
            mpfr_mul(s2, s, sh.cos_np.raw(), RND);
            mpfr_mul(tc, c, sh.sin_np.raw(), RND);
            mpfr_add(s2, s2, tc, RND);
            mpfr_mul(w4, P, c2, RND);
            mpfr_mul(w3, Q, s2, RND);
            mpfr_sub(w4, w4, w3, RND);
            mpfr_mul(w4, w4, w1, RND); // J_{-nu}(x)
            mpfr_mul(w2, w2, sh.cot_np.raw(), RND);
            mpfr_mul(w4, w4, sh.csc_np.raw(), RND);
            mpfr_sub(w2, w2, w4, RND); // Y_nu(x)
        }

        // u = (n^2 + a^2)^(-mu)
        mpfr_set_ui(u, static_cast<unsigned long>(n) * static_cast<unsigned long>(n),
                    RND);
        mpfr_add(u, u, sh.a2.raw(), RND);
        sh.u_pow.apply(w3, u, sh.neg_mu.raw());

        // v = n^g
        mpfr_set_ui(v, static_cast<unsigned long>(n), RND);
        sh.g_pow.apply(w4, v, sh.g_exp.raw());

        mpfr_mul(term, w2, w3, RND);
        mpfr_mul(term, term, w4, RND);
        if (sh.alternating && n % 2 == 0) mpfr_neg(term, term, RND);
        mpfr_add(acc, acc, term, RND);

        // advance phase and argument
        mpfr_mul(tc, c, sh.cos_dx.raw(), RND);
        mpfr_mul(ts, s, sh.sin_dx.raw(), RND);
        mpfr_sub(tc, tc, ts, RND);
        mpfr_mul(ts, s, sh.cos_dx.raw(), RND);
        mpfr_mul(s2, c, sh.sin_dx.raw(), RND);
        mpfr_add(ts, ts, s2, RND);
        mpfr_swap(c, tc);
        mpfr_swap(s, ts);
        mpfr_add(x, x, sh.dx.raw(), RND);
    }

    Real out = Real::zero(sh.wp);
    mpfr_set(out.raw(), acc, RND);
    return out;
}

// Kernel value via the certified bessel_j for the moderate-x region.
Real kernel_small(const Params& p, SeriesKind kind, const Real& x, long wp,
                  const Real& cot_np, const Real& csc_np) {
    Real jp = bessel_j(p.nu(), x, wp);
    if (kind != SeriesKind::YSeries) return jp;
    Real jm = bessel_j(-p.nu(), x, wp);
    return cot_np * jp - csc_np * jm;
}

// log10 of |tol| without relying on double underflow.
double log10_of(const Real& v) {
    auto [m, e] = v.mantissa_exp(8);
    double md = std::fabs(std::atof(m.c_str()));
    return static_cast<double>(e) + std::log10(md);
}

} // namespace

Real tail_bound(const Params& p, SeriesKind kind, long n, double kappa) {
    if (n < 1) throw DomainError("tail_bound: n must be >= 1");
    long wd = p.digits();
    Real nb_over_a = (p.b() * n) / p.a();
    if (nb_over_a < 1) {
        throw DomainError(
            "tail_bound: envelope requires n b / a >= 1 (tail starts too early)");
    }
    Real delta = p.delta(); // > 1 by Params' convergence check
    Real envelope = sqrt(2 * p.a() / (const_pi(wd) * p.b()));
    Real m = Real::from_long(1, wd);
    if (kind == SeriesKind::YSeries) {
        if (p.nu().is_integer()) {
            throw IntegerNuError("tail_bound: Y kernel undefined at integer nu");
        }
        Real np = p.nu() * const_pi(wd);
        Real sn = sin(np);
        m = (abs(cos(np)) + 1) / abs(sn);
    }
    Real n_pow = pow(Real::from_long(n, wd), 1 - delta);
    return Real::from_double(kappa, wd) * m * envelope * n_pow / (delta - 1);
}

OracleResult direct_sum(const Params& p, SeriesKind kind, const Real& tol,
                        const OracleOptions& opt) {
    if (tol.sign() <= 0) throw DomainError("direct_sum: tol must be positive");
    if (kind == SeriesKind::YSeries && p.nu().is_integer()) {
        throw IntegerNuError("direct_sum: Y kernel undefined at integer nu");
    }

    // Working precision: summing at most `cap` terms of magnitude <= 1 keeps
    // accumulated rounding below 10^(7-wp), far inside tol with 22 spare digits.
    double lt = log10_of(tol);
    long tol_digits = static_cast<long>(std::ceil(-lt)) + 2;
    if (tol_digits < 5) tol_digits = 5;
    long wp = tol_digits + 22;

    // How many terms: solve kappa M env N^(1-delta)/(delta-1) <= tol/2 in logs.
    double delta = p.delta().to_double();
    double ad = p.a().to_double(), bd = p.b().to_double();
    double env = opt.kappa * std::sqrt(2.0 * ad / (M_PI * bd));
    if (kind == SeriesKind::YSeries) {
        double np = p.nu().to_double() * M_PI;
        env *= (std::fabs(std::cos(np)) + 1.0) / std::fabs(std::sin(np));
    }
    double log10_n = (std::log10(2.0 * env) - std::log10(delta - 1.0) - lt) /
                     (delta - 1.0);
    if (log10_n > 17.5) {
        throw ConvergenceError(
            "direct_sum: required term count ~1e" +
            std::to_string(static_cast<long>(std::ceil(log10_n))) +
            " is astronomically large");
    }
    long n_total = static_cast<long>(std::ceil(std::pow(10.0, std::max(0.0, log10_n))));
    long n_floor = static_cast<long>(std::ceil(ad / bd)) + 1;
    n_total = std::max({n_total, n_floor, 8L});
    Real half_tol = tol / 2;
    for (int i = 0; tail_bound(p, kind, n_total, opt.kappa) > half_tol; ++i) {
        if (i > 200) {
            throw ConvergenceError("direct_sum: tail bound failed to close");
        }
        n_total += n_total / 10 + 1;
    }
    if (n_total > opt.cap) {
        throw ConvergenceError(
            "direct_sum: needs " + std::to_string(n_total) +
            " terms, above the cap of " + std::to_string(opt.cap));
    }

    // Split: n <= n_split goes through bessel_j; beyond that the inlined
    // large-argument kernel takes over (x = n b / a >= x_cross there).
    double x_cross = std::max(30.0, 1.3 * static_cast<double>(wp) + 8.0);
    long n_split = static_cast<long>(std::ceil(x_cross * ad / bd));
    n_split = std::min(n_split, n_total);

    long wp2 = wp + 10;
    double x_max = static_cast<double>(n_total) * bd / ad;
    if (x_max > 10.0) wp2 += static_cast<long>(std::ceil(std::log10(x_max)));

    // Prime MPFR's internal constant caches before any worker threads spawn.
    const_pi(wp2 + 16);
    const_log2(wp2 + 16);
    const_euler(wp2 + 16);

    SharedCtx sh;
    sh.wp = wp;
    sh.wp2 = wp2;
    sh.wbits = bits_for_digits(wp);
    sh.wbits2 = bits_for_digits(wp2);
    sh.alternating = (kind == SeriesKind::AlternatingJ);
    sh.ykernel = (kind == SeriesKind::YSeries);

    Real pi2 = const_pi(wp2);
    sh.dx = p.b().round_to(wp2) / p.a().round_to(wp2);
    sin_cos(sh.sin_dx, sh.cos_dx, sh.dx);
    sh.phase0 = -(p.nu().round_to(wp2) / 2 + Real::parse("0.25", wp2)) * pi2;
    Real nupi = p.nu().round_to(wp2) * pi2;
    sin_cos(sh.sin_np, sh.cos_np, nupi);

    sh.a2 = sqr(p.a().round_to(wp));
    sh.sqrt_2_pi = sqrt(2 / const_pi(wp));
    sh.tiny = ten_pow(-(wp + 5), wp);
    sh.g_exp = p.gam().round_to(wp);
    sh.neg_mu = -p.mu().round_to(wp);
    if (sh.ykernel) {
        sh.cot_np = sh.cos_np.round_to(wp) / sh.sin_np.round_to(wp);
        sh.csc_np = 1 / sh.sin_np.round_to(wp);
    }
    sh.g_pow = CompiledPow::compile(p.gam());
    sh.u_pow = CompiledPow::compile(-p.mu());

    sh.k_cap = static_cast<long>(std::ceil(2.6 * x_cross)) + 48;
    Real four_nu2 = 4 * sqr(p.nu().round_to(wp));
    sh.dk.reserve(static_cast<size_t>(sh.k_cap));
    for (long k = 0; k < sh.k_cap; ++k) {
        Real num = four_nu2 - (2 * k + 1) * (2 * k + 1);
        sh.dk.push_back(num / (8 * (k + 1)));
    }

    // Moderate-x region, summed in order in this thread.
    Real series_sum = Real::zero(wp);
    for (long n = 1; n <= n_split; ++n) {
        Real x = (p.b().round_to(wp2) * n) / p.a().round_to(wp2);
        Real kv = kernel_small(p, kind, x.round_to(wp), wp, sh.cot_np, sh.csc_np);
        Real u = Real::from_long(n, wp) * Real::from_long(n, wp) + sh.a2;
        Real upow = Real::zero(wp);
        sh.u_pow.apply(upow.raw(), u.raw(), sh.neg_mu.raw());
        Real gpow = Real::zero(wp);
        Real nr = Real::from_long(n, wp);
        sh.g_pow.apply(gpow.raw(), nr.raw(), sh.g_exp.raw());
        Real term = kv * upow * gpow;
        if (sh.alternating && n % 2 == 0) term = -term;
        series_sum += term;
    }

    // Bulk region, in fixed chunks; each chunk is independent and the
    // combination order is fixed, so the result is thread-count invariant.
    std::vector<long> chunk_begin;
    for (long n = n_split + 1; n <= n_total; n += CHUNK) {
        chunk_begin.push_back(n);
    }
    std::vector<Real> partial(chunk_begin.size(), Real::zero(wp));

    if (!chunk_begin.empty()) {
        unsigned hw = std::thread::hardware_concurrency();
        int want = opt.threads > 0 ? opt.threads
                                   : static_cast<int>(hw ? std::min(hw, 16u) : 4u);
        int nthreads = static_cast<int>(
            std::min<size_t>(static_cast<size_t>(want), chunk_begin.size()));
        std::atomic<size_t> next{0};
        std::exception_ptr first_error;
        std::mutex err_mutex;

        auto work = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= chunk_begin.size()) return;
                long n0 = chunk_begin[i];
                long n1 = std::min(n0 + CHUNK, n_total + 1);
                try {
                    partial[i] = hankel_chunk(sh, n0, n1);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };

        if (nthreads <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(nthreads));
            for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);
    }

    // Neumaier-compensated combination in fixed (index) order.
    Real sum = series_sum;
    Real comp = Real::zero(wp);
    for (const Real& x : partial) {
        Real t = sum + x;
        if (abs(sum) >= abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum += comp;

    return OracleResult{sum, n_total, tail_bound(p, kind, n_total, opt.kappa)};
}

} // namespace mbasym
