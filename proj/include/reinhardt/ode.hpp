#ifndef REINHARDT_ODE_HPP
#define REINHARDT_ODE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "reinhardt/errors.hpp"

namespace reinhardt {

// Embedded Dormand-Prince 5(4) pair with the standard quartic dense output.
// Coefficients follow the DOPRI5 tableau of Hairer-Norsett-Wanner.
template <int N>
class Rk45 {
  public:
    using Vec = std::array<double, N>;
    using Rhs = std::function<void(double, const Vec&, Vec&)>;

    struct Options {
        double atol = 1e-10;
        double rtol = 1e-10;
        double hmax = 0.0;   // 0: span
        long max_steps = 2000000;
    };

    // one accepted step with its dense interpolant
    struct Segment {
        double t0 = 0.0, t1 = 0.0;
        Vec r1{}, r2{}, r3{}, r4{}, r5{};

        double h() const { return t1 - t0; }
        Vec eval(double t) const {
            double th = (t - t0) / (t1 - t0);
            double th1 = 1.0 - th;
            Vec y;
            for (int i = 0; i < N; ++i)
                y[i] = r1[i] + th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
            return y;
        }
    };

    enum class StepStatus { Ok, Underflow };

    Rk45(Rhs rhs, Options opt = {}) : rhs_(std::move(rhs)), opt_(opt) {}

    // Initialize at (t, y). Direction is the sign of (t_end - t) passed to advance().
    void start(double t, const Vec& y) {
        t_ = t;
        y_ = y;
        rhs_(t_, y_, k1_);
        have_h_ = false;
    }

    double time() const { return t_; }
    const Vec& state() const { return y_; }
    const Segment& segment() const { return seg_; }

    // Take one adaptive step toward t_end (never past it). Returns Underflow if the
    // step size collapses.
    StepStatus advance(double t_end) {
        double dir = (t_end >= t_) ? 1.0 : -1.0;
        double span = std::abs(t_end - t_);
        double hmax = opt_.hmax > 0.0 ? opt_.hmax : span;
        if (!have_h_) {
            h_ = initial_step(dir, hmax);
            have_h_ = true;
        }
        h_ = std::min(std::abs(h_), hmax);

        for (long it = 0; it < 100; ++it) {
            double h = std::min(h_, span);
            if (h < 1e-14 * std::max(1.0, std::abs(t_))) return StepStatus::Underflow;
            double hd = dir * h;

            Vec k2, k3, k4, k5, k6, k7, yt, y1;
            auto stage = [&](const double* a, int n, Vec& out, double c) {
                for (int i = 0; i < N; ++i) {
                    double acc = 0.0;
                    const Vec* ks[6] = {&k1_, &k2, &k3, &k4, &k5, &k6};
                    for (int j = 0; j < n; ++j) acc += a[j] * (*ks[j])[i];
                    yt[i] = y_[i] + hd * acc;
                }
                rhs_(t_ + c * hd, yt, out);
            };
            static const double a2[] = {0.2};
            static const double a3[] = {3.0 / 40.0, 9.0 / 40.0};
            static const double a4[] = {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0};
            static const double a5[] = {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0,
                                        -212.0 / 729.0};
            static const double a6[] = {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0,
                                        49.0 / 176.0, -5103.0 / 18656.0};
            static const double b[] = {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0,
                                       -2187.0 / 6784.0, 11.0 / 84.0};
            stage(a2, 1, k2, 0.2);
            stage(a3, 2, k3, 0.3);
            stage(a4, 3, k4, 0.8);
            stage(a5, 4, k5, 8.0 / 9.0);
            stage(a6, 5, k6, 1.0);
            for (int i = 0; i < N; ++i)
                y1[i] = y_[i] + hd * (b[0] * k1_[i] + b[2] * k3[i] + b[3] * k4[i] +
                                      b[4] * k5[i] + b[5] * k6[i]);
            rhs_(t_ + hd, y1, k7);

            static const double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                                e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
            double err = 0.0;
            for (int i = 0; i < N; ++i) {
                double ei = hd * (e1 * k1_[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
                double sk = opt_.atol + opt_.rtol * std::max(std::abs(y_[i]), std::abs(y1[i]));
                err += (ei / sk) * (ei / sk);
            }
            err = std::sqrt(err / N);

            if (err <= 1.0) {
                // dense output coefficients
                static const double d1 = -12715105075.0 / 11282082432.0,
                                    d3 = 87487479700.0 / 32700410799.0,
                                    d4 = -10690763975.0 / 1880347072.0,
                                    d5 = 701980252875.0 / 199316789632.0,
                                    d6 = -1453857185.0 / 822651844.0,
                                    d7 = 69997945.0 / 29380423.0;
                seg_.t0 = t_;
                seg_.t1 = t_ + hd;
                for (int i = 0; i < N; ++i) {
                    seg_.r1[i] = y_[i];
                    seg_.r2[i] = y1[i] - y_[i];
                    seg_.r3[i] = hd * k1_[i] - seg_.r2[i];
                    seg_.r4[i] = seg_.r2[i] - hd * k7[i] - seg_.r3[i];
                    seg_.r5[i] = hd * (d1 * k1_[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                       d6 * k6[i] + d7 * k7[i]);
                }
                t_ += hd;
                y_ = y1;
                k1_ = k7;  // FSAL
                double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
                h_ = h * std::min(5.0, std::max(0.2, fac));
                h_ = std::min(h_, hmax);
                return StepStatus::Ok;
            }
            double fac = 0.9 * std::pow(err, -0.2);
            h_ = h * std::max(0.1, fac);
        }
        return StepStatus::Underflow;
    }

  private:
    double initial_step(double dir, double hmax) const {
        double dn = 0.0, fn = 0.0;
        for (int i = 0; i < N; ++i) {
            double sk = opt_.atol + opt_.rtol * std::abs(y_[i]);
            dn += (y_[i] / sk) * (y_[i] / sk);
            fn += (k1_[i] / sk) * (k1_[i] / sk);
        }
        double h = (dn > 0 && fn > 0) ? 0.01 * std::sqrt(dn / fn) : 1e-6;
        (void)dir;
        return std::min(h, hmax);
    }

    Rhs rhs_;
    Options opt_;
    double t_ = 0.0;
    Vec y_{};
    Vec k1_{};
    Segment seg_{};
    double h_ = 0.0;
    bool have_h_ = false;
};

}  // namespace reinhardt

#endif
