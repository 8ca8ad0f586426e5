/* Copyright 2026 The mespin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "mespin/transport.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mespin/constants.hpp"

namespace mespin {

namespace {

using cplx = std::complex<double>;

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double broadening(const cplx& sigma) {
    // Gamma = i (Sigma - Sigma^dagger) = -2 Im(Sigma)
    return -2.0 * sigma.imag();
}

struct ChannelOffsets {
    double left;
    double right;
};

ChannelOffsets channel_offsets(const BarrierStack& stack, const LeadParams& leads,
                               SpinChannel channel) {
    const double up_l = 0.0;
    const double dn_l = leads.delta_ex;
    const bool swap = stack.config == MagneticConfig::AntiParallel;
    if (channel == SpinChannel::Up) return {up_l, swap ? dn_l : up_l};
    return {dn_l, swap ? up_l : dn_l};
}

// |G(1,N)|^2 of the tridiagonal device matrix via the determinant
// recursion: (A^{-1})(1,N) = prod(offdiag) / det(A) up to sign.
struct Tridiag {
    std::vector<cplx> diag;
    std::vector<cplx> off; // off[i] couples site i and i+1
};

double transmission_from_matrix(const Tridiag& a, double gamma_l, double gamma_r) {
    const std::size_t n = a.diag.size();
    // Continuant recursion for the determinant.
    cplx det_prev{1.0, 0.0};
    cplx det = a.diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const cplx next = a.diag[i] * det - a.off[i - 1] * a.off[i - 1] * det_prev;
        det_prev = det;
        det = next;
    }
    if (std::abs(det) == 0.0) return -1.0; // singular; caller retries off-axis
    cplx offprod{1.0, 0.0};
    for (std::size_t i = 0; i + 1 < n; ++i) offprod *= a.off[i];
    const double g1n = std::abs(offprod / det);
    return gamma_l * gamma_r * g1n * g1n;
}

double transmission_at(const cplx& e, const BarrierStack& stack, const LeadParams& leads,
                       SpinChannel channel) {
    const double t_l = hopping_ev(leads.m_eff, stack.a);
    const double t_b = hopping_ev(stack.m_barrier, stack.a);
    const double t_lb = hopping_ev(std::sqrt(leads.m_eff * stack.m_barrier), stack.a);
    const auto [off_l, off_r] = channel_offsets(stack, leads, channel);

    const cplx sig_l = lead_self_energy(e.real(), off_l, t_l);
    const cplx sig_r = lead_self_energy(e.real(), off_r, t_l);
    const double gam_l = broadening(sig_l);
    const double gam_r = broadening(sig_r);
    if (gam_l <= 0.0 || gam_r <= 0.0) return 0.0;

    const int nb = stack.n_sites();
    const int n = nb + 2;
    Tridiag a;
    a.diag.resize(static_cast<std::size_t>(n));
    a.off.resize(static_cast<std::size_t>(n - 1));
    const double barrier_onsite = 2.0 * t_b + leads.e_f + stack.u_b;
    a.diag[0] = e - (2.0 * t_l + off_l) - sig_l;
    a.diag[static_cast<std::size_t>(n - 1)] = e - (2.0 * t_l + off_r) - sig_r;
    for (int i = 1; i < n - 1; ++i) a.diag[static_cast<std::size_t>(i)] = e - barrier_onsite;
    if (nb == 0) {
        // Degenerate wire: the two contact sites couple directly.
        a.off[0] = cplx{t_l, 0.0};
    } else {
        a.off[0] = cplx{t_lb, 0.0}; // sign of the hopping cancels in |G(1,N)|^2
        a.off[static_cast<std::size_t>(n - 2)] = cplx{t_lb, 0.0};
        for (int i = 1; i < n - 2; ++i) a.off[static_cast<std::size_t>(i)] = cplx{t_b, 0.0};
    }

    return transmission_from_matrix(a, gam_l, gam_r);
}

double fermi(double e, double mu, double kt_ev) {
    if (kt_ev <= 0.0) return e <= mu ? 1.0 : 0.0;
    const double x = (e - mu) / kt_ev;
    if (x > 40.0) return 0.0;
    if (x < -40.0) return 1.0;
    return 1.0 / (1.0 + std::exp(x));
}

// d(-f)/dE in 1/eV.
double fermi_weight(double e, double mu, double kt_ev) {
    const double x = (e - mu) / kt_ev;
    if (std::abs(x) > 40.0) return 0.0;
    const double ex = std::exp(x);
    return ex / ((1.0 + ex) * (1.0 + ex)) / kt_ev;
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double rel_tol) {
    if (b <= a) return 0.0;
    // Seed the adaptive rule on a coarse grid so narrow features are not
    // stepped over.
    const int n0 = 32;
    const double h = (b - a) / n0;
    double total = 0.0;
    double scale = 0.0;
    std::vector<double> fs(n0 + 1);
    for (int i = 0; i <= n0; ++i) {
        fs[static_cast<std::size_t>(i)] = f(a + h * i);
        scale = std::max(scale, std::abs(fs[static_cast<std::size_t>(i)]));
    }
    const double tol = std::max(rel_tol * scale * (b - a) / n0, 1e-300);
    for (int i = 0; i < n0; ++i) {
        const double xa = a + h * i;
        const double xb = xa + h;
        const double xm = 0.5 * (xa + xb);
        const double fa = fs[static_cast<std::size_t>(i)];
        const double fb = fs[static_cast<std::size_t>(i + 1)];
        const double fm = f(xm);
        const double whole = (xb - xa) / 6.0 * (fa + 4.0 * fm + fb);
        total += adaptive_simpson(f, xa, xb, fa, fm, fb, whole, tol, 24);
    }
    return total;
}

} // namespace

void LeadParams::validate() const {
    require(e_f > 0.0, "leads.e_f must be > 0");
    require(delta_ex >= 0.0, "leads.delta_ex must be >= 0");
    require(m_eff > 0.0, "leads.m_eff must be > 0");
}

int BarrierStack::n_sites() const {
    return static_cast<int>(std::lround(t_mgo / a));
}

void BarrierStack::validate() const {
    require(t_mgo >= 0.0, "stack.t_mgo must be >= 0");
    require(u_b > 0.0, "stack.u_b must be > 0");
    require(m_barrier > 0.0, "stack.m_barrier must be > 0");
    require(a > 0.0, "stack.a must be > 0");
    require(cross_section > 0.0, "stack.cross_section must be > 0");
    require(modes_per_area > 0.0, "stack.modes_per_area must be > 0");
    if (t_mgo == 0.0) return; // degenerate wire limit, used by conductance checks
    const double ratio = t_mgo / a;
    require(std::abs(ratio - std::lround(ratio)) <= 1e-6 * ratio,
            "stack.t_mgo must be an integer multiple of stack.a");
    require(n_sites() >= 1, "stack must have at least one barrier site");
}

double hopping_ev(double m_eff, double a) {
    return constants::hbar * constants::hbar /
           (2.0 * m_eff * constants::m_electron * a * a) / constants::q_electron;
}

std::complex<double> lead_self_energy(double e, double band_bottom, double t0) {
    require(t0 > 0.0, "lead hopping must be > 0");
    // z = e^{ika} solves z^2 - (2 - (E - bb)/t0) z + 1 = 0; the retarded
    // branch is the root with |z| <= 1 (outgoing / decaying).
    const double b = 2.0 - (e - band_bottom) / t0;
    const cplx disc = cplx{b * b - 4.0, 0.0};
    const cplx s = std::sqrt(disc);
    cplx z1 = 0.5 * (b + s);
    cplx z2 = 0.5 * (b - s);
    cplx z = std::abs(z1) <= std::abs(z2) ? z1 : z2;
    if (std::abs(std::abs(z) - 1.0) < 1e-12) {
        // In band both roots are unimodular; pick sin(ka) > 0 so that
        // Im(Sigma) < 0.
        z = z1.imag() > 0.0 ? z1 : z2;
    }
    return -t0 * z;
}

double transmission(double e, const BarrierStack& stack, const LeadParams& leads,
                    SpinChannel channel) {
    stack.validate();
    leads.validate();
    double t = transmission_at(cplx{e, 0.0}, stack, leads, channel);
    if (t < 0.0) {
        // Singular matrix: E sits on a pole; nudge off the real axis.
        t = transmission_at(cplx{e + 1e-9, 0.0}, stack, leads, channel);
        if (t < 0.0) throw std::runtime_error("transmission: singular device matrix");
    }
    return t;
}

TransmissionSpectrum transmission_spectrum(const BarrierStack& stack, const LeadParams& leads,
                                           double e_min, double e_max, int n_points) {
    require(n_points >= 2, "spectrum needs at least two points");
    TransmissionSpectrum spec;
    spec.energies.resize(static_cast<std::size_t>(n_points));
    spec.t_channel.assign(2, std::vector<double>(static_cast<std::size_t>(n_points)));
    for (int i = 0; i < n_points; ++i) {
        const double e = e_min + (e_max - e_min) * i / (n_points - 1);
        spec.energies[static_cast<std::size_t>(i)] = e;
        spec.t_channel[0][static_cast<std::size_t>(i)] =
            transmission(e, stack, leads, SpinChannel::Up);
        spec.t_channel[1][static_cast<std::size_t>(i)] =
            transmission(e, stack, leads, SpinChannel::Down);
    }
    return spec;
}

double mtj_resistance(const BarrierStack& stack, const LeadParams& leads, double v_bias,
                      double t_kelvin) {
    stack.validate();
    leads.validate();
    require(t_kelvin >= 0.0, "t_kelvin must be >= 0");

    const double g0 = constants::q_electron * constants::q_electron / constants::h_planck;
    const double area_scale = stack.modes_per_area * stack.cross_section;
    const double kt_ev = constants::k_boltzmann * t_kelvin / constants::q_electron;

    auto t_total = [&](double e) {
        return transmission(e, stack, leads, SpinChannel::Up) +
               transmission(e, stack, leads, SpinChannel::Down);
    };

    if (v_bias == 0.0) {
        double g_mode;
        if (t_kelvin == 0.0) {
            g_mode = t_total(leads.e_f);
        } else {
            auto integrand = [&](double e) { return t_total(e) * fermi_weight(e, leads.e_f, kt_ev); };
            g_mode = integrate(integrand, leads.e_f - 10.0 * kt_ev, leads.e_f + 10.0 * kt_ev,
                               1e-6);
        }
        const double g = g0 * g_mode * area_scale;
        if (g <= 0.0) return std::numeric_limits<double>::infinity();
        return 1.0 / g;
    }

    const double mu1 = leads.e_f + 0.5 * v_bias;
    const double mu2 = leads.e_f - 0.5 * v_bias;
    const double lo = std::min(mu1, mu2) - 10.0 * kt_ev;
    const double hi = std::max(mu1, mu2) + 10.0 * kt_ev;
    auto integrand = [&](double e) {
        return t_total(e) * (fermi(e, mu1, kt_ev) - fermi(e, mu2, kt_ev));
    };
    const double i_mode_ev = integrate(integrand, lo, hi, 1e-6);
    // I = (q/h) int T dE_J = (q^2/h) int T dE_eV, so g0 carries the units.
    const double current = g0 * i_mode_ev * area_scale;
    if (current == 0.0) return std::numeric_limits<double>::infinity();
    if ((v_bias > 0.0) != (current > 0.0))
        throw std::runtime_error("mtj_resistance: integration produced current of wrong sign");
    return v_bias / current;
}

double tmr(const BarrierStack& stack, const LeadParams& leads, double v_bias) {
    BarrierStack s = stack;
    s.config = MagneticConfig::Parallel;
    const double r_p = mtj_resistance(s, leads, v_bias);
    s.config = MagneticConfig::AntiParallel;
    const double r_ap = mtj_resistance(s, leads, v_bias);
    return (r_ap - r_p) / r_p;
}

double bitcell_tmr(double r_p, double r_ap, double r_series) {
    if (r_p <= 0.0 || r_ap <= 0.0) throw std::invalid_argument("resistances must be > 0");
    if (r_series < 0.0) throw std::invalid_argument("r_series must be >= 0");
    return (r_ap - r_p) / (r_p + r_series);
}

double series_transistor_resistance(double w_over_l, double r_unit) {
    if (w_over_l <= 0.0) throw std::invalid_argument("w_over_l must be > 0");
    return r_unit / w_over_l;
}

} // namespace mespin
