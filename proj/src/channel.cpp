#include "irsched/channel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace irsched {

namespace {

constexpr int kNlosClusters = 4;
constexpr double kMaxExcessDelay = 200e-9;
constexpr double kLosExponent = 2.0;
constexpr double kNlosExponent = 3.2;
constexpr double kMinSeparation = 1e-6; // meters

double distance(const std::array<double, 2>& a, const std::array<double, 2>& b)
{
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

double bearing(const std::array<double, 2>& from, const std::array<double, 2>& to)
{
    return std::atan2(to[1] - from[1], to[0] - from[0]);
}

// Log-distance amplitude: (lambda/4pi) * d^(-n/2). For n = 2 this is the
// free-space amplitude lambda / (4 pi d).
double path_amplitude(double d, double freq_hz, double exponent)
{
    const double lambda = kSpeedOfLight / freq_hz;
    return lambda / (4.0 * M_PI) * std::pow(d, -exponent / 2.0);
}

struct Ray {
    std::complex<double> gain;
    double aod_rad;    // departure angle at the reflecting/transmitting side
    double aoa_rad;    // arrival angle at the receiving side
    double delay_s;
    double exponent;   // pathloss exponent of this ray
};

} // namespace

arma::cx_vec ula_steering(double angle_rad, int n, double spacing_wavelengths)
{
    if (n < 1)
        throw std::invalid_argument("ula_steering: element count must be >= 1");
    arma::cx_vec v(n);
    const double step = kTwoPi * spacing_wavelengths * std::sin(angle_rad);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int m = 0; m < n; ++m)
        v[m] = std::polar(scale, step * m);
    return v;
}

double los_probability_umi(double distance_m)
{
    if (distance_m <= 18.0)
        return 1.0;
    const double r = 18.0 / distance_m;
    return r + std::exp(-distance_m / 36.0) * (1.0 - r);
}

UeDrop random_ue_positions(const ScenarioConfig& cfg, int count, RngStream& rng)
{
    UeDrop drop;
    drop.positions.resize(count);
    drop.los.resize(count);
    for (int k = 0; k < count; ++k) {
        // Uniform over the half-disc: radius via sqrt transform, azimuth in
        // (-pi/2, pi/2) so x >= 0.
        const double r = cfg.cell_radius_m * std::sqrt(rng.uniform(0.0, 1.0));
        const double az = rng.uniform(-M_PI / 2.0, M_PI / 2.0);
        drop.positions[k] = {r * std::cos(az), r * std::sin(az)};
        const double d_irs = distance(drop.positions[k], cfg.irs_pos_m);
        drop.los[k] = rng.uniform(0.0, 1.0) < los_probability_umi(d_irs);
    }
    return drop;
}

UeDrop drop_ues(const ScenarioConfig& cfg, RngStream& rng)
{
    return random_ue_positions(cfg, cfg.K, rng);
}

ChannelSet synthesize_channels(const ScenarioConfig& cfg, const UeDrop& drop, RngStream& rng)
{
    const int n_irs = cfg.n_irs();
    const auto freqs = cfg.carriers();
    const double d_gi = distance(cfg.gnb_pos_m, cfg.irs_pos_m);
    if (d_gi < kMinSeparation)
        throw InvalidGeometryError("gNB and IRS are co-located");

    ChannelSet ch;
    ch.n_irs = n_irs;
    ch.n_gnb = cfg.n_gnb;
    ch.n_ue = cfg.n_ue;
    ch.n_carriers = cfg.F;

    // gNB -> IRS: single LOS path. Array responses are evaluated at the
    // nominal half-wavelength spacing of f_c; only amplitude and delay phase
    // vary across the (narrow) band.
    const double aod_g = bearing(cfg.gnb_pos_m, cfg.irs_pos_m);
    const double aoa_i = bearing(cfg.irs_pos_m, cfg.gnb_pos_m);
    const arma::cx_vec a_gnb = ula_steering(aod_g, cfg.n_gnb, 0.5);
    const arma::cx_vec a_irs_rx = ula_steering(aoa_i, n_irs, 0.5);
    const double tau_gi = d_gi / kSpeedOfLight;
    const double elem_scale_h = std::sqrt(static_cast<double>(n_irs) * cfg.n_gnb);

    ch.h_gi.reserve(cfg.F);
    for (int i = 0; i < cfg.F; ++i) {
        const std::complex<double> coeff =
            path_amplitude(d_gi, freqs[i], kLosExponent) * elem_scale_h *
            std::polar(1.0, -kTwoPi * freqs[i] * tau_gi);
        ch.h_gi.push_back(coeff * (a_irs_rx * a_gnb.t())); // .t() is conjugate transpose
    }

    // Beamform toward the gNB->IRS LOS departure angle.
    ch.w_gnb = a_gnb;

    // IRS -> UE: optional LOS ray plus kNlosClusters NLOS rays. Ray parameters
    // are drawn once per UE and shared across carriers.
    const double elem_scale_g = std::sqrt(static_cast<double>(cfg.n_ue) * n_irs);
    ch.g_ue.resize(static_cast<std::size_t>(drop.size()) * cfg.F);
    for (int k = 0; k < drop.size(); ++k) {
        const double d_ku = distance(drop.positions[k], cfg.irs_pos_m);
        if (d_ku < kMinSeparation)
            throw InvalidGeometryError("UE " + std::to_string(k) + " is co-located with the IRS");

        std::vector<Ray> rays;
        if (drop.los[k]) {
            Ray los;
            los.gain = 1.0;
            los.aod_rad = bearing(cfg.irs_pos_m, drop.positions[k]);
            los.aoa_rad = bearing(drop.positions[k], cfg.irs_pos_m);
            los.delay_s = d_ku / kSpeedOfLight;
            los.exponent = kLosExponent;
            rays.push_back(los);
        }
        for (int p = 0; p < kNlosClusters; ++p) {
            Ray r;
            r.gain = std::complex<double>(rng.normal(), rng.normal()) /
                     std::sqrt(2.0 * kNlosClusters);
            r.aod_rad = rng.uniform(-M_PI / 2.0, M_PI / 2.0);
            r.aoa_rad = rng.uniform(-M_PI / 2.0, M_PI / 2.0);
            r.delay_s = d_ku / kSpeedOfLight + rng.uniform(0.0, kMaxExcessDelay);
            r.exponent = kNlosExponent;
            rays.push_back(r);
        }

        std::vector<arma::cx_mat> outer;
        outer.reserve(rays.size());
        for (const Ray& r : rays)
            outer.push_back(ula_steering(r.aoa_rad, cfg.n_ue, 0.5) *
                            ula_steering(r.aod_rad, n_irs, 0.5).t());

        for (int i = 0; i < cfg.F; ++i) {
            arma::cx_mat g(cfg.n_ue, n_irs, arma::fill::zeros);
            for (std::size_t p = 0; p < rays.size(); ++p) {
                const Ray& r = rays[p];
                const std::complex<double> coeff =
                    path_amplitude(d_ku, freqs[i], r.exponent) * elem_scale_g * r.gain *
                    std::polar(1.0, -kTwoPi * freqs[i] * r.delay_s);
                g += coeff * outer[p];
            }
            ch.g_ue[static_cast<std::size_t>(k) * cfg.F + i] = std::move(g);
        }
    }
    return ch;
}

} // namespace irsched
