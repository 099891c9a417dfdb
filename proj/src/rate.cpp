#include "irsched/rate.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace irsched {

double achievable_rate(const ChannelSet& channels, const IrsConfiguration& cfg_irs, int ue,
                       int carrier, double sigma_s2, double sigma_n2)
{
    if (ue < 0 || carrier < 0 || carrier >= channels.n_carriers ||
        static_cast<std::size_t>(ue) * channels.n_carriers >= channels.g_ue.size())
        throw std::invalid_argument("achievable_rate: index out of range");
    if (cfg_irs.size() != channels.n_irs)
        throw std::invalid_argument("achievable_rate: configuration size mismatch");
    if (sigma_s2 <= 0.0 || sigma_n2 <= 0.0)
        throw std::invalid_argument("achievable_rate: powers must be positive");

    const arma::cx_vec beamformed = channels.h_gi[carrier] * channels.w_gnb;
    const arma::cx_vec effective =
        channels.g(ue, carrier) * (cfg_irs.coefficients() % beamformed);
    const double gain2 = std::norm(arma::norm(effective));
    if (gain2 == 0.0)
        return 0.0; // blocked cascade, no combiner defined
    return std::log2(1.0 + gain2 * sigma_s2 / sigma_n2);
}

RateTable build_rate_table(const ChannelSet& channels, const Codebook& cb,
                           const ScenarioConfig& cfg, TableMode mode, int n_threads)
{
    const int n_ue = static_cast<int>(channels.g_ue.size()) / channels.n_carriers;
    if (cb.entries.empty())
        throw std::invalid_argument("build_rate_table: empty codebook");
    for (const auto& e : cb.entries)
        if (e.size() != channels.n_irs)
            throw std::invalid_argument("build_rate_table: codebook/channel dimension mismatch");

    const double s2 = cfg.sigma_s2();
    const double n2 = cfg.sigma_n2();

    RateTable t;
    t.n_ue = n_ue;
    t.n_codewords = cb.size();
    t.n_carriers = channels.n_carriers;
    t.rates.assign(static_cast<std::size_t>(n_ue) * cb.size() * channels.n_carriers, 0.0);
    t.cont_rate.assign(static_cast<std::size_t>(n_ue) * channels.n_carriers, 0.0);
    t.proj_codeword.assign(static_cast<std::size_t>(n_ue) * channels.n_carriers, 0);

    // Codeword coefficients are shared across all (ue, carrier) cells.
    std::vector<arma::cx_vec> coeffs;
    coeffs.reserve(cb.size());
    for (const auto& e : cb.entries)
        coeffs.push_back(e.coefficients());

    parallel_for(static_cast<std::size_t>(n_ue), n_threads, [&](std::size_t uk) {
        const int k = static_cast<int>(uk);
        for (int i = 0; i < channels.n_carriers; ++i) {
            const arma::cx_vec beamformed = channels.h_gi[i] * channels.w_gnb;
            // Effective per-element matrix: column n is g_n * (H w)_n, so the
            // cascade for codeword c is just a matvec with its coefficients.
            arma::cx_mat eff = channels.g(k, i);
            for (int n = 0; n < channels.n_irs; ++n)
                eff.col(n) *= beamformed[n];

            auto cell_rate = [&](const arma::cx_vec& phi) {
                const double gain2 = std::norm(arma::norm(eff * phi));
                return gain2 == 0.0 ? 0.0 : std::log2(1.0 + gain2 * s2 / n2);
            };

            const ContinuousConfig oc = optimal_continuous_config(channels, k, i);
            arma::cx_vec cont_phi(channels.n_irs);
            for (int n = 0; n < channels.n_irs; ++n)
                cont_phi[n] = std::polar(1.0, oc.phases[n]);
            t.cont_rate[uk * channels.n_carriers + i] = cell_rate(cont_phi);
            const int proj = map_to_codebook(oc.phases, cb);
            t.proj_codeword[uk * channels.n_carriers + i] = proj;

            if (mode == TableMode::kExhaustive) {
                for (int c = 0; c < cb.size(); ++c)
                    t.rate(k, c, i) = cell_rate(coeffs[c]);
            } else {
                t.rate(k, proj, i) = cell_rate(coeffs[proj]);
            }
        }
    });
    return t;
}

void write_rate_table_csv(const RateTable& table, std::ostream& out)
{
    out << "ue,codeword,carrier,rate\n";
    char buf[64];
    for (int k = 0; k < table.n_ue; ++k)
        for (int c = 0; c < table.n_codewords; ++c)
            for (int i = 0; i < table.n_carriers; ++i) {
                std::snprintf(buf, sizeof(buf), "%.17g", table.rate(k, c, i));
                out << k << ',' << c << ',' << i << ',' << buf << '\n';
            }
}

} // namespace irsched
