#include "irsched/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "irsched/common.hpp"

namespace irsched {

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double ScenarioConfig::sigma_s2() const { return dbm_to_watt(tx_power_dbm) / F; }

double ScenarioConfig::sigma_n2() const
{
    return dbm_to_watt(noise_psd_dbm_hz) * (band_hz / F);
}

std::vector<double> ScenarioConfig::carriers() const
{
    // F sub-bands of width band_hz/F; each RB sits at its sub-band center.
    std::vector<double> f(F);
    const double lo = carrier_hz - band_hz / 2.0;
    for (int i = 0; i < F; ++i)
        f[i] = lo + band_hz * (i + 0.5) / F;
    return f;
}

std::vector<std::string> ScenarioConfig::check() const
{
    std::vector<std::string> v;
    auto fail = [&v](const std::string& msg) { v.push_back(msg); };

    if (K <= 0 || F <= 0)
        fail("K and F must be positive");
    if (F > 0 && K % F != 0)
        fail("K must be an integer multiple of F (got K=" + std::to_string(K) +
             ", F=" + std::to_string(F) + ")");
    if (F > 0 && (Z < 1 || Z > K / F))
        fail("Z must satisfy 1 <= Z <= K/F (got Z=" + std::to_string(Z) + ", K/F=" +
             std::to_string(F > 0 ? K / F : 0) + ")");
    if (n_gnb < 1 || n_ue < 1 || irs_rows < 1 || irs_cols < 1)
        fail("antenna/panel dimensions must be >= 1");
    if (b_irs < 1 || b_irs > 16)
        fail("b_irs must be in [1, 16]");
    if (b_codebook < 1 || b_codebook > 24)
        fail("b_codebook must be in [1, 24]");
    if (b_codebook > b_irs * n_irs())
        fail("b_codebook must not exceed b_irs * N_I (codebook larger than the phase grid)");
    if (m_training != 0 && m_training < 10 * K)
        fail("m_training must be >= 10*K (or 0 for auto)");
    if (carrier_hz <= 0 || band_hz <= 0)
        fail("carrier_hz and band_hz must be positive");
    if (cell_radius_m <= 0)
        fail("cell_radius_m must be positive");
    if (n_drops < 1)
        fail("n_drops must be >= 1");
    if (ga.population < 2)
        fail("ga.population must be >= 2");
    if (ga.generations < 0)
        fail("ga.generations must be >= 0");
    if (ga.mutation_rate < 0.0 || ga.mutation_rate > 1.0)
        fail("ga.mutation_rate must be in [0, 1]");
    if (ga.elitism < 1 || ga.elitism >= ga.population)
        fail("ga.elitism must be in [1, population)");
    return v;
}

void ScenarioConfig::validate_or_throw() const
{
    auto v = check();
    if (v.empty())
        return;
    std::ostringstream os;
    os << "invalid scenario config:";
    for (const auto& msg : v)
        os << "\n  - " << msg;
    throw std::invalid_argument(os.str());
}

namespace {

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& out)
{
    if (j.contains(key))
        out = j.at(key).get<T>();
}

} // namespace

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& j)
{
    if (!j.contains("schema_version"))
        throw std::invalid_argument("config missing schema_version");
    if (j.at("schema_version").get<int>() != 1)
        throw std::invalid_argument("unsupported config schema_version (expected 1)");

    ScenarioConfig c;
    read_field(j, "K", c.K);
    read_field(j, "F", c.F);
    read_field(j, "Z", c.Z);
    read_field(j, "n_gnb", c.n_gnb);
    read_field(j, "n_ue", c.n_ue);
    read_field(j, "irs_rows", c.irs_rows);
    read_field(j, "irs_cols", c.irs_cols);
    read_field(j, "b_irs", c.b_irs);
    read_field(j, "b_codebook", c.b_codebook);
    read_field(j, "carrier_hz", c.carrier_hz);
    read_field(j, "band_hz", c.band_hz);
    read_field(j, "tx_power_dbm", c.tx_power_dbm);
    read_field(j, "noise_psd_dbm_hz", c.noise_psd_dbm_hz);
    read_field(j, "cell_radius_m", c.cell_radius_m);
    read_field(j, "gnb_pos_m", c.gnb_pos_m);
    read_field(j, "irs_pos_m", c.irs_pos_m);
    read_field(j, "m_training", c.m_training);
    read_field(j, "n_drops", c.n_drops);
    read_field(j, "seed", c.seed);
    if (j.contains("ga_params")) {
        const auto& g = j.at("ga_params");
        read_field(g, "population", c.ga.population);
        read_field(g, "generations", c.ga.generations);
        read_field(g, "mutation_rate", c.ga.mutation_rate);
        read_field(g, "elitism", c.ga.elitism);
    }
    return c;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

nlohmann::json ScenarioConfig::to_json() const
{
    nlohmann::json j;
    j["schema_version"] = 1;
    j["K"] = K;
    j["F"] = F;
    j["Z"] = Z;
    j["n_gnb"] = n_gnb;
    j["n_ue"] = n_ue;
    j["irs_rows"] = irs_rows;
    j["irs_cols"] = irs_cols;
    j["b_irs"] = b_irs;
    j["b_codebook"] = b_codebook;
    j["carrier_hz"] = carrier_hz;
    j["band_hz"] = band_hz;
    j["tx_power_dbm"] = tx_power_dbm;
    j["noise_psd_dbm_hz"] = noise_psd_dbm_hz;
    j["cell_radius_m"] = cell_radius_m;
    j["gnb_pos_m"] = gnb_pos_m;
    j["irs_pos_m"] = irs_pos_m;
    j["m_training"] = m_training;
    j["n_drops"] = n_drops;
    j["seed"] = seed;
    j["ga_params"] = {{"population", ga.population},
                      {"generations", ga.generations},
                      {"mutation_rate", ga.mutation_rate},
                      {"elitism", ga.elitism}};
    return j;
}

} // namespace irsched
