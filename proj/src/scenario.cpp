// SPDX-License-Identifier: Apache-2.0
//
// secfd - link-level simulator and beamforming designer for secure
// full-duplex integrated sensing and communication
// Copyright (C) 2026 the secfd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace secfd {

using nlohmann::json;

void ScenarioConfig::validate() const {
    std::vector<std::string> bad;
    auto req = [&](bool ok, const std::string& msg) {
        if (!ok) bad.push_back(msg);
    };

    req(n_tx >= 1, "arrays.n_tx must be >= 1");
    req(n_rx >= 1, "arrays.n_rx must be >= 1");
    req(wavelength > 0.0, "arrays.wavelength must be > 0");
    req(tx_spacing > 0.0, "arrays.tx_spacing must be > 0");

    req(n_dl >= 1, "population.n_dl must be >= 1");
    req(n_ul >= 1, "population.n_ul must be >= 1");
    req(n_eve >= 1, "population.n_eve must be >= 1");
    req(static_cast<int>(eve_angles_deg.size()) == n_eve,
        "population.eve_angles_deg must list n_eve angles");
    for (double a : eve_angles_deg)
        req(std::abs(a) < 90.0, "eve angle " + std::to_string(a) + " outside (-90, 90)");
    for (size_t i = 0; i < eve_angles_deg.size(); ++i)
        for (size_t j = i + 1; j < eve_angles_deg.size(); ++j)
            req(eve_angles_deg[i] != eve_angles_deg[j],
                "eve angles must be pairwise distinct (co-located eavesdroppers rejected)");

    req(si_residual_power >= 0.0, "channel.si_residual_power must be >= 0");
    req(clutter_power >= 0.0, "channel.clutter_power must be >= 0");
    req(rician_kappa >= 0.0, "channel.rician_kappa must be >= 0");

    req(noise_bs > 0.0, "noise.bs must be > 0");
    req(static_cast<int>(noise_dl.size()) == n_dl, "noise.dl must list n_dl powers");
    for (double v : noise_dl) req(v > 0.0, "noise.dl entries must be > 0");
    req(static_cast<int>(noise_eve.size()) == n_eve, "noise.eve must list n_eve powers");
    for (double v : noise_eve) req(v > 0.0, "noise.eve entries must be > 0");

    req(static_cast<int>(eve_pathloss.size()) == n_eve, "eves.pathloss must list n_eve gains");
    req(static_cast<int>(echo_gains.size()) == n_eve, "eves.echo_gains must list n_eve gains");

    req(eve_sinr_cap_dl > 0.0, "design.eve_sinr_cap_dl must be > 0");
    req(eve_sinr_cap_ul > 0.0, "design.eve_sinr_cap_ul must be > 0");
    req(mainlobe_halfwidth_deg > 0.0, "design.mainlobe_halfwidth_deg must be > 0");
    req(lobe_grid_step_deg > 0.0 && lobe_grid_step_deg <= 10.0,
        "design.lobe_grid_step_deg must be in (0, 10]");
    if (static_cast<int>(eve_angles_deg.size()) == n_eve) {
        for (double a : eve_angles_deg) {
            req(a - mainlobe_halfwidth_deg > -90.0 && a + mainlobe_halfwidth_deg < 90.0,
                "mainlobe around " + std::to_string(a) + " deg reaches past +-90");
        }
        for (size_t i = 0; i < eve_angles_deg.size(); ++i)
            for (size_t j = i + 1; j < eve_angles_deg.size(); ++j)
                req(std::abs(eve_angles_deg[i] - eve_angles_deg[j]) > 2.0 * mainlobe_halfwidth_deg,
                    "mainlobe intervals overlap; reduce design.mainlobe_halfwidth_deg");
    }

    if (!bad.empty()) {
        std::ostringstream os;
        os << "invalid configuration:";
        for (const auto& m : bad) os << "\n  - " << m;
        throw ConfigError(os.str());
    }
}

namespace {

cplx parse_complex(const json& v, const std::string& where) {
    if (v.is_number()) return cplx(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return cplx(v[0].get<double>(), v[1].get<double>());
    throw ConfigError(where + ": expected a number or [re, im] pair");
}

std::vector<cplx> parse_complex_list(const json& v, int count, const std::string& where) {
    // A scalar (or one [re, im] pair) broadcasts to all entries.
    if (v.is_number() || (v.is_array() && v.size() == 2 && v[0].is_number()))
        return std::vector<cplx>(count, parse_complex(v, where));
    if (!v.is_array() || static_cast<int>(v.size()) != count)
        throw ConfigError(where + ": expected a scalar or a list of length " + std::to_string(count));
    std::vector<cplx> out;
    out.reserve(count);
    for (const auto& e : v) out.push_back(parse_complex(e, where));
    return out;
}

std::vector<double> parse_real_list(const json& v, int count, const std::string& where) {
    if (v.is_number()) return std::vector<double>(count, v.get<double>());
    if (!v.is_array() || static_cast<int>(v.size()) != count)
        throw ConfigError(where + ": expected a scalar or a list of length " + std::to_string(count));
    std::vector<double> out;
    out.reserve(count);
    for (const auto& e : v) {
        if (!e.is_number()) throw ConfigError(where + ": entries must be numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

const json* section(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) return nullptr;
    if (!it->is_object()) throw ConfigError(std::string(name) + " must be an object");
    return &*it;
}

void reject_unknown(const json& sec, const char* name, std::initializer_list<const char*> known) {
    for (auto it = sec.begin(); it != sec.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw ConfigError("unknown key '" + it.key() + "' in section '" + name + "'");
    }
}

template <typename T>
void fetch(const json* sec, const char* key, T& slot) {
    if (!sec) return;
    auto it = sec->find(key);
    if (it == sec->end()) return;
    try {
        slot = it->get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("key '") + key + "' has the wrong type");
    }
}

}  // namespace

ScenarioConfig config_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("configuration root must be a JSON object");
    static constexpr const char* top[] = {"arrays", "population", "channel",
                                          "noise",  "eves",       "design", "sweep"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : top)
            if (it.key() == k) ok = true;
        if (!ok) throw ConfigError("unknown top-level section '" + it.key() + "'");
    }

    ScenarioConfig cfg;

    const json* arrays = section(j, "arrays");
    if (arrays) {
        reject_unknown(*arrays, "arrays", {"n_tx", "n_rx", "wavelength", "tx_spacing"});
        fetch(arrays, "n_tx", cfg.n_tx);
        fetch(arrays, "n_rx", cfg.n_rx);
        fetch(arrays, "wavelength", cfg.wavelength);
        fetch(arrays, "tx_spacing", cfg.tx_spacing);
    }

    const json* pop = section(j, "population");
    if (pop) {
        reject_unknown(*pop, "population", {"n_dl", "n_ul", "n_eve", "eve_angles_deg"});
        fetch(pop, "n_dl", cfg.n_dl);
        fetch(pop, "n_ul", cfg.n_ul);
        fetch(pop, "n_eve", cfg.n_eve);
    }

    // Counts are known now; size every per-entity default before overrides.
    cfg.eve_angles_deg.resize(cfg.n_eve);
    for (int p = 0; p < cfg.n_eve; ++p)
        cfg.eve_angles_deg[p] = (cfg.n_eve == 1) ? -40.0 : -40.0 + 65.0 * p / (cfg.n_eve - 1);
    cfg.noise_dl.assign(cfg.n_dl, 1.0);
    cfg.noise_eve.assign(cfg.n_eve, 1.0);
    cfg.eve_pathloss.assign(cfg.n_eve, cplx(0.5, 0.0));
    cfg.echo_gains.assign(cfg.n_eve, cplx(0.2, 0.0));

    if (pop && pop->contains("eve_angles_deg"))
        cfg.eve_angles_deg = parse_real_list((*pop)["eve_angles_deg"], cfg.n_eve,
                                             "population.eve_angles_deg");

    const json* chan = section(j, "channel");
    if (chan) {
        reject_unknown(*chan, "channel",
                       {"model", "rician_kappa", "si_residual_power", "clutter_power", "seed"});
        if (chan->contains("model")) {
            const std::string m = (*chan)["model"].get<std::string>();
            if (m == "rayleigh")
                cfg.channel_model = ChannelModel::rayleigh;
            else if (m == "rician")
                cfg.channel_model = ChannelModel::rician;
            else
                throw ConfigError("channel.model must be 'rayleigh' or 'rician'");
        }
        fetch(chan, "rician_kappa", cfg.rician_kappa);
        fetch(chan, "si_residual_power", cfg.si_residual_power);
        fetch(chan, "clutter_power", cfg.clutter_power);
        fetch(chan, "seed", cfg.seed);
    }

    const json* noise = section(j, "noise");
    if (noise) {
        reject_unknown(*noise, "noise", {"bs", "dl", "eve"});
        fetch(noise, "bs", cfg.noise_bs);
        if (noise->contains("dl"))
            cfg.noise_dl = parse_real_list((*noise)["dl"], cfg.n_dl, "noise.dl");
        if (noise->contains("eve"))
            cfg.noise_eve = parse_real_list((*noise)["eve"], cfg.n_eve, "noise.eve");
    }

    const json* eves = section(j, "eves");
    if (eves) {
        reject_unknown(*eves, "eves", {"pathloss", "echo_gains"});
        if (eves->contains("pathloss"))
            cfg.eve_pathloss = parse_complex_list((*eves)["pathloss"], cfg.n_eve, "eves.pathloss");
        if (eves->contains("echo_gains"))
            cfg.echo_gains = parse_complex_list((*eves)["echo_gains"], cfg.n_eve, "eves.echo_gains");
    }

    const json* design = section(j, "design");
    if (design) {
        reject_unknown(*design, "design",
                       {"eve_sinr_cap_dl", "eve_sinr_cap_ul", "mainlobe_halfwidth_deg",
                        "lobe_grid_step_deg"});
        fetch(design, "eve_sinr_cap_dl", cfg.eve_sinr_cap_dl);
        fetch(design, "eve_sinr_cap_ul", cfg.eve_sinr_cap_ul);
        fetch(design, "mainlobe_halfwidth_deg", cfg.mainlobe_halfwidth_deg);
        fetch(design, "lobe_grid_step_deg", cfg.lobe_grid_step_deg);
    }

    cfg.validate();
    return cfg;
}

ScenarioConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("configuration is not valid JSON: " + std::string(e.what()));
    }
    return config_from_json(j);
}

nlohmann::json config_to_json(const ScenarioConfig& cfg) {
    auto cpack = [](const std::vector<cplx>& v) {
        json out = json::array();
        for (const auto& z : v) out.push_back({z.real(), z.imag()});
        return out;
    };
    json j;
    j["arrays"] = {{"n_tx", cfg.n_tx},
                   {"n_rx", cfg.n_rx},
                   {"wavelength", cfg.wavelength},
                   {"tx_spacing", cfg.tx_spacing}};
    j["population"] = {{"n_dl", cfg.n_dl},
                       {"n_ul", cfg.n_ul},
                       {"n_eve", cfg.n_eve},
                       {"eve_angles_deg", cfg.eve_angles_deg}};
    j["channel"] = {{"model", cfg.channel_model == ChannelModel::rayleigh ? "rayleigh" : "rician"},
                    {"rician_kappa", cfg.rician_kappa},
                    {"si_residual_power", cfg.si_residual_power},
                    {"clutter_power", cfg.clutter_power},
                    {"seed", cfg.seed}};
    j["noise"] = {{"bs", cfg.noise_bs}, {"dl", cfg.noise_dl}, {"eve", cfg.noise_eve}};
    j["eves"] = {{"pathloss", cpack(cfg.eve_pathloss)}, {"echo_gains", cpack(cfg.echo_gains)}};
    j["design"] = {{"eve_sinr_cap_dl", cfg.eve_sinr_cap_dl},
                   {"eve_sinr_cap_ul", cfg.eve_sinr_cap_ul},
                   {"mainlobe_halfwidth_deg", cfg.mainlobe_halfwidth_deg},
                   {"lobe_grid_step_deg", cfg.lobe_grid_step_deg}};
    return j;
}

CVec steering_vector(double theta_deg, int n, double spacing_ratio) {
    if (n < 1) throw std::domain_error("steering_vector: n must be >= 1");
    if (spacing_ratio <= 0.0) throw std::domain_error("steering_vector: spacing_ratio must be > 0");
    if (!(std::abs(theta_deg) < 90.0))
        throw std::domain_error("steering_vector: |theta| must be < 90 degrees");
    const double s = std::sin(deg2rad(theta_deg));
    CVec a(n);
    for (int m = 0; m < n; ++m) {
        const double phase = 2.0 * kPi * spacing_ratio * m * s;
        a(m) = cplx(std::cos(phase), std::sin(phase));
    }
    a(0) = cplx(1.0, 0.0);
    return a;
}

CMat si_channel(const RMat& rx_pos, const RMat& tx_pos, double wavelength) {
    if (wavelength <= 0.0) throw std::domain_error("si_channel: wavelength must be > 0");
    if (rx_pos.rows() < 1 || tx_pos.rows() < 1)
        throw std::domain_error("si_channel: position lists must be nonempty");
    if (rx_pos.cols() != 3 || tx_pos.cols() != 3)
        throw std::domain_error("si_channel: positions must be 3-vectors");
    CMat h(rx_pos.rows(), tx_pos.rows());
    for (Eigen::Index i = 0; i < rx_pos.rows(); ++i) {
        for (Eigen::Index k = 0; k < tx_pos.rows(); ++k) {
            const double d = (rx_pos.row(i) - tx_pos.row(k)).norm();
            const double phase = 2.0 * kPi * d / wavelength;
            h(i, k) = cplx(std::cos(phase), std::sin(phase));
        }
    }
    return h;
}

namespace {

// One user channel column; rician mixes a random-angle steering vector with
// the scattered part so per-entry average power stays 1.
CVec draw_user_channel(Rng& rng, int n, const ScenarioConfig& cfg) {
    if (cfg.channel_model == ChannelModel::rician && cfg.rician_kappa > 0.0) {
        const double theta = rng.uniform(-80.0, 80.0);
        const double k = cfg.rician_kappa;
        const CVec los = steering_vector(theta, n, cfg.tx_spacing / cfg.wavelength);
        CVec nlos(n);
        for (int i = 0; i < n; ++i) nlos(i) = rng.cgaussian();
        return std::sqrt(k / (1.0 + k)) * los + std::sqrt(1.0 / (1.0 + k)) * nlos;
    }
    CVec h(n);
    for (int i = 0; i < n; ++i) h(i) = rng.cgaussian();
    return h;
}

}  // namespace

ChannelSet generate_channels(const ScenarioConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    ChannelSet cs;

    cs.h_dl.resize(cfg.n_tx, cfg.n_dl);
    for (int l = 0; l < cfg.n_dl; ++l) cs.h_dl.col(l) = draw_user_channel(rng, cfg.n_tx, cfg);

    cs.h_ul.resize(cfg.n_rx, cfg.n_ul);
    for (int k = 0; k < cfg.n_ul; ++k) cs.h_ul.col(k) = draw_user_channel(rng, cfg.n_rx, cfg);

    cs.g_eve_ul.resize(cfg.n_eve, cfg.n_ul);
    for (int p = 0; p < cfg.n_eve; ++p)
        for (int k = 0; k < cfg.n_ul; ++k) cs.g_eve_ul(p, k) = rng.cgaussian();

    cs.f_ul2dl.resize(cfg.n_dl, cfg.n_ul);
    for (int l = 0; l < cfg.n_dl; ++l)
        for (int k = 0; k < cfg.n_ul; ++k) cs.f_ul2dl(l, k) = rng.cgaussian();

    // Low-rank angular clutter; 8 angles per trial.
    constexpr int kClutterAngles = 8;
    const double ratio = cfg.tx_spacing / cfg.wavelength;
    CMat rc = CMat::Zero(cfg.n_rx, cfg.n_rx);
    for (int q = 0; q < kClutterAngles; ++q) {
        const double phi = rng.uniform(-80.0, 80.0);
        const CVec a = steering_vector(phi, cfg.n_rx, ratio);
        rc += a * a.adjoint();
    }
    cs.r_clutter = (cfg.clutter_power / kClutterAngles) * rc;
    if (cfg.clutter_power == 0.0) cs.r_clutter.setZero();

    // Colocated line arrays, one wavelength apart laterally; every tx/rx
    // element pair is at a strictly positive distance.
    RMat tx_pos(cfg.n_tx, 3), rx_pos(cfg.n_rx, 3);
    for (int i = 0; i < cfg.n_tx; ++i) tx_pos.row(i) << i * cfg.tx_spacing, 0.0, 0.0;
    for (int i = 0; i < cfg.n_rx; ++i) rx_pos.row(i) << i * cfg.tx_spacing, cfg.wavelength, 0.0;
    cs.h_si = si_channel(rx_pos, tx_pos, cfg.wavelength);

    return cs;
}

CMat effective_rx_mixing(const ChannelSet& cs, const ScenarioConfig& cfg) {
    const double ratio = cfg.tx_spacing / cfg.wavelength;
    CMat c = std::sqrt(cfg.si_residual_power) * cs.h_si;
    for (int p = 0; p < cfg.n_eve; ++p) {
        const CVec ar = steering_vector(cfg.eve_angles_deg[p], cfg.n_rx, ratio);
        const CVec at = steering_vector(cfg.eve_angles_deg[p], cfg.n_tx, ratio);
        c += cfg.echo_gains[p] * (ar * at.adjoint());
    }
    return c;
}

}  // namespace secfd
