#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "flexisim/errors.hpp"

namespace flexisim::link {

enum class Technology {
    nr_embb,
    nr_urllc,
    nr_mmtc,
    lte,
    wifi,
    bluetooth,
    lora,
    mioty,
    eth,
    industrial_eth,
    fieldbus,
};

enum class Medium { wireless, wired };

std::string_view technology_name(Technology t);
std::optional<Technology> technology_from_name(std::string_view name);
bool is_5g(Technology t);

// Parametric model of one access technology. For wireless entries the link
// budget is pl0_db + 10*ple*log10(d) against tx_power_dbm/rx_sensitivity_dbm;
// wired entries ignore the radio fields.
struct LinkTechnologyProfile {
    Technology name = Technology::eth;
    Medium medium = Medium::wired;
    double pl0_db = 0.0;            // path loss at d0 = 1 m
    double ple = 2.0;               // path-loss exponent
    double tx_power_dbm = 0.0;
    double rx_sensitivity_dbm = 0.0;
    double capacity_mbps = 0.0;
    double base_latency_ms = 0.0;
    double per_hop_reliability = 1.0;
    double energy_per_byte_uj = 0.0;
    bool supports_ranging = false;
    double range_sigma_m = 0.0;
    // Congestion proxy: latency grows linearly above the utilization knee.
    double congestion_knee = 0.7;
    double congestion_slope = 5.0;

    friend bool operator==(const LinkTechnologyProfile&, const LinkTechnologyProfile&) = default;

    void validate() const; // throws SimError(validation_error)
};

struct PathLossResult {
    double loss_db = 0.0;
    bool clamped_to_reference = false; // distance below d0 was clamped
};

// Log-distance path loss; throws WiredProfile for wired technologies.
PathLossResult path_loss(const LinkTechnologyProfile& profile, double distance_m);

// Link margin in dB for a wireless hop of the given length; feasible iff >= 0.
double wireless_margin_db(const LinkTechnologyProfile& profile, double distance_m);

// Largest distance at which the link budget still closes.
double max_range_m(const LinkTechnologyProfile& profile);

struct LinkMetrics {
    double latency_ms = 0.0;
    double delivered_mbps = 0.0;
    double loss_prob = 0.0;
};

LinkMetrics link_metrics(const LinkTechnologyProfile& profile, double offered_load_mbps);

double energy_cost_uj(const LinkTechnologyProfile& profile, double bytes);

class ProfileTable {
  public:
    ProfileTable() = default;

    const LinkTechnologyProfile& get(Technology t) const;
    const LinkTechnologyProfile* find(Technology t) const;
    void set(const LinkTechnologyProfile& profile);
    const std::map<Technology, LinkTechnologyProfile>& all() const { return profiles_; }

    friend bool operator==(const ProfileTable&, const ProfileTable&) = default;

  private:
    std::map<Technology, LinkTechnologyProfile> profiles_;
};

// Built-in defaults for every technology. Values are illustrative defaults
// for a factory-scale deployment and can be overridden per scenario.
ProfileTable default_profiles();

} // namespace flexisim::link
