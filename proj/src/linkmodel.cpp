#include "flexisim/linkmodel.hpp"

#include <array>
#include <cmath>

namespace flexisim::link {

namespace {

struct TechName {
    Technology tech;
    std::string_view name;
};

constexpr std::array<TechName, 11> kTechNames = {{
    {Technology::nr_embb, "nr_embb"},
    {Technology::nr_urllc, "nr_urllc"},
    {Technology::nr_mmtc, "nr_mmtc"},
    {Technology::lte, "lte"},
    {Technology::wifi, "wifi"},
    {Technology::bluetooth, "bluetooth"},
    {Technology::lora, "lora"},
    {Technology::mioty, "mioty"},
    {Technology::eth, "eth"},
    {Technology::industrial_eth, "industrial_eth"},
    {Technology::fieldbus, "fieldbus"},
}};

constexpr double kReferenceDistanceM = 1.0;

} // namespace

std::string_view technology_name(Technology t) {
    for (const auto& e : kTechNames) {
        if (e.tech == t) return e.name;
    }
    return "unknown";
}

std::optional<Technology> technology_from_name(std::string_view name) {
    for (const auto& e : kTechNames) {
        if (e.name == name) return e.tech;
    }
    return std::nullopt;
}

bool is_5g(Technology t) {
    return t == Technology::nr_embb || t == Technology::nr_urllc || t == Technology::nr_mmtc;
}

void LinkTechnologyProfile::validate() const {
    const std::string tech(technology_name(name));
    if (medium == Medium::wireless && (ple < 1.6 || ple > 6.0)) {
        fail(Errc::validation_error, "profile " + tech + ": ple must be in [1.6, 6]");
    }
    if (capacity_mbps <= 0.0) {
        fail(Errc::validation_error, "profile " + tech + ": capacity_mbps must be > 0");
    }
    if (per_hop_reliability <= 0.0 || per_hop_reliability > 1.0) {
        fail(Errc::validation_error, "profile " + tech + ": per_hop_reliability must be in (0, 1]");
    }
    if (supports_ranging && range_sigma_m <= 0.0) {
        fail(Errc::validation_error, "profile " + tech + ": range_sigma_m must be > 0 when ranging");
    }
    if (base_latency_ms < 0.0 || energy_per_byte_uj < 0.0) {
        fail(Errc::validation_error, "profile " + tech + ": latency and energy must be >= 0");
    }
    if (congestion_knee <= 0.0 || congestion_knee > 1.0 || congestion_slope < 0.0) {
        fail(Errc::validation_error, "profile " + tech + ": bad congestion parameters");
    }
}

PathLossResult path_loss(const LinkTechnologyProfile& profile, double distance_m) {
    if (profile.medium == Medium::wired) {
        fail(Errc::wired_profile, "path loss undefined for wired profile " +
                                      std::string(technology_name(profile.name)));
    }
    PathLossResult result;
    double d = distance_m;
    if (d < kReferenceDistanceM) {
        d = kReferenceDistanceM;
        result.clamped_to_reference = true;
    }
    result.loss_db = profile.pl0_db + 10.0 * profile.ple * std::log10(d / kReferenceDistanceM);
    return result;
}

double wireless_margin_db(const LinkTechnologyProfile& profile, double distance_m) {
    return profile.tx_power_dbm - path_loss(profile, distance_m).loss_db -
           profile.rx_sensitivity_dbm;
}

double max_range_m(const LinkTechnologyProfile& profile) {
    if (profile.medium == Medium::wired) return 0.0;
    double budget = profile.tx_power_dbm - profile.rx_sensitivity_dbm - profile.pl0_db;
    if (budget < 0.0) return 0.0;
    return kReferenceDistanceM * std::pow(10.0, budget / (10.0 * profile.ple));
}

LinkMetrics link_metrics(const LinkTechnologyProfile& profile, double offered_load_mbps) {
    LinkMetrics m;
    const double offered = std::max(0.0, offered_load_mbps);
    const double capacity = profile.capacity_mbps;
    m.delivered_mbps = std::min(offered, capacity);
    const double utilization = offered / capacity;
    m.latency_ms = profile.base_latency_ms *
                   (1.0 + std::max(0.0, utilization - profile.congestion_knee) *
                              profile.congestion_slope);
    double overflow_fraction = offered > capacity ? (offered - capacity) / offered : 0.0;
    m.loss_prob = std::min(1.0, (1.0 - profile.per_hop_reliability) + overflow_fraction);
    return m;
}

double energy_cost_uj(const LinkTechnologyProfile& profile, double bytes) {
    return profile.energy_per_byte_uj * std::max(0.0, bytes);
}

const LinkTechnologyProfile& ProfileTable::get(Technology t) const {
    const LinkTechnologyProfile* p = find(t);
    if (p == nullptr) {
        fail(Errc::unsupported_technology,
             "no profile for technology " + std::string(technology_name(t)));
    }
    return *p;
}

const LinkTechnologyProfile* ProfileTable::find(Technology t) const {
    auto it = profiles_.find(t);
    return it == profiles_.end() ? nullptr : &it->second;
}

void ProfileTable::set(const LinkTechnologyProfile& profile) {
    profile.validate();
    profiles_[profile.name] = profile;
}

ProfileTable default_profiles() {
    ProfileTable table;
    using T = Technology;
    using M = Medium;

    auto wireless = [](T t, double pl0, double ple, double tx, double sens, double cap,
                       double lat, double rel, double energy, bool ranging, double sigma) {
        LinkTechnologyProfile p;
        p.name = t;
        p.medium = M::wireless;
        p.pl0_db = pl0;
        p.ple = ple;
        p.tx_power_dbm = tx;
        p.rx_sensitivity_dbm = sens;
        p.capacity_mbps = cap;
        p.base_latency_ms = lat;
        p.per_hop_reliability = rel;
        p.energy_per_byte_uj = energy;
        p.supports_ranging = ranging;
        p.range_sigma_m = sigma;
        return p;
    };
    auto wired = [](T t, double cap, double lat, double rel, double energy) {
        LinkTechnologyProfile p;
        p.name = t;
        p.medium = M::wired;
        p.capacity_mbps = cap;
        p.base_latency_ms = lat;
        p.per_hop_reliability = rel;
        p.energy_per_byte_uj = energy;
        return p;
    };

    table.set(wireless(T::nr_embb, 45, 2.5, 23, -85, 400, 10, 0.999, 0.15, true, 0.5));
    table.set(wireless(T::nr_urllc, 45, 2.5, 23, -85, 50, 1, 0.99999, 0.2, true, 0.5));
    table.set(wireless(T::nr_mmtc, 45, 2.5, 20, -95, 1, 50, 0.99, 0.08, true, 0.5));
    table.set(wireless(T::lte, 43, 2.6, 23, -88, 100, 25, 0.995, 0.18, false, 0.0));
    table.set(wireless(T::wifi, 46, 2.8, 20, -82, 300, 5, 0.99, 0.12, true, 2.0));
    table.set(wireless(T::bluetooth, 50, 2.2, 4, -80, 2, 15, 0.98, 0.3, true, 1.5));
    table.set(wireless(T::lora, 47, 2.9, 14, -137, 0.05, 400, 0.97, 0.02, false, 0.0));
    table.set(wireless(T::mioty, 47, 2.9, 14, -134, 0.01, 600, 0.98, 0.03, true, 3.0));
    table.set(wired(T::eth, 1000, 0.1, 0.999999, 0.001));
    table.set(wired(T::industrial_eth, 100, 0.5, 0.9999999, 0.002));
    table.set(wired(T::fieldbus, 12, 2, 0.99999, 0.005));
    return table;
}

} // namespace flexisim::link
