#pragma once

#include <stdexcept>
#include <string>

namespace flexisim {

// One code per typed failure surfaced by the library. Outcomes that are
// legal results (an unattached device, an infeasible route) are modeled as
// values, not errors, and do not appear here.
enum class Errc {
    // topology / kernel
    duplicate_id,
    dangling_reference,
    empty_topology,
    time_in_past,
    // link model
    wired_profile,
    unsupported_technology,
    // federation
    infeasible,
    not_supported,
    not_authorized,
    // flow routing
    no_gateway_in_range,
    // localization
    out_of_range,
    no_ranging_support,
    collinear_anchors,
    too_few_anchors,
    no_convergence,
    empty_input,
    stale_estimate,
    non_positive_dt,
    // security
    expired_session,
    invalid_token,
    // management
    unknown_bundle,
    asset_not_operational,
    topology_invalid_after_change,
    // scenario ingestion
    parse_error,
    validation_error,
};

const char* errc_name(Errc code);

class SimError : public std::runtime_error {
  public:
    SimError(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw SimError(code, std::string(errc_name(code)) + ": " + message);
}

} // namespace flexisim
