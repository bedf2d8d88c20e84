#include "flexisim/errors.hpp"

namespace flexisim {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::duplicate_id: return "DuplicateId";
        case Errc::dangling_reference: return "DanglingReference";
        case Errc::empty_topology: return "EmptyTopology";
        case Errc::time_in_past: return "TimeInPast";
        case Errc::wired_profile: return "WiredProfile";
        case Errc::unsupported_technology: return "UnsupportedTechnology";
        case Errc::infeasible: return "Infeasible";
        case Errc::not_supported: return "NotSupported";
        case Errc::not_authorized: return "NotAuthorized";
        case Errc::no_gateway_in_range: return "NoGatewayInRange";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::no_ranging_support: return "NoRangingSupport";
        case Errc::collinear_anchors: return "CollinearAnchors";
        case Errc::too_few_anchors: return "TooFewAnchors";
        case Errc::no_convergence: return "NoConvergence";
        case Errc::empty_input: return "EmptyInput";
        case Errc::stale_estimate: return "StaleEstimate";
        case Errc::non_positive_dt: return "NonPositiveDt";
        case Errc::expired_session: return "ExpiredSession";
        case Errc::invalid_token: return "InvalidToken";
        case Errc::unknown_bundle: return "UnknownBundle";
        case Errc::asset_not_operational: return "AssetNotOperational";
        case Errc::topology_invalid_after_change: return "TopologyInvalidAfterChange";
        case Errc::parse_error: return "ParseError";
        case Errc::validation_error: return "ValidationError";
    }
    return "UnknownError";
}

} // namespace flexisim
