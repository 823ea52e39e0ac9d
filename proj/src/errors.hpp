#pragma once

#include <stdexcept>
#include <string>

namespace dhtee {

enum class Errc {
    // codec
    empty_leaves,
    index_out_of_range,
    decode_malformed,
    // crypto
    invalid_public_share,
    authentication_failure,
    // registry
    duplicate_attribute,
    unknown_attribute,
    // tee
    device_unknown,
    not_initialized,
    unsupported_scheme,
    duplicate_scheme,
    // ledger / protocol
    all_nodes_unreachable,
    no_quorum,
    not_enrolled,
    timeout,
    verification_failed,
    // enrollment
    endorsement_invalid,
    duplicate_device,
    key_mismatch,
    insufficient_witnesses,
    // simnet / cli
    unknown_actor,
    config_invalid,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace dhtee
