#pragma once

#include "wdrange/operators.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wdr {

/// Run configuration shared by the CLI subcommands. Line-oriented
/// `key = value` text grouped under [section] headers; see serialize_config
/// for the canonical layout.
struct RunConfig {
    double s = 0.5;
    int order = 64; // truncation degree N

    std::string psi = "one";
    std::string phi = "identity";

    int sweep_angles = 720;
    int grid_radial = 64;
    int grid_angular = 128;

    std::uint64_t seed = 1;
    std::string out_dir = ".";
    bool allow_unverified_selfmap = false;
    bool include_slow = false;
    std::vector<std::string> suites; // empty = all

    bool operator==(const RunConfig&) const = default;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses config text; unknown keys and malformed values are errors.
RunConfig parse_config(const std::string& text);

// Validity checks beyond parsing: 0<s<1, N>=8, M>=16, R>=4, K>=8.
void validate_config(const RunConfig& config);

std::string serialize_config(const RunConfig& config);

// Symbol descriptors: "one" | "kernel gamma=<c>" | "series c0,c1,..." for psi;
// "identity" | "constant <c>" | "dilation <c>" | "mobius gamma=<c> alpha=<c>" |
// "series c0,c1,..." for phi. General phi series require the self-map
// attestation flag.
PsiSymbol parse_psi(const std::string& descriptor);
PhiSymbol parse_phi(const std::string& descriptor, bool allow_unverified_selfmap);

OperatorSpec spec_from_config(const RunConfig& config);

} // namespace wdr
