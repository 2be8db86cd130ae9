#include "wdrange/config.hpp"

#include "wdrange/format.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace wdr {

namespace {

std::string trim(const std::string& text) {
    const size_t begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const size_t end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, sep))
        parts.push_back(trim(item));
    return parts;
}

long parse_int(const std::string& text, const std::string& key) {
    try {
        size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size())
            throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ConfigError("config: bad integer for '" + key + "': " + text);
    }
}

double parse_real(const std::string& text, const std::string& key) {
    try {
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ConfigError("config: bad number for '" + key + "': " + text);
    }
}

bool parse_bool(const std::string& text, const std::string& key) {
    if (text == "true" || text == "1")
        return true;
    if (text == "false" || text == "0")
        return false;
    throw ConfigError("config: bad boolean for '" + key + "': " + text);
}

cplx parse_complex_or_throw(const std::string& text, const std::string& context) {
    try {
        return parse_complex(text);
    } catch (const std::exception&) {
        throw ConfigError("config: bad complex value in " + context + ": " + text);
    }
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    std::string section = "space";
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (const size_t hash = line.find('#'); hash != std::string::npos)
            line = trim(line.substr(0, hash));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: malformed section header at line " +
                                  std::to_string(line_no));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " +
                              std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string qualified = section + "." + key;

        if (qualified == "space.s")
            config.s = parse_real(value, qualified);
        else if (qualified == "space.n")
            config.order = static_cast<int>(parse_int(value, qualified));
        else if (qualified == "symbols.psi")
            config.psi = value;
        else if (qualified == "symbols.phi")
            config.phi = value;
        else if (qualified == "sweep.angles")
            config.sweep_angles = static_cast<int>(parse_int(value, qualified));
        else if (qualified == "grid.radial")
            config.grid_radial = static_cast<int>(parse_int(value, qualified));
        else if (qualified == "grid.angular")
            config.grid_angular = static_cast<int>(parse_int(value, qualified));
        else if (qualified == "run.seed")
            config.seed = static_cast<std::uint64_t>(parse_int(value, qualified));
        else if (qualified == "run.out")
            config.out_dir = value;
        else if (qualified == "run.allow_unverified_selfmap")
            config.allow_unverified_selfmap = parse_bool(value, qualified);
        else if (qualified == "verify.include_slow")
            config.include_slow = parse_bool(value, qualified);
        else if (qualified == "verify.suites")
            config.suites = value.empty() ? std::vector<std::string>{} : split(value, ',');
        else
            throw ConfigError("config: unknown key '" + qualified + "' at line " +
                              std::to_string(line_no));
    }
    return config;
}

void validate_config(const RunConfig& config) {
    if (!(config.s > 0.0 && config.s < 1.0))
        throw ConfigError("config: s must lie in (0,1)");
    if (config.order < 8)
        throw ConfigError("config: n (truncation order) must be >= 8");
    if (config.sweep_angles < 16)
        throw ConfigError("config: sweep.angles must be >= 16");
    if (config.grid_radial < 4)
        throw ConfigError("config: grid.radial must be >= 4");
    if (config.grid_angular < 8)
        throw ConfigError("config: grid.angular must be >= 8");
}

std::string serialize_config(const RunConfig& config) {
    std::ostringstream out;
    out << "[space]\n";
    out << "s = " << format_double(config.s) << "\n";
    out << "n = " << config.order << "\n";
    out << "\n[symbols]\n";
    out << "psi = " << config.psi << "\n";
    out << "phi = " << config.phi << "\n";
    out << "\n[sweep]\n";
    out << "angles = " << config.sweep_angles << "\n";
    out << "\n[grid]\n";
    out << "radial = " << config.grid_radial << "\n";
    out << "angular = " << config.grid_angular << "\n";
    out << "\n[run]\n";
    out << "seed = " << config.seed << "\n";
    out << "out = " << config.out_dir << "\n";
    out << "allow_unverified_selfmap = "
        << (config.allow_unverified_selfmap ? "true" : "false") << "\n";
    out << "\n[verify]\n";
    out << "include_slow = " << (config.include_slow ? "true" : "false") << "\n";
    out << "suites = ";
    for (size_t i = 0; i < config.suites.size(); ++i) {
        if (i)
            out << ",";
        out << config.suites[i];
    }
    out << "\n";
    return out.str();
}

namespace {

// "name key=value ..." or "name v0,v1,..."
struct Descriptor {
    std::string name;
    std::string rest;
};

Descriptor split_descriptor(const std::string& text) {
    const std::string trimmed = trim(text);
    const size_t space = trimmed.find(' ');
    if (space == std::string::npos)
        return {trimmed, ""};
    return {trimmed.substr(0, space), trim(trimmed.substr(space + 1))};
}

cplx named_arg(const std::string& rest, const std::string& name,
               const std::string& context) {
    for (const std::string& token : split(rest, ' ')) {
        if (token.rfind(name + "=", 0) == 0)
            return parse_complex_or_throw(token.substr(name.size() + 1), context);
    }
    throw ConfigError("config: missing '" + name + "=' in " + context);
}

PowerSeries coefficient_list(const std::string& rest, const std::string& context) {
    const std::vector<std::string> parts = split(rest, ',');
    if (parts.empty())
        throw ConfigError("config: empty coefficient list in " + context);
    std::vector<cplx> coeffs;
    coeffs.reserve(parts.size());
    for (const std::string& p : parts)
        coeffs.push_back(parse_complex_or_throw(p, context));
    return PowerSeries(std::move(coeffs));
}

} // namespace

PsiSymbol parse_psi(const std::string& descriptor) {
    const auto [name, rest] = split_descriptor(descriptor);
    if (name == "one")
        return PsiSymbol::one();
    if (name == "kernel")
        return PsiSymbol::normalized_kernel(named_arg(rest, "gamma", "psi descriptor"));
    if (name == "series")
        return PsiSymbol::general(coefficient_list(rest, "psi descriptor"));
    throw ConfigError("config: unknown psi descriptor '" + name + "'");
}

PhiSymbol parse_phi(const std::string& descriptor, bool allow_unverified_selfmap) {
    const auto [name, rest] = split_descriptor(descriptor);
    if (name == "identity")
        return PhiSymbol::identity();
    if (name == "constant")
        return PhiSymbol::constant(parse_complex_or_throw(rest, "phi descriptor"));
    if (name == "dilation")
        return PhiSymbol::dilation(parse_complex_or_throw(rest, "phi descriptor"));
    if (name == "mobius")
        return PhiSymbol::mobius(named_arg(rest, "gamma", "phi descriptor"),
                                 named_arg(rest, "alpha", "phi descriptor"));
    if (name == "series") {
        if (!allow_unverified_selfmap)
            throw ConfigError(
                "config: general phi series needs --allow-unverified-selfmap "
                "(the self-map property is not checked)");
        return PhiSymbol::general(coefficient_list(rest, "phi descriptor"),
                                  /*attested_self_map=*/true);
    }
    throw ConfigError("config: unknown phi descriptor '" + name + "'");
}

OperatorSpec spec_from_config(const RunConfig& config) {
    validate_config(config);
    return OperatorSpec{parse_psi(config.psi),
                        parse_phi(config.phi, config.allow_unverified_selfmap),
                        SpaceParam(config.s), config.order};
}

} // namespace wdr
