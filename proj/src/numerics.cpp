#include "cheeger/numerics.hpp"

#include <cstdlib>
#include <sstream>

namespace cheeger {

namespace {

double parse_positive(const std::string& token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw DomainError("tolerance: cannot parse '" + token + "'");
    }
    if (used != token.size() || !(v > 0.0) || !std::isfinite(v))
        throw DomainError("tolerance: expected a positive number, got '" + token + "'");
    return v;
}

} // namespace

Tolerances parse_tolerances(const std::string& text, Tolerances base) {
    if (text.find('=') == std::string::npos) {
        const double v = parse_positive(text);
        base.quad = v;
        base.root = v;
        base.minimize = v;
        base.ode = std::min(base.ode, v);
        return base;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw DomainError("tolerance: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const double v = parse_positive(item.substr(eq + 1));
        if (key == "quad")
            base.quad = v;
        else if (key == "root")
            base.root = v;
        else if (key == "min" || key == "minimize")
            base.minimize = v;
        else if (key == "ode")
            base.ode = v;
        else
            throw DomainError("tolerance: unknown key '" + key + "'");
    }
    return base;
}

Tolerances tolerances_from_env(Tolerances base) {
    if (const char* env = std::getenv("CHEEGER_TOL"); env != nullptr && *env != '\0')
        return parse_tolerances(env, base);
    return base;
}

} // namespace cheeger
