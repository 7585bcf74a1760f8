#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace lab {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <class T>
T parse_number(const std::string& text, const std::string& key)
{
    const std::string s = trim(text);
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ConfigError("config: bad value '" + text + "' for " + key);
    return value;
}

std::string format(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

template <class T>
std::string format(T v) requires std::is_integral_v<T>
{
    return std::to_string(v);
}

template <class T>
std::string format_list(const std::vector<T>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + format(values[i]);
    return out;
}

struct Field {
    std::string section;
    std::string key;
    std::function<void(const std::string&)> set;
    std::function<std::string()> get;
};

template <class T>
Field scalar(const std::string& section, const std::string& key, T& ref)
{
    const std::string name = section + "." + key;
    return {section, key, [&ref, name](const std::string& v) { ref = parse_number<T>(v, name); },
            [&ref] { return format(ref); }};
}

Field text(const std::string& section, const std::string& key, std::string& ref)
{
    return {section, key, [&ref](const std::string& v) { ref = trim(v); }, [&ref] { return ref; }};
}

template <class T>
Field list(const std::string& section, const std::string& key, std::vector<T>& ref)
{
    const std::string name = section + "." + key;
    return {section, key,
            [&ref, name](const std::string& v) {
                ref.clear();
                for (const auto& item : split(v)) ref.push_back(parse_number<T>(item, name));
            },
            [&ref] { return format_list(ref); }};
}

std::vector<Field> fields(ExperimentConfig& c)
{
    return {
        text("experiment", "name", c.experiment),
        scalar("geometry", "r0", c.r0),
        scalar("geometry", "r1", c.r1),
        scalar("geometry", "m1", c.m1),
        text("truth", "kind", c.truth),
        scalar("truth", "kappa", c.kappa),
        scalar("truth", "rho", c.rho),
        scalar("truth", "rho_in", c.rho_in),
        scalar("truth", "rho_out", c.rho_out),
        scalar("truth", "seed", c.truth_seed),
        text("noise", "model", c.model),
        list("noise", "eps", c.eps),
        scalar("noise", "r", c.r),
        scalar("noise", "J", c.J),
        scalar("noise", "K", c.K),
        list("noise", "P", c.P),
        scalar("noise", "P_direct", c.P_direct),
        scalar("prior", "alpha", c.prior.alpha),
        scalar("prior", "ell", c.prior.ell),
        scalar("prior", "amplitude", c.prior.amplitude),
        scalar("prior", "n_modes", c.prior.n_modes),
        scalar("prior", "grid_n", c.grid_n),
        scalar("chain", "beta", c.beta),
        scalar("chain", "n_iter", c.n_iter),
        scalar("chain", "burn_in", c.burn_in),
        scalar("solver", "h", c.h),
        scalar("solver", "data_h", c.data_h),
        list("run", "seeds", c.seeds),
        scalar("run", "replicates", c.replicates),
        list("stability", "t", c.t),
        scalar("stability", "bump_cx", c.bump_cx),
        scalar("stability", "bump_cy", c.bump_cy),
        scalar("stability", "bump_radius", c.bump_radius),
        list("klcheck", "mu", c.mu),
        scalar("klcheck", "kappa", c.kl_kappa),
        scalar("klcheck", "eps", c.kl_eps),
        scalar("truncation", "eps", c.truncation_eps),
    };
}

void validate(const ExperimentConfig& c)
{
    static const std::set<std::string> experiments = {"recover", "stability", "lecam", "klcheck", "truncation"};
    if (!experiments.count(c.experiment)) throw ConfigError("config: unknown experiment '" + c.experiment + "'");
    static const std::set<std::string> truths = {"homogeneous", "concentric", "smooth_concentric", "prior"};
    if (!truths.count(c.truth)) throw ConfigError("config: unknown truth kind '" + c.truth + "'");
    if (c.model != "spectral" && c.model != "electrode") throw ConfigError("config: unknown noise model '" + c.model + "'");
    if (!(0 < c.r0 && c.r0 < c.r1 && c.r1 < 1)) throw ConfigError("config: need 0 < r0 < r1 < 1");
    if (!(c.m1 > 0 && c.m1 < 1)) throw ConfigError("config: m1 must lie in (0, 1)");
    if (c.J < 1 || c.K < 1) throw ConfigError("config: J and K must be positive");
    if (!(c.h > 0 && c.h < 0.5) || !(c.data_h > 0 && c.data_h < 0.5)) throw ConfigError("config: mesh sizes must lie in (0, 0.5)");
    if (c.grid_n < 9) throw ConfigError("config: grid_n must be at least 9");
    if (!(c.n_iter > c.burn_in && c.burn_in >= 0)) throw ConfigError("config: need n_iter > burn_in >= 0");
    if (!(c.beta > 0 && c.beta <= 1)) throw ConfigError("config: beta must lie in (0, 1]");
    if (c.replicates < 2) throw ConfigError("config: replicates must be at least 2");
    for (double e : c.eps)
        if (!(e > 0 && e <= 1)) throw ConfigError("config: every eps must lie in (0, 1]");
    for (int p : c.P)
        if (p < 1) throw ConfigError("config: electrode counts must be positive");
    try {
        c.prior.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

} // namespace

ExperimentConfig parse_config(std::istream& is)
{
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(is, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    ExperimentConfig c;
    auto table = fields(c);
    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            if (!body.data().empty()) throw ConfigError("config: key '" + section + "' outside any section");
            if (std::none_of(table.begin(), table.end(), [&](const Field& f) { return f.section == section; }))
                throw ConfigError("config: unknown section '" + section + "'");
            continue;
        }
        for (const auto& [key, value] : body) {
            auto it = std::find_if(table.begin(), table.end(),
                                   [&](const Field& f) { return f.section == section && f.key == key; });
            if (it == table.end()) throw ConfigError("config: unknown key '" + section + "." + key + "'");
            it->set(value.data());
        }
    }
    validate(c);
    return c;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    return parse_config(in);
}

std::string canonical(const ExperimentConfig& config)
{
    ExperimentConfig copy = config;
    std::string out, section;
    for (const auto& f : fields(copy)) {
        if (f.section != section) {
            out += (section.empty() ? "" : "\n") + ("[" + f.section + "]\n");
            section = f.section;
        }
        out += f.key + " = " + f.get() + "\n";
    }
    return out;
}

} // namespace lab
