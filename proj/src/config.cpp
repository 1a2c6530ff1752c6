#include "cvirus/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cvirus/error.hpp"

namespace cvirus {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError(Errc::out_of_range, std::string(key), "cannot parse '" + std::string(text) + "'");
    return value;
}

void require(bool ok, std::string_view key, const std::string& what) {
    if (!ok) throw ConfigError(Errc::out_of_range, std::string(key), what);
}

double parse_fraction(std::string_view key, std::string_view text) {
    const double v = parse_number<double>(key, text);
    require(v >= 0.0 && v <= 1.0, key, "must lie in [0, 1]");
    return v;
}

int parse_positive(std::string_view key, std::string_view text) {
    const int v = parse_number<int>(key, text);
    require(v >= 1, key, "must be >= 1");
    return v;
}

Algorithm parse_algo(std::string_view key, std::string_view text) {
    const auto a = parse_algorithm(text);
    require(a.has_value(), key, "expected ga, ca or none, got '" + std::string(text) + "'");
    return *a;
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "on") return true;
    if (text == "false" || text == "0" || text == "off") return false;
    throw ConfigError(Errc::out_of_range, std::string(key), "expected true or false");
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys{
        "virulence",       "gd",           "algorithm",        "days",        "replications",
        "seed",            "out",          "jobs",             "increment",   "contacts",
        "effect",          "treatments",   "window-halfwidth", "threshold",   "society-size",
        "zombie-fraction", "human-lo",     "human-hi",         "zombie-lo",   "zombie-hi",
        "population-size", "tournament-size", "mutation-probability", "belief-influence",
    };
    return keys;
}

ConfigValues parse_config_text(std::string_view text, std::string_view origin) {
    ConfigValues values;
    const auto& keys = config_keys();
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        const std::string where = std::string(origin) + ":" + std::to_string(line_no);
        if (eq == std::string_view::npos)
            throw ConfigError(Errc::unknown_key, std::string(line), where + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError(Errc::unknown_key, std::string(key), where + ": unknown key");
        values[std::string(key)] = std::string(trim(line.substr(eq + 1)));
    }
    return values;
}

ConfigValues read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

ConfigValues merge(ConfigValues base, const ConfigValues& overrides) {
    for (const auto& [k, v] : overrides) base[k] = v;
    return base;
}

RunSettings parse_config(const ConfigValues& values, bool allow_lists) {
    RunSettings s;
    ScenarioConfig& c = s.scenario;
    const auto& keys = config_keys();

    for (const auto& [key, text] : values) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError(Errc::unknown_key, key, "unknown key");
        const auto list = split_list(text);
        if (list.size() > 1 && !(allow_lists && (key == "virulence" || key == "gd" || key == "algorithm")))
            throw ConfigError(Errc::out_of_range, key, "expects a single value");

        if (key == "virulence") {
            s.virulences.clear();
            for (auto item : list) s.virulences.push_back(parse_fraction(key, item));
            c.epidemic.virulence = s.virulences.front();
        } else if (key == "gd") {
            s.gds.clear();
            for (auto item : list) s.gds.push_back(parse_positive(key, item));
            c.gd = s.gds.front();
        } else if (key == "algorithm") {
            s.algorithms.clear();
            for (auto item : list) s.algorithms.push_back(parse_algo(key, item));
            c.algorithm = s.algorithms.front();
        } else if (key == "days") {
            c.horizon = parse_positive(key, text);
        } else if (key == "replications") {
            c.replications = parse_positive(key, text);
        } else if (key == "seed") {
            c.base_seed = parse_number<std::uint64_t>(key, text);
        } else if (key == "out") {
            require(!text.empty(), key, "must not be empty");
            s.out_dir = text;
        } else if (key == "jobs") {
            s.jobs = parse_number<int>(key, text);
            require(s.jobs >= 0, key, "must be >= 0");
        } else if (key == "increment") {
            c.epidemic.increment = parse_fraction(key, text);
            require(c.epidemic.increment > 0.0, key, "must be > 0");
        } else if (key == "contacts") {
            c.epidemic.contacts_per_zombie = parse_positive(key, text);
        } else if (key == "effect") {
            c.treatments.effect = parse_fraction(key, text);
            require(c.treatments.effect > 0.0, key, "must be > 0");
        } else if (key == "treatments") {
            c.treatments.count = parse_positive(key, text);
        } else if (key == "window-halfwidth") {
            c.treatments.window_halfwidth = parse_fraction(key, text);
            require(c.treatments.window_halfwidth > 0.0, key, "must be > 0");
        } else if (key == "threshold") {
            c.society.threshold = parse_fraction(key, text);
            require(c.society.threshold > 0.0 && c.society.threshold < 1.0, key, "must lie in (0, 1)");
        } else if (key == "society-size") {
            c.society.size = parse_positive(key, text);
        } else if (key == "zombie-fraction") {
            c.society.zombie_fraction = parse_fraction(key, text);
        } else if (key == "human-lo") {
            c.society.human_range.lo = parse_fraction(key, text);
        } else if (key == "human-hi") {
            c.society.human_range.hi = parse_fraction(key, text);
        } else if (key == "zombie-lo") {
            c.society.zombie_range.lo = parse_fraction(key, text);
        } else if (key == "zombie-hi") {
            c.society.zombie_range.hi = parse_fraction(key, text);
        } else if (key == "population-size") {
            c.optimizer.population_size = parse_positive(key, text);
            require(c.optimizer.population_size >= 2, key, "must be >= 2");
        } else if (key == "tournament-size") {
            c.optimizer.tournament_size = parse_positive(key, text);
        } else if (key == "mutation-probability") {
            c.optimizer.mutation_probability = parse_fraction(key, text);
        } else if (key == "belief-influence") {
            c.optimizer.belief_influence = parse_bool(key, text);
        }
    }

    // Cross-field checks, reported against the key most likely at fault.
    if (c.optimizer.tournament_size > c.optimizer.population_size)
        throw ConfigError(Errc::out_of_range, "tournament-size", "must not exceed population-size");
    try {
        c.society.validate();
    } catch (const Error& e) {
        throw ConfigError(e.code(), "society", e.what());
    }
    return s;
}

ScenarioConfig parse_scenario_config(const ConfigValues& values) { return parse_config(values, false).scenario; }

std::string format_exact(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ec == std::errc{} ? ptr : buf);
}

std::string to_config_text(const ScenarioConfig& c) {
    std::ostringstream out;
    const auto line = [&](std::string_view key, const std::string& value) { out << key << " = " << value << '\n'; };
    line("virulence", format_exact(c.epidemic.virulence));
    line("gd", std::to_string(c.gd));
    line("algorithm", std::string(to_string(c.algorithm)));
    line("days", std::to_string(c.horizon));
    line("replications", std::to_string(c.replications));
    line("seed", std::to_string(c.base_seed));
    line("increment", format_exact(c.epidemic.increment));
    line("contacts", std::to_string(c.epidemic.contacts_per_zombie));
    line("effect", format_exact(c.treatments.effect));
    line("treatments", std::to_string(c.treatments.count));
    line("window-halfwidth", format_exact(c.treatments.window_halfwidth));
    line("threshold", format_exact(c.society.threshold));
    line("society-size", std::to_string(c.society.size));
    line("zombie-fraction", format_exact(c.society.zombie_fraction));
    line("human-lo", format_exact(c.society.human_range.lo));
    line("human-hi", format_exact(c.society.human_range.hi));
    line("zombie-lo", format_exact(c.society.zombie_range.lo));
    line("zombie-hi", format_exact(c.society.zombie_range.hi));
    line("population-size", std::to_string(c.optimizer.population_size));
    line("tournament-size", std::to_string(c.optimizer.tournament_size));
    line("mutation-probability", format_exact(c.optimizer.mutation_probability));
    line("belief-influence", c.optimizer.belief_influence ? "true" : "false");
    return out.str();
}

}  // namespace cvirus
