#include "dcsim/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dcsim/format.hpp"

namespace dcsim {

namespace {

const std::map<std::string, std::set<std::string>> kSchema = {
    {"experiment", {"scenario", "shots", "seed", "choice_time"}},
    {"atom", {"level"}},
    {"optics", {"phi", "interferometer_closed"}},
    {"plate", {"kind"}},
    {"screen", {"bins", "fringe_period"}},
    {"marshall", {"s"}},
    {"sweep", {"parameter", "start", "stop", "steps"}},
};

struct RawEntry {
    std::string value;
    int line = 0;
};

// Keyed "section.key".
using RawTable = std::map<std::string, RawEntry>;

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

RawTable tokenize(std::string_view text) {
    RawTable table;
    std::string section;
    int line_number = 0;
    std::istringstream stream{std::string(text)};
    for (std::string raw_line; std::getline(stream, raw_line);) {
        ++line_number;
        const std::string_view line = trim(raw_line);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("unterminated section header", line_number);
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!kSchema.contains(section))
                throw config_error("unknown section '" + section + "'", line_number);
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw config_error("expected 'key = value'", line_number);
        if (section.empty())
            throw config_error("key outside any [section]", line_number);
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (!kSchema.at(section).contains(key))
            throw config_error("unknown key '" + key + "' in section [" + section + "]",
                               line_number);
        if (value.empty()) throw config_error("empty value for '" + key + "'", line_number);
        const auto [it, inserted] = table.emplace(section + "." + key, RawEntry{value, line_number});
        if (!inserted)
            throw config_error("duplicate key '" + key + "' (first set on line " +
                                   std::to_string(it->second.line) + ")",
                               line_number);
    }
    return table;
}

class Interpreter {
  public:
    explicit Interpreter(RawTable table) : table_(std::move(table)) {}

    std::optional<RawEntry> take(const std::string& id) {
        const auto it = table_.find(id);
        if (it == table_.end()) return std::nullopt;
        RawEntry entry = it->second;
        table_.erase(it);
        return entry;
    }

    double take_double(const std::string& id, double fallback) {
        const auto entry = take(id);
        if (!entry) return fallback;
        return parse_double(*entry, id);
    }

    std::optional<double> take_double_opt(const std::string& id) {
        const auto entry = take(id);
        if (!entry) return std::nullopt;
        return parse_double(*entry, id);
    }

    std::int64_t take_int(const std::string& id, std::int64_t fallback) {
        const auto entry = take(id);
        if (!entry) return fallback;
        return parse_int(*entry, id);
    }

    static std::int64_t parse_int(const RawEntry& entry, const std::string& id) {
        std::size_t consumed = 0;
        std::int64_t parsed = 0;
        try {
            parsed = std::stoll(entry.value, &consumed);
        } catch (const std::exception&) {
            throw config_error("'" + id + "' is not an integer: " + entry.value, entry.line);
        }
        if (consumed != entry.value.size())
            throw config_error("'" + id + "' is not an integer: " + entry.value, entry.line);
        return parsed;
    }

    std::optional<bool> take_bool_opt(const std::string& id) {
        const auto entry = take(id);
        if (!entry) return std::nullopt;
        if (entry->value == "true") return true;
        if (entry->value == "false") return false;
        throw config_error("'" + id + "' must be true or false", entry->line);
    }

    template <typename Parse>
    auto take_enum(const std::string& id, Parse parse)
        -> std::optional<decltype(parse(std::string_view{}))> {
        const auto entry = take(id);
        if (!entry) return std::nullopt;
        try {
            return parse(entry->value);
        } catch (const lookup_error& e) {
            throw config_error(std::string(e.what()), entry->line);
        }
    }

    bool empty() const { return table_.empty(); }

  private:
    static double parse_double(const RawEntry& entry, const std::string& id) {
        std::size_t consumed = 0;
        double parsed = 0.0;
        try {
            parsed = std::stod(entry.value, &consumed);
        } catch (const std::exception&) {
            throw config_error("'" + id + "' is not a number: " + entry.value, entry.line);
        }
        if (consumed != entry.value.size())
            throw config_error("'" + id + "' is not a number: " + entry.value, entry.line);
        return parsed;
    }

    RawTable table_;
};

} // namespace

ParsedConfig parse_config_text(std::string_view text) {
    Interpreter in(tokenize(text));
    ParsedConfig parsed;
    ExperimentConfig& config = parsed.base;

    const auto scenario_entry = in.take("experiment.scenario");
    if (!scenario_entry) throw config_error("missing required key 'scenario'");
    try {
        config.scenario = scenario_from_string(scenario_entry->value);
    } catch (const lookup_error& e) {
        throw config_error(std::string(e.what()), scenario_entry->line);
    }

    const std::int64_t shots = in.take_int("experiment.shots", 100000);
    if (shots < 0) throw config_error("shots must be >= 1");
    config.shots = static_cast<std::uint64_t>(shots);
    config.seed = static_cast<std::uint64_t>(in.take_int("experiment.seed", 42));
    if (const auto t = in.take_enum("experiment.choice_time", choice_time_from_string))
        config.choice_time = *t;

    config.atom_level = in.take_enum("atom.level", atom_level_from_string);
    config.phi = in.take_double("optics.phi", 0.0);
    config.interferometer_closed = in.take_bool_opt("optics.interferometer_closed");
    if (const auto plate = in.take_enum("plate.kind", plate_from_string)) config.plate = *plate;
    const std::int64_t bins = in.take_int("screen.bins", 64);
    if (bins < 8 || bins > 1000000) throw config_error("bins must lie in [8, 1000000]");
    config.screen.bins = static_cast<int>(bins);
    config.screen.fringe_period = in.take_double("screen.fringe_period", 1.0);
    config.mirror_overlap = in.take_double_opt("marshall.s");

    if (const auto parameter = in.take("sweep.parameter")) {
        SweepSpec sweep;
        sweep.parameter = parameter->value;
        if (sweep.parameter != "phi" && sweep.parameter != "s")
            throw config_error("sweep parameter must be phi or s", parameter->line);
        if (sweep.parameter == "s" && config.scenario != Scenario::marshall)
            throw config_error("sweep over s applies only to the marshall scenario",
                               parameter->line);
        const auto start = in.take_double_opt("sweep.start");
        const auto stop = in.take_double_opt("sweep.stop");
        const auto steps = in.take("sweep.steps");
        if (!start || !stop || !steps)
            throw config_error("sweep needs start, stop, and steps", parameter->line);
        sweep.start = *start;
        sweep.stop = *stop;
        sweep.steps = static_cast<int>(Interpreter::parse_int(*steps, "sweep.steps"));
        if (sweep.steps < 1) throw config_error("sweep steps must be >= 1", steps->line);
        parsed.sweep = std::move(sweep);
    } else if (in.take("sweep.start") || in.take("sweep.stop") || in.take("sweep.steps")) {
        throw config_error("sweep section needs a parameter key");
    }

    validate_config(config);
    if (parsed.sweep) {
        // Every grid point must validate, not just the base.
        for (const SweepPoint& point : expand_sweep(parsed)) validate_config(point.config);
    }
    return parsed;
}

ParsedConfig parse_config(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw config_error("cannot read config file: " + path.string());
    std::ostringstream text;
    text << file.rdbuf();
    return parse_config_text(text.str());
}

std::string serialize_config(const ParsedConfig& parsed) {
    const ExperimentConfig& c = parsed.base;
    std::ostringstream out;
    out << "[experiment]\n";
    out << "scenario = " << to_string(c.scenario) << "\n";
    out << "shots = " << c.shots << "\n";
    out << "seed = " << c.seed << "\n";
    out << "choice_time = " << to_string(c.choice_time) << "\n";
    if (c.atom_level) {
        out << "\n[atom]\n";
        out << "level = " << to_string(*c.atom_level) << "\n";
    }
    out << "\n[optics]\n";
    out << "phi = " << format_double(c.phi) << "\n";
    if (c.interferometer_closed)
        out << "interferometer_closed = " << (*c.interferometer_closed ? "true" : "false") << "\n";
    out << "\n[plate]\n";
    out << "kind = " << to_string(c.plate) << "\n";
    out << "\n[screen]\n";
    out << "bins = " << c.screen.bins << "\n";
    out << "fringe_period = " << format_double(c.screen.fringe_period) << "\n";
    if (c.mirror_overlap) {
        out << "\n[marshall]\n";
        out << "s = " << format_double(*c.mirror_overlap) << "\n";
    }
    if (parsed.sweep) {
        out << "\n[sweep]\n";
        out << "parameter = " << parsed.sweep->parameter << "\n";
        out << "start = " << format_double(parsed.sweep->start) << "\n";
        out << "stop = " << format_double(parsed.sweep->stop) << "\n";
        out << "steps = " << parsed.sweep->steps << "\n";
    }
    return out.str();
}

std::vector<SweepPoint> expand_sweep(const ParsedConfig& parsed) {
    std::vector<SweepPoint> points;
    if (!parsed.sweep) {
        points.push_back({0.0, parsed.base});
        return points;
    }
    const SweepSpec& sweep = *parsed.sweep;
    for (int k = 0; k < sweep.steps; ++k) {
        const double value =
            sweep.steps == 1
                ? sweep.start
                : sweep.start + (sweep.stop - sweep.start) * k / (sweep.steps - 1);
        ExperimentConfig config = parsed.base;
        if (sweep.parameter == "phi") config.phi = value;
        else config.mirror_overlap = value;
        points.push_back({value, std::move(config)});
    }
    return points;
}

} // namespace dcsim
