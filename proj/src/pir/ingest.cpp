#include "pir/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "pir/error.hpp"

namespace pir {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::optional<double> parse_double(std::string_view field) {
    double v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<int> parse_int(std::string_view field) {
    int v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return v;
}

std::optional<Phase> parse_phase(std::string_view field) {
    std::string p = lower(field);
    if (p == "regular") return Phase::Regular;
    if (p == "playoff") return Phase::Playoff;
    return std::nullopt;
}

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Code::Io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(Code::Io, "cannot read " + path);
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Code::Io, "cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) fail(Code::Io, "cannot write " + path);
}

constexpr std::array<std::string_view, 15> kRequiredColumns = {
    "player", "season", "phase", "games", "pts", "trb", "ast", "stl",
    "blk",    "tov",    "pf",    "fga",   "fg",  "fta", "ft",
};
constexpr std::array<std::string_view, 2> kOptionalColumns = {
    "fouls_drawn", "blocks_received"};

// Column name -> field index in the header row.
std::map<std::string, std::size_t> read_header(std::string_view header_line,
                                               std::string_view source) {
    std::map<std::string, std::size_t> index;
    auto fields = split_line(header_line);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        index.emplace(lower(fields[i]), i);
    }
    std::string missing;
    for (std::string_view col : kRequiredColumns) {
        if (!index.contains(std::string(col))) {
            if (!missing.empty()) missing += ", ";
            missing += "\"" + std::string(col) + "\"";
        }
    }
    if (!missing.empty()) {
        fail(Code::Schema, std::string(source) + ": missing required column " + missing);
    }
    return index;
}

class RowErrors {
public:
    explicit RowErrors(std::string_view source) : source_(source) {}

    void add(std::size_t line_no, std::string_view msg) {
        if (!joined_.empty()) joined_ += "; ";
        joined_ += std::string(source_) + ":" + std::to_string(line_no) + ": " +
                   std::string(msg);
    }

    bool empty() const { return joined_.empty(); }
    const std::string& joined() const { return joined_; }

private:
    std::string_view source_;
    std::string joined_;
};

}  // namespace

std::vector<std::string> Dataset::players() const {
    std::vector<std::string> out;
    for (const StatLine& s : records) {
        if (std::find(out.begin(), out.end(), s.player) == out.end()) {
            out.push_back(s.player);
        }
    }
    return out;
}

Dataset parse_dataset(std::string_view text, std::string_view source_name) {
    auto lines = split_lines(text);
    if (lines.empty() || trim(lines[0]).empty()) {
        fail(Code::Schema, std::string(source_name) + ": empty input, header row required");
    }
    auto col = read_header(lines[0], source_name);

    Dataset ds;
    RowErrors errors(source_name);

    auto field = [&](const std::vector<std::string_view>& fields,
                     std::string_view name) -> std::optional<std::string_view> {
        auto it = col.find(std::string(name));
        if (it == col.end() || it->second >= fields.size()) return std::nullopt;
        return fields[it->second];
    };

    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::size_t line_no = li + 1;
        if (trim(lines[li]).empty()) continue;
        auto fields = split_line(lines[li]);

        auto num = [&](std::string_view name) -> std::optional<double> {
            auto f = field(fields, name);
            if (!f) {
                errors.add(line_no, "missing field \"" + std::string(name) + "\"");
                return std::nullopt;
            }
            auto v = parse_double(*f);
            if (!v || *v < 0) {
                errors.add(line_no, "field \"" + std::string(name) +
                                        "\" must be a finite nonnegative number, got \"" +
                                        std::string(*f) + "\"");
                return std::nullopt;
            }
            return v;
        };
        auto opt_num = [&](std::string_view name) -> std::optional<double> {
            if (!col.contains(std::string(name))) return 0.0;
            return num(name);
        };

        StatLine s;
        ShotTotals shot;
        bool ok = true;

        if (auto f = field(fields, "player"); f && !f->empty()) {
            s.player = std::string(*f);
        } else {
            errors.add(line_no, "empty player identifier");
            ok = false;
        }
        if (auto f = field(fields, "season"); f && valid_season_label(*f)) {
            s.season = std::string(*f);
        } else {
            errors.add(line_no, "season label must match YYYY-YY");
            ok = false;
        }
        if (auto f = field(fields, "phase")) {
            if (auto p = parse_phase(*f)) {
                s.phase = *p;
            } else {
                errors.add(line_no, "phase must be \"regular\" or \"playoff\", got \"" +
                                        std::string(*f) + "\"");
                ok = false;
            }
        } else {
            errors.add(line_no, "missing field \"phase\"");
            ok = false;
        }
        if (auto f = field(fields, "games")) {
            if (auto g = parse_int(*f); g && *g >= 1) {
                s.games = *g;
            } else {
                errors.add(line_no, "games must be an integer >= 1");
                ok = false;
            }
        } else {
            errors.add(line_no, "missing field \"games\"");
            ok = false;
        }

        struct Slot { std::string_view name; double StatLine::* member; };
        constexpr Slot direct[] = {
            {"pts", &StatLine::points},   {"trb", &StatLine::rebounds},
            {"ast", &StatLine::assists},  {"stl", &StatLine::steals},
            {"blk", &StatLine::blocks_made}, {"tov", &StatLine::turnovers},
            {"pf", &StatLine::fouls_committed},
        };
        for (const Slot& slot : direct) {
            if (auto v = num(slot.name)) s.*(slot.member) = *v; else ok = false;
        }
        if (auto v = opt_num("fouls_drawn")) s.fouls_drawn = *v; else ok = false;
        if (auto v = opt_num("blocks_received")) s.blocks_received = *v; else ok = false;

        auto fga = num("fga"), fg = num("fg"), fta = num("fta"), ft = num("ft");
        if (fga && fg) {
            if (*fg > *fga) {
                errors.add(line_no, "fg exceeds fga");
                ok = false;
            } else {
                s.fg_missed = *fga - *fg;
                shot.fga = *fga;
                shot.fg = *fg;
            }
        } else {
            ok = false;
        }
        if (fta && ft) {
            if (*ft > *fta) {
                errors.add(line_no, "ft exceeds fta");
                ok = false;
            } else {
                s.ft_missed = *fta - *ft;
                shot.fta = *fta;
                shot.ft = *ft;
            }
        } else {
            ok = false;
        }

        if (ok) {
            for (const std::string& issue : stat_line_issues(s)) {
                errors.add(line_no, issue);
                ok = false;
            }
        }
        if (ok) {
            ds.records.push_back(std::move(s));
            ds.shots.push_back(shot);
        }
    }

    if (!errors.empty()) fail(Code::Row, errors.joined());

    std::set<std::tuple<std::string, std::string, Phase>> seen;
    std::string dups;
    for (const StatLine& s : ds.records) {
        if (!seen.emplace(s.player, s.season, s.phase).second) {
            if (!dups.empty()) dups += ", ";
            dups += s.player + " " + s.season + " " + std::string(phase_name(s.phase));
        }
    }
    if (!dups.empty()) {
        fail(Code::Dataset, std::string(source_name) +
                                ": duplicate (player, season, phase): " + dups);
    }
    return ds;
}

Dataset load_dataset(const std::string& path) {
    return parse_dataset(read_file(path), path);
}

std::string serialize_dataset(const Dataset& ds) {
    std::string out =
        "player,season,phase,games,pts,trb,ast,stl,blk,tov,pf,fga,fg,fta,ft,"
        "fouls_drawn,blocks_received\n";
    for (std::size_t i = 0; i < ds.records.size(); ++i) {
        const StatLine& s = ds.records[i];
        const ShotTotals& t = ds.shots[i];
        out += s.player + "," + s.season + "," + std::string(phase_name(s.phase)) +
               "," + std::to_string(s.games);
        for (double v : {s.points, s.rebounds, s.assists, s.steals, s.blocks_made,
                         s.turnovers, s.fouls_committed, t.fga, t.fg, t.fta, t.ft,
                         s.fouls_drawn, s.blocks_received}) {
            out += ",";
            out += format_double(v);
        }
        out += "\n";
    }
    return out;
}

void save_dataset(const Dataset& ds, const std::string& path) {
    write_file(path, serialize_dataset(ds));
}

std::vector<RecordKey> parse_exclusions(std::string_view text,
                                        std::string_view source_name) {
    auto lines = split_lines(text);
    if (lines.empty() || trim(lines[0]).empty()) {
        fail(Code::Schema, std::string(source_name) + ": empty input, header row required");
    }
    auto header = split_line(lines[0]);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col.emplace(lower(header[i]), i);
    for (std::string_view name : {"player", "season", "phase"}) {
        if (!col.contains(std::string(name))) {
            fail(Code::Schema, std::string(source_name) + ": missing required column \"" +
                                   std::string(name) + "\"");
        }
    }

    std::vector<RecordKey> keys;
    RowErrors errors(source_name);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (trim(lines[li]).empty()) continue;
        auto fields = split_line(lines[li]);
        auto get = [&](std::string_view name) -> std::string_view {
            std::size_t idx = col.at(std::string(name));
            return idx < fields.size() ? fields[idx] : std::string_view{};
        };
        RecordKey key;
        key.player = std::string(get("player"));
        key.season = std::string(get("season"));
        bool ok = true;
        if (key.player.empty()) {
            errors.add(li + 1, "empty player identifier");
            ok = false;
        }
        if (!valid_season_label(key.season)) {
            errors.add(li + 1, "season label must match YYYY-YY");
            ok = false;
        }
        if (auto p = parse_phase(get("phase"))) {
            key.phase = *p;
        } else {
            errors.add(li + 1, "phase must be \"regular\" or \"playoff\"");
            ok = false;
        }
        if (ok) keys.push_back(std::move(key));
    }
    if (!errors.empty()) fail(Code::Row, errors.joined());
    return keys;
}

std::vector<RecordKey> load_exclusions(const std::string& path) {
    return parse_exclusions(read_file(path), path);
}

std::vector<double> parse_weight_list(std::string_view text) {
    std::vector<double> values;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        auto v = parse_double(token);
        if (!v) fail(Code::InvalidValue, "invalid value: weight \"" + token + "\"");
        values.push_back(*v);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    if (values.size() != kVariableCount) {
        fail(Code::Config, "expected 11 weights, got " + std::to_string(values.size()));
    }
    return values;
}

std::vector<double> load_weight_list(const std::string& path) {
    return parse_weight_list(read_file(path));
}

}  // namespace pir
