#include "kolam/journal.hpp"

#include "kolam/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kolam {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return !s.empty();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

bool valid_date(const std::string& date) {
    if (date.size() != 10 || date[4] != '-' || date[7] != '-') return false;
    std::string_view s = date;
    if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) ||
        !all_digits(s.substr(8, 2)))
        return false;
    int y = std::stoi(date.substr(0, 4));
    int m = std::stoi(date.substr(5, 2));
    int d = std::stoi(date.substr(8, 2));
    if (y < 1 || m < 1 || m > 12 || d < 1) return false;
    static const int days[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int limit = days[m - 1];
    bool leap = y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
    if (m == 2 && leap) limit = 29;
    return d <= limit;
}

std::vector<std::pair<std::string, field_value>>
parse_assignments(std::string_view text) {
    std::vector<std::pair<std::string, field_value>> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view token = comma == std::string_view::npos
                                     ? text.substr(start)
                                     : text.substr(start, comma - start);
        token = trim(token);
        if (!token.empty()) {
            size_t eq = token.find('=');
            if (eq == std::string_view::npos || eq == 0)
                fail(errc::parse,
                     "assignment '" + std::string(token) + "' needs key=value");
            std::string key(trim(token.substr(0, eq)));
            std::string value(trim(token.substr(eq + 1)));
            if (value.empty())
                fail(errc::parse,
                     "assignment '" + std::string(token) + "' needs a value");
            for (const auto& [seen, ignored] : out)
                if (seen == key)
                    fail(errc::parse, "field '" + key + "' assigned twice");
            out.emplace_back(std::move(key), parse_field_value(value));
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

const daily_record* journal::find(const std::string& date) const {
    for (const auto& r : records)
        if (r.date == date) return &r;
    return nullptr;
}

void journal::upsert(daily_record record) {
    if (!valid_date(record.date))
        fail(errc::parse, "invalid date '" + record.date + "'");
    for (auto& r : records) {
        if (r.date == record.date) {
            r = std::move(record);
            return;
        }
    }
    records.push_back(std::move(record));
    std::sort(records.begin(), records.end(),
              [](const daily_record& a, const daily_record& b) {
                  return a.date < b.date;
              });
}

journal parse_journal(std::string_view text) {
    journal j;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = nl == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::string_view body = trim(line);
        if (!body.empty() && body[0] != '#') {
            size_t space = body.find(' ');
            std::string date(body.substr(0, space));
            std::string rest(space == std::string_view::npos
                                 ? std::string_view{}
                                 : trim(body.substr(space + 1)));
            auto at_line = [line_no](const std::string& msg) {
                return "line " + std::to_string(line_no) + ": " + msg;
            };
            if (!valid_date(date))
                fail(errc::parse, at_line("invalid date '" + date + "'"));
            if (j.find(date))
                fail(errc::parse, at_line("duplicate record for " + date));
            daily_record rec;
            rec.date = date;
            try {
                rec.fields = parse_assignments(rest);
            } catch (const error& e) {
                fail(errc::parse, at_line(e.what()));
            }
            j.records.push_back(std::move(rec));
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    std::sort(j.records.begin(), j.records.end(),
              [](const daily_record& a, const daily_record& b) {
                  return a.date < b.date;
              });
    return j;
}

std::string serialize(const journal& j) {
    std::string out;
    for (const auto& rec : j.records) {
        out += rec.date;
        for (size_t i = 0; i < rec.fields.size(); ++i) {
            out += i == 0 ? " " : ",";
            out += rec.fields[i].first;
            out += '=';
            out += rec.fields[i].second.text;
        }
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(errc::io, "cannot read '" + path + "'");
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(errc::io, "cannot write '" + tmp + "'");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) {
            out.close();
            std::remove(tmp.c_str());
            fail(errc::io, "cannot write '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        fail(errc::io, "cannot write '" + path + "'");
    }
}

journal load_journal(const std::string& path) {
    try {
        return parse_journal(read_text_file(path));
    } catch (const error& e) {
        if (e.kind() == errc::io) throw;
        fail(e.kind(), path + ": " + e.what());
    }
}

void save_journal(const journal& j, const std::string& path) {
    write_text_file(path, serialize(j));
}

void journal_add(const std::string& path, const std::string& date,
                 const std::vector<std::string>& assignments) {
    journal j;
    if (std::filesystem::exists(path)) j = load_journal(path);
    std::string joined;
    for (const auto& a : assignments) {
        if (!joined.empty()) joined += ',';
        joined += a;
    }
    daily_record rec;
    rec.date = date;
    rec.fields = parse_assignments(joined);
    j.upsert(std::move(rec));
    save_journal(j, path);
}

journal_render_result journal_render(const journal& j, const mapping_spec& spec,
                                     const std::string& out_dir,
                                     const catalog* patterns,
                                     const render_params& params, int columns) {
    if (j.records.empty()) fail(errc::mapping, "journal has no records");
    if (columns < 1) fail(errc::index_range, "contact sheet needs at least one column");

    catalog local;
    if (!patterns) {
        local = enumerate_single_loop(spec.grid, spec.symmetry);
        patterns = &local;
    }

    // Resolve every record before writing anything, so a bad record
    // cannot leave a half-rendered directory behind.
    struct day {
        std::string date;
        render_plan plan;
        gate_config config;
    };
    std::vector<day> days;
    days.reserve(j.records.size());
    for (const auto& rec : j.records) {
        try {
            render_plan plan = resolve(spec, rec);
            gate_config config = pattern_for_category(*patterns, plan.pattern_index);
            days.push_back({rec.date, plan, std::move(config)});
        } catch (const error& e) {
            fail(e.kind(), rec.date + ": " + e.what());
        }
    }

    journal_render_result out;
    std::vector<sheet_item> items;
    items.reserve(days.size());
    for (const auto& d : days) {
        std::string doc = render_svg(d.config, d.plan, params);
        std::string path = out_dir + "/kolam-" + d.date + ".svg";
        write_text_file(path, doc);
        out.files.push_back(path);
        items.push_back({d.date, std::move(doc)});
    }
    std::string sheet = out_dir + "/kolam-sheet.svg";
    write_text_file(sheet, contact_sheet(items, columns));
    out.files.push_back(sheet);
    return out;
}

} // namespace kolam
