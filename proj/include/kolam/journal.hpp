#pragma once

#include "kolam/mapping.hpp"
#include "kolam/render.hpp"
#include "kolam/search.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kolam {

// A journal is an ordered list of daily records, at most one per date.
// On disk it is a plain text file meant to be hand-editable:
//
//   # anything after a full-line '#' is ignored
//   2026-08-14 sleep_hours=7.5,energy=high,mood=calm
//   2026-08-15 sleep_hours=6,energy=low,mood=stressed
//
// Dates are ISO YYYY-MM-DD, so lexicographic order is date order.
struct journal {
    std::vector<daily_record> records;

    const daily_record* find(const std::string& date) const;

    // Inserts a record, replacing any existing one for the same date.
    // Keeps records sorted. Throws parse on an invalid date.
    void upsert(daily_record record);

    bool operator==(const journal&) const = default;
};

// Real calendar dates only: month lengths and leap years are checked.
bool valid_date(const std::string& date);

// Parses "key=value,key=value". Keys are sorted and must be unique;
// values keep their source spelling. Throws parse naming the bad token.
std::vector<std::pair<std::string, field_value>>
parse_assignments(std::string_view text);

// Throws parse with a line number on malformed input. Records arrive
// sorted regardless of file order.
journal parse_journal(std::string_view text);

// Canonical form: records sorted by date, fields sorted by key, one
// record per line. parse_journal(serialize(j)) == j.
std::string serialize(const journal& j);

journal load_journal(const std::string& path);

// Writes to a temporary file and renames, so a failed write never
// leaves a truncated journal behind.
void save_journal(const journal& j, const std::string& path);

// Atomic whole-file helpers shared with the command-line tool.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

// Loads the journal (a missing file counts as empty), adds or replaces
// the record for the date, saves the file in canonical form.
void journal_add(const std::string& path, const std::string& date,
                 const std::vector<std::string>& assignments);

struct journal_render_result {
    std::vector<std::string> files; // written paths, contact sheet last
};

// Renders one document per record plus a contact sheet into out_dir.
// Each record resolves against the spec and picks its pattern from the
// catalog (records without a pattern binding take entry 0). Without a
// catalog the single-loop set for the spec's grid is enumerated. All
// records are resolved before any file is written, and the first
// failure aborts with the record's date in the message.
journal_render_result journal_render(const journal& j, const mapping_spec& spec,
                                     const std::string& out_dir,
                                     const catalog* patterns = nullptr,
                                     const render_params& params = {},
                                     int columns = 7);

} // namespace kolam
