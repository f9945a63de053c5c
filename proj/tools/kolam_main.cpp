#include "kolam/error.hpp"
#include "kolam/grid.hpp"
#include "kolam/journal.hpp"
#include "kolam/render.hpp"
#include "kolam/search.hpp"
#include "kolam/specdsl.hpp"
#include "kolam/validate.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace kolam;

// 0 success, 1 validation failed, 2 parse or diagnostic error,
// 3 file i/o error, 4 search exhausted or no pattern available.
int exit_code_for(errc kind) {
    switch (kind) {
    case errc::io: return 3;
    case errc::search_exhausted:
    case errc::no_pattern: return 4;
    default: return 2;
    }
}

grid_spec parse_grid_arg(const std::string& text) {
    size_t x = text.find('x');
    auto bad = [&text]() -> grid_spec {
        fail(errc::parse, "expected grid dimensions like 3x3, got '" + text + "'");
    };
    if (x == std::string::npos || x == 0 || x + 1 == text.size()) return bad();
    for (size_t i = 0; i < text.size(); ++i) {
        if (i == x) continue;
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return bad();
    }
    if (x > 7 || text.size() - x - 1 > 7) return bad();
    return make_grid(std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1)));
}

symmetry_group parse_symmetry_arg(const std::string& text) {
    auto parsed = parse_symmetry(text);
    if (!parsed) fail(errc::parse, "unknown symmetry '" + text + "'");
    return *parsed;
}

// Compiles a mapping spec file, printing every diagnostic to stderr.
mapping_spec load_spec(const std::string& path) {
    auto compiled = compile_spec(read_text_file(path));
    for (const auto& d : compiled.diagnostics)
        std::cerr << path << ": " << to_string(d) << "\n";
    if (!compiled.spec) fail(errc::parse, "invalid mapping spec '" + path + "'");
    return *compiled.spec;
}

int run_generate(const std::string& grid_text, const std::string& sym_text,
                 std::uint64_t seed, double openness, const std::string& out) {
    search_request request;
    request.grid = parse_grid_arg(grid_text);
    request.symmetry = parse_symmetry_arg(sym_text);
    request.seed = seed;
    request.openness_target = openness;
    write_text_file(out, serialize(find_single_loop(request)));
    return 0;
}

int run_validate(const std::string& path, bool machine) {
    gate_config config = deserialize(read_text_file(path));
    validation_report report = validate(config);
    std::cout << format_report(report, machine);
    return report.pass ? 0 : 1;
}

int run_catalog(const std::string& grid_text, const std::string& sym_text,
                const std::string& out) {
    catalog cat = enumerate_single_loop(parse_grid_arg(grid_text),
                                        parse_symmetry_arg(sym_text));
    write_text_file(out, serialize(cat));
    return 0;
}

int run_render(const std::string& gates, const std::string& spec_path,
               const std::string& record_text, const std::string& out) {
    gate_config config = deserialize(read_text_file(gates));
    mapping_spec spec = load_spec(spec_path);
    daily_record record;
    record.fields = parse_assignments(record_text);
    write_text_file(out, render_svg(config, resolve(spec, record)));
    return 0;
}

int run_trace(const std::string& gates) {
    std::cout << render_ascii(deserialize(read_text_file(gates)));
    return 0;
}

int run_journal_add(const std::string& path, const std::string& date,
                    const std::vector<std::string>& assignments) {
    journal_add(path, date, assignments);
    return 0;
}

int run_journal_render(const std::string& journal_path, const std::string& spec_path,
                       const std::string& out_dir, const std::string& catalog_path,
                       int columns) {
    journal j = load_journal(journal_path);
    mapping_spec spec = load_spec(spec_path);
    std::optional<catalog> cat;
    if (!catalog_path.empty())
        cat = deserialize_catalog(read_text_file(catalog_path));
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) fail(errc::io, "cannot create directory '" + out_dir + "'");
    auto result = journal_render(j, spec, out_dir, cat ? &*cat : nullptr, {}, columns);
    for (const auto& file : result.files) std::cout << file << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pulli kolam patterns: search, validation, and data-driven rendering"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    int rc = 0;

    std::string gen_grid, gen_sym = "none", gen_out;
    std::uint64_t gen_seed = 0;
    double gen_openness = 0.5;
    auto* gen = app.add_subcommand("generate",
                                   "Search for a single-loop pattern and write a gate file");
    gen->add_option("--grid", gen_grid, "grid size, e.g. 3x3")->required();
    gen->add_option("--symmetry", gen_sym, "none|h|v|rot180|hv|d4")->capture_default_str();
    gen->add_option("--seed", gen_seed, "search seed")->capture_default_str();
    gen->add_option("--openness", gen_openness, "target share of open gates")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen->add_option("--out", gen_out, "output gate file")->required();
    gen->callback([&] { rc = run_generate(gen_grid, gen_sym, gen_seed, gen_openness, gen_out); });

    std::string val_file;
    bool val_machine = false;
    auto* val = app.add_subcommand("validate",
                                   "Check a gate file against the five acceptance rules");
    val->add_option("file", val_file, "gate file to check")->required();
    val->add_flag("--machine", val_machine, "key=value output for scripts");
    val->callback([&] { rc = run_validate(val_file, val_machine); });

    std::string cat_grid, cat_sym = "none", cat_out;
    auto* cat = app.add_subcommand("catalog",
                                   "Enumerate every single-loop pattern for a grid and symmetry");
    cat->add_option("--grid", cat_grid, "grid size, e.g. 3x3")->required();
    cat->add_option("--symmetry", cat_sym, "none|h|v|rot180|hv|d4")->capture_default_str();
    cat->add_option("--out", cat_out, "output catalog file")->required();
    cat->callback([&] { rc = run_catalog(cat_grid, cat_sym, cat_out); });

    std::string ren_gates, ren_spec, ren_record, ren_out;
    auto* ren = app.add_subcommand("render", "Render a gate file to SVG through a mapping spec");
    ren->add_option("--gates", ren_gates, "gate file to draw")->required();
    ren->add_option("--spec", ren_spec, "mapping spec file")->required();
    ren->add_option("--record", ren_record, "inline record, e.g. 'sleep_hours=7.5,mood=calm'");
    ren->add_option("--out", ren_out, "output SVG file")->required();
    ren->callback([&] { rc = run_render(ren_gates, ren_spec, ren_record, ren_out); });

    std::string trc_gates;
    auto* trc = app.add_subcommand("trace", "Print an ASCII preview of a gate file");
    trc->add_option("--gates", trc_gates, "gate file to preview")->required();
    trc->callback([&] { rc = run_trace(trc_gates); });

    auto* jnl = app.add_subcommand("journal", "Manage and render a daily journal");
    jnl->require_subcommand(1);

    std::string add_journal, add_date;
    std::vector<std::string> add_fields;
    auto* add = jnl->add_subcommand("add", "Add or replace the record for a date");
    add->add_option("--journal", add_journal, "journal file")->required();
    add->add_option("date", add_date, "ISO date YYYY-MM-DD")->required();
    add->add_option("assignments", add_fields, "key=value pairs");
    add->callback([&] { rc = run_journal_add(add_journal, add_date, add_fields); });

    std::string jr_journal, jr_spec, jr_out, jr_catalog;
    int jr_columns = 7;
    auto* jr = jnl->add_subcommand("render",
                                   "Render every journal day plus a contact sheet");
    jr->add_option("--journal", jr_journal, "journal file")->required();
    jr->add_option("--spec", jr_spec, "mapping spec file")->required();
    jr->add_option("--out", jr_out, "output directory")->required();
    jr->add_option("--catalog", jr_catalog, "pattern catalog file (default: enumerate)");
    jr->add_option("--columns", jr_columns, "contact sheet columns")->capture_default_str();
    jr->callback([&] {
        rc = run_journal_render(jr_journal, jr_spec, jr_out, jr_catalog, jr_columns);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e); // --help goes to stdout
        app.exit(e, std::cerr, std::cerr);
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
