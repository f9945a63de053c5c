#include "kolam/journal.hpp"

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

using kolam::read_text_file;
using kolam::write_text_file;
namespace fs = std::filesystem;

namespace {

fs::path work_dir(const char* name) {
    fs::path dir = fs::temp_directory_path() / "kolam-cli-tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct cli_result {
    int code = -1;
    std::string out;
    std::string err;
};

// Runs the installed binary with stdout and stderr captured to files.
cli_result run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "kolam-cli-tests" / "streams";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(KOLAM_CLI_BIN) + " " + args + " >" + out.string() +
                      " 2>" + err.string();
    int raw = std::system(cmd.c_str());
    cli_result r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = read_text_file(out.string());
    r.err = read_text_file(err.string());
    return r;
}

const char* kMoodSpec = "kolam 3x3\n"
                        "symmetry rot180\n"
                        "map mood -> color { calm: rice_white, positive: turmeric }\n";

} // namespace

TEST_CASE("cli generate writes a gate file") {
    fs::path dir = work_dir("generate");
    std::string g1 = (dir / "g1.txt").string();
    auto r = run_cli("generate --grid 1x1 --out " + g1);
    CHECK(r.code == 0);
    CHECK(read_text_file(g1) == "kolam-gates 1 1\n\n");

    std::string g3 = (dir / "g3.txt").string();
    CHECK(run_cli("generate --grid 3x3 --symmetry rot180 --seed 7 --out " + g3).code == 0);
    auto val = run_cli("validate " + g3);
    CHECK(val.code == 0);
    CHECK(val.out.find("result PASS") != std::string::npos);

    // same seed, same file
    std::string again = (dir / "again.txt").string();
    CHECK(run_cli("generate --grid 3x3 --symmetry rot180 --seed 7 --out " + again).code == 0);
    CHECK(read_text_file(again) == read_text_file(g3));
}

TEST_CASE("cli validate distinguishes failure, garbage, and missing files") {
    fs::path dir = work_dir("validate");
    std::string closed = (dir / "closed.txt").string();
    write_text_file(closed, "kolam-gates 2 2\n1111\n");

    auto r = run_cli("validate " + closed);
    CHECK(r.code == 1);
    CHECK(r.out.find("rule-2 FAIL") != std::string::npos);
    CHECK(r.out.find("result FAIL") != std::string::npos);

    auto machine = run_cli("validate --machine " + closed);
    CHECK(machine.code == 1);
    CHECK(machine.out.find("rule-2=fail\n") != std::string::npos);
    CHECK(machine.out.find("result=fail\n") != std::string::npos);

    std::string garbage = (dir / "garbage.txt").string();
    write_text_file(garbage, "not a gate file\n");
    auto bad = run_cli("validate " + garbage);
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());

    CHECK(run_cli("validate " + (dir / "missing.txt").string()).code == 3);
}

TEST_CASE("cli catalog is deterministic and exhaustive") {
    fs::path dir = work_dir("catalog");
    std::string first = (dir / "a.txt").string();
    std::string second = (dir / "b.txt").string();
    CHECK(run_cli("catalog --grid 3x3 --symmetry hv --out " + first).code == 0);
    CHECK(run_cli("catalog --grid 3x3 --symmetry hv --out " + second).code == 0);

    std::string text = read_text_file(first);
    CHECK(text == read_text_file(second));
    CHECK(text.find("kolam-catalog 3 3 hv\n") == 0);
    CHECK(text.find("000000110011\n") != std::string::npos);
    CHECK(text.find("101101000000\n") != std::string::npos);
}

TEST_CASE("cli render follows the record through the spec") {
    fs::path dir = work_dir("render");
    std::string spec = (dir / "spec.kmap").string();
    std::string gates = (dir / "g.txt").string();
    std::string svg = (dir / "day.svg").string();
    write_text_file(spec, kMoodSpec);
    REQUIRE(run_cli("generate --grid 3x3 --symmetry rot180 --seed 7 --out " + gates).code == 0);

    auto r = run_cli("render --gates " + gates + " --spec " + spec +
                     " --record mood=positive --out " + svg);
    CHECK(r.code == 0);
    CHECK(read_text_file(svg).find("#e3b33d") != std::string::npos);

    auto missing = run_cli("render --gates " + gates + " --spec " + spec + " --out " + svg);
    CHECK(missing.code == 2);
    CHECK(missing.err.find("missing field 'mood'") != std::string::npos);

    auto sep = run_cli("render --gates " + gates + " --spec " + spec +
                       " --record mood:calm --out " + svg);
    CHECK(sep.code == 2);
    CHECK(sep.err.find("mood:calm") != std::string::npos);

    std::string broken = (dir / "broken.kmap").string();
    write_text_file(broken, "kolam 3x3\nmap mood -> sparkle { a: b }\n");
    auto diag = run_cli("render --gates " + gates + " --spec " + broken + " --out " + svg);
    CHECK(diag.code == 2);
    CHECK(diag.err.find("line 2, column 13: unknown channel 'sparkle'") != std::string::npos);
}

TEST_CASE("cli trace prints the ascii preview") {
    fs::path dir = work_dir("trace");
    std::string gates = (dir / "g.txt").string();
    write_text_file(gates, "kolam-gates 2 2\n1111\n");
    auto r = run_cli("trace --gates " + gates);
    CHECK(r.code == 0);
    CHECK(r.out == " # # \n"
                   "#o|o#\n"
                   " - - \n"
                   "#o|o#\n"
                   " # # \n");
}

TEST_CASE("cli journal add canonicalizes the file") {
    fs::path dir = work_dir("journal-add");
    std::string path = (dir / "j.txt").string();
    CHECK(run_cli("journal add --journal " + path + " 2026-08-15 mood=calm sleep_hours=7.5").code == 0);
    CHECK(run_cli("journal add --journal " + path + " 2026-08-14 mood=positive").code == 0);
    CHECK(read_text_file(path) == "2026-08-14 mood=positive\n"
                                  "2026-08-15 mood=calm,sleep_hours=7.5\n");

    auto bad = run_cli("journal add --journal " + path + " 2026-08-16 mood:calm");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("mood:calm") != std::string::npos);
    CHECK(read_text_file(path).find("2026-08-16") == std::string::npos);
}

TEST_CASE("cli journal render writes every day plus the sheet") {
    fs::path dir = work_dir("journal-render");
    std::string path = (dir / "j.txt").string();
    std::string spec = (dir / "spec.kmap").string();
    std::string out = (dir / "days").string();
    write_text_file(path, "2026-08-14 mood=calm\n2026-08-15 mood=positive\n");
    write_text_file(spec, kMoodSpec);

    auto r = run_cli("journal render --journal " + path + " --spec " + spec + " --out " + out);
    CHECK(r.code == 0);
    CHECK(fs::exists(out + "/kolam-2026-08-14.svg"));
    CHECK(fs::exists(out + "/kolam-2026-08-15.svg"));
    CHECK(fs::exists(out + "/kolam-sheet.svg"));
    CHECK(r.out.find("kolam-sheet.svg\n") != std::string::npos);

    // explicit catalog file gives the same documents
    std::string cat = (dir / "cat.txt").string();
    std::string out2 = (dir / "days2").string();
    REQUIRE(run_cli("catalog --grid 3x3 --symmetry rot180 --out " + cat).code == 0);
    auto rc = run_cli("journal render --journal " + path + " --spec " + spec +
                      " --out " + out2 + " --catalog " + cat);
    CHECK(rc.code == 0);
    CHECK(read_text_file(out2 + "/kolam-sheet.svg") ==
          read_text_file(out + "/kolam-sheet.svg"));

    CHECK(run_cli("journal render --journal " + path + " --spec " + spec +
                  " --out " + out + " --columns 0").code == 2);

    std::string empty = (dir / "empty.txt").string();
    write_text_file(empty, "# no days yet\n");
    auto none = run_cli("journal render --journal " + empty + " --spec " + spec +
                        " --out " + out);
    CHECK(none.code == 2);
    CHECK(none.err.find("no records") != std::string::npos);
}

TEST_CASE("cli rejects unknown flags with usage on stderr") {
    auto bogus = run_cli("generate --bogus 2");
    CHECK(bogus.code == 2);
    CHECK(bogus.err.find("Usage") != std::string::npos);
    CHECK(bogus.out.empty());

    CHECK(run_cli("").code == 2);

    auto help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
    CHECK(run_cli("journal render --help").code == 0);

    auto grid = run_cli("generate --grid 3by3 --out /tmp/never.txt");
    CHECK(grid.code == 2);
    CHECK(grid.err.find("3by3") != std::string::npos);
}

TEST_CASE("cli exits four when the search comes up empty") {
    fs::path dir = work_dir("exhausted");
    std::string out = (dir / "never.txt").string();
    auto r = run_cli("generate --grid 2x2 --symmetry d4 --out " + out);
    CHECK(r.code == 4);
    CHECK(r.err.find("restarts") != std::string::npos);
    CHECK_FALSE(fs::exists(out)); // failure leaves no file behind
}
