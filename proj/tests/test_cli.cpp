// Exercises the installed binary end to end; the path arrives in the
// CATMAGMA_CLI environment variable set by CMake.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("CATMAGMA_CLI");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd;
    if (!stdin_text.empty()) cmd += "printf '%b' \"" + stdin_text + "\" | ";
    cmd += cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("cli: documented examples byte for byte") {
    auto convert = run("convert --from dyck --to brackets uduudd");
    CHECK(convert.exit_code == 0);
    CHECK(convert.out == "{}{{}}\n");

    auto narayana = run("narayana --family dyck --norm 4");
    CHECK(narayana.exit_code == 0);
    CHECK(narayana.out == "1 1\n2 3\n3 1\n");

    auto count = run("enumerate --family dyck --norm 4 --count-only");
    CHECK(count.exit_code == 0);
    CHECK(count.out == "5\n");
}

TEST_CASE("cli: enumerate output is byte-stable") {
    auto a = run("enumerate --family triang --norm 5");
    auto b = run("enumerate --family triang --norm 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("5:1-3,3-5") == std::string::npos); // norm 5, not 4
    auto c = run("enumerate --family triang --norm 4");
    CHECK(c.out.find("5:1-3,3-5") != std::string::npos);
}

TEST_CASE("cli: product, factor and term") {
    CHECK(run("product --family frieze 1,1,1 1,1,1").out == "2,1,3,1,2\n");
    CHECK(run("factor --family frieze 2,1,3,1,2").out == "1,1,1\t1,1,1\n");
    CHECK(run("factor --family dyck _").out == "IRREDUCIBLE\n");
    CHECK(run("term --family avoid321 --notation infix 1,3,4,2").out == "((e*e)*(e*(e*e)))\n");
    CHECK(run("term --family dyck --notation postfix uduudd").out == "ee*ee**\n");
}

TEST_CASE("cli: batch conversion over stdin") {
    auto r = run("convert --from dyck --to brackets", "ud\\nuudd\\nuduudd\\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{}\n{{}}\n{}{{}}\n");
}

TEST_CASE("cli: json records") {
    auto r = run("--format json convert --from dyck --to brackets uduudd");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"family\":\"F2\",\"norm\":4,\"repr\":\"{}{{}}\"}\n");
    auto e = run("--format json enumerate --family dyck --norm 2");
    CHECK(e.out == "{\"family\":\"F8\",\"norm\":2,\"repr\":\"ud\"}\n");
}

TEST_CASE("cli: exit codes") {
    CHECK(run("convert --from dyck --to brackets uudd").exit_code == 0);
    CHECK(run("convert --from dyck --to brackets uddu").exit_code == 2);  // invalid path
    CHECK(run("convert --from dyck --to brackets xyz").exit_code == 2);   // malformed text
    CHECK(run("convert --from nosuch --to brackets ud").exit_code == 2);  // unknown family
    CHECK(run("enumerate --family dyck").exit_code == 2);                 // missing option
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("verify --family dyck --max-norm 4").exit_code == 0);
}

TEST_CASE("cli: families listing") {
    auto r = run("families");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char ch : r.out) lines += (ch == '\n');
    CHECK(lines == 14);
    CHECK(r.out.find("F8\tdyck") != std::string::npos);
    CHECK(r.out.find("F14\tfrieze") != std::string::npos);
}

TEST_CASE("cli: magma lab") {
    auto r = run("magma-lab --variant c --size 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("unique-factorization: yes") != std::string::npos);
    CHECK(r.out.find("finite-decomposition: yes") != std::string::npos);
    CHECK(r.out.find("irreducibles<=27: 2\n") != std::string::npos);
    auto a = run("magma-lab --variant a --size 6");
    CHECK(a.out.find("unique-factorization: no (value 4") != std::string::npos);
    CHECK(a.out.find("finite-decomposition: no") != std::string::npos);
}
