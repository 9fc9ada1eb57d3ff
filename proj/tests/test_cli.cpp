#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "glcs/cli.hpp"

using namespace glcs;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    return std::string(GLCS_FIXTURE_DIR) + "/" + name;
}

// scratch files removed when the test ends
class ScratchDir {
public:
    ScratchDir() {
        std::random_device entropy;
        path_ = std::filesystem::temp_directory_path() /
                ("glcs_cli_test_" + std::to_string(entropy()));
        std::filesystem::create_directories(path_);
    }
    ~ScratchDir() {
        std::error_code ignored;
        std::filesystem::remove_all(path_, ignored);
    }
    std::string write(const std::string& name, const std::string& text) const {
        auto file = path_ / name;
        std::ofstream(file) << text;
        return file.string();
    }

private:
    std::filesystem::path path_;
};

}

TEST_SUITE("cli") {

TEST_CASE("seq-ic on fixtures") {
    auto one = run({"seq-ic", fixture("a.lg"), fixture("a.lg"), fixture("a.lg")});
    CHECK(one.code == exit_ok);
    CHECK(one.out == "1\n");
    CHECK(one.err.empty());

    auto inf = run({"seq-ic", fixture("loop.lg"), fixture("loop.lg"), fixture("a.lg")});
    CHECK(inf.code == exit_ok);
    CHECK(inf.out == "inf\n");

    auto witness = run({"seq-ic", "--witness", fixture("narrative_g1.lg"), fixture("narrative_g2.lg"),
                        fixture("narrative_g3.lg")});
    CHECK(witness.code == exit_ok);
    CHECK(witness.out == "4 cdba\n");
}

TEST_CASE("no-solution and structural errors") {
    ScratchDir dir;
    auto b = dir.write("b.lg", "vertex 1 b\n");
    auto none = run({"seq-ic", fixture("loop.lg"), fixture("loop.lg"), b});
    CHECK(none.code == exit_ok);
    CHECK(none.out == "no-solution\n");
    auto none_witness = run({"seq-ic", "--witness", fixture("a.lg"), fixture("a.lg"), b});
    CHECK(none_witness.out == "no-solution\n");

    auto cyclic_g3 = run({"seq-ic", fixture("a.lg"), fixture("a.lg"), fixture("loop.lg")});
    CHECK(cyclic_g3.code == exit_structural);
    CHECK(cyclic_g3.out.empty());
    CHECK_FALSE(cyclic_g3.err.empty());

    CHECK(run({"lcs", fixture("loop.lg"), fixture("a.lg")}).code == exit_structural);
    auto empty = dir.write("empty.lg", "# nothing\n");
    CHECK(run({"seq-ic", empty, fixture("a.lg"), fixture("a.lg")}).code == exit_structural);
}

TEST_CASE("input errors") {
    ScratchDir dir;
    auto bad = dir.write("bad.lg", "vertex 1 a\nedge 1 2\n");
    auto parse = run({"lcs", bad, fixture("a.lg")});
    CHECK(parse.code == exit_invalid_input);
    CHECK(parse.out.empty());
    CHECK(parse.err.find("line 2") != std::string::npos);

    CHECK(run({"lcs", dir.write("x", "") + ".missing", fixture("a.lg")}).code == exit_invalid_input);
    CHECK(run({}).code == exit_invalid_input);
    CHECK(run({"frobnicate"}).code == exit_invalid_input);
    CHECK(run({"lcs", fixture("a.lg")}).code == exit_invalid_input);
    CHECK(run({"gen", "--seed", "1", "--vertices", "3", "--edges", "4", "--alphabet", "2", "--dag"}).code ==
          exit_invalid_input);
    CHECK(run({"oracle", "seq-ic", fixture("a.lg"), fixture("a.lg"), fixture("a.lg"), "--max-unroll", "1"})
              .code == exit_invalid_input);
    auto help = run({"--help"});
    CHECK(help.code == exit_ok);
    CHECK(help.out.find("seq-ic") != std::string::npos);
}

TEST_CASE("lcs, atomize and condense") {
    ScratchDir dir;
    auto ab = dir.write("ab.lg", "vertex 1 ab\n");
    auto ba = dir.write("ba.lg", "vertex 1 b\nvertex 2 a\nedge 1 2\n");
    auto lcs = run({"lcs", ab, ba});
    CHECK(lcs.code == exit_ok);
    CHECK(lcs.out == "1\n");

    CHECK(run({"atomize", ab}).out == "vertex 1 a\nvertex 2 b\nedge 1 2\n");
    auto cycle = dir.write("cycle.lg", "vertex 1 x\nvertex 2 \"b a\"\nedge 1 2\nedge 2 2\n");
    // the label chain b, space, a closes into one cycle through the self-loop
    CHECK(run({"condense", cycle}).out == "vertex 1 \"x\"\nvertex 2 \" ab\" cyclic\nedge 1 2\nedge 2 2\n");
}

TEST_CASE("oracle command") {
    auto exact = run({"oracle", "seq-ic", fixture("narrative_g1.lg"), fixture("narrative_g2.lg"),
                      fixture("narrative_g3.lg")});
    CHECK(exact.code == exit_ok);
    CHECK(exact.out == "4\n");

    auto probe = run({"oracle", "seq-ic", fixture("loop.lg"), fixture("loop.lg"), fixture("a.lg")});
    CHECK(probe.out == "growing 2 3 4 5\n");
    auto short_probe = run({"oracle", "seq-ic", fixture("loop.lg"), fixture("loop.lg"), fixture("a.lg"),
                            "--max-unroll", "2"});
    CHECK(short_probe.out == "growing 2 3\n");
    auto stable = run({"oracle", "seq-ic", fixture("a.lg"), fixture("a.lg"), fixture("a.lg"),
                       "--max-unroll", "3"});
    CHECK(stable.out == "stable 1 1 1\n");

    ScratchDir dir;
    std::string big = "vertex 1 " + std::string(40, 'a') + "\n";
    auto large = dir.write("large.lg", big);
    auto too_large = run({"oracle", "seq-ic", large, large, fixture("a.lg")});
    CHECK(too_large.code == exit_too_large);
    CHECK(too_large.out.empty());
}

TEST_CASE("generated dags agree with the oracle command") {
    ScratchDir dir;
    for (int seed = 0; seed < 40; ++seed) {
        auto make = [&](int which, const std::string& vertices, const std::string& edges) {
            auto gen = run({"gen", "--seed", std::to_string(seed * 3 + which), "--vertices", vertices,
                            "--edges", edges, "--alphabet", "3", "--dag"});
            REQUIRE(gen.code == exit_ok);
            return dir.write("g" + std::to_string(which) + ".lg", gen.out);
        };
        auto g1 = make(0, "6", "7");
        auto g2 = make(1, "6", "8");
        auto g3 = make(2, "3", "2");
        auto dp = run({"seq-ic", g1, g2, g3});
        auto oracle = run({"oracle", "seq-ic", g1, g2, g3});
        CHECK(dp.code == exit_ok);
        CHECK(dp.out == oracle.out);
        // byte-identical reruns, witness included
        auto w1 = run({"seq-ic", "--witness", g1, g2, g3});
        CHECK(w1.out == run({"seq-ic", "--witness", g1, g2, g3}).out);
        CHECK(w1.out.rfind(dp.out.substr(0, dp.out.size() - 1), 0) == 0);
    }
}

TEST_CASE("gen is deterministic") {
    std::vector<std::string> args{"gen", "--seed", "17", "--vertices", "9", "--edges", "20", "--alphabet", "4"};
    auto first = run(args);
    CHECK(first.code == exit_ok);
    CHECK(first.out == run(args).out);
    CHECK(first.out.find("vertex 9 ") != std::string::npos);
}

}
