#include <doctest.h>

#include <sstream>

#include "gbound/cli.hpp"

using gbound::cli::render_text;
using gbound::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("minkowski command") {
    Outcome r = call({"minkowski", "--n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "1393459200 = 2^15·3^5·5^2·7\n");

    r = call({"minkowski", "--n", "8", "--ell", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "M(8,3) = 5\n");
}

TEST_CASE("invariants command") {
    Outcome r = call({"invariants", "--field", "F:9", "--ell", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "t=1 m=3 type=a\n");

    r = call({"invariants", "--field", "Q", "--ell", "5"});
    CHECK(r.out == "t=4 m=1\n");

    r = call({"invariants", "--field", "R", "--ell", "3"});
    CHECK(r.out == "t=2 m=inf\n");
}

TEST_CASE("schur command") {
    Outcome r = call({"schur", "--n", "2", "--ell", "2", "--field", "Q"});
    CHECK(r.code == 0);
    CHECK(r.out == "M_k(2,2) = 3 (k=Q)\n");
}

TEST_CASE("bound command, single prime and all primes") {
    Outcome r = call({"bound", "--kind", "m", "--root", "E8", "--field", "Q", "--ell", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "M(E8, Q, ell=2) = 30\n");

    r = call({"bound", "--kind", "m", "--root", "E8", "--field", "Q", "--ell", "all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2^30·3^13·5^5·7^4·11^2·13^2·19·31") !=
          std::string::npos);

    r = call({"bound", "--kind", "corank", "--root", "E8", "--field", "Qbar", "--ell", "5"});
    CHECK(r.out == "Corank(E8, Qbar, ell=5) = 8\n");

    r = call({"bound", "--kind", "m", "--root", "E8", "--field", "R", "--ell", "3"});
    CHECK(r.out == "M(E8, R, ell=3) = inf (m=inf and a(t)>=1)\n");

    r = call({"bound", "--kind", "achievable", "--root", "A:2", "--field", "Q", "--ell", "2"});
    CHECK(r.out == "Achievable(A:2, Q, ell=2) = 3 (not optimal)\n");
}

TEST_CASE("mass command") {
    Outcome r = call({"mass", "--root", "G2"});
    CHECK(r.code == 0);
    CHECK(r.out == "mass(G2) = 1/12096 = 1/(2^6·3^3·7)\n");

    r = call({"mass", "--root", "E8", "--ell", "5"});
    CHECK(r.out == "v_5(denominator mass(E8)) = 5, m-bound = 5\n");
}

TEST_CASE("witness command") {
    Outcome r = call({"witness", "--kind", "wreath", "--n", "4", "--ell", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "wreath(n=4, ell=2): order = 384 = 2^7·3, v = 7, minkowski = 7\n");

    r = call({"witness", "--kind", "gl2", "--p", "3", "--ell", "2"});
    CHECK(r.out == "gl2(p=3, ell=2): enumerated = 4, formula = 4\n");

    r = call({"witness", "--kind", "schur", "--N", "2", "--field", "explicit:t=4,m=1",
              "--ell", "5"});
    CHECK(r.out == "schur-witness(N=2, ell=5, t=4, m=1): v_full = 2, v_det1 = 1\n");
}

TEST_CASE("table command") {
    Outcome r = call({"table", "--name", "minkowski8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("M(1) = 2\n") != std::string::npos);
    CHECK(r.out.find("M(8) = 2^15·3^5·5^2·7 = 1393459200") != std::string::npos);

    r = call({"table", "--name", "e8"});
    CHECK(r.out.find("M_S/M = 5·7·17") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"minkowski"}).code == 2);                       // missing --n
    CHECK(call({"bound", "--kind", "m", "--root", "H:4", "--field", "Q", "--ell", "2"}).code == 2);
    CHECK(call({"invariants", "--field", "F:10", "--ell", "3"}).code == 2);
    CHECK(call({"schur", "--n", "3", "--ell", "3", "--field", "R"}).code == 1); // m = inf
    CHECK(call({"mass", "--root", "A:2"}).code == 1);           // odd degree
    CHECK(call({"bound", "--kind", "corank", "--root", "E8", "--field", "Q", "--ell", "5"}).code ==
          1); // finite m
}

TEST_CASE("json output round-trips to the exact text rendering") {
    const std::vector<std::vector<std::string>> commands = {
        {"minkowski", "--n", "8"},
        {"minkowski", "--n", "7", "--ell", "2"},
        {"schur", "--n", "4", "--ell", "2", "--field", "Q"},
        {"invariants", "--field", "F:9", "--ell", "2"},
        {"invariants", "--field", "R", "--ell", "2"},
        {"bound", "--kind", "m", "--root", "E8", "--field", "Q", "--ell", "all"},
        {"bound", "--kind", "s", "--root", "E8", "--field", "Q", "--ell", "11"},
        {"bound", "--kind", "torus", "--root", "A:3", "--field", "Q", "--ell", "2"},
        {"bound", "--kind", "achievable", "--root", "A:2", "--field", "Q", "--ell", "2"},
        {"bound", "--kind", "corank", "--root", "E6", "--field", "R", "--ell", "3"},
        {"mass", "--root", "F4"},
        {"mass", "--root", "F4", "--ell", "13"},
        {"witness", "--kind", "wreath", "--n", "6", "--ell", "3"},
        {"witness", "--kind", "gl2", "--p", "5", "--ell", "3"},
        {"table", "--name", "minkowski8"},
        {"table", "--name", "e8"},
        {"table", "--name", "f4mass"},
        {"verify", "--suite", "gl2-enumeration"},
    };
    for (const auto& command : commands) {
        CAPTURE(command[0]);
        Outcome text = call(command);
        std::vector<std::string> with_json = command;
        with_json.push_back("--json");
        Outcome json = call(with_json);
        REQUIRE(text.code == 0);
        REQUIRE(json.code == 0);
        CHECK(text.out == render_text(json.out) + "\n");
    }
}

TEST_CASE("verify subcommand reports failures via exit code 3") {
    Outcome r = call({"verify", "--suite", "gl2-enumeration"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] gl2-enumeration") != std::string::npos);
    CHECK(r.out.find("passed 12/12") != std::string::npos);

    CHECK(call({"verify", "--suite", "no-such-suite"}).code == 2);
}
