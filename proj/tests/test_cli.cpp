#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
    std::string out;
    int code = -1;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(FLAGMAPS_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int st = pclose(pipe);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

int code_of(const std::string& args)
{
    return run(args).code;
}

void golden(const std::string& args, const std::string& expected, int code = 0)
{
    CAPTURE(args);
    auto a = run(args);
    CHECK(a.out == expected);
    CHECK(a.code == code);
    auto b = run(args);
    CHECK(b.out == a.out);
}

} // namespace

TEST_CASE("char and dim")
{
    golden("char A1 1", "w1 + rho\n");
    golden("char A1 2", "w1^2 + rho^2 + 1\n");
    golden("char A2 1,0", "w1*rho + w1 + w2^2*rho\n");
    golden("dim A2 1,1", "8\n");
    golden("dim G2 0,1", "14\n");
    golden("--group-matrix '[[2,-1],[-1,2]]' dim custom 2,0", "6\n");
}

TEST_CASE("smap and realize")
{
    golden("smap '[[1],[0]]'", "w1 + rho + 1\n");
    golden("realize A1 '[[2]]'", "not certified by this criterion: negative coefficient -1 at weight (0)\n", 1);
    golden("realize A1 '[[1],[0]]'", "certified: dim 3\n  lambda (1) mult 1\n  lambda (0) mult 1\n");
    golden("--format json realize A1 '[[1]]'", "{\"summands\":[{\"lambda\":[1],\"mult\":1}],\"dim\":2}\n");
    golden("realize A2 '{\"n\":3,\"rows\":[[1,0],[-1,1]]}'", "certified: dim 3\n  lambda (1,0) mult 1\n");
}

TEST_CASE("verify-theorem")
{
    golden("verify-theorem A1 '[[2],[0],[-2]]'",
           "holds: true\ncharacter: w1^2 + rho^2 + 1\ns-map: w1^2 + rho^2 + 1\n");
}

TEST_CASE("type A commands")
{
    golden("schur 1,1 3", "y1*y2 + y1*y3 + y2*y3\n");
    golden("alpha A2 'w2^2*rho'", "y2\n");
    auto c = run("cor3 1,1 3");
    CHECK(c.code == 0);
    CHECK(c.out.find("rows: [[0,1],[1,-1]]") != std::string::npos);
    CHECK(c.out.find("check: pass") != std::string::npos);
}

TEST_CASE("omega")
{
    golden("omega A2 3", "(1,0)\n(0,1)\n3*(0,0)\n");
    golden("omega A1 2", "(1)\n2*(0)\n");
}

TEST_CASE("documented command examples")
{
    golden("char A2 0,0", "1\n");
    golden("dim A1 7", "8\n");
    golden("dim B3 0,0,0", "1\n");
    golden("realize A1 '{\"n\":2,\"rows\":[[2]]}'",
           "not certified by this criterion: negative coefficient -1 at weight (0)\n", 1);
    golden("realize A1 '[[1]]'", "certified: dim 2\n  lambda (1) mult 1\n");
    golden("smap '[[2]]'", "w1^2 + rho^2\n");
    golden("smap '[[1,0],[-1,1]]'", "w1*rho + w1 + w2^2*rho\n");
    golden("verify-theorem A1 '[[1],[-1]]'", "holds: true\ncharacter: w1 + rho\ns-map: w1 + rho\n");
    golden("schur 1 3", "y1 + y2 + y3\n");
    golden("alpha A2 w1", "y1\n");
    golden("alpha A1 'w1 + rho'", "y1 + y2\n");
    golden("omega A1 1", "(0)\n");
    auto c = run("cor3 1 2");
    CHECK(c.code == 0);
    CHECK(c.out.find("n: 2\n") == 0);
    CHECK(c.out.find("rows: [[1]]") != std::string::npos);
    CHECK(code_of("cor3 1,1 2") == 2);
    CHECK(code_of("schur 1,2 3") == 2);
    CHECK(code_of("verify-theorem A1 '[[1],[1]]'") == 2);
    auto j = run("--format json cor3 1,1 3");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"check\":") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(code_of("dim D2 1,0") == 2);
    CHECK(code_of("dim E8 1") == 2);
    CHECK(code_of("char A2 1") == 2);
    CHECK(code_of("char A2 -1,0") == 2);
    CHECK(code_of("realize A1 '[[1],[1]]'") == 1);
    CHECK(code_of("--max-terms 3 char A2 4,4") == 3);
    CHECK(code_of("--max-n 4 omega A1 5") == 3);
    CHECK(code_of("nosuchcommand") == 2);
    CHECK(code_of("dim custom 1") == 2);
    CHECK(code_of("smap '{'") == 2);
}
