#include "klrsk/error.hpp"
#include "klrsk/verify.hpp"

#include <doctest.h>

using namespace klrsk;

TEST_CASE("grid spec parsing")
{
    const auto g = GridSpec::parse("window=0..3,maxsegs=4,maxmult=2");
    CHECK(g.lo == 0);
    CHECK(g.hi == 3);
    CHECK(g.maxsegs == 4);
    CHECK(g.maxmult == 2);
    CHECK(g.to_string() == "window=0..3,maxsegs=4,maxmult=2");
    CHECK(GridSpec::parse("maxsegs=2").hi == 3);
    CHECK(GridSpec::parse("window=-1..1").lo == -1);
    for (const char* bad : {"window=3..0", "maxsegs=x", "size=3", "window=0-3"})
        CHECK_THROWS_AS(GridSpec::parse(bad), Error);
}

TEST_CASE("grid sizes")
{
    const GridSpec g;
    CHECK(grid_multisegments(g).size() == 890);
    CHECK(window_ladders(g).size() == 41);
    CHECK(grid_pairs(g).size() == 10447);
}

TEST_CASE("serial and parallel sweeps agree")
{
    VerifyOptions s, p;
    s.grid = p.grid = GridSpec{0, 2, 3, 2};
    s.exec = Exec::Serial;
    p.exec = Exec::Parallel;
    const auto rs = run_all(s), rp = run_all(p);
    REQUIRE(rs.size() == 10);
    REQUIRE(rp.size() == 10);
    for (size_t i = 0; i < rs.size(); ++i) {
        CHECK(rs[i].name == rp[i].name);
        CHECK(rs[i].pass);
        CHECK(rs[i].pass == rp[i].pass);
        CHECK(rs[i].cases == rp[i].cases);
        CHECK(rs[i].failures == rp[i].failures);
        CHECK(rs[i].note == rp[i].note);
    }
}

TEST_CASE("result formatting")
{
    CheckResult r{"x", false, 3, 1, "[1,1]", "", 0.5};
    const auto s = format_result(r);
    CHECK(s.rfind("FAIL x (cases=3, failures=1", 0) == 0);
    CHECK(s.find("[1,1]") != std::string::npos);
}
