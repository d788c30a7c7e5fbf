#include "klrsk/error.hpp"
#include "klrsk/multisegment.hpp"
#include "klrsk/verify.hpp"

#include <doctest.h>

#include <functional>

using namespace klrsk;

namespace {

Multisegment M(const char* s)
{
    return parse_multisegment(s);
}

// Smallest k such that the segments can be dealt into k ladder_less chains.
int width_by_search(const Multisegment& m)
{
    const auto segs = m.segments();
    for (int k = 1;; ++k) {
        std::vector<std::vector<Segment>> chains(k);
        std::function<bool(size_t)> place = [&](size_t i) {
            if (i == segs.size())
                return true;
            for (auto& c : chains) {
                bool ok = true;
                for (const auto& s : c)
                    ok = ok && (ladder_less(s, segs[i]) || ladder_less(segs[i], s));
                if (!ok)
                    continue;
                c.push_back(segs[i]);
                if (place(i + 1))
                    return true;
                c.pop_back();
                if (c.empty())
                    break;  // empty chains are interchangeable
            }
            return false;
        };
        if (place(0))
            return k;
    }
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::Parse;
}

} // namespace

TEST_CASE("segment relations")
{
    CHECK(precedes({1, 2}, {2, 3}));
    CHECK_FALSE(precedes({1, 1}, {3, 4}));
    CHECK_FALSE(precedes({1, 2}, {1, 3}));
    CHECK(is_linked({1, 1}, {2, 2}));
    CHECK_FALSE(is_linked({1, 2}, {1, 1}));
    CHECK(is_linked({2, 2}, {1, 1}));
    CHECK(ladder_less({1, 2}, {2, 3}));
    CHECK_FALSE(ladder_less({2, 2}, {1, 3}));
    CHECK_FALSE(ladder_less({1, 3}, {1, 4}));
    CHECK(kind_of([] { Segment(3, 1); }) == ErrorKind::InvalidSegment);
}

TEST_CASE("width examples")
{
    CHECK(width(M("[1,2]+[2,3]")) == 1);
    CHECK(width(M("2*[1,1]")) == 2);
    CHECK(width(M("[2,2]+[1,3]")) == 2);
    CHECK(kind_of([] { width(Multisegment{}); }) == ErrorKind::ZeroMultisegment);
}

TEST_CASE("width matches exhaustive chain partition on the grid")
{
    for (const auto& m : grid_multisegments(GridSpec{}))
        REQUIRE_MESSAGE(width(m) == width_by_search(m), m.to_string());
}

TEST_CASE("left-aligned decomposition")
{
    using B = LeftAlignedBlock;
    CHECK(left_aligned_decomposition(M("[1,1]+[1,3]+[2,2]")) == std::vector<B>{{1, {3, 1}}, {2, {2}}});
    CHECK(left_aligned_decomposition(M("[1,2]")) == std::vector<B>{{1, {2}}});
    CHECK(left_aligned_decomposition(M("2*[1,1]")) == std::vector<B>{{1, {1, 1}}});
    for (const auto& m : grid_multisegments(GridSpec{})) {
        Multisegment back;
        for (const auto& b : left_aligned_decomposition(m))
            back += b.to_multisegment();
        REQUIRE(back == m);
    }
}

TEST_CASE("spherical multisegment is the only unlinked one")
{
    CHECK(spherical_multisegment(RootVector::interval(1, 2)) == M("[1,2]"));
    CHECK(spherical_multisegment(RootVector::simple(1, 2) + RootVector::simple(2)) == M("[1,2]+[1,1]"));
    CHECK(spherical_multisegment(RootVector::simple(5)) == M("[5,5]"));
    for (const auto& beta : {RootVector::interval(0, 3), RootVector::interval(0, 3) + RootVector::interval(1, 2),
                             RootVector::simple(0, 2) + RootVector::simple(1) + RootVector::simple(2, 3)}) {
        int unlinked = 0;
        for (const auto& m : multisegments_of_weight(beta))
            if (pairwise_unlinked(m)) {
                ++unlinked;
                CHECK(m == spherical_multisegment(beta));
            }
        CHECK(unlinked == 1);
    }
}

TEST_CASE("multisegments of a weight")
{
    // partitions of the interval into segments: 2^(n-1)
    CHECK(multisegments_of_weight(RootVector::interval(0, 3)).size() == 8);
    CHECK(multisegments_of_weight(RootVector::simple(2, 3)).size() == 1);
    for (const auto& m : multisegments_of_weight(RootVector::interval(0, 2) + RootVector::simple(1)))
        CHECK(m.weight() == RootVector::interval(0, 2) + RootVector::simple(1));
}

TEST_CASE("ladder recognition")
{
    const auto l = as_ladder(M("[2,3]+[1,2]"));
    REQUIRE(l);
    CHECK(l->segments() == std::vector<Segment>{{2, 3}, {1, 2}});
    CHECK(l->lambda() == std::vector<int>{2, 1});
    CHECK(l->mu() == std::vector<int>{4, 3});
    CHECK(LadderMultisegment::from_lambda_mu({2, 1}, {4, 3}) == *l);
    CHECK_FALSE(as_ladder(M("2*[1,1]")));
    CHECK_FALSE(as_ladder(M("[2,2]+[1,3]")));
    CHECK(kind_of([] { LadderMultisegment({{1, 1}, {1, 1}}); }) == ErrorKind::MalformedLadder);
}

TEST_CASE("parser and printer")
{
    CHECK(M("[1,1] + [1,1]").to_string() == "2*[1,1]");
    CHECK(M("0").empty());
    CHECK(Multisegment{}.to_string() == "0");
    CHECK(M("[2,3]+[1,3]+[0,0]").to_string() == "[0,0]+[1,3]+[2,3]");
    CHECK(M("[-2,-1]").to_string() == "[-2,-1]");
    for (const auto& m : grid_multisegments(GridSpec{}))
        REQUIRE(parse_multisegment(m.to_string()) == m);
    for (const char* bad : {"", "[1,2", "[1;2]", "[2,1]", "x", "2*", "[1,2]+", "0*[1,1]"})
        CHECK_MESSAGE(kind_of([&] { parse_multisegment(bad); }) == ErrorKind::Parse, bad);
}

TEST_CASE("translation")
{
    CHECK(M("[0,1]+[2,2]").translated(3) == M("[3,4]+[5,5]"));
    CHECK(M("[0,1]").begins() == RootVector::simple(0));
    CHECK(M("[0,1]+[1,1]").ends() == RootVector::simple(1, 2));
}
