#include "klrsk/characters.hpp"
#include "klrsk/error.hpp"
#include "klrsk/invariants.hpp"
#include "klrsk/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <bit>
#include <random>
#include <set>

using namespace klrsk;

namespace {

Multisegment M(const char* s)
{
    return parse_multisegment(s);
}

LadderMultisegment L(const char* s)
{
    return *as_ladder(parse_multisegment(s));
}

LaurentPoly q(int k)
{
    return LaurentPoly::monomial(k);
}

// Interleavings of two words by position bitmask, degree summed pair by pair.
GradedCharacter shuffle_by_masks(const GradedCharacter& a, const GradedCharacter& b)
{
    GradedCharacter out(a.weight() + b.weight());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            const int n = int(u.size() + v.size());
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (std::popcount(mask) != int(u.size()))
                    continue;
                Word w;
                std::vector<int> from_v;
                size_t iu = 0, iv = 0;
                for (int p = 0; p < n; ++p) {
                    if (mask >> p & 1) {
                        w.push_back(u[iu++]);
                        from_v.push_back(0);
                    } else {
                        w.push_back(v[iv++]);
                        from_v.push_back(1);
                    }
                }
                int deg = 0;
                for (int x = 0; x < n; ++x)
                    for (int y = x + 1; y < n; ++y)
                        if (from_v[x] && !from_v[y])
                            deg -= bilinear_form(w[x], w[y]);
                out.add(w, cu * cv * q(deg));
            }
        }
    return out;
}

GradedCharacter random_char(std::mt19937& rng, int len)
{
    std::uniform_int_distribution<int> letter(0, 3), coef(-2, 2);
    Word w0;
    for (int i = 0; i < len; ++i)
        w0.push_back(letter(rng));
    GradedCharacter ch(RootVector::of_word(w0));
    auto perm = w0;
    std::sort(perm.begin(), perm.end());
    do
        if (rng() % 3 == 0)
            ch.add(perm, q(coef(rng)) + LaurentPoly(coef(rng)));
    while (std::next_permutation(perm.begin(), perm.end()));
    return ch;
}

// Boxes (row, content); row r is the r-th ladder segment, largest first. Row r
// is read downwards, and content x in row r+1 comes before content x+1 in row r.
std::set<Word> ladder_words_by_poset(const LadderMultisegment& l)
{
    struct Box {
        int row, x;
    };
    std::vector<Box> boxes;
    for (int r = 0; r < l.size(); ++r)
        for (int x = l.segments()[r].b; x <= l.segments()[r].e; ++x)
            boxes.push_back({r, x});
    auto before = [](const Box& a, const Box& b) {
        return (a.row == b.row && a.x == b.x + 1) || (a.row == b.row + 1 && a.x + 1 == b.x);
    };
    std::set<Word> out;
    std::vector<bool> used(boxes.size());
    Word w;
    std::function<void()> rec = [&] {
        if (w.size() == boxes.size()) {
            out.insert(w);
            return;
        }
        for (size_t i = 0; i < boxes.size(); ++i) {
            if (used[i])
                continue;
            bool ready = true;
            for (size_t j = 0; j < boxes.size(); ++j)
                ready = ready && (used[j] || !before(boxes[j], boxes[i]));
            if (!ready)
                continue;
            used[i] = true;
            w.push_back(boxes[i].x);
            rec();
            w.pop_back();
            used[i] = false;
        }
    };
    rec();
    return out;
}

} // namespace

TEST_CASE("Laurent polynomials")
{
    const LaurentPoly p = q(-1) + q(1);
    CHECK(p.to_string() == "q^-1+q");
    CHECK(LaurentPoly(2).to_string() == "2");
    CHECK((LaurentPoly(0) - q(3)).to_string() == "-q^3");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(p * p == q(-2) + LaurentPoly(2) + q(2));
    CHECK(p.bar() == p);
    CHECK(q(2).bar() == q(-2));
    CHECK(p.at_one() == 2);
    CHECK((p - p).is_zero());
    CHECK(q(4).is_unit_monomial());
    CHECK_FALSE(p.is_unit_monomial());
    CHECK(p.shifted(1) == LaurentPoly(1) + q(2));
}

TEST_CASE("shifts")
{
    const auto ch = GradedCharacter::of_word({1, 2});
    CHECK(ch.shifted(2).coefficient({1, 2}) == q(2));
    CHECK(ch.shifted(2).shifted(-5) == ch.shifted(-3));
    CHECK(ch.shifted(0) == ch);
    GradedCharacter bad(RootVector::simple(1));
    try {
        bad.add({2}, 1);
        FAIL("expected WeightMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WeightMismatch);
    }
}

TEST_CASE("shuffle examples")
{
    const auto s = shuffle(GradedCharacter::of_word({1}), GradedCharacter::of_word({2}));
    CHECK(s.coefficient({1, 2}) == 1);
    CHECK(s.coefficient({2, 1}) == q(1));
    CHECK(coefficient_of_word(s, {2, 1}) == q(1));
    CHECK(coefficient_of_word(s, {1, 1}).is_zero());
    const auto far = shuffle(GradedCharacter::of_word({1}), GradedCharacter::of_word({5}));
    CHECK(far.coefficient({1, 5}) == 1);
    CHECK(far.coefficient({5, 1}) == 1);
    CHECK(shuffle(std::vector<GradedCharacter>{}).coefficient({}) == 1);
}

TEST_CASE("shuffle against position masks, serial and parallel")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_char(rng, 1 + trial % 3);
        const auto b = random_char(rng, 1 + trial % 4);
        const auto s = shuffle(a, b);
        REQUIRE(s == shuffle_by_masks(a, b));
        REQUIRE(s == shuffle_parallel(a, b));
    }
}

TEST_CASE("shuffle is associative and counts interleavings at q=1")
{
    const auto words = std::vector<Word>{{1}, {2, 1}, {0, 2}, {1, 1}, {3, 2, 1}, {2}};
    for (const auto& x : words)
        for (const auto& y : words)
            for (const auto& z : words) {
                if (x.size() + y.size() + z.size() > 6)
                    continue;
                const auto a = GradedCharacter::of_word(x), b = GradedCharacter::of_word(y),
                           c = GradedCharacter::of_word(z);
                const auto left = shuffle(shuffle(a, b), c);
                REQUIRE(left == shuffle(a, shuffle(b, c)));
                const size_t n = x.size() + y.size() + z.size();
                // multinomial n! / (|x|! |y|! |z|!)
                int64_t expect = 1;
                for (size_t i = 1; i <= n; ++i)
                    expect *= int64_t(i);
                for (const auto* w : {&x, &y, &z})
                    for (size_t i = 1; i <= w->size(); ++i)
                        expect /= int64_t(i);
                REQUIRE(left.dimension() == expect);
            }
}

TEST_CASE("restriction")
{
    const auto s = shuffle(GradedCharacter::of_word({1}), GradedCharacter::of_word({2}));
    const auto r = restrict_char(s, {RootVector::simple(2), RootVector::simple(1)});
    CHECK(r == Restriction{{{Word{2}, Word{1}}, q(1)}});
    const auto whole = restrict_char(s, {s.weight()});
    CHECK(whole.size() == 2);
    CHECK(whole.at({Word{2, 1}}) == q(1));
    CHECK(restrict_char(s, {RootVector::simple(3), RootVector::interval(1, 2) - RootVector::simple(1)}).empty());
}

TEST_CASE("segment characters")
{
    CHECK(segment_char({1, 2}) == GradedCharacter::of_word({2, 1}));
    CHECK(segment_char({3, 3}) == GradedCharacter::of_word({3}));
    CHECK(segment_char({0, 3}).is_self_dual());
}

TEST_CASE("ladder characters match reading words of the box poset")
{
    CHECK(ladder_char({1}, {3}) == segment_char({1, 2}));
    CHECK(ladder_char({2, 1}, {4, 3}).dimension() == 2);
    for (const auto& l : window_ladders(GridSpec{0, 4})) {
        const auto ch = ladder_char(l);
        std::set<Word> got;
        for (const auto& [w, c] : ch.terms()) {
            REQUIRE(c == 1);
            got.insert(w);
        }
        REQUIRE_MESSAGE(got == ladder_words_by_poset(l), l.to_string());
    }
    try {
        ladder_char({1, 2}, {3, 4});
        FAIL("expected MalformedLadder");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedLadder);
    }
}

TEST_CASE("nabla characters")
{
    CHECK(nabla_char(1, {1}) == segment_char({1, 1}));
    CHECK(nabla_char(1, {1, 1}).is_self_dual());
    CHECK(nabla_char(0, {2, 1, 1}).is_self_dual());
    // equal begins: the two orders differ by one step
    const auto a = segment_char({1, 3}), b = segment_char({1, 2});
    CHECK(shuffle(a, b) == shuffle(b, a).shifted(-1));
    CHECK(nabla_char(1, {3, 2}) == shuffle(a, b).shifted(1));
}

TEST_CASE("KR characters")
{
    const auto kr = kr_char(M("2*[1,1]"));
    CHECK(kr.terms().size() == 1);
    CHECK(kr.coefficient({1, 1}) == q(-1) + q(1));
    CHECK(kr.is_self_dual());
    CHECK(kr_char(M("[2,4]")) == segment_char({2, 4}));
    for (const auto& m : grid_multisegments(GridSpec{0, 2, 3, 2}))
        REQUIRE(kr_char(m) == sigma_char(m));
    CHECK(indicator_char(M("[1,1]+[1,3]+[2,2]")).size() == 2);
    CHECK(indicator_char(M("[1,2]")).size() == 1);
    CHECK(indicator_char(M("2*[1,1]")).front() == nabla_char(1, {1, 1}));
}

TEST_CASE("unlinked segments commute up to a shift")
{
    for (int b1 = 0; b1 <= 3; ++b1)
        for (int e1 = b1; e1 <= 3; ++e1)
            for (int b2 = 0; b2 <= 3; ++b2)
                for (int e2 = b2; e2 <= 3; ++e2) {
                    const Segment x(b1, e1), y(b2, e2);
                    if (is_linked(x, y) || !right_less(x, y))
                        continue;
                    const auto xy = shuffle(segment_char(x), segment_char(y));
                    const auto yx = shuffle(segment_char(y), segment_char(x));
                    const int k = (b1 == b2 || e1 == e2) ? -1 : 0;
                    REQUIRE(yx == xy.shifted(k));
                }
}

TEST_CASE("gamma characters")
{
    CHECK(gamma_char(M("[0,1]+[1,2]")) == ladder_char(L("[0,1]+[1,2]")));
    const auto g = gamma_char(M("2*[1,1]"));
    CHECK(g.is_self_dual());
    CHECK(g.coefficient({1, 1}) == q(-1) + q(1));
    const auto m = M("[1,3]+[2,2]");
    const auto gm = gamma_char(m);
    CHECK(gm.coefficient(dominant_word(m)) == 1);
}

TEST_CASE("dominant and spherical words")
{
    CHECK(dominant_word(M("[1,2]")) == Word{2, 1});
    CHECK(dominant_word(M("[1,3]+[2,2]")) == Word{2, 3, 2, 1});
    CHECK(spherical_word(RootVector::interval(0, 2) + RootVector::simple(1)) == Word{2, 1, 1, 0});
    for (const auto& m : grid_multisegments(GridSpec{0, 2, 3, 2})) {
        const auto kr = kr_char(m);
        REQUIRE(kr.terms().begin()->first == dominant_word(m));
    }
}

TEST_CASE("spherical multiplicity is a monomial or zero")
{
    for (const auto& [b1, b2] : {std::pair{M("[0,1]"), M("[1,2]")}, std::pair{M("[0,2]"), M("[1,2]+[2,2]")},
                                 std::pair{M("[1,1]+[2,2]"), M("[0,1]")}}) {
        const auto beta = b1.weight() + b2.weight();
        const auto sph = kr_char(spherical_multisegment(beta));
        const Word marker = spherical_word(beta);
        const auto target = sph.coefficient(marker);
        REQUIRE_FALSE(target.is_zero());
        // every simple we can write down for each block: spherical ones and ladders
        auto simples = [](const Multisegment& block) {
            std::vector<std::pair<GradedCharacter, bool>> out;
            for (const auto& m : multisegments_of_weight(block.weight())) {
                if (pairwise_unlinked(m))
                    out.emplace_back(kr_char(m), true);
                else if (auto l = as_ladder(m))
                    out.emplace_back(ladder_char(*l), false);
            }
            return out;
        };
        for (const auto& [c1, s1] : simples(b1))
            for (const auto& [c2, s2] : simples(b2)) {
                const auto c = shuffle(c1, c2).coefficient(marker);
                if (!(s1 && s2)) {
                    CHECK(c.is_zero());
                    continue;
                }
                REQUIRE_FALSE(c.is_zero());
                const int r = c.terms().rbegin()->first - target.terms().rbegin()->first;
                CHECK(c == target.shifted(r));
            }
    }
}

TEST_CASE("word coefficients in products without expansion")
{
    const std::vector<GradedCharacter> fs{ladder_char(L("[1,2]")), segment_char({0, 1}), segment_char({2, 2})};
    const auto full = shuffle(fs);
    for (const auto& [w, c] : full.terms())
        REQUIRE(coefficient_in_product(w, fs) == c);
    CHECK(coefficient_in_word_product({2, 1}, {{1}, {2}}) == q(1));
}

TEST_CASE("degree lemma")
{
    CHECK(degseg_shift({1, 2}, 1, {2}) == -1);
    CHECK(check_degseg({1, 2}, 1, {2}, -1));
    CHECK(degseg_target({1, 2}, 1, {2}) == std::vector<int>{2, 2});
    CHECK(degseg_shift({1, 2}, 1, {1}) == -1);
    CHECK(check_degseg({1, 2}, 1, {1}, -1));
    CHECK(degseg_shift({0, 1}, 1, {}) == 0);
    CHECK(check_degseg({0, 1}, 1, {}, 0));
    try {
        degseg_target({0, 1}, 1, {1});
        FAIL("expected NoSuchSubquotient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoSuchSubquotient);
    }
}
