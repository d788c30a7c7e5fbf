#include "klrsk/characters.hpp"

#include "klrsk/error.hpp"
#include "klrsk/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace klrsk {

// ---------------------------------------------------------------------------
// GradedCharacter

GradedCharacter GradedCharacter::of_word(const Word& w)
{
    GradedCharacter ch(RootVector::of_word(w));
    ch.add(w, 1);
    return ch;
}

void GradedCharacter::add(const Word& w, const LaurentPoly& coef)
{
    if (coef.is_zero())
        return;
    if (RootVector::of_word(w) != weight_)
        throw Error(ErrorKind::WeightMismatch, word_to_string(w) + " does not have weight " + weight_.to_string());
    auto [it, fresh] = terms_.try_emplace(w, coef);
    if (!fresh) {
        it->second += coef;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentPoly GradedCharacter::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& o)
{
    if (empty() && weight_.empty())
        weight_ = o.weight_;
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

GradedCharacter GradedCharacter::operator-(const GradedCharacter& o) const
{
    GradedCharacter r = *this;
    for (const auto& [w, c] : o.terms_)
        r.add(w, LaurentPoly{} - c);
    return r;
}

GradedCharacter GradedCharacter::shifted(int k) const
{
    GradedCharacter r(weight_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, c.shifted(k));
    return r;
}

GradedCharacter GradedCharacter::dual() const
{
    GradedCharacter r(weight_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, c.bar());
    return r;
}

bool GradedCharacter::nonnegative() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.nonnegative(); });
}

bool GradedCharacter::homogeneous_unit() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == LaurentPoly(1); });
}

int64_t GradedCharacter::dimension() const
{
    int64_t d = 0;
    for (const auto& [w, c] : terms_)
        d += c.at_one();
    return d;
}

std::string GradedCharacter::to_string() const
{
    std::ostringstream os;
    for (const auto& [w, c] : terms_)
        os << c.to_string() << " . " << word_to_string(w) << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Shuffle

namespace {

// Adds every interleaving of u and v into `out` with coefficient coef * q^deg.
void shuffle_words(const Word& u, const Word& v, const LaurentPoly& coef, std::map<Word, LaurentPoly>& out)
{
    Word w;
    w.reserve(u.size() + v.size());
    std::function<void(size_t, size_t, int)> rec = [&](size_t i, size_t j, int deg) {
        if (i == u.size() && j == v.size()) {
            auto [it, fresh] = out.try_emplace(w, coef.shifted(deg));
            if (!fresh)
                it->second += coef.shifted(deg);
            return;
        }
        if (i < u.size()) {
            w.push_back(u[i]);
            rec(i + 1, j, deg);
            w.pop_back();
        }
        if (j < v.size()) {
            int cross = 0;
            for (size_t k = i; k < u.size(); ++k)
                cross += bilinear_form(u[k], v[j]);
            w.push_back(v[j]);
            rec(i, j + 1, deg - cross);
            w.pop_back();
        }
    };
    rec(0, 0, 0);
}

GradedCharacter from_terms(const RootVector& weight, std::map<Word, LaurentPoly>&& terms)
{
    GradedCharacter r(weight);
    for (auto& [w, c] : terms)
        r.add(w, c);
    return r;
}

} // namespace

GradedCharacter shuffle(const GradedCharacter& a, const GradedCharacter& b)
{
    std::map<Word, LaurentPoly> out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            shuffle_words(u, v, cu * cv, out);
    return from_terms(a.weight() + b.weight(), std::move(out));
}

GradedCharacter shuffle_parallel(const GradedCharacter& a, const GradedCharacter& b)
{
    std::vector<std::pair<const Word*, const LaurentPoly*>> left, right;
    for (const auto& [w, c] : a.terms())
        left.emplace_back(&w, &c);
    for (const auto& [w, c] : b.terms())
        right.emplace_back(&w, &c);
    const long pairs = static_cast<long>(left.size() * right.size());
    std::map<Word, LaurentPoly> out;
#pragma omp parallel
    {
        std::map<Word, LaurentPoly> local;
#pragma omp for schedule(dynamic, 4) nowait
        for (long k = 0; k < pairs; ++k) {
            const auto& [u, cu] = left[k / right.size()];
            const auto& [v, cv] = right[k % right.size()];
            shuffle_words(*u, *v, *cu * *cv, local);
        }
#pragma omp critical
        for (auto& [w, c] : local)
            out[w] += c;
    }
    return from_terms(a.weight() + b.weight(), std::move(out));
}

GradedCharacter shuffle(const std::vector<GradedCharacter>& factors)
{
    GradedCharacter acc = GradedCharacter::of_word({});
    for (const auto& f : factors)
        acc = shuffle(acc, f);
    return acc;
}

Restriction restrict_char(const GradedCharacter& ch, const std::vector<RootVector>& blocks)
{
    Restriction out;
    for (const auto& [w, c] : ch.terms()) {
        std::vector<Word> parts;
        size_t pos = 0;
        bool ok = true;
        for (const auto& beta : blocks) {
            const size_t h = static_cast<size_t>(beta.height());
            if (pos + h > w.size()) {
                ok = false;
                break;
            }
            Word part(w.begin() + pos, w.begin() + pos + h);
            if (RootVector::of_word(part) != beta) {
                ok = false;
                break;
            }
            parts.push_back(std::move(part));
            pos += h;
        }
        if (ok && pos == w.size())
            out[parts] += c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Characters of specific modules

GradedCharacter segment_char(const Segment& s)
{
    Word w;
    for (int x = s.e; x >= s.b; --x)
        w.push_back(x);
    return GradedCharacter::of_word(w);
}

GradedCharacter ladder_char(const std::vector<int>& lambda, const std::vector<int>& mu)
{
    const size_t r = lambda.size();
    if (mu.size() != r)
        throw Error(ErrorKind::MalformedLadder, "lambda and mu differ in length");
    for (size_t i = 0; i < r; ++i) {
        if (lambda[i] > mu[i])
            throw Error(ErrorKind::MalformedLadder, "need lambda_i <= mu_i");
        if (i > 0 && (lambda[i] >= lambda[i - 1] || mu[i] >= mu[i - 1]))
            throw Error(ErrorKind::MalformedLadder, "lambda and mu must be strictly decreasing");
    }
    RootVector weight;
    for (size_t i = 0; i < r; ++i)
        for (int x = lambda[i]; x < mu[i]; ++x)
            weight.add(x);

    // The first letter of a word comes from the top: lower some mu_j by one,
    // emitting mu_j - 1, as long as the sequence stays strictly decreasing.
    GradedCharacter out(weight);
    Word w;
    std::vector<int> state = mu;
    std::function<void()> rec = [&]() {
        bool done = true;
        for (size_t j = 0; j < r; ++j) {
            if (state[j] == lambda[j])
                continue;
            done = false;
            if (j + 1 < r && state[j] - 1 <= state[j + 1])
                continue;
            --state[j];
            w.push_back(state[j]);
            rec();
            w.pop_back();
            ++state[j];
        }
        if (done)
            out.add(w, 1);
    };
    rec();
    return out;
}

GradedCharacter ladder_char(const LadderMultisegment& l)
{
    return ladder_char(l.lambda(), l.mu());
}

GradedCharacter nabla_char(int a, const std::vector<int>& ends)
{
    std::vector<GradedCharacter> factors;
    for (size_t i = 0; i < ends.size(); ++i) {
        if (ends[i] < a || (i > 0 && ends[i] > ends[i - 1]))
            throw Error(ErrorKind::InvalidSegment, "nabla ends must be weakly decreasing and at least a");
        factors.push_back(segment_char(Segment(a, ends[i])));
    }
    const int k = static_cast<int>(ends.size());
    return shuffle(factors).shifted(k * (k - 1) / 2);
}

GradedCharacter nabla_char(const LeftAlignedBlock& block)
{
    return nabla_char(block.a, block.ends);
}

GradedCharacter kr_char(const Multisegment& m)
{
    std::vector<GradedCharacter> factors;
    int shift = 0;
    for (const auto& [s, p] : m.terms()) {
        factors.insert(factors.end(), p, segment_char(s));
        shift += p * (p - 1) / 2;
    }
    return shuffle(factors).shifted(shift);
}

std::vector<GradedCharacter> indicator_char(const Multisegment& m)
{
    std::vector<GradedCharacter> out;
    for (const auto& block : left_aligned_decomposition(m))
        out.push_back(nabla_char(block));
    return out;
}

GradedCharacter sigma_char(const Multisegment& m)
{
    return shuffle(indicator_char(m));
}

GradedCharacter gamma_char(const Multisegment& m)
{
    const auto desc = gamma_descriptor(m);
    std::vector<GradedCharacter> factors;
    for (const auto& l : desc.factors)
        factors.push_back(ladder_char(l));
    return shuffle(factors).shifted(-desc.shift);
}

LaurentPoly coefficient_of_word(const GradedCharacter& ch, const Word& w)
{
    return ch.coefficient(w);
}

// ---------------------------------------------------------------------------
// Single-word coefficients

namespace {

// Calls visit(chosen, rest, deg) for each way of picking positions of `w` whose
// letters have weight `beta`, where deg sums -(w[a], w[b]) over chosen a with
// an unchosen b before it.
void for_each_split(const Word& w, const RootVector& beta,
                    const std::function<void(const Word&, const Word&, int)>& visit)
{
    const size_t n = w.size();
    RootVector need = beta;
    std::vector<char> pick(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
        if (left == 0) {
            Word chosen, rest;
            int deg = 0;
            for (size_t a = 0; a < n; ++a) {
                if (pick[a]) {
                    chosen.push_back(w[a]);
                    for (size_t b = 0; b < a; ++b)
                        if (!pick[b])
                            deg -= bilinear_form(w[a], w[b]);
                } else {
                    rest.push_back(w[a]);
                }
            }
            visit(chosen, rest, deg);
            return;
        }
        if (n - pos < static_cast<size_t>(left))
            return;
        if (need[w[pos]] > 0) {
            pick[pos] = 1;
            need.add(w[pos], -1);
            rec(pos + 1, left - 1);
            need.add(w[pos], 1);
            pick[pos] = 0;
        }
        rec(pos + 1, left);
    };
    rec(0, beta.height());
}

LaurentPoly product_coefficient(const Word& w, const std::vector<GradedCharacter>& factors, size_t from)
{
    if (from == factors.size())
        return w.empty() ? LaurentPoly(1) : LaurentPoly{};
    LaurentPoly total;
    for_each_split(w, factors[from].weight(), [&](const Word& chosen, const Word& rest, int deg) {
        const LaurentPoly c = factors[from].coefficient(chosen);
        if (c.is_zero())
            return;
        const LaurentPoly tail = product_coefficient(rest, factors, from + 1);
        if (!tail.is_zero())
            total += (c * tail).shifted(deg);
    });
    return total;
}

} // namespace

LaurentPoly coefficient_in_product(const Word& w, const std::vector<GradedCharacter>& factors)
{
    return product_coefficient(w, factors, 0);
}

LaurentPoly coefficient_in_word_product(const Word& w, const std::vector<Word>& factors)
{
    std::vector<GradedCharacter> chars;
    for (const auto& f : factors)
        chars.push_back(GradedCharacter::of_word(f));
    return product_coefficient(w, chars, 0);
}

Word dominant_word(const Multisegment& m)
{
    std::vector<Word> parts;
    for (const auto& s : m.segments())
        parts.push_back(segment_char(s).terms().begin()->first);
    // Every interleaving has a nonzero coefficient, so take the smallest
    // interleaving by tracking all frontier states that realise the prefix.
    std::set<std::vector<size_t>> frontier{std::vector<size_t>(parts.size(), 0)};
    Word out;
    const int total = m.weight().height();
    for (int step = 0; step < total; ++step) {
        int best = 0;
        bool found = false;
        for (const auto& st : frontier)
            for (size_t k = 0; k < parts.size(); ++k)
                if (st[k] < parts[k].size() && (!found || parts[k][st[k]] < best)) {
                    best = parts[k][st[k]];
                    found = true;
                }
        std::set<std::vector<size_t>> next;
        for (const auto& st : frontier)
            for (size_t k = 0; k < parts.size(); ++k)
                if (st[k] < parts[k].size() && parts[k][st[k]] == best) {
                    auto nst = st;
                    ++nst[k];
                    next.insert(std::move(nst));
                }
        frontier = std::move(next);
        out.push_back(best);
    }
    return out;
}

Word spherical_word(const RootVector& beta)
{
    Word w;
    for (auto it = beta.entries().rbegin(); it != beta.entries().rend(); ++it)
        w.insert(w.end(), it->second, it->first);
    return w;
}

// ---------------------------------------------------------------------------
// Segment times nabla

int degseg_shift(const Segment& seg, int a, const std::vector<int>& ends)
{
    (void)a;
    // ends equal to b(seg) count as well; dominance fails without them
    int m = 0;
    for (int bi : ends)
        if (seg.b <= bi && bi <= seg.e)
            --m;
    return m;
}

std::vector<int> degseg_target(const Segment& seg, int a, const std::vector<int>& ends)
{
    std::vector<int> out = ends;
    // the empty nabla is the unit, so any a will do
    if (seg.b == a || ends.empty()) {
        out.push_back(seg.e);
    } else {
        auto it = std::find(out.begin(), out.end(), seg.b - 1);
        if (it == out.end())
            throw Error(ErrorKind::NoSuchSubquotient,
                        seg.to_string() + " cannot extend nabla(" + std::to_string(a) + ";...)");
        *it = seg.e;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool check_degseg(const Segment& seg, int a, const std::vector<int>& ends, int m)
{
    const auto target = degseg_target(seg, a, ends);
    const GradedCharacter product = shuffle(segment_char(seg), nabla_char(a, ends));
    return (product - nabla_char(ends.empty() ? seg.b : a, target).shifted(m)).nonnegative();
}

} // namespace klrsk
