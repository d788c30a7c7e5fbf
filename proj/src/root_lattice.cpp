#include "klrsk/root_lattice.hpp"

#include "klrsk/error.hpp"

#include <algorithm>
#include <sstream>

namespace klrsk {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ZeroMultisegment: return "ZeroMultisegment";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::NotPermissible: return "NotPermissible";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::MalformedLadder: return "MalformedLadder";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::InvalidSegment: return "InvalidSegment";
    case ErrorKind::NoSuchSubquotient: return "NoSuchSubquotient";
    case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

RootVector RootVector::simple(int index, int mult)
{
    RootVector r;
    r.add(index, mult);
    return r;
}

RootVector RootVector::interval(int b, int e)
{
    RootVector r;
    for (int i = b; i <= e; ++i)
        r.add(i);
    return r;
}

RootVector RootVector::of_word(const Word& w)
{
    RootVector r;
    for (int x : w)
        r.add(x);
    return r;
}

int RootVector::operator[](int index) const
{
    auto it = mult_.find(index);
    return it == mult_.end() ? 0 : it->second;
}

void RootVector::add(int index, int mult)
{
    if (mult == 0)
        return;
    int& slot = mult_[index];
    slot += mult;
    if (slot < 0)
        throw Error(ErrorKind::WeightMismatch, "negative multiplicity at index " + std::to_string(index));
    if (slot == 0)
        mult_.erase(index);
    height_ += mult;
}

RootVector& RootVector::operator+=(const RootVector& other)
{
    for (auto [i, c] : other.mult_)
        add(i, c);
    return *this;
}

RootVector RootVector::operator+(const RootVector& other) const
{
    RootVector r = *this;
    r += other;
    return r;
}

RootVector RootVector::operator-(const RootVector& other) const
{
    if (!leq(other, *this))
        throw Error(ErrorKind::WeightMismatch, other.to_string() + " is not below " + to_string());
    RootVector r = *this;
    for (auto [i, c] : other.mult_)
        r.add(i, -c);
    return r;
}

std::string RootVector::to_string() const
{
    if (mult_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [i, c] : mult_) {
        if (!first)
            os << '+';
        first = false;
        if (c != 1)
            os << c << '*';
        os << "a" << i;
    }
    return os.str();
}

int64_t form(const RootVector& a, const RootVector& b)
{
    int64_t total = 0;
    for (auto [i, ci] : a.entries()) {
        // only i-1, i, i+1 can contribute
        for (int j = i - 1; j <= i + 1; ++j) {
            int cj = b[j];
            if (cj != 0)
                total += int64_t(ci) * cj * bilinear_form(i, j);
        }
    }
    return total;
}

bool leq(const RootVector& a, const RootVector& b)
{
    for (auto [i, c] : a.entries())
        if (b[i] < c)
            return false;
    return true;
}

void for_each_word(const RootVector& beta, const std::function<void(const Word&)>& visit, int cap)
{
    if (beta.height() > cap)
        throw Error(ErrorKind::CapExceeded,
                    "height " + std::to_string(beta.height()) + " exceeds cap " + std::to_string(cap));
    Word w;
    for (auto [i, c] : beta.entries())
        w.insert(w.end(), c, i);
    // w is sorted ascending, so next_permutation walks each distinct word once
    do {
        visit(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Word> enumerate_words(const RootVector& beta, int cap)
{
    std::vector<Word> out;
    for_each_word(beta, [&](const Word& w) { out.push_back(w); }, cap);
    return out;
}

uint64_t multinomial_count(const RootVector& beta)
{
    uint64_t result = 1;
    int n = 0;
    for (auto [i, c] : beta.entries()) {
        for (int k = 1; k <= c; ++k) {
            ++n;
            // result * n / k stays integral at each step: it is C(n,k) * previous
            result = result * n / k;
        }
    }
    return result;
}

std::string word_to_string(const Word& w)
{
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < w.size(); ++k) {
        if (k)
            os << ',';
        os << w[k];
    }
    os << ')';
    return os.str();
}

} // namespace klrsk
