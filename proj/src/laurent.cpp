#include "klrsk/laurent.hpp"

#include <sstream>

namespace klrsk {

LaurentPoly LaurentPoly::monomial(int exponent, int64_t coef)
{
    LaurentPoly p;
    p.add_term(exponent, coef);
    return p;
}

int64_t LaurentPoly::operator[](int exponent) const
{
    auto it = c_.find(exponent);
    return it == c_.end() ? 0 : it->second;
}

bool LaurentPoly::nonnegative() const noexcept
{
    for (auto [k, c] : c_)
        if (c < 0)
            return false;
    return true;
}

void LaurentPoly::add_term(int exponent, int64_t coef)
{
    if (coef == 0)
        return;
    int64_t& slot = c_[exponent];
    slot += coef;
    if (slot == 0)
        c_.erase(exponent);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (auto [k, c] : o.c_)
        add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (auto [k, c] : o.c_)
        add_term(k, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    LaurentPoly r;
    for (auto [k1, c1] : c_)
        for (auto [k2, c2] : o.c_)
            r.add_term(k1 + k2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r;
    for (auto [e, c] : c_)
        r.c_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::bar() const
{
    LaurentPoly r;
    for (auto [e, c] : c_)
        r.c_.emplace(-e, c);
    return r;
}

int64_t LaurentPoly::at_one() const noexcept
{
    int64_t s = 0;
    for (auto [e, c] : c_)
        s += c;
    return s;
}

std::string LaurentPoly::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : c_) {
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        const int64_t a = c < 0 ? -c : c;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1)
            os << a;
        os << 'q';
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

} // namespace klrsk
