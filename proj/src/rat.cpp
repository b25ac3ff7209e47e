#include "euclid/rat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>

namespace euclid {

namespace mp = boost::multiprecision;

Rat::Rat(const Int& num, const Int& den) {
    if (den.is_zero())
        throw domain_error("rational with zero denominator");
    // cpp_rational reduces but wants the sign on the numerator.
    if (den < 0)
        v_ = mp::cpp_rational(-num, Int(-den));
    else
        v_ = mp::cpp_rational(num, den);
}

Rat Rat::operator-() const {
    return Rat(-v_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero())
        throw domain_error("division by zero");
    return Rat(a.v_ / b.v_);
}

Rat Rat::reciprocal() const {
    if (is_zero())
        throw domain_error("reciprocal of zero");
    return Rat(denominator(), numerator());
}

Int Rat::floor() const {
    Int n = numerator(), d = denominator();
    Int q = n / d, r = n % d;
    if (r < 0) --q;
    return q;
}

Int Rat::ceil() const {
    return -(-*this).floor();
}

Rat Rat::round_down_pow2(unsigned bits) const {
    Rat scaled = *this * pow2(static_cast<int>(bits));
    return Rat(scaled.floor(), Int(1) << bits);
}

Rat Rat::round_up_pow2(unsigned bits) const {
    Rat scaled = *this * pow2(static_cast<int>(bits));
    return Rat(scaled.ceil(), Int(1) << bits);
}

Int isqrt(const Int& n) {
    if (n < 0)
        throw domain_error("isqrt of negative integer");
    return mp::sqrt(n);
}

unsigned ceil_log2(const Int& n) {
    if (n < 1)
        throw domain_error("ceil_log2 requires n >= 1");
    Int m = n - 1;
    unsigned k = 0;
    while (m > 0) {
        m >>= 1;
        ++k;
    }
    return k;
}

std::optional<Rat> Rat::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rat(0);
    Int n = numerator(), d = denominator();
    Int sn = isqrt(n), sd = isqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

namespace {

// cpp_int treats a leading 0 as an octal prefix; digit strings here are
// always decimal.
Int int_from_digits(std::string_view digits) {
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return Int(0);
    return Int{std::string(digits.substr(first))};
}

} // namespace

Rat Rat::from_string(std::string_view text) {
    auto fail = [&] { throw domain_error("cannot parse rational: '" + std::string(text) + "'"); };

    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) fail();

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) fail();
    }

    // p/q form
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) fail();
        for (char c : ns) if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        for (char c : ds) if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        Int n = int_from_digits(ns);
        Int d = int_from_digits(ds);
        if (d.is_zero()) fail();
        Rat r(n, d);
        return neg ? -r : r;
    }

    // [digits][.digits][e[+-]digits]
    std::string int_part, frac_part;
    long long exp10 = 0;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
    }
    if (int_part.empty() && frac_part.empty()) fail();
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) fail();
        std::string es;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) es += s[i++];
        if (es.empty() || es.size() > 6) fail();
        exp10 = std::stoll(es);
        if (eneg) exp10 = -exp10;
    }
    if (i != s.size()) fail();

    Int mantissa = int_from_digits(int_part + frac_part);
    long long shift = exp10 - static_cast<long long>(frac_part.size());
    Rat r(mantissa);
    if (shift > 0) {
        Int scale = mp::pow(Int(10), static_cast<unsigned>(shift));
        r = r * Rat(scale);
    } else if (shift < 0) {
        Int scale = mp::pow(Int(10), static_cast<unsigned>(-shift));
        r = r / Rat(scale);
    }
    return neg ? -r : r;
}

std::string Rat::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::string decimal_string(const Rat& value, int digits, RoundDir dir) {
    if (digits < 0) digits = 0;
    Int ten(10);
    Int scale = boost::multiprecision::pow(ten, static_cast<unsigned>(digits));
    Rat scaled = value * Rat(scale);
    Int units = dir == RoundDir::down ? scaled.floor() : scaled.ceil();

    bool neg = units < 0;
    Int mag = neg ? Int(-units) : units;
    Int ip = mag / scale, fp = mag % scale;
    std::ostringstream os;
    if (neg) os << '-';
    os << ip;
    if (digits > 0) {
        std::string frac = fp.str();
        os << '.' << std::string(static_cast<std::size_t>(digits) - frac.size(), '0') << frac;
    }
    return os.str();
}

} // namespace euclid
