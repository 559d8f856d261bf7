#include "fsig/rational.hpp"

#include <cctype>

namespace fsig {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("make_rational: zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool parse_integer(const std::string& s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    out = BigInt(s, 10);
    return true;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
    const auto fail = [&] { throw DomainError("parse_rational: cannot parse '" + text + "'"); };

    if (auto slash = text.find('/'); slash != std::string::npos) {
        BigInt num, den;
        if (!parse_integer(text.substr(0, slash), num) ||
            !parse_integer(text.substr(slash + 1), den))
            fail();
        return make_rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string head = text.substr(0, dot), frac = text.substr(dot + 1);
        bool negative = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+") head += '0';
        BigInt whole, frac_digits;
        if (frac.empty() || !parse_integer(head, whole)) fail();
        for (char ch : frac)
            if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
        frac_digits = BigInt(frac, 10);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = abs(whole) * scale + frac_digits;
        if (negative) num = -num;
        return make_rational(num, scale);
    }
    BigInt n;
    if (!parse_integer(text, n)) fail();
    return BigRational(n);
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const BigRational& q, int digits) {
    if (digits < 0) throw DomainError("to_decimal_string: negative digit count");
    BigInt num = abs(q.get_num());
    const BigInt& den = q.get_den();
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale / den;  // truncation toward zero
    std::string body = scaled.get_str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, std::string(digits + 1 - body.size(), '0'));
    std::string sign = (sgn(q) < 0 && scaled != 0) ? "-" : "";
    if (digits == 0) return sign + body;
    return sign + body.substr(0, body.size() - digits) + "." +
           body.substr(body.size() - digits);
}

const BigRational& ExtRational::value() const {
    if (infinite_) throw DomainError("ExtRational: value() of infinity");
    return value_;
}

ExtRational ExtRational::inverse_of(const BigInt& n) {
    if (n < 0) throw DomainError("ExtRational: inverse of negative");
    if (n == 0) return infinity();
    return finite(make_rational(1, n));
}

std::string to_string(const ExtRational& x) {
    return x.is_infinite() ? "inf" : to_string(x.value());
}

}  // namespace fsig
