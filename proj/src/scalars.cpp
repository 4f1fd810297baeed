#include "adjspec/scalars.hpp"

#include <charconv>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace adjspec {

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// A signed rational literal: [+-]digits[/digits].
mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::string body = text;
    if (body == "+" || body == "-") throw ParseError("lone sign in '" + text + "'");
    size_t slash = body.find('/');
    std::string num = (slash == std::string::npos) ? body : body.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : body.substr(slash + 1);
    if (num.empty() || den.empty()) throw ParseError("malformed rational '" + text + "'");
    auto digits_ok = [](const std::string& s, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw ParseError("malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    // Base 10 always: the default constructor auto-detects, reading "012" as octal.
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

// Splits "a+bi" style text at the top-level sign separating the two parts.
// Returns npos when the text is a single part.
size_t top_level_split(const std::string& s) {
    for (size_t i = s.size(); i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            char prev = s[i - 1];
            if (prev == '/' || prev == '+' || prev == '-' || prev == 'e' || prev == 'E') continue;
            return i;
        }
    }
    return std::string::npos;
}

}  // namespace

ExactScalar parse_exact(const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw ParseError("empty scalar");
    bool has_i = s.back() == 'i';
    if (!has_i) return ExactScalar(parse_rational(s));

    std::string body = s.substr(0, s.size() - 1);
    size_t split = top_level_split(body);
    auto parse_im = [](std::string t) {
        if (t.empty() || t == "+") return mpq_class(1);
        if (t == "-") return mpq_class(-1);
        return parse_rational(t);
    };
    if (split == std::string::npos) {
        // Pure imaginary: "2i", "-i", "1/2i".
        return ExactScalar(mpq_class(0), parse_im(body));
    }
    std::string re_part = body.substr(0, split);
    std::string im_part = body.substr(split);  // keeps the sign
    return ExactScalar(parse_rational(re_part), parse_im(im_part));
}

std::string format_exact(const ExactScalar& a) {
    if (a.is_zero()) return "0";
    std::string out;
    if (sgn(a.re) != 0) out += format_rational(a.re);
    if (sgn(a.im) != 0) {
        std::string im;
        if (cmp(a.im, 1) == 0)
            im = "i";
        else if (cmp(a.im, -1) == 0)
            im = "-i";
        else
            im = format_rational(a.im) + "i";
        if (!out.empty() && im[0] != '-') out += "+";
        out += im;
    }
    return out;
}

namespace {

double parse_double_strict(const std::string& text) {
    if (text.empty()) throw ParseError("empty float literal");
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + text.size()) throw ParseError("malformed float '" + text + "'");
    return v;
}

}  // namespace

ApproxScalar parse_approx(const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw ParseError("empty scalar");
    if (s.back() != 'i') return ApproxScalar(parse_double_strict(s), 0.0);
    std::string body = s.substr(0, s.size() - 1);
    auto parse_im = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double_strict(t);
    };
    size_t split = top_level_split(body);
    if (split == std::string::npos) return ApproxScalar(0.0, parse_im(body));
    return ApproxScalar(parse_double_strict(body.substr(0, split)), parse_im(body.substr(split)));
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_approx(const ApproxScalar& a) {
    if (a.imag() == 0.0) return format_double(a.real());
    std::string im = format_double(a.imag()) + "i";
    if (a.real() == 0.0) return im;
    std::string out = format_double(a.real());
    if (im[0] != '-') out += "+";
    return out + im;
}

}  // namespace adjspec
