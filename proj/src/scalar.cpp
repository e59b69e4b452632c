#include "dskit/scalar.hpp"

#include <cctype>
#include <ostream>

#include "dskit/errors.hpp"

namespace dskit {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
    if (text.empty()) throw InputError("empty rational in scalar '" + std::string(whole) + "'");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw InputError("bad character in scalar '" + std::string(whole) + "'");
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InputError("cannot parse scalar '" + std::string(whole) + "'");
    if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + std::string(whole) + "'");
    q.canonicalize();
    return q;
}

// Coefficient of i: "" -> 1, "+" -> 1, "-" -> -1.
mpq_class parse_imag_coeff(std::string_view text, std::string_view whole) {
    if (text.empty() || text == "+") return 1;
    if (text == "-") return -1;
    return parse_rational(text, whole);
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw InputError("zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::i() { return Scalar(mpq_class(0), mpq_class(1)); }

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s, text));

    std::string_view body(s.data(), s.size() - 1);
    // Split at the last sign that is not the leading one and not part of a fraction.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return Scalar(mpq_class(0), parse_imag_coeff(body, text));
    return Scalar(parse_rational(body.substr(0, split), text),
                  parse_imag_coeff(body.substr(split), text));
}

bool Scalar::is_integer() const { return sgn(im_) == 0 && re_.get_den() == 1; }

std::optional<long> Scalar::to_integer() const {
    if (!is_integer() || !re_.get_num().fits_slong_p()) return std::nullopt;
    return re_.get_num().get_si();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.norm();
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const mpq_class& q) { return q.get_str(10); }

std::string Scalar::to_string() const {
    if (sgn(im_) == 0) return dskit::to_string(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = dskit::to_string(im_) + "i";
    if (sgn(re_) == 0) return imag;
    if (imag.front() != '-') imag.insert(imag.begin(), '+');
    return dskit::to_string(re_) + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar pow(Scalar base, unsigned exponent) {
    Scalar result(1);
    while (exponent) {
        if (exponent & 1u) result *= base;
        base *= base;
        exponent >>= 1u;
    }
    return result;
}

}  // namespace dskit
