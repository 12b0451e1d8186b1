#include "hwnorm/rat.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace hwn {

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!valid_integer(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long n, long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(n, 1) / mpq_class(d, 1);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(mpq_class(parse_integer(text)));
    mpz_class p = parse_integer(text.substr(0, slash));
    std::string_view qs = text.substr(slash + 1);
    if (!qs.empty() && (qs[0] == '-' || qs[0] == '+'))
        throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
    mpz_class q = parse_integer(qs);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rat(mpq_class(p, q));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.v_ == 0) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

bool Rat::is_half_integer() const {
    return v_.get_den() == 2;
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

mpz_class Rat::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

long Rat::to_long() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + str());
    if (!v_.get_num().fits_slong_p()) throw std::overflow_error("integer out of range: " + str());
    return v_.get_num().get_si();
}

std::string Rat::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Half Half::parse(std::string_view text) {
    return from_rat(Rat::parse(text));
}

Half Half::from_rat(const Rat& r) {
    Rat twice = r * Rat(2);
    if (!twice.is_integer()) throw std::invalid_argument("not a half-integer: " + r.str());
    return from_doubled(twice.to_long());
}

long long Half::to_int() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + str());
    return d_ / 2;
}

std::string Half::str() const {
    if (is_integer()) return std::to_string(d_ / 2);
    return std::to_string(d_) + "/2";
}

std::ostream& operator<<(std::ostream& os, Half h) {
    return os << h.str();
}

}  // namespace hwn

size_t std::hash<hwn::Rat>::operator()(const hwn::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
}
