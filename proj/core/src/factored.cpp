#include "hwnorm/factored.hpp"

#include <stdexcept>

namespace hwn {

std::vector<LinearFactor> poch_expand(const Rat& shift, long length) {
    if (length < 0) throw std::invalid_argument("poch_expand: negative length");
    std::vector<LinearFactor> out;
    out.reserve(static_cast<size_t>(length));
    for (long i = 0; i < length; ++i) out.push_back({shift + Rat(i)});
    return out;
}

const char* to_string(Sign s) {
    switch (s) {
    case Sign::Positive: return "POSITIVE";
    case Sign::Negative: return "NEGATIVE";
    case Sign::Zero: return "ZERO";
    case Sign::Pole: return "POLE";
    }
    return "?";
}

FactoredFn::FactoredFn(Rat constant) : c_(std::move(constant)) {
    if (c_.sign() == 0) throw std::domain_error("FactoredFn: zero constant");
}

FactoredFn FactoredFn::raw(Rat constant, const std::vector<LinearFactor>& num,
                           const std::vector<LinearFactor>& den) {
    FactoredFn f(std::move(constant));
    for (const auto& x : num) ++f.num_[x.shift];
    for (const auto& x : den) ++f.den_[x.shift];
    return f;
}

FactoredFn FactoredFn::poch(const Rat& shift, long length) {
    FactoredFn f;
    if (length >= 0) {
        for (long i = 0; i < length; ++i) ++f.num_[shift + Rat(i)];
    } else {
        for (long i = length; i < 0; ++i) ++f.den_[shift + Rat(i)];
    }
    return f;
}

FactoredFn FactoredFn::linear(const Rat& shift) {
    FactoredFn f;
    f.num_[shift] = 1;
    return f;
}

bool FactoredFn::canonical() const {
    for (const auto& [s, e] : num_)
        if (e <= 0 || den_.count(s)) return false;
    for (const auto& [s, e] : den_)
        if (e <= 0) return false;
    return true;
}

void FactoredFn::cancel() {
    for (auto it = num_.begin(); it != num_.end();) {
        auto jt = den_.find(it->first);
        if (jt != den_.end()) {
            int c = std::min(it->second, jt->second);
            it->second -= c;
            jt->second -= c;
            if (jt->second == 0) den_.erase(jt);
        }
        if (it->second == 0)
            it = num_.erase(it);
        else
            ++it;
    }
}

FactoredFn FactoredFn::simplified() const {
    FactoredFn f = *this;
    f.cancel();
    return f;
}

FactoredFn simplify(const FactoredFn& f) {
    return f.simplified();
}

FactoredFn FactoredFn::inverse() const {
    FactoredFn f;
    f.c_ = Rat(1) / c_;
    f.num_ = den_;
    f.den_ = num_;
    return f;
}

int FactoredFn::num_degree() const {
    int d = 0;
    for (const auto& [s, e] : num_) d += e;
    return d;
}

int FactoredFn::den_degree() const {
    int d = 0;
    for (const auto& [s, e] : den_) d += e;
    return d;
}

int FactoredFn::pole_order(const Rat& lambda0) const {
    Rat root = -lambda0;
    int order = 0;
    if (auto it = den_.find(root); it != den_.end()) order += it->second;
    if (auto it = num_.find(root); it != num_.end()) order -= it->second;
    return order;
}

Evaluation FactoredFn::evaluate(const Rat& lambda0) const {
    int order = pole_order(lambda0);
    if (order > 0) return {Evaluation::Kind::Pole, Rat(0)};
    if (order < 0) return {Evaluation::Kind::Zero, Rat(0)};
    Rat root = -lambda0;
    mpq_class v = c_.value();
    for (const auto& [s, e] : num_) {
        if (s == root) continue;
        mpq_class x = (lambda0 + s).value();
        for (int i = 0; i < e; ++i) v *= x;
    }
    for (const auto& [s, e] : den_) {
        if (s == root) continue;
        mpq_class x = (lambda0 + s).value();
        for (int i = 0; i < e; ++i) v /= x;
    }
    return {Evaluation::Kind::Value, Rat(v)};
}

Sign FactoredFn::sign_at(const Rat& lambda0) const {
    int order = pole_order(lambda0);
    if (order > 0) return Sign::Pole;
    if (order < 0) return Sign::Zero;
    Rat root = -lambda0;
    int sg = c_.sign();
    auto apply = [&](const Multiset& m) {
        for (const auto& [s, e] : m) {
            if (s == root) continue;
            if ((lambda0 + s).sign() < 0 && (e % 2)) sg = -sg;
        }
    };
    apply(num_);
    apply(den_);
    return sg > 0 ? Sign::Positive : Sign::Negative;
}

std::string factor_str(const Rat& shift) {
    if (shift.sign() == 0) return "λ";
    if (shift.sign() > 0) return "λ+" + shift.str();
    return "λ-" + (-shift).str();
}

namespace {

std::string product_str(const FactoredFn::Multiset& m) {
    std::string out;
    for (const auto& [s, e] : m) {
        out += "(" + factor_str(s) + ")";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string FactoredFn::str() const {
    FactoredFn f = simplified();
    std::string top;
    if (f.num_.empty()) {
        top = f.c_.str();
    } else if (f.c_ == Rat(1)) {
        top = product_str(f.num_);
    } else if (f.c_ == Rat(-1)) {
        top = "-" + product_str(f.num_);
    } else {
        top = f.c_.str() + "*" + product_str(f.num_);
    }
    if (f.den_.empty()) return top;
    if (f.den_.size() == 1 && f.den_.begin()->second == 1)
        return top + "/" + product_str(f.den_);
    return top + "/(" + product_str(f.den_) + ")";
}

FactoredFn& FactoredFn::operator*=(const FactoredFn& o) {
    c_ *= o.c_;
    for (const auto& [s, e] : o.num_) num_[s] += e;
    for (const auto& [s, e] : o.den_) den_[s] += e;
    cancel();
    return *this;
}

FactoredFn& FactoredFn::operator/=(const FactoredFn& o) {
    return *this *= o.inverse();
}

bool operator==(const FactoredFn& a, const FactoredFn& b) {
    FactoredFn x = a.simplified(), y = b.simplified();
    return x.c_ == y.c_ && x.num_ == y.num_ && x.den_ == y.den_;
}

}  // namespace hwn
