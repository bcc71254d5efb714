#include "dartline/poly.hpp"

#include <sstream>

namespace dartline {

namespace {
const Rat kZero{};
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rat v) {
    Poly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
}

Poly Poly::x() {
    Poly p;
    p.c_ = {Rat(0), Rat(1)};
    return p;
}

const Rat& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s.is_zero()) return Poly{};
    Poly out = p;
    for (auto& c : out.c_) c *= s;
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Poly Poly::integral() const {
    if (is_zero()) return Poly{};
    Poly out;
    out.c_.assign(c_.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.c_[i + 1] = c_[i] / Rat(static_cast<long long>(i) + 1);
    out.trim();
    return out;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly{};
    Poly out;
    out.c_.assign(c_.size() - 1, Rat(0));
    for (std::size_t i = 1; i < c_.size(); ++i)
        out.c_[i - 1] = Rat(static_cast<long long>(i)) * c_[i];
    out.trim();
    return out;
}

std::string Poly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        Rat mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (mag == Rat(1));
        if (i == 0) {
            os << mag.to_string();
        } else {
            if (!unit) os << mag.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace dartline
