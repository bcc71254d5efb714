#include "dartline/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dartline/poly.hpp"

namespace dartline {

namespace {

const Rat kZero{};

// --- kernels on coefficient vectors (truncated at vector length) ---------

using Coeffs = std::vector<Rat>;

Coeffs mul_trunc(const Coeffs& a, const Coeffs& b, std::size_t n) {
    Coeffs out(n, Rat(0));
    for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
        if (a[i].is_zero()) continue;
        std::size_t jmax = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Inverse of a series with nonzero constant term.
Coeffs inv_trunc(const Coeffs& a, std::size_t n) {
    Coeffs out(n, Rat(0));
    Rat inv0 = Rat(1) / a[0];
    out[0] = inv0;
    for (std::size_t m = 1; m < n; ++m) {
        Rat acc = 0;
        for (std::size_t j = 1; j <= m && j < a.size(); ++j) acc += a[j] * out[m - j];
        out[m] = -acc * inv0;
    }
    return out;
}

// exp of a series with zero constant term, via the D-log recurrence
// f' = s' f solved coefficient by coefficient.
Coeffs exp_trunc(const Coeffs& s, std::size_t n) {
    Coeffs f(n, Rat(0));
    f[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        Rat acc = 0;
        for (std::size_t j = 1; j <= m && j < s.size(); ++j) {
            if (!s[j].is_zero()) acc += Rat(static_cast<long long>(j)) * s[j] * f[m - j];
        }
        f[m] = acc / Rat(static_cast<long long>(m));
    }
    return f;
}

// log of a series with constant term 1: integrate f'/f.
Coeffs log_trunc(const Coeffs& f, std::size_t n) {
    Coeffs df(n, Rat(0));  // f' truncated
    for (std::size_t i = 1; i < std::min(f.size(), n); ++i)
        df[i - 1] = Rat(static_cast<long long>(i)) * f[i];
    Coeffs q = mul_trunc(df, inv_trunc(f, n), n);
    Coeffs out(n, Rat(0));
    for (std::size_t m = 1; m < n; ++m) out[m] = q[m - 1] / Rat(static_cast<long long>(m));
    return out;
}

}  // namespace

// --- Series1 --------------------------------------------------------------

Series1::Series1(std::string var, int order) : var_(std::move(var)) {
    if (order < 0) throw std::invalid_argument("Series1: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

Series1 Series1::from_coeffs(std::string var, std::vector<Rat> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("Series1: empty coefficient list");
    Series1 s(std::move(var), static_cast<int>(coeffs.size()) - 1);
    s.c_ = std::move(coeffs);
    return s;
}

const Rat& Series1::coeff(int i) const {
    if (i < 0 || i > order()) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

Series1& Series1::set_coeff(int i, Rat v) {
    if (i < 0 || i > order()) throw std::out_of_range("Series1: coefficient index");
    c_[static_cast<std::size_t>(i)] = std::move(v);
    return *this;
}

void Series1::check_same_var(const Series1& o) const {
    if (var_ != o.var_)
        throw std::invalid_argument("Series1: mixed variables '" + var_ + "' and '" + o.var_ + "'");
}

Series1& Series1::operator+=(const Series1& o) {
    check_same_var(o);
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series1& Series1::operator-=(const Series1& o) {
    check_same_var(o);
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series1 operator*(const Series1& a, const Series1& b) {
    a.check_same_var(b);
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    Series1 out(a.var_, static_cast<int>(n) - 1);
    out.c_ = mul_trunc(a.c_, b.c_, n);
    return out;
}

Series1 operator*(const Rat& s, Series1 a) {
    for (auto& c : a.c_) c *= s;
    return a;
}

std::string Series1::to_string() const {
    std::ostringstream os;
    os << Poly(c_).to_string(var_) << " + O(" << var_ << "^" << order() + 1 << ")";
    return os.str();
}

namespace {
std::vector<Rat> coeff_vec(const Series1& s) {
    std::vector<Rat> v;
    v.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int i = 0; i <= s.order(); ++i) v.push_back(s.coeff(i));
    return v;
}
}  // namespace

Series1 series_exp(const Series1& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    auto v = coeff_vec(s);
    return Series1::from_coeffs(s.var(), exp_trunc(v, v.size()));
}

Series1 series_log(const Series1& s) {
    if (s.coeff(0) != Rat(1))
        throw std::invalid_argument("series_log: constant term must be 1");
    auto v = coeff_vec(s);
    return Series1::from_coeffs(s.var(), log_trunc(v, v.size()));
}

Series1 series_div(const Series1& a, const Series1& b) {
    if (a.var() != b.var())
        throw std::invalid_argument("series_div: mixed variables");
    if (b.coeff(0).is_zero())
        throw std::invalid_argument("series_div: zero constant term in divisor");
    std::size_t n = static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
    auto av = coeff_vec(a), bv = coeff_vec(b);
    av.resize(n);
    bv.resize(n);
    return Series1::from_coeffs(a.var(), mul_trunc(av, inv_trunc(bv, n), n));
}

// --- BiSeries ---------------------------------------------------------------
//
// Stored as z-slices; each slice is a truncated series in u. Division, exp
// and log reduce to the univariate kernels on the z^0 slice plus a slice
// recurrence in z.

BiSeries::BiSeries(int order_u, int order_z) : nu_(order_u), nz_(order_z) {
    if (order_u < 0 || order_z < 0) throw std::invalid_argument("BiSeries: negative order");
    z_.assign(static_cast<std::size_t>(nz_) + 1,
              std::vector<Rat>(static_cast<std::size_t>(nu_) + 1, Rat(0)));
}

BiSeries BiSeries::constant(const Rat& v, int order_u, int order_z) {
    BiSeries s(order_u, order_z);
    s.z_[0][0] = v;
    return s;
}

BiSeries BiSeries::monomial(int iu, int iz, const Rat& coeff, int order_u, int order_z) {
    BiSeries s(order_u, order_z);
    s.set_coeff(iu, iz, coeff);
    return s;
}

const Rat& BiSeries::coeff(int iu, int iz) const {
    if (iu < 0 || iu > nu_ || iz < 0 || iz > nz_) return kZero;
    return z_[static_cast<std::size_t>(iz)][static_cast<std::size_t>(iu)];
}

BiSeries& BiSeries::set_coeff(int iu, int iz, Rat v) {
    if (iu < 0 || iu > nu_ || iz < 0 || iz > nz_)
        throw std::out_of_range("BiSeries: coefficient index outside window");
    z_[static_cast<std::size_t>(iz)][static_cast<std::size_t>(iu)] = std::move(v);
    return *this;
}

namespace {
void shrink_window(std::vector<std::vector<Rat>>& slices, int nu, int nz) {
    slices.resize(static_cast<std::size_t>(nz) + 1);
    for (auto& s : slices) s.resize(static_cast<std::size_t>(nu) + 1);
}
}  // namespace

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    nu_ = std::min(nu_, o.nu_);
    nz_ = std::min(nz_, o.nz_);
    shrink_window(z_, nu_, nz_);
    for (std::size_t j = 0; j < z_.size(); ++j)
        for (std::size_t i = 0; i < z_[j].size(); ++i) z_[j][i] += o.z_[j][i];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    nu_ = std::min(nu_, o.nu_);
    nz_ = std::min(nz_, o.nz_);
    shrink_window(z_, nu_, nz_);
    for (std::size_t j = 0; j < z_.size(); ++j)
        for (std::size_t i = 0; i < z_[j].size(); ++i) z_[j][i] -= o.z_[j][i];
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    int nu = std::min(a.nu_, b.nu_), nz = std::min(a.nz_, b.nz_);
    std::size_t un = static_cast<std::size_t>(nu) + 1;
    BiSeries out(nu, nz);
    for (int j1 = 0; j1 <= nz; ++j1) {
        for (int j2 = 0; j2 + j1 <= nz; ++j2) {
            Coeffs prod = mul_trunc(a.z_[static_cast<std::size_t>(j1)],
                                    b.z_[static_cast<std::size_t>(j2)], un);
            auto& row = out.z_[static_cast<std::size_t>(j1 + j2)];
            for (std::size_t i = 0; i < un; ++i) row[i] += prod[i];
        }
    }
    return out;
}

BiSeries operator*(const Rat& s, BiSeries a) {
    for (auto& row : a.z_)
        for (auto& c : row) c *= s;
    return a;
}

BiSeries series_exp(const BiSeries& s) {
    if (!s.coeff(0, 0).is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    std::size_t un = static_cast<std::size_t>(s.nu_) + 1;
    // exp of the z^0 slice (a u-series with zero constant term)
    Coeffs e0 = exp_trunc(s.z_[0], un);
    // D-log recurrence in z for the remaining part
    BiSeries f(s.nu_, s.nz_);
    f.z_[0].assign(un, Rat(0));
    f.z_[0][0] = 1;
    for (int m = 1; m <= s.nz_; ++m) {
        Coeffs acc(un, Rat(0));
        for (int j = 1; j <= m; ++j) {
            Coeffs t = mul_trunc(s.z_[static_cast<std::size_t>(j)],
                                 f.z_[static_cast<std::size_t>(m - j)], un);
            Rat jr(static_cast<long long>(j));
            for (std::size_t i = 0; i < un; ++i)
                if (!t[i].is_zero()) acc[i] += jr * t[i];
        }
        Rat mr(static_cast<long long>(m));
        for (auto& c : acc) c /= mr;
        f.z_[static_cast<std::size_t>(m)] = std::move(acc);
    }
    for (auto& row : f.z_) row = mul_trunc(row, e0, un);
    return f;
}

BiSeries series_log(const BiSeries& s) {
    if (s.coeff(0, 0) != Rat(1))
        throw std::invalid_argument("series_log: constant term must be 1");
    std::size_t un = static_cast<std::size_t>(s.nu_) + 1;
    // log of the z^0 slice, then d/dz-based recurrence: g' = s'/s in z.
    Coeffs l0 = log_trunc(s.z_[0], un);
    // q = (d/dz s) / s as z-slices of u-series
    Coeffs inv0 = inv_trunc(s.z_[0], un);
    std::vector<Coeffs> q(static_cast<std::size_t>(s.nz_) + 1, Coeffs(un, Rat(0)));
    for (int m = 0; m <= s.nz_; ++m) {
        Coeffs acc(un, Rat(0));  // coefficient of z^m in d/dz s
        if (m + 1 <= s.nz_) {
            Rat f(static_cast<long long>(m) + 1);
            for (std::size_t i = 0; i < un; ++i)
                acc[i] = f * s.z_[static_cast<std::size_t>(m) + 1][i];
        }
        for (int j = 1; j <= m; ++j) {
            Coeffs t = mul_trunc(s.z_[static_cast<std::size_t>(j)],
                                 q[static_cast<std::size_t>(m - j)], un);
            for (std::size_t i = 0; i < un; ++i) acc[i] -= t[i];
        }
        q[static_cast<std::size_t>(m)] = mul_trunc(acc, inv0, un);
    }
    BiSeries out(s.nu_, s.nz_);
    out.z_[0] = std::move(l0);
    for (int m = 1; m <= s.nz_; ++m) {
        Rat mr(static_cast<long long>(m));
        Coeffs row = q[static_cast<std::size_t>(m) - 1];
        for (auto& c : row) c /= mr;
        out.z_[static_cast<std::size_t>(m)] = std::move(row);
    }
    return out;
}

BiSeries series_div(const BiSeries& a, const BiSeries& b) {
    if (b.coeff(0, 0).is_zero())
        throw std::invalid_argument("series_div: zero constant term in divisor");
    int nu = std::min(a.nu_, b.nu_), nz = std::min(a.nz_, b.nz_);
    std::size_t un = static_cast<std::size_t>(nu) + 1;
    Coeffs ib0 = inv_trunc(b.z_[0], un);
    BiSeries q(nu, nz);
    for (int m = 0; m <= nz; ++m) {
        Coeffs acc(a.z_[static_cast<std::size_t>(m)].begin(),
                   a.z_[static_cast<std::size_t>(m)].begin() + static_cast<long>(un));
        for (int j = 1; j <= m; ++j) {
            Coeffs t = mul_trunc(b.z_[static_cast<std::size_t>(j)],
                                 q.z_[static_cast<std::size_t>(m - j)], un);
            for (std::size_t i = 0; i < un; ++i) acc[i] -= t[i];
        }
        q.z_[static_cast<std::size_t>(m)] = mul_trunc(acc, ib0, un);
    }
    return q;
}

}  // namespace dartline
