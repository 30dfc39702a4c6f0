#pragma once

#include <complex>
#include <string>

#include "apolaris/rational.hpp"

namespace apolaris {

/// Complex number with exact rational real and imaginary parts.
/// Closed under the arithmetic and conjugation the apolar product needs.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re), im_(0) {}
    GaussianRational(long re, long im) : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// |c|^2 = re^2 + im^2, a non-negative rational.
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational& operator*=(const Rational& s) {
        re_ *= s;
        im_ *= s;
        return *this;
    }
    friend GaussianRational operator*(GaussianRational a, const Rational& s) { return a *= s; }
    friend GaussianRational operator*(const Rational& s, GaussianRational a) { return a *= s; }

private:
    Rational re_;
    Rational im_;
};

/// Display form: "p/q" when real, "(p/q + r/s i)" otherwise.
std::string to_string(const GaussianRational& c);

}  // namespace apolaris
