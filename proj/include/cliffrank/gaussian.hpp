#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace cliffrank {

// Exact Gaussian integer re + im*i. All coefficient arithmetic in the
// engine stays in Z[i]; there is no rounding anywhere.
class Gaussian {
public:
    Gaussian() : re_(0), im_(0) {}
    Gaussian(long re) : re_(re), im_(0) {} // NOLINT(google-explicit-constructor)
    Gaussian(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian unit_i() { return {0, 1}; }

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_imaginary() const { return re_ == 0; }

    Gaussian conj() const { return {re_, -im_}; }

    Gaussian operator-() const { return {-re_, -im_}; }

    Gaussian& operator+=(const Gaussian& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    // "0", "1", "-1", "i", "-i", "3", "2i", "(1+2i)", "(1-2i)", ...
    std::string str() const {
        if (is_zero()) return "0";
        if (im_ == 0) return re_.get_str();
        std::string im_part;
        if (im_ == 1)
            im_part = "i";
        else if (im_ == -1)
            im_part = "-i";
        else
            im_part = im_.get_str() + "i";
        if (re_ == 0) return im_part;
        std::string s = "(" + re_.get_str();
        if (im_part[0] != '-') s += "+";
        return s + im_part + ")";
    }

private:
    mpz_class re_, im_;
};

} // namespace cliffrank
