#include "apolaris/gaussian_rational.hpp"

namespace apolaris {

std::string to_string(const GaussianRational& c) {
    if (c.is_real()) {
        return to_string(c.re());
    }
    std::string s = "(" + to_string(c.re());
    if (c.im() >= 0) {
        s += " + " + to_string(c.im());
    } else {
        s += " - " + to_string(Rational(-c.im()));
    }
    s += " i)";
    return s;
}

}  // namespace apolaris
