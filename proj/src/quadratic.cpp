#include "iterfix/quadratic.hpp"

#include <algorithm>
#include <cmath>

namespace iterfix {

Complex quadratic_normal_form(const Polynomial& p) {
    if (p.degree() != 2) throw Error("quadratic_normal_form: degree must be 2");
    Complex a = p.coeff(2);
    Complex b = p.coeff(1);
    Complex g = p.coeff(0);
    return a * g + b / 2.0 - b * b / 4.0;
}

std::array<Complex, 2> quadratic_fixed_multipliers(Complex c) {
    Complex s = std::sqrt(Complex{1.0, 0.0} - 4.0 * c);
    return {Complex{1.0, 0.0} + s, Complex{1.0, 0.0} - s};
}

std::array<Complex, 4> quadratic_n2_spectrum(Complex c) {
    auto [l1, l2] = quadratic_fixed_multipliers(c);
    Complex cycle = 4.0 * (c + Complex{1.0, 0.0});
    return {l1 * l1, l2 * l2, cycle, cycle};
}

double quadratic_n2_max_multiplier(Complex c) {
    auto spectrum = quadratic_n2_spectrum(c);
    double best = 0.0;
    for (const auto& m : spectrum) best = std::max(best, std::abs(m));
    return best;
}

} // namespace iterfix
