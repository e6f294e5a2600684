#pragma once

#include <string>

#include "hser/ratfunc.hpp"

namespace hser {

// "{a_0, a_1, ..., a_mid; n}": coefficients through the middle of a
// palindromic polynomial of degree n.  Throws std::invalid_argument otherwise;
// callers fall back to the full form.
std::string render_palindromic(const Poly& p);

// space-separated coefficient list, constant term first ("1 0 -2 0 1")
std::string coeff_list(const Poly& p);

std::string latex(const RatFunc& f, const std::string& var = "t");

}  // namespace hser
