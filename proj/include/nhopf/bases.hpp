#pragma once

// Two further bases of the forest Hopf algebra, triangular over E along the
// regraft order:
//   F_f = sum over f <= f' of mu(f, f') E_{f'}      (Moebius inversion of E)
//   H_f = sum over f' <= f of F_{f'}
// Their products have closed forms: H concatenates-and-grafts via `under`,
// F sums an interval.  `under` grafts the terms of the right factor onto the
// extremal leaves of the last term of the left factor (extremal = no
// internal node after it in preorder), computed against the original term.

#include "nhopf/hopf.hpp"
#include "nhopf/order.hpp"

namespace nhopf {

// Leaves of t numbered 1..arity(t) left to right; extremal ones ascending.
std::vector<int> extremal_leaves(const Term& t);

Forest over(const Forest& a, const Forest& b);   // concatenation
Forest under(const Forest& a, const Forest& b);

// Single-forest conversions; extended linearly by convert_basis.
HopfElement f_to_e(const Signature& sig, const Forest& f);
HopfElement e_to_f(const Signature& sig, const Forest& f);
HopfElement h_to_f(const Signature& sig, const Forest& f);
HopfElement f_to_h(const Signature& sig, const Forest& f);

HopfElement convert_basis(const Signature& sig, const HopfElement& x, Basis to);

// Product of two elements given in the same basis, result in that basis.
HopfElement product_in_basis(const Signature& sig, const HopfElement& x, const HopfElement& y);

}  // namespace nhopf
