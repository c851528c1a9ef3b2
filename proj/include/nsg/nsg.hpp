#ifndef NSG_NSG_HPP
#define NSG_NSG_HPP

// Numerical semigroups, their membership problem, and the Lewittes, Serre
// and Geil-Matsumoto bounds on rational places derived from them.

#include "nsg/arith.hpp"
#include "nsg/bounds.hpp"
#include "nsg/enumeration.hpp"
#include "nsg/error.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/survey.hpp"

#endif  // NSG_NSG_HPP
