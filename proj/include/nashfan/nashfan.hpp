#ifndef NASHFAN_NASHFAN_HPP
#define NASHFAN_NASHFAN_HPP

#include "nashfan/errors.hpp"
#include "nashfan/lattice.hpp"
#include "nashfan/semigroup.hpp"
#include "nashfan/algebra.hpp"
#include "nashfan/groebner.hpp"
#include "nashfan/fan.hpp"
#include "nashfan/laurent.hpp"
#include "nashfan/nash.hpp"
#include "nashfan/io.hpp"
#include "nashfan/svg.hpp"

#endif  // NASHFAN_NASHFAN_HPP
