#ifndef HYPERCHEB_HYPERCHEB_HPP
#define HYPERCHEB_HYPERCHEB_HPP

#include "hypercheb/chebyshev.hpp"
#include "hypercheb/common.hpp"
#include "hypercheb/companion.hpp"
#include "hypercheb/demoivre.hpp"
#include "hypercheb/genfun.hpp"
#include "hypercheb/hyperbolic.hpp"
#include "hypercheb/lucas.hpp"
#include "hypercheb/roots_of_unity.hpp"
#include "hypercheb/series.hpp"
#include "hypercheb/sparse_poly.hpp"

#endif  // HYPERCHEB_HYPERCHEB_HPP
