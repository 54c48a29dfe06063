#ifndef ZETAKIT_ZETAKIT_HPP
#define ZETAKIT_ZETAKIT_HPP

#include "core.hpp"
#include "numeric_core.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "weyl.hpp"
#include "zeta.hpp"
#include "extended.hpp"
#include "identities.hpp"
#include "selftest.hpp"

#endif // ZETAKIT_ZETAKIT_HPP
