#ifndef QUADZEROS_QUADZEROS_HPP
#define QUADZEROS_QUADZEROS_HPP

// Umbrella header.

#include "quadzeros/asymptotics.hpp"
#include "quadzeros/complex_roots.hpp"
#include "quadzeros/errors.hpp"
#include "quadzeros/parallel.hpp"
#include "quadzeros/polynomial.hpp"
#include "quadzeros/rational.hpp"
#include "quadzeros/realroots.hpp"
#include "quadzeros/recurrence.hpp"
#include "quadzeros/theta.hpp"
#include "quadzeros/zerolocus.hpp"

#endif  // QUADZEROS_QUADZEROS_HPP
