#pragma once

// Umbrella header.

#include "realsnf/any_ring.hpp"
#include "realsnf/bigint.hpp"
#include "realsnf/error.hpp"
#include "realsnf/euclid.hpp"
#include "realsnf/integers.hpp"
#include "realsnf/matrix.hpp"
#include "realsnf/poly.hpp"
#include "realsnf/poly_ring.hpp"
#include "realsnf/quadratic.hpp"
#include "realsnf/quadratic_ring.hpp"
#include "realsnf/random.hpp"
#include "realsnf/real_roots.hpp"
#include "realsnf/ring_spec.hpp"
#include "realsnf/smith.hpp"
#include "realsnf/spectrum.hpp"
#include "realsnf/suite.hpp"
#include "realsnf/verifier.hpp"
