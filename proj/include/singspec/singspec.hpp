#pragma once

// Umbrella header: exact invariants of isolated quasi-homogeneous
// hypersurface singularities, from the Jacobian ideal to the spectrum and
// the k-Du Bois / k-rational / k-liminal classification.

#include "singspec/analyze.hpp"
#include "singspec/corpus.hpp"
#include "singspec/errors.hpp"
#include "singspec/exponent_vector.hpp"
#include "singspec/groebner.hpp"
#include "singspec/invariants.hpp"
#include "singspec/monomial_order.hpp"
#include "singspec/parse.hpp"
#include "singspec/polynomial.hpp"
#include "singspec/rational.hpp"
#include "singspec/singularity.hpp"
#include "singspec/spectrum.hpp"
#include "singspec/weight_system.hpp"
