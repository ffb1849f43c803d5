#pragma once

#include "lcmlat/betti.hpp"
#include "lcmlat/canonical.hpp"
#include "lcmlat/element_set.hpp"
#include "lcmlat/enumerate.hpp"
#include "lcmlat/homology.hpp"
#include "lcmlat/invariants.hpp"
#include "lcmlat/io.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/monomial.hpp"
#include "lcmlat/realize.hpp"
#include "lcmlat/sdepth.hpp"
#include "lcmlat/verify.hpp"
