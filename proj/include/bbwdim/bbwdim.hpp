#pragma once

// Exact cohomology dimensions of equivariant vector bundles on Grassmannians:
// Weyl dimension products, the dotted-action cohomology computation, closed
// dimension formulas, and the brute-force oracles that cross-check them.

#include "bbwdim/bigint.hpp"
#include "bbwdim/bott.hpp"
#include "bbwdim/closed_forms.hpp"
#include "bbwdim/errors.hpp"
#include "bbwdim/oracle.hpp"
#include "bbwdim/partition.hpp"
#include "bbwdim/verify.hpp"
#include "bbwdim/weight.hpp"
#include "bbwdim/weight_io.hpp"
#include "bbwdim/weyl.hpp"
