#pragma once

// Umbrella header for the Waring-Goldbach laboratory.

#include "wglab/arith.hpp"
#include "wglab/experiment.hpp"
#include "wglab/expsum.hpp"
#include "wglab/hecke.hpp"
#include "wglab/probmodel.hpp"
#include "wglab/repcount.hpp"
#include "wglab/report.hpp"
#include "wglab/run.hpp"
#include "wglab/satotate.hpp"
#include "wglab/sieve.hpp"
#include "wglab/singular.hpp"
#include "wglab/util.hpp"
