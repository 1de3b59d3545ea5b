#pragma once

// Umbrella header for the k-analogue special function library.

#include "ksf/appell.hpp"
#include "ksf/core.hpp"
#include "ksf/gamma.hpp"
#include "ksf/hyp.hpp"
#include "ksf/identities.hpp"
#include "ksf/kfrac.hpp"
#include "ksf/quadrature.hpp"
#include "ksf/report_io.hpp"
#include "ksf/rng.hpp"
#include "ksf/types.hpp"
