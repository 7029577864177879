#pragma once

#include "gammapos/bigint.hpp"
#include "gammapos/errors.hpp"
#include "gammapos/eulerian.hpp"
#include "gammapos/gamma.hpp"
#include "gammapos/permstat.hpp"
#include "gammapos/polytopes.hpp"
#include "gammapos/poly.hpp"
#include "gammapos/qtrpoly.hpp"
#include "gammapos/render.hpp"
#include "gammapos/report.hpp"
#include "gammapos/series.hpp"
#include "gammapos/symfun.hpp"
