#pragma once

#include "bhk/common.hpp"
#include "bhk/counting/counting.hpp"
#include "bhk/counting/legendre.hpp"
#include "bhk/ff/field_cache.hpp"
#include "bhk/fixtures.hpp"
#include "bhk/hypergeom/series.hpp"
#include "bhk/hypergeom/sums.hpp"
#include "bhk/invertible/atomic.hpp"
#include "bhk/invertible/symmetry.hpp"
#include "bhk/invertible/weights.hpp"
#include "bhk/io/report.hpp"
#include "bhk/verify/tables.hpp"
#include "bhk/zeta/assemble.hpp"
