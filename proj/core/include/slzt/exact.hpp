#pragma once

#include "slzt/exact/algebraic.hpp"
#include "slzt/exact/dense_poly.hpp"
#include "slzt/exact/errors.hpp"
#include "slzt/exact/laurent.hpp"
#include "slzt/exact/matrix.hpp"
#include "slzt/exact/poly.hpp"
#include "slzt/exact/ratfunc.hpp"
#include "slzt/exact/rational.hpp"
