#pragma once

#include "algvec/complex_rational.hpp"
#include "algvec/dense.hpp"
#include "algvec/errors.hpp"
#include "algvec/field.hpp"
#include "algvec/float64.hpp"
#include "algvec/index.hpp"
#include "algvec/io.hpp"
#include "algvec/op_counter.hpp"
#include "algvec/rational.hpp"
#include "algvec/vector.hpp"
