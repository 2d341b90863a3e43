#pragma once

#include "qgor/scalar.hpp"
#include "qgor/ring.hpp"
#include "qgor/polynomial.hpp"
#include "qgor/parse.hpp"
#include "qgor/groebner.hpp"
#include "qgor/ideal.hpp"
#include "qgor/linalg.hpp"
#include "qgor/linkage.hpp"
#include "qgor/divisor.hpp"
#include "qgor/report.hpp"
#include "qgor/counterexample.hpp"
