#pragma once

#include "powerpoly/errors.hpp"
#include "powerpoly/groebner.hpp"
#include "powerpoly/hypotheses.hpp"
#include "powerpoly/linear_program.hpp"
#include "powerpoly/monomial.hpp"
#include "powerpoly/polynomial.hpp"
#include "powerpoly/power.hpp"
#include "powerpoly/rational.hpp"
#include "powerpoly/threshold.hpp"
#include "powerpoly/umpu.hpp"
#include "powerpoly/vertex_enumeration.hpp"
