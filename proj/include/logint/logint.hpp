#pragma once

// Umbrella header.

#include "logint/bernoulli.hpp"
#include "logint/cli.hpp"
#include "logint/closed_form.hpp"
#include "logint/corpus.hpp"
#include "logint/emit.hpp"
#include "logint/log_poly.hpp"
#include "logint/numeric_config.hpp"
#include "logint/pi_expr.hpp"
#include "logint/quadrature.hpp"
#include "logint/rational.hpp"
#include "logint/special.hpp"
#include "logint/verify.hpp"
