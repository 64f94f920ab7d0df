#pragma once

#include "msop/errors.hpp"
#include "msop/rational.hpp"
#include "msop/polynomial.hpp"
#include "msop/rational_function.hpp"
#include "msop/difference.hpp"
#include "msop/hypergeometric.hpp"
#include "msop/meixner.hpp"
#include "msop/kernels.hpp"
#include "msop/sobolev.hpp"
#include "msop/ladder.hpp"
#include "msop/recurrence.hpp"
#include "msop/asymptotics.hpp"
#include "msop/figure.hpp"
#include "msop/serialize.hpp"
#include "msop/verify.hpp"
