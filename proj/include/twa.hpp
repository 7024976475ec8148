#pragma once

#include "twa/scalar.hpp"
#include "twa/cyclotomic.hpp"
#include "twa/matrix.hpp"
#include "twa/span.hpp"
#include "twa/check.hpp"
#include "twa/scheme.hpp"
#include "twa/wreath.hpp"
#include "twa/terwilliger.hpp"
#include "twa/structure.hpp"
