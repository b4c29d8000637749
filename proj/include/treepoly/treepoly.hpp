#pragma once

#include "treepoly/coproduct.hpp"
#include "treepoly/json_io.hpp"
#include "treepoly/poly_text.hpp"
#include "treepoly/qpolynomial.hpp"
#include "treepoly/rational.hpp"
#include "treepoly/rational_function.hpp"
#include "treepoly/series.hpp"
#include "treepoly/shuffle.hpp"
#include "treepoly/tree.hpp"
#include "treepoly/tree_polynomial.hpp"
#include "treepoly/tree_text.hpp"
#include "treepoly/verify.hpp"
