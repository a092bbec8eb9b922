#pragma once

#include "koebe/alpha.hpp"
#include "koebe/certify.hpp"
#include "koebe/chebyshev.hpp"
#include "koebe/domain.hpp"
#include "koebe/families.hpp"
#include "koebe/figures.hpp"
#include "koebe/objective.hpp"
#include "koebe/polynomial.hpp"
#include "koebe/report.hpp"
#include "koebe/search.hpp"
#include "koebe/suites.hpp"
