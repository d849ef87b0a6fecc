#ifndef LGQ_LGQ_HPP
#define LGQ_LGQ_HPP

#include "lgq/bigint.hpp"
#include "lgq/cartan.hpp"
#include "lgq/configurations.hpp"
#include "lgq/cycles.hpp"
#include "lgq/errors.hpp"
#include "lgq/format.hpp"
#include "lgq/generator.hpp"
#include "lgq/koszul.hpp"
#include "lgq/matrix.hpp"
#include "lgq/monomial.hpp"
#include "lgq/polynomial.hpp"
#include "lgq/quiver.hpp"
#include "lgq/rational.hpp"
#include "lgq/series.hpp"
#include "lgq/verify.hpp"

#endif
