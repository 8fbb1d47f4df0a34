#pragma once

#include "algebras.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "fields.hpp"
#include "io.hpp"
#include "kronecker.hpp"
#include "lengthcat.hpp"
#include "matrix.hpp"
#include "p1.hpp"
#include "poly.hpp"
#include "selftest.hpp"
#include "smith.hpp"
#include "weights.hpp"
#include "wpl.hpp"
