#pragma once

#include "bijection.hpp"
#include "colored.hpp"
#include "exact.hpp"
#include "formulas.hpp"
#include "identities.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "verify.hpp"
