#pragma once
// palin3 - every positive integer is a sum of three base-g palindromes
// (g >= 5), constructively. Umbrella header.

#include "palin3/digits.hpp"
#include "palin3/classify.hpp"
#include "palin3/construct.hpp"
#include "palin3/small.hpp"
#include "palin3/special.hpp"
#include "palin3/decompose.hpp"
#include "palin3/oracle.hpp"
#include "palin3/check.hpp"
