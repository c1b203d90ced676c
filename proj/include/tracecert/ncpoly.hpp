#pragma once

// Exact noncommutative polynomial algebra.

#include "tracecert/ncpoly/commutative.hpp"
#include "tracecert/ncpoly/cyclic.hpp"
#include "tracecert/ncpoly/ncpoly.hpp"
#include "tracecert/ncpoly/parse.hpp"
#include "tracecert/ncpoly/structure.hpp"
#include "tracecert/ncpoly/word.hpp"
