#pragma once

// Numerical evaluation on matrix tuples, falsification, moments and GNS models.

#include "tracecert/mateval/embed.hpp"
#include "tracecert/mateval/eval.hpp"
#include "tracecert/mateval/gns.hpp"
#include "tracecert/mateval/moments.hpp"
#include "tracecert/mateval/sample.hpp"
#include "tracecert/mateval/tuple.hpp"
