#pragma once

// Gram-matrix search for certificates and separating functionals.

#include "tracecert/tsos/alternating.hpp"
#include "tracecert/tsos/certify.hpp"
#include "tracecert/tsos/dual.hpp"
#include "tracecert/tsos/gram.hpp"
#include "tracecert/tsos/rounding.hpp"
#include "tracecert/tsos/sdp.hpp"
