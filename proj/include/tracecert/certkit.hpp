#pragma once

// Certificates: data model, exact verification, explicit builders.

#include "tracecert/certkit/builders.hpp"
#include "tracecert/certkit/certificate.hpp"
#include "tracecert/certkit/commutative.hpp"
#include "tracecert/certkit/complex.hpp"
#include "tracecert/certkit/json.hpp"
