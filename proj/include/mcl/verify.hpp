#pragma once

#include "mcl/verify/fibers.hpp"
#include "mcl/verify/fixtures.hpp"
#include "mcl/verify/pencil.hpp"
#include "mcl/verify/report.hpp"
