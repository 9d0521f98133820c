#pragma once

#include "analysis.hpp"
#include "cli.hpp"
#include "graphs.hpp"
#include "groebner.hpp"
#include "io.hpp"
#include "toric.hpp"
