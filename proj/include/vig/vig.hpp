#pragma once

#include "vig/interval.hpp"
#include "vig/recognition.hpp"
#include "vig/encoding.hpp"
#include "vig/solver.hpp"
#include "vig/oracle.hpp"
#include "vig/generate.hpp"
#include "vig/instance_io.hpp"
