#pragma once

#include "scalar.hpp"
#include "fiber.hpp"
#include "linalg.hpp"
#include "operator.hpp"
#include "lefschetz.hpp"
#include "hodge.hpp"
#include "uqsl2.hpp"
#include "su2.hpp"
#include "io.hpp"
#include "verify.hpp"
