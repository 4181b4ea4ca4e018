#pragma once

#include "code.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "explorer.hpp"
#include "generators.hpp"
#include "gf2.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "random.hpp"
