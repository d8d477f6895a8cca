#pragma once

#include "tgembed/bazaikin.hpp"
#include "tgembed/embedding.hpp"
#include "tgembed/error.hpp"
#include "tgembed/eschenburg.hpp"
#include "tgembed/factorize.hpp"
#include "tgembed/integer.hpp"
#include "tgembed/survey.hpp"
#include "tgembed/version.hpp"
