#pragma once

#include "skewq/bitmatrix.hpp"
#include "skewq/classify.hpp"
#include "skewq/errors.hpp"
#include "skewq/graph.hpp"
#include "skewq/io.hpp"
#include "skewq/mutation.hpp"
#include "skewq/normal_form.hpp"
#include "skewq/point_scheme.hpp"
#include "skewq/verify.hpp"
