#pragma once

#include "escalier/errors.hpp"
#include "escalier/laurent.hpp"
#include "escalier/partitionfn.hpp"
#include "escalier/permutation.hpp"
#include "escalier/schubert.hpp"
#include "escalier/shapes.hpp"
#include "escalier/staircase.hpp"
