#pragma once

#include "catmagma/bijection.hpp"
#include "catmagma/counting.hpp"
#include "catmagma/element.hpp"
#include "catmagma/family.hpp"
#include "catmagma/magma_lab.hpp"
#include "catmagma/term.hpp"
#include "catmagma/verify.hpp"
