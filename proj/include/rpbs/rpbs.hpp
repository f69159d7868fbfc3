#pragma once

#include "rpbs/export.hpp"
#include "rpbs/fock.hpp"
#include "rpbs/free_algebra.hpp"
#include "rpbs/grading.hpp"
#include "rpbs/laurent.hpp"
#include "rpbs/linalg.hpp"
#include "rpbs/metric.hpp"
#include "rpbs/parser.hpp"
#include "rpbs/reach.hpp"
#include "rpbs/relations.hpp"
#include "rpbs/spectra.hpp"
#include "rpbs/verify.hpp"
